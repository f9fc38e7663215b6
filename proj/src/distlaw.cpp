#include "catlaw/distlaw.hpp"

#include "catlaw/errors.hpp"
#include "catlaw/parallel.hpp"

namespace catlaw {

namespace {

// Typing entry and naturality entry; returns whether the axioms can be
// evaluated.
bool check_shape(const NatTrans& law, const Functor& dom, const Functor& cod, const char* typing_tag,
                 const char* naturality_tag, Report& report) {
  if (!(law.source() == dom) || !(law.target() == cod)) {
    report.fail(typing_tag, "declared source/target functors differ from the required composites");
    return false;
  }
  const Report r = check_naturality(law);
  std::string mistyped, unnatural;
  for (const auto& f : r.findings()) {
    if (f.passed) continue;
    if (f.tag == tags::kNatComponentType && mistyped.empty()) mistyped = f.witness;
    if (f.tag == tags::kNaturality && unnatural.empty()) unnatural = f.witness;
  }
  if (mistyped.empty())
    report.pass(typing_tag);
  else
    report.fail(typing_tag, mistyped);
  if (!mistyped.empty()) return false;
  if (unnatural.empty())
    report.pass(naturality_tag);
  else
    report.fail(naturality_tag, unnatural);
  return true;
}

void require_same_base(const CategoryPtr& a, const CategoryPtr& b) {
  if (!same_category(a, b))
    throw Error(ErrorKind::BaseMismatch, "BaseMismatch", "the two structures live on different categories");
}

void require_typable(const Functor& f, const Functor& g) {
  if (auto x = untypable_object(f, g))
    throw typing_error("UnTypableComponent", "no morphism available at object '" + f.source().id(*x) + "'");
}

template <class Law, class Check>
std::vector<Law> filter_candidates(std::vector<NatTrans> candidates, const EnumerationOptions& opts,
                                   Check&& make_law) {
  auto kept = parallel_map(candidates.size(), opts.jobs,
                           [&](std::size_t i) { return make_law(candidates[i]); });
  std::vector<Law> out;
  for (auto& k : kept)
    if (k) out.push_back(std::move(*k));
  return out;
}

}  // namespace

bool operator==(const DistributiveLaw& a, const DistributiveLaw& b) {
  return a.s == b.s && a.t == b.t && a.phi == b.phi;
}

bool operator==(const MixedDistributiveLaw& a, const MixedDistributiveLaw& b) {
  return a.s == b.s && a.g == b.g && a.psi == b.psi;
}

Report check_dist_law(const Monad& s, const Monad& t, const NatTrans& phi) {
  Report report;
  if (!same_category(s.base, t.base)) {
    report.fail(tags::kDistTyping, "S and T live on different categories");
    return report;
  }
  const Functor& S = s.functor;
  const Functor& T = t.functor;
  if (!check_shape(phi, compose(S, T), compose(T, S), tags::kDistTyping, tags::kDistNaturality, report))
    return report;

  // φ ∘ μ^S T = Tμ^S ∘ φS ∘ Sφ
  expect_equal(report, tags::kDistSMult, vcomp(phi, whisker_right(s.mult, T)),
               vcomp(whisker_left(T, s.mult), vcomp(whisker_right(phi, S), whisker_left(S, phi))));
  // φ ∘ η^S T = Tη^S
  expect_equal(report, tags::kDistSUnit, vcomp(phi, whisker_right(s.unit, T)), whisker_left(T, s.unit));
  // φ ∘ Sμ^T = μ^T S ∘ Tφ ∘ φT
  expect_equal(report, tags::kDistTMult, vcomp(phi, whisker_left(S, t.mult)),
               vcomp(whisker_right(t.mult, S), vcomp(whisker_left(T, phi), whisker_right(phi, T))));
  // φ ∘ Sη^T = η^T S
  expect_equal(report, tags::kDistTUnit, vcomp(phi, whisker_left(S, t.unit)), whisker_right(t.unit, S));
  return report;
}

Report check_dist_law(const DistributiveLaw& dl) { return check_dist_law(dl.s, dl.t, dl.phi); }

Report check_mixed_law(const Monad& s, const Comonad& g, const NatTrans& psi) {
  Report report;
  if (!same_category(s.base, g.base)) {
    report.fail(tags::kMixedTyping, "S and G live on different categories");
    return report;
  }
  const Functor& S = s.functor;
  const Functor& G = g.functor;
  if (!check_shape(psi, compose(S, G), compose(G, S), tags::kMixedTyping, tags::kMixedNaturality, report))
    return report;

  // Gμ^S ∘ ψS ∘ Sψ = ψ ∘ μ^S G
  expect_equal(report, tags::kMixedSMult,
               vcomp(whisker_left(G, s.mult), vcomp(whisker_right(psi, S), whisker_left(S, psi))),
               vcomp(psi, whisker_right(s.mult, G)));
  // Gη^S = ψ ∘ η^S G
  expect_equal(report, tags::kMixedSUnit, whisker_left(G, s.unit), vcomp(psi, whisker_right(s.unit, G)));
  // δS ∘ ψ = Gψ ∘ ψG ∘ Sδ
  expect_equal(report, tags::kMixedGComult, vcomp(whisker_right(g.comult, S), psi),
               vcomp(whisker_left(G, psi), vcomp(whisker_right(psi, G), whisker_left(S, g.comult))));
  // εS ∘ ψ = Sε
  expect_equal(report, tags::kMixedGCounit, vcomp(whisker_right(g.counit, S), psi), whisker_left(S, g.counit));
  return report;
}

Report check_mixed_law(const MixedDistributiveLaw& ml) { return check_mixed_law(ml.s, ml.g, ml.psi); }

std::optional<Obj> untypable_object(const Functor& f, const Functor& g) {
  for (Obj x : f.source().objects())
    if (f.target().hom(f(x), g(x)).empty()) return x;
  return std::nullopt;
}

DistributiveLaw make_dist_law(const Monad& s, const Monad& t, const RawComponents& phi) {
  require_same_base(s.base, t.base);
  const Functor st = compose(s.functor, t.functor);
  const Functor ts = compose(t.functor, s.functor);
  require_typable(st, ts);
  return {s, t, make_nat_trans(st, ts, phi, "LawComponentMistyped")};
}

MixedDistributiveLaw make_mixed_law(const Monad& s, const Comonad& g, const RawComponents& psi) {
  require_same_base(s.base, g.base);
  const Functor sg = compose(s.functor, g.functor);
  const Functor gs = compose(g.functor, s.functor);
  require_typable(sg, gs);
  return {s, g, make_nat_trans(sg, gs, psi, "LawComponentMistyped")};
}

DistributiveLaw identity_dist_law(const Monad& s, const Monad& t) {
  require_same_base(s.base, t.base);
  const Functor st = compose(s.functor, t.functor);
  return {s, t, retype(NatTrans::identity(st), st, compose(t.functor, s.functor))};
}

MixedDistributiveLaw identity_mixed_law(const Monad& s, const Comonad& g) {
  require_same_base(s.base, g.base);
  const Functor sg = compose(s.functor, g.functor);
  return {s, g, retype(NatTrans::identity(sg), sg, compose(g.functor, s.functor))};
}

std::vector<DistributiveLaw> enumerate_dist_laws(const Monad& s, const Monad& t, const EnumerationOptions& opts) {
  require_same_base(s.base, t.base);
  const Functor st = compose(s.functor, t.functor);
  const Functor ts = compose(t.functor, s.functor);
  if (untypable_object(st, ts)) return {};
  const auto choices = component_choices(st, ts);
  const std::uint64_t estimate = candidate_count(choices);
  if (estimate > opts.cap) throw CapExceeded("distributive law enumeration", estimate, opts.cap);
  return filter_candidates<DistributiveLaw>(
      enumerate_nat_trans(st, ts, choices), opts, [&](const NatTrans& phi) -> std::optional<DistributiveLaw> {
        if (!check_dist_law(s, t, phi).ok()) return std::nullopt;
        return DistributiveLaw{s, t, phi};
      });
}

std::vector<MixedDistributiveLaw> enumerate_mixed_laws(const Monad& s, const Comonad& g,
                                                       const EnumerationOptions& opts) {
  require_same_base(s.base, g.base);
  const Functor sg = compose(s.functor, g.functor);
  const Functor gs = compose(g.functor, s.functor);
  if (untypable_object(sg, gs)) return {};
  const auto choices = component_choices(sg, gs);
  const std::uint64_t estimate = candidate_count(choices);
  if (estimate > opts.cap) throw CapExceeded("mixed law enumeration", estimate, opts.cap);
  return filter_candidates<MixedDistributiveLaw>(
      enumerate_nat_trans(sg, gs, choices), opts, [&](const NatTrans& psi) -> std::optional<MixedDistributiveLaw> {
        if (!check_mixed_law(s, g, psi).ok()) return std::nullopt;
        return MixedDistributiveLaw{s, g, psi};
      });
}

}  // namespace catlaw
