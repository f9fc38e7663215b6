#include "catlaw/monad.hpp"

#include <algorithm>

#include "catlaw/errors.hpp"
#include "catlaw/parallel.hpp"

namespace catlaw {

namespace {

std::string functor_error_code(const std::string& tag) {
  if (tag == tags::kFunctorSourceTarget) return "SourceTargetMismatch";
  if (tag == tags::kFunctorIdentity) return "IdentityNotPreserved";
  return "CompositionNotPreserved";
}

// Typing and naturality of one structure map; returns false if the laws
// cannot be evaluated.
bool check_structure_map(const NatTrans& alpha, Report& report) {
  const Report r = check_naturality(alpha);
  report.merge(r);
  return r.ok();
}

void check_identity_at(Report& report, const char* tag, const FinCategory& c, Obj x, Mor lhs, Obj at) {
  if (lhs != c.identity(at))
    report.fail(tag, "at " + c.id(x) + ": " + c.id(lhs) + " vs " + c.id(c.identity(at)));
}

}  // namespace

bool operator==(const Monad& a, const Monad& b) {
  return same_category(a.base, b.base) && a.functor == b.functor && a.mult == b.mult && a.unit == b.unit;
}

bool operator==(const Comonad& a, const Comonad& b) {
  return same_category(a.base, b.base) && a.functor == b.functor && a.comult == b.comult &&
         a.counit == b.counit;
}

Report check_monad_laws(const Monad& m) {
  Report report;
  const auto& c = *m.base;
  const auto& S = m.functor;
  const Report fr = check_functor(S);
  report.merge(fr);
  if (!fr.ok()) return report;
  const bool typed = check_structure_map(m.mult, report) & check_structure_map(m.unit, report);
  if (!typed) return report;

  const auto& mu = m.mult;
  const auto& eta = m.unit;
  Report laws;
  for (Obj x : c.objects()) {
    const Mor lhs = c.compose(mu[x], mu[S(x)]);
    const Mor rhs = c.compose(mu[x], S(mu[x]));
    if (lhs != rhs) {
      laws.fail(tags::kMonadAssoc, "at " + c.id(x) + ": " + c.id(lhs) + " vs " + c.id(rhs));
      break;
    }
  }
  if (!laws.failed(tags::kMonadAssoc)) laws.pass(tags::kMonadAssoc);
  for (Obj x : c.objects()) check_identity_at(laws, tags::kMonadLeftUnit, c, x, c.compose(mu[x], eta[S(x)]), S(x));
  if (!laws.failed(tags::kMonadLeftUnit)) laws.pass(tags::kMonadLeftUnit);
  for (Obj x : c.objects()) check_identity_at(laws, tags::kMonadRightUnit, c, x, c.compose(mu[x], S(eta[x])), S(x));
  if (!laws.failed(tags::kMonadRightUnit)) laws.pass(tags::kMonadRightUnit);
  report.merge(laws);
  return report;
}

Report check_comonad_laws(const Comonad& w) {
  Report report;
  const auto& c = *w.base;
  const auto& G = w.functor;
  const Report fr = check_functor(G);
  report.merge(fr);
  if (!fr.ok()) return report;
  const bool typed = check_structure_map(w.comult, report) & check_structure_map(w.counit, report);
  if (!typed) return report;

  const auto& delta = w.comult;
  const auto& eps = w.counit;
  Report laws;
  for (Obj x : c.objects()) {
    const Mor lhs = c.compose(delta[G(x)], delta[x]);
    const Mor rhs = c.compose(G(delta[x]), delta[x]);
    if (lhs != rhs) {
      laws.fail(tags::kComonadCoassoc, "at " + c.id(x) + ": " + c.id(lhs) + " vs " + c.id(rhs));
      break;
    }
  }
  if (!laws.failed(tags::kComonadCoassoc)) laws.pass(tags::kComonadCoassoc);
  for (Obj x : c.objects())
    check_identity_at(laws, tags::kComonadLeftCounit, c, x, c.compose(eps[G(x)], delta[x]), G(x));
  if (!laws.failed(tags::kComonadLeftCounit)) laws.pass(tags::kComonadLeftCounit);
  for (Obj x : c.objects())
    check_identity_at(laws, tags::kComonadRightCounit, c, x, c.compose(G(eps[x]), delta[x]), G(x));
  if (!laws.failed(tags::kComonadRightCounit)) laws.pass(tags::kComonadRightCounit);
  report.merge(laws);
  return report;
}

Functor make_functor(const CategoryPtr& src, const CategoryPtr& tgt, const RawFunctor& raw) {
  std::vector<Obj> objs(src->object_count());
  for (Obj x : src->objects()) {
    auto it = raw.objects.find(src->id(x));
    if (it == raw.objects.end())
      throw typing_error("FunctorInvalid", "no image for object '" + src->id(x) + "'");
    auto y = tgt->find_object(it->second);
    if (!y) throw typing_error("FunctorInvalid", "image '" + it->second + "' is not an object of the target");
    objs[ix(x)] = *y;
  }
  for (const auto& [k, v] : raw.objects)
    if (!src->find_object(k)) throw Error(ErrorKind::Parse, "DanglingId", "unknown object '" + k + "'");
  for (const auto& [k, v] : raw.morphisms)
    if (!src->find_morphism(k)) throw Error(ErrorKind::Parse, "DanglingId", "unknown morphism '" + k + "'");

  std::vector<Mor> mors(src->morphism_count());
  for (Mor f : src->morphisms()) {
    auto it = raw.morphisms.find(src->id(f));
    if (it != raw.morphisms.end()) {
      auto g = tgt->find_morphism(it->second);
      if (!g)
        throw typing_error("FunctorInvalid", "image '" + it->second + "' is not a morphism of the target");
      mors[ix(f)] = *g;
      continue;
    }
    if (src->is_identity(f)) {
      mors[ix(f)] = tgt->identity(objs[ix(src->src(f))]);
      continue;
    }
    const auto& hom = tgt->hom(objs[ix(src->src(f))], objs[ix(src->tgt(f))]);
    if (hom.size() != 1)
      throw typing_error("SourceTargetMismatch", "image of '" + src->id(f) + "' omitted and hom(" +
                                                     tgt->id(objs[ix(src->src(f))]) + ", " +
                                                     tgt->id(objs[ix(src->tgt(f))]) + ") has " +
                                                     std::to_string(hom.size()) + " elements");
    mors[ix(f)] = hom.front();
  }
  Functor functor(src, tgt, std::move(objs), std::move(mors));
  const Report r = check_functor(functor);
  if (!r.ok()) {
    const auto& first = r.failures().front();
    throw typing_error(functor_error_code(first.tag), first.witness);
  }
  return functor;
}

NatTrans make_nat_trans(const Functor& f, const Functor& g, const RawComponents& raw,
                        const std::string& error_code) {
  const auto& c = f.source();
  const auto& d = f.target();
  for (const auto& [k, v] : raw)
    if (!c.find_object(k)) throw Error(ErrorKind::Parse, "DanglingId", "unknown object '" + k + "'");
  std::vector<Mor> comps(c.object_count());
  for (Obj x : c.objects()) {
    const auto& hom = d.hom(f(x), g(x));
    auto it = raw.find(c.id(x));
    if (it == raw.end()) {
      if (hom.size() != 1)
        throw typing_error(error_code, "component at '" + c.id(x) + "' omitted and hom(" + d.id(f(x)) + ", " +
                                           d.id(g(x)) + ") has " + std::to_string(hom.size()) + " elements");
      comps[ix(x)] = hom.front();
      continue;
    }
    auto m = d.find_morphism(it->second);
    if (!m) throw typing_error(error_code, "component at '" + c.id(x) + "' names unknown morphism '" + it->second + "'");
    if (!d.in_hom(*m, f(x), g(x)))
      throw typing_error(error_code, "component at '" + c.id(x) + "' is " + it->second + ", not in hom(" +
                                         d.id(f(x)) + ", " + d.id(g(x)) + ")");
    comps[ix(x)] = *m;
  }
  return NatTrans(f, g, std::move(comps));
}

Monad make_monad(const CategoryPtr& base, const RawFunctor& functor, const RawComponents& mult,
                 const RawComponents& unit) {
  Functor S = make_functor(base, base, functor);
  const Functor id = Functor::identity(base);
  NatTrans mu = make_nat_trans(compose(S, S), S, mult, "MultComponentMistyped");
  NatTrans eta = make_nat_trans(id, S, unit, "UnitComponentMistyped");
  return Monad{base, S, std::move(mu), std::move(eta)};
}

Comonad make_comonad(const CategoryPtr& base, const RawFunctor& functor, const RawComponents& comult,
                     const RawComponents& counit) {
  Functor G = make_functor(base, base, functor);
  const Functor id = Functor::identity(base);
  NatTrans delta = make_nat_trans(G, compose(G, G), comult, "ComultComponentMistyped");
  NatTrans eps = make_nat_trans(G, id, counit, "CounitComponentMistyped");
  return Comonad{base, G, std::move(delta), std::move(eps)};
}

Monad identity_monad(const CategoryPtr& base) {
  const Functor id = Functor::identity(base);
  return Monad{base, id, NatTrans::identity(id), NatTrans::identity(id)};
}

Comonad identity_comonad(const CategoryPtr& base) {
  const Functor id = Functor::identity(base);
  return Comonad{base, id, NatTrans::identity(id), NatTrans::identity(id)};
}

bool canonical_less(const Monad& a, const Monad& b) {
  if (!(a.functor == b.functor)) return canonical_less(a.functor, b.functor);
  if (a.mult.components() != b.mult.components()) return a.mult.components() < b.mult.components();
  return a.unit.components() < b.unit.components();
}

bool canonical_less(const Comonad& a, const Comonad& b) {
  if (!(a.functor == b.functor)) return canonical_less(a.functor, b.functor);
  if (a.comult.components() != b.comult.components()) return a.comult.components() < b.comult.components();
  return a.counit.components() < b.counit.components();
}

std::vector<Monad> enumerate_monads(const CategoryPtr& c, const EnumerationOptions& opts) {
  const auto endos = enumerate_endofunctors(c, opts);
  const Functor id = Functor::identity(c);
  std::uint64_t estimate = 0;
  for (const auto& S : endos) {
    const Functor SS = compose(S, S);
    estimate = sat_add(estimate, sat_mul(candidate_count(component_choices(SS, S)),
                                         candidate_count(component_choices(id, S))));
  }
  if (estimate > opts.cap) throw CapExceeded("monad enumeration", estimate, opts.cap);

  auto per_functor = parallel_map(endos.size(), opts.jobs, [&](std::size_t i) {
    const Functor& S = endos[i];
    std::vector<Monad> found;
    const auto units = enumerate_nat_trans(id, S);
    if (units.empty()) return found;
    const auto mults = enumerate_nat_trans(compose(S, S), S);
    for (const auto& mu : mults)
      for (const auto& eta : units) {
        Monad m{c, S, mu, eta};
        if (check_monad_laws(m).ok()) found.push_back(std::move(m));
      }
    return found;
  });
  std::vector<Monad> all;
  for (auto& part : per_functor)
    for (auto& m : part) all.push_back(std::move(m));
  std::sort(all.begin(), all.end(), [](const Monad& a, const Monad& b) { return canonical_less(a, b); });
  return all;
}

std::vector<Comonad> enumerate_comonads(const CategoryPtr& c, const EnumerationOptions& opts) {
  const auto endos = enumerate_endofunctors(c, opts);
  const Functor id = Functor::identity(c);
  std::uint64_t estimate = 0;
  for (const auto& G : endos) {
    const Functor GG = compose(G, G);
    estimate = sat_add(estimate, sat_mul(candidate_count(component_choices(G, GG)),
                                         candidate_count(component_choices(G, id))));
  }
  if (estimate > opts.cap) throw CapExceeded("comonad enumeration", estimate, opts.cap);

  auto per_functor = parallel_map(endos.size(), opts.jobs, [&](std::size_t i) {
    const Functor& G = endos[i];
    std::vector<Comonad> found;
    const auto counits = enumerate_nat_trans(G, id);
    if (counits.empty()) return found;
    const auto comults = enumerate_nat_trans(G, compose(G, G));
    for (const auto& delta : comults)
      for (const auto& eps : counits) {
        Comonad w{c, G, delta, eps};
        if (check_comonad_laws(w).ok()) found.push_back(std::move(w));
      }
    return found;
  });
  std::vector<Comonad> all;
  for (auto& part : per_functor)
    for (auto& w : part) all.push_back(std::move(w));
  std::sort(all.begin(), all.end(), [](const Comonad& a, const Comonad& b) { return canonical_less(a, b); });
  return all;
}

}  // namespace catlaw
