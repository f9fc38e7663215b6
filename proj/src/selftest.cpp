#include "catlaw/selftest.hpp"

#include <algorithm>

#include "catlaw/construct.hpp"
#include "catlaw/fixtures.hpp"
#include "catlaw/twofunctors.hpp"

namespace catlaw {

namespace {

using namespace fixtures;

class Criterion {
 public:
  Criterion(VerificationReport& out, int number) : out_(out), number_(number) {}

  void check(const std::string& id, const char* tag, bool passed, std::string witness = {}) {
    ok_ = ok_ && passed;
    out_.check(prefix() + id, tag, passed, std::move(witness));
  }
  void add(const std::string& id, const Report& r) {
    ok_ = ok_ && r.ok();
    out_.add(prefix() + id, r);
  }
  void count(const std::string& id, const char* tag, std::size_t got, std::size_t want) {
    check(id, tag, got == want, got == want ? "" : std::to_string(got) + " vs " + std::to_string(want));
  }
  void finish() { out_.check("criterion-" + std::to_string(number_), tags::kCriterion, ok_); }

 private:
  std::string prefix() const { return std::to_string(number_) + "/"; }

  VerificationReport& out_;
  int number_;
  bool ok_ = true;
};

std::string pair_id(const std::string& a, const std::string& b) { return a + "," + b; }

std::vector<std::vector<std::size_t>> sorted_maps(std::vector<std::vector<std::size_t>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

template <class Structure>
std::vector<std::vector<std::size_t>> object_maps(const std::vector<Structure>& all) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : all) out.push_back(object_indices(s.functor));
  return sorted_maps(out);
}

void enumeration_counts(VerificationReport& out, const EnumerationOptions& opts) {
  Criterion c(out, 1);
  const std::vector<std::pair<std::string, CategoryPtr>> cats = {
      {"C3", chain3()}, {"C2", chain2()}, {"trivial", trivial()}};
  for (const auto& [name, cat] : cats) {
    const auto monads = enumerate_monads(cat, opts);
    const auto comonads = enumerate_comonads(cat, opts);
    const Order leq = order_of(*cat);
    const auto closures = closure_operators(leq);
    const auto interiors = interior_operators(leq);
    c.count(name + "/monads-vs-closure-oracle", tags::kOracleCount, monads.size(), closures.size());
    c.count(name + "/comonads-vs-interior-oracle", tags::kOracleCount, comonads.size(), interiors.size());
    c.check(name + "/monad-object-maps", tags::kOracleCount, object_maps(monads) == sorted_maps(closures));
    c.check(name + "/comonad-object-maps", tags::kOracleCount, object_maps(comonads) == sorted_maps(interiors));
    c.count(name + "/comonads-vs-monads-on-opposite", tags::kCountEquality, comonads.size(),
            enumerate_monads(opposite(*cat), opts).size());
    bool laws = true;
    for (const auto& m : monads) laws = laws && check_monad_laws(m).ok();
    for (const auto& w : comonads) laws = laws && check_comonad_laws(w).ok();
    c.check(name + "/laws-recheck", tags::kMonadAssoc, laws);
    out.results()["monad_counts"][name] = monads.size();
    out.results()["comonad_counts"][name] = comonads.size();
  }
  c.count("C3/monads", tags::kOracleCount, enumerate_monads(chain3(), opts).size(), 4);
  c.count("C3/comonads", tags::kOracleCount, enumerate_comonads(chain3(), opts).size(), 4);
  c.finish();
}

struct PairData {
  std::string name;
  Monad s;
  Monad t;
  std::vector<DistributiveLaw> laws;
  std::vector<LiftedMonad> liftings;
};

std::vector<PairData> closure_pairs(const std::vector<NamedMonad>& monads, const EnumerationOptions& opts) {
  std::vector<PairData> out;
  for (const auto& s : monads)
    for (const auto& t : monads)
      out.push_back({pair_id(s.name, t.name), s.monad, t.monad, enumerate_dist_laws(s.monad, t.monad, opts),
                     enumerate_liftings(s.monad, t.monad, opts)});
  return out;
}

void bijection_counts(VerificationReport& out, const std::vector<PairData>& pairs) {
  Criterion c(out, 2);
  const Order leq = order_of(*chain3());
  for (const auto& p : pairs) {
    c.count(p.name + "/laws-vs-liftings", tags::kCountEquality, p.laws.size(), p.liftings.size());
    const bool predicted = pointwise_below(leq, object_indices(p.s.functor), object_indices(p.t.functor));
    c.check(p.name + "/pointwise-criterion", tags::kPointwiseCriterion, predicted == !p.laws.empty(),
            predicted ? "criterion holds but no law found" : "criterion fails but a law was found");
    c.check(p.name + "/at-most-one", tags::kPointwiseCriterion, p.laws.size() <= 1);
    for (const auto& dl : p.laws) c.add(p.name + "/law", check_dist_law(dl));
    out.results()["law_counts"][p.name] = p.laws.size();
  }
  c.finish();
}

void round_trips(VerificationReport& out, const std::vector<PairData>& pairs, const EnumerationOptions& opts) {
  Criterion c(out, 3);
  for (const auto& p : pairs) {
    for (const auto& dl : p.laws) {
      const LiftedMonad lm = lift_monad(dl, opts);
      c.add(p.name + "/lifting", check_lifting(lm));
      const DistributiveLaw back = extract_dist_law(lm);
      c.check(p.name + "/extract-after-lift", tags::kRoundTrip, back == dl, difference_witness(back.phi, dl.phi));
    }
    for (const auto& lm : p.liftings) {
      c.add(p.name + "/enumerated-lifting", check_lifting(lm));
      c.check(p.name + "/lift-after-extract", tags::kRoundTrip, lift_monad(extract_dist_law(lm), opts) == lm);
    }
  }
  c.finish();
}

// Two different laws between the same monads, when the corpus has them.
std::optional<std::pair<DistributiveLaw, DistributiveLaw>> distinct_laws(const EnumerationOptions& opts) {
  for (const auto& cat : {z2(), chain2(), chain3()}) {
    const auto monads = enumerate_monads(cat, opts);
    for (const auto& s : monads)
      for (const auto& t : monads) {
        const auto laws = enumerate_dist_laws(s, t, opts);
        if (laws.size() >= 2) return std::pair{laws[0], laws[1]};
      }
  }
  return std::nullopt;
}

void joint_characterization(VerificationReport& out, const std::vector<PairData>& pairs,
                            const EnumerationOptions& opts) {
  Criterion c(out, 4);
  for (const auto& p : pairs) {
    const auto extensions = enumerate_extensions(p.s, p.t, opts);
    c.count(p.name + "/laws-vs-extensions", tags::kCountEquality, p.laws.size(), extensions.size());
    for (const auto& dl : p.laws) {
      const KleisliExtension ke = extend_monad(dl);
      c.add(p.name + "/extension", check_extension(ke));
      const DistributiveLaw back = extract_from_extension(ke);
      c.check(p.name + "/extract-after-extend", tags::kRoundTrip, back == dl, difference_witness(back.phi, dl.phi));
      const LiftedMonad lm = lift_monad(dl, opts);
      c.check(p.name + "/joint", tags::kJointCompat, check_joint_compatibility(lm, ke));
      // U^S λ_T and ρ_S D_T, each computed from its own square.
      const NatTrans lhs = whisker_left(lm.em.forgetful(), mate_right(lm.cell.square));
      const NatTrans rhs = whisker_right(mate_left(ke.cell.square), ke.kleisli.free());
      c.check(p.name + "/mates-agree", tags::kJointCompat, lhs.components() == rhs.components());
    }
    for (const auto& ke : extensions)
      c.check(p.name + "/extend-after-extract", tags::kRoundTrip, extend_monad(extract_from_extension(ke)) == ke);
  }
  if (auto two = distinct_laws(opts)) {
    const LiftedMonad lm = lift_monad(two->first, opts);
    const KleisliExtension ke = extend_monad(two->second);
    c.check("distinct-laws/joint", tags::kJointCompat, !check_joint_compatibility(lm, ke),
            "lifting and extension of different laws reported compatible");
    out.results()["distinct_law_pair"] = "found";
  } else {
    out.results()["distinct_law_pair"] = "none in corpus; incompatible case skipped";
  }
  c.finish();
}

void mixed_case(VerificationReport& out, const EnumerationOptions& opts) {
  Criterion c(out, 5);
  const std::vector<std::tuple<std::string, std::vector<NamedMonad>, std::vector<NamedComonad>>> corpora = {
      {"C2", closure_monads_c2(), interior_comonads_c2()}, {"C3", closure_monads_c3(), interior_comonads_c3()}};
  for (const auto& [cat_name, monads, comonads] : corpora) {
    const Order leq = order_of(*monads.front().monad.base);
    for (const auto& s : monads)
      for (const auto& g : comonads) {
        const std::string id = cat_name + "/" + pair_id(s.name, g.name);
        const auto laws = enumerate_mixed_laws(s.monad, g.comonad, opts);
        const auto lifted = enumerate_comonad_liftings(s.monad, g.comonad, opts);
        const auto colifted = enumerate_coalgebra_liftings(s.monad, g.comonad, opts);
        const bool predicted = pointwise_below(leq, object_indices(s.monad.functor), object_indices(g.comonad.functor));
        c.check(id + "/pointwise-criterion", tags::kPointwiseCriterion, predicted == !laws.empty());
        c.count(id + "/laws-vs-comonad-liftings", tags::kCountEquality, laws.size(), lifted.size());
        c.count(id + "/laws-vs-coalgebra-liftings", tags::kCountEquality, laws.size(), colifted.size());
        for (const auto& ml : laws) {
          c.add(id + "/law", check_mixed_law(ml));
          const LiftedComonad lc = lift_comonad(ml, opts);
          const CoalgebraLifting cl = colift_monad(ml, opts);
          c.add(id + "/comonad-lifting", check_lifting(lc));
          c.add(id + "/coalgebra-lifting", check_lifting(cl));
          c.check(id + "/extract-after-lift", tags::kRoundTrip, extract_mixed_law(lc) == ml);
          c.check(id + "/extract-after-colift", tags::kRoundTrip, extract_mixed_law(cl) == ml);
          c.check(id + "/compatibility", tags::kMixedCompat, check_mixed_compatibility(lc, cl));
        }
        for (const auto& lc : lifted)
          c.check(id + "/lift-after-extract", tags::kRoundTrip, lift_comonad(extract_mixed_law(lc), opts) == lc);
        for (const auto& cl : colifted)
          c.check(id + "/colift-after-extract", tags::kRoundTrip, colift_monad(extract_mixed_law(cl), opts) == cl);
        out.results()["mixed_law_counts"][id] = laws.size();
      }
  }
  c.finish();
}

void adjunction_sanity(VerificationReport& out, const EnumerationOptions& opts) {
  Criterion c(out, 6);
  std::vector<std::pair<std::string, Monad>> monads;
  for (const auto& m : closure_monads_c3()) monads.push_back({"C3/" + m.name, m.monad});
  for (const auto& m : closure_monads_c2()) monads.push_back({"C2/" + m.name, m.monad});
  const auto z2_monads = enumerate_monads(z2(), opts);
  for (std::size_t i = 0; i < z2_monads.size(); ++i) monads.push_back({"Z2/" + std::to_string(i), z2_monads[i]});
  monads.push_back({"empty/id", identity_monad(empty())});

  auto identity_mates = [&](const std::string& id, const Adjunction& a) {
    c.add(id + "/triangles", check_triangle_identities(a));
    const AdjROneCell r = identity_adj_r_cell(a);
    const AdjLOneCell l = identity_adj_l_cell(a);
    c.check(id + "/identity-mate-right", tags::kStoredMate, r.mate.components() == NatTrans::identity(a.left).components());
    c.check(id + "/identity-mate-left", tags::kStoredMate, l.mate.components() == NatTrans::identity(a.right).components());
  };

  for (const auto& [name, m] : monads) {
    const EmAlgebraCategory em = em_category(m, opts);
    const KleisliCategory kl = kleisli_category(m);
    c.check(name + "/induced-from-em", tags::kRoundTrip, induced_monad(em.adjunction()) == m);
    c.check(name + "/induced-from-kleisli", tags::kRoundTrip, induced_monad(kl.adjunction()) == m);
    identity_mates(name + "/em", em.adjunction());
    identity_mates(name + "/kleisli", kl.adjunction());
    c.add(name + "/em-comparison", check_square(comparison_functor_em(em.adjunction(), opts)));
    c.add(name + "/kleisli-comparison", check_square(comparison_functor_kleisli(kl.adjunction())));
  }
  std::vector<std::pair<std::string, Comonad>> comonads;
  for (const auto& w : interior_comonads_c3()) comonads.push_back({"C3/" + w.name, w.comonad});
  for (const auto& w : interior_comonads_c2()) comonads.push_back({"C2/" + w.name, w.comonad});
  for (const auto& [name, w] : comonads) {
    const EmCoalgebraCategory coem = em_coalgebra_category(w, opts);
    c.check(name + "/induced-from-coalgebras", tags::kRoundTrip, induced_comonad(coem.adjunction()) == w);
    identity_mates(name + "/coalgebras", coem.adjunction());
  }
  c.finish();
}

void hom_isomorphism(VerificationReport& out, const EnumerationOptions& opts) {
  Criterion c(out, 7);
  const std::vector<std::pair<std::string, Monad>> cases = {
      {"C2/id", identity_monad(chain2())}, {"C3/c1", find(closure_monads_c3(), "c1")}};
  for (const auto& [name, s] : cases) {
    HomCategorySizes sizes;
    c.add(name, hom_iso_roundtrip(s, opts, &sizes));
    out.results()["hom_categories"][name] = {{"mnd_1cells", sizes.mnd_one_cells},
                                            {"mnd_2cells", sizes.mnd_two_cells},
                                            {"adj_1cells", sizes.adj_one_cells},
                                            {"adj_2cells", sizes.adj_two_cells}};
  }
  c.finish();
}

void two_cell_equivalence(VerificationReport& out, const EnumerationOptions& opts) {
  Criterion c(out, 8);
  const DistributiveLaw dl = law_c2_c1();
  const EmAlgebraCategory em = em_category(dl.s, opts);
  const auto cells = enumerate_adj_r_endo_cells(em, opts);
  const AdjROneCell lifting = lift_monad(dl, opts).cell;
  c.check("lifting-cell-enumerated", tags::kAdjTwoCellEquivalence,
          std::find(cells.begin(), cells.end(), lifting) != cells.end());
  auto scan = [&](const std::string& name, const std::vector<AdjROneCell>& all) {
    std::size_t total = 0, agree = 0, both = 0;
    for (const auto& from : all)
      for (const auto& to : all)
        for (const auto& cand : enumerate_adj_r_candidates(from, to, opts)) {
          ++total;
          agree += cand.mate_condition == cand.adjoint_condition ? 1 : 0;
          both += cand.mate_condition && cand.adjoint_condition ? 1 : 0;
        }
    c.count(name + "/agreement", tags::kAdjTwoCellEquivalence, agree, total);
    c.check(name + "/nonempty", tags::kAdjTwoCellEquivalence, total > 0);
    out.results()["adj_r_candidates"][name] = {
        {"cells", all.size()}, {"pairs", total}, {"agree", agree}, {"valid", both}};
  };
  scan("C3/c2", cells);
  const auto z2_monads = enumerate_monads(z2(), opts);
  for (std::size_t i = 0; i < z2_monads.size(); ++i)
    scan("Z2/" + std::to_string(i), enumerate_adj_r_endo_cells(em_category(z2_monads[i], opts), opts));
  c.finish();
}

}  // namespace

VerificationReport run_selftest_core(const EnumerationOptions& opts) {
  VerificationReport out;
  enumeration_counts(out, opts);
  const auto pairs = closure_pairs(closure_monads_c3(), opts);
  bijection_counts(out, pairs);
  round_trips(out, pairs, opts);
  joint_characterization(out, pairs, opts);
  mixed_case(out, opts);
  adjunction_sanity(out, opts);
  hom_isomorphism(out, opts);
  two_cell_equivalence(out, opts);
  return out;
}

VerificationReport run_selftest(const EnumerationOptions& opts, std::vector<std::string> command) {
  VerificationReport out(std::move(command));
  out.merge(run_selftest_core(opts));
  EnumerationOptions one = opts, eight = opts;
  one.jobs = 1;
  eight.jobs = 8;
  const std::string a = run_selftest_core(one).to_json().dump();
  const std::string b = run_selftest_core(eight).to_json().dump();
  out.check("9/jobs-1-vs-8", tags::kRoundTrip, a == b, a == b ? "" : "serialized reports differ");
  out.check("criterion-9", tags::kCriterion, a == b);
  return out;
}

}  // namespace catlaw
