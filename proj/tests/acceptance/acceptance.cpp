// One line per acceptance criterion. Counts and predictions come from the
// hand-rolled oracles in tests/support, never from the library's fixtures
// helpers.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "catlaw/construct.hpp"
#include "catlaw/fixtures.hpp"
#include "catlaw/twofunctors.hpp"
#include "oracles.hpp"

using namespace catlaw;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) detail << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Monad> closures(const CategoryPtr& c) {
  std::vector<Monad> out;
  for (const auto& m : oracle::closures_on_chain(c->object_count())) {
    std::vector<std::string> images;
    for (std::size_t y : m) images.push_back(c->id(obj_at(y)));
    out.push_back(fixtures::thin_monad(c, images));
  }
  return out;
}

std::vector<Comonad> interiors(const CategoryPtr& c) {
  std::vector<Comonad> out;
  for (const auto& m : oracle::interiors_on_chain(c->object_count())) {
    std::vector<std::string> images;
    for (std::size_t y : m) images.push_back(c->id(obj_at(y)));
    out.push_back(fixtures::thin_comonad(c, images));
  }
  return out;
}

std::string name_of(const Functor& f) {
  std::string s;
  for (std::size_t y : oracle::object_map(f)) s += std::to_string(y);
  return s;
}

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto monads = enumerate_monads(fixtures::chain3());
  const auto comonads = enumerate_comonads(fixtures::chain3());
  const double t = seconds_since(start);
  const std::size_t want_m = oracle::closures_on_chain(3).size();
  const std::size_t want_c = oracle::interiors_on_chain(3).size();
  o.expect(monads.size() == 4 && want_m == 4, "monad count");
  o.expect(comonads.size() == 4 && want_c == 4, "comonad count");
  for (const auto& m : monads) {
    const auto s = oracle::object_map(m.functor);
    o.expect(oracle::monotone(s) && oracle::inflationary(s) && oracle::idempotent(s), "closure shape " + name_of(m.functor));
  }
  o.expect(t < 1.0, "runtime");
  o.detail << monads.size() << " monads, " << comonads.size() << " comonads, oracle " << want_m << "/" << want_c
           << ", " << t << " s";
}

void criterion2_3_4(Outcome& two, Outcome& three, Outcome& four) {
  const CategoryPtr c3 = fixtures::chain3();
  const auto monads = closures(c3);
  const auto start = std::chrono::steady_clock::now();
  std::size_t pairs = 0, with_law = 0;
  for (const auto& s : monads)
    for (const auto& t : monads) {
      ++pairs;
      const std::string id = name_of(s.functor) + "," + name_of(t.functor);
      const auto laws = enumerate_dist_laws(s, t);
      const auto liftings = enumerate_liftings(s, t);
      const bool predicted = oracle::below(oracle::object_map(s.functor), oracle::object_map(t.functor));
      two.expect(laws.size() == liftings.size(), "count " + id);
      two.expect(laws.size() == (predicted ? 1u : 0u), "pointwise " + id);
      with_law += laws.empty() ? 0 : 1;

      for (const auto& dl : laws) {
        const LiftedMonad lm = lift_monad(dl);
        three.expect(extract_dist_law(lm).phi.components() == dl.phi.components(), "A " + id);
        const KleisliExtension ke = extend_monad(dl);
        four.expect(check_extension(ke).ok(), "extension laws " + id);
        four.expect(extract_from_extension(ke).phi.components() == dl.phi.components(), "extract " + id);
        four.expect(check_joint_compatibility(lm, ke), "joint " + id);
        const NatTrans u_lambda = whisker_left(lm.em.forgetful(), lm.cell.mate);
        const NatTrans rho_d = whisker_right(ke.cell.mate, ke.kleisli.free());
        four.expect(u_lambda.components() == rho_d.components(), "mates " + id);
      }
      for (const auto& lm : liftings) three.expect(lift_monad(extract_dist_law(lm)) == lm, "B " + id);
      four.expect(enumerate_extensions(s, t).size() == laws.size(), "extension count " + id);
    }
  const double t = seconds_since(start);
  two.expect(t < 30.0, "runtime");
  two.detail << pairs << " pairs, " << with_law << " with a law, " << t << " s";
  three.detail << with_law << " laws and liftings round-tripped";

  // A pair of distinct laws over the same monads, if the small corpus has one.
  bool found = false;
  for (const auto& cat : {fixtures::z2(), fixtures::chain2(), c3}) {
    const auto ms = enumerate_monads(cat);
    for (const auto& s : ms)
      for (const auto& tt : ms) {
        const auto laws = enumerate_dist_laws(s, tt);
        if (found || laws.size() < 2) continue;
        found = true;
        four.expect(!check_joint_compatibility(lift_monad(laws[0]), extend_monad(laws[1])), "distinct laws");
      }
  }
  four.detail << with_law << " laws extended and jointly compatible";
  if (!found) four.detail << "; incompatible case skipped, no fixture pair carries two laws";
}

void criterion5(Outcome& o) {
  std::size_t pairs = 0, with_law = 0;
  for (const auto& c : {fixtures::chain2(), fixtures::chain3()})
    for (const auto& s : closures(c))
      for (const auto& g : interiors(c)) {
        ++pairs;
        const std::string id = name_of(s.functor) + "," + name_of(g.functor);
        const auto laws = enumerate_mixed_laws(s, g);
        const bool predicted = oracle::below(oracle::object_map(s.functor), oracle::object_map(g.functor));
        o.expect(laws.size() == (predicted ? 1u : 0u), "pointwise " + id);
        with_law += laws.empty() ? 0 : 1;
        for (const auto& ml : laws) {
          const LiftedComonad lc = lift_comonad(ml);
          const CoalgebraLifting cl = colift_monad(ml);
          o.expect(extract_mixed_law(lc) == ml && extract_mixed_law(cl) == ml, "extract " + id);
          o.expect(check_mixed_compatibility(lc, cl), "compatibility " + id);
        }
        for (const auto& lc : enumerate_comonad_liftings(s, g))
          o.expect(lift_comonad(extract_mixed_law(lc)) == lc, "comonad lifting round trip " + id);
        for (const auto& cl : enumerate_coalgebra_liftings(s, g))
          o.expect(colift_monad(extract_mixed_law(cl)) == cl, "coalgebra lifting round trip " + id);
      }
  o.detail << pairs << " pairs, " << with_law << " with a law";
}

void criterion6(Outcome& o) {
  std::vector<Monad> monads;
  for (const auto& c : {fixtures::chain2(), fixtures::chain3()})
    for (auto& m : closures(c)) monads.push_back(std::move(m));
  for (auto& m : enumerate_monads(fixtures::z2())) monads.push_back(std::move(m));
  monads.push_back(identity_monad(fixtures::trivial()));
  std::size_t adjunctions = 0;
  auto sane = [&](const Adjunction& a, const std::string& what) {
    ++adjunctions;
    o.expect(check_triangle_identities(a).ok(), "triangles " + what);
    const CommutingSquareR r = make_square_r(a, a, Functor::identity(a.lower()), Functor::identity(a.upper()));
    const CommutingSquareL l = make_square_l(a, a, Functor::identity(a.lower()), Functor::identity(a.upper()));
    o.expect(mate_right(r).components() == NatTrans::identity(a.left).components(), "right mate " + what);
    o.expect(mate_left(l).components() == NatTrans::identity(a.right).components(), "left mate " + what);
  };
  for (const auto& m : monads) {
    const EmAlgebraCategory em = em_category(m);
    const KleisliCategory kl = kleisli_category(m);
    o.expect(induced_monad(em.adjunction()) == m, "em " + name_of(m.functor));
    o.expect(induced_monad(kl.adjunction()) == m, "kleisli " + name_of(m.functor));
    for (Obj x : m.category().objects())
      o.expect(kl.adjunction().unit[x] == m.unit[x], "kleisli unit " + name_of(m.functor));
    sane(em.adjunction(), "em " + name_of(m.functor));
    sane(kl.adjunction(), "kleisli " + name_of(m.functor));
  }
  for (const auto& c : {fixtures::chain2(), fixtures::chain3()})
    for (const auto& w : interiors(c)) {
      const EmCoalgebraCategory coem = em_coalgebra_category(w);
      o.expect(induced_comonad(coem.adjunction()) == w, "coalgebras " + name_of(w.functor));
      sane(coem.adjunction(), "coalgebras " + name_of(w.functor));
    }
  o.detail << monads.size() << " monads, " << adjunctions << " adjunctions";
}

void criterion7(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Monad c1 = fixtures::thin_monad(fixtures::chain3(), {"0", "2", "2"});
  for (const Monad& s : {identity_monad(fixtures::chain2()), c1}) {
    HomCategorySizes sizes;
    const Report r = hom_iso_roundtrip(s, {}, &sizes);
    o.expect(r.ok(), "hom iso on " + name_of(s.functor));
    o.expect(sizes.mnd_one_cells == sizes.adj_one_cells && sizes.mnd_two_cells == sizes.adj_two_cells,
             "hom-category sizes on " + name_of(s.functor));
    for (const auto& f : r.findings()) o.expect(is_registered_tag(f.tag), "tag " + f.tag);
    o.detail << name_of(s.functor) << ": " << sizes.mnd_one_cells << " 1-cells, " << sizes.mnd_two_cells
             << " 2-cells; ";
  }
  const double t = seconds_since(start);
  o.expect(t < 60.0, "runtime");
  o.detail << t << " s";
}

void criterion8(Outcome& o) {
  std::vector<Monad> monads = {fixtures::thin_monad(fixtures::chain3(), {"1", "1", "2"})};
  for (auto& m : enumerate_monads(fixtures::z2())) monads.push_back(std::move(m));
  std::size_t total = 0, agree = 0, valid = 0;
  for (const auto& m : monads) {
    const auto cells = enumerate_adj_r_endo_cells(em_category(m));
    for (const auto& from : cells)
      for (const auto& to : cells)
        for (const auto& cand : enumerate_adj_r_candidates(from, to)) {
          ++total;
          agree += cand.mate_condition == cand.adjoint_condition ? 1 : 0;
          valid += cand.mate_condition ? 1 : 0;
        }
  }
  o.expect(total > 0 && agree == total, "agreement");
  o.expect(valid < total, "some candidate fails both conditions");
  o.detail << agree << "/" << total << " candidate pairs agree, " << valid << " satisfy both";
}

struct Run {
  int status = -1;
  std::string output;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("\"") + CATLAW_CLI + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void criterion9(Outcome& o) {
  const Run one = run_cli("selftest --jobs 1");
  const Run eight = run_cli("selftest --jobs 8");
  o.expect(one.status == 0 && eight.status == 0, "selftest exit status");
  o.expect(!one.output.empty() && one.output == eight.output, "byte-identical reports");
  o.detail << one.output.size() << " bytes each, exit " << one.status << "/" << eight.status;
}

}  // namespace

int main() {
  std::array<Outcome, 10> outcomes;
  const std::array<const char*, 10> titles = {"",
                                              "fixture enumeration",
                                              "bijection counts",
                                              "round trips",
                                              "joint characterization",
                                              "mixed case",
                                              "adjunction sanity",
                                              "hom-isomorphism",
                                              "AdjR 2-cell equivalence",
                                              "determinism"};
  auto guarded = [&](int n, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      outcomes[n].expect(false, std::string("exception: ") + e.what());
    }
  };
  guarded(1, [&] { criterion1(outcomes[1]); });
  guarded(2, [&] { criterion2_3_4(outcomes[2], outcomes[3], outcomes[4]); });
  guarded(5, [&] { criterion5(outcomes[5]); });
  guarded(6, [&] { criterion6(outcomes[6]); });
  guarded(7, [&] { criterion7(outcomes[7]); });
  guarded(8, [&] { criterion8(outcomes[8]); });
  guarded(9, [&] { criterion9(outcomes[9]); });

  bool all = true;
  for (int n = 1; n <= 9; ++n) {
    std::cout << (outcomes[n].passed ? "PASS" : "FAIL") << "  criterion " << n << " (" << titles[n]
              << "): " << outcomes[n].detail.str() << '\n';
    all = all && outcomes[n].passed;
  }
  return all ? 0 : 1;
}
