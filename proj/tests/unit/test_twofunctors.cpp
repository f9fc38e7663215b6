#include <gtest/gtest.h>

#include "catlaw/errors.hpp"
#include "catlaw/fixtures.hpp"
#include "catlaw/twofunctors.hpp"
#include "oracles.hpp"

using namespace catlaw;
using fixtures::find;

namespace {

const Monad& closure(const std::string& name) {
  static const auto all = fixtures::closure_monads_c3();
  return find(all, name);
}

const Comonad& interior(const std::string& name) {
  static const auto all = fixtures::interior_comonads_c3();
  return find(all, name);
}

// Endo 1-cells found by scanning every endofunctor and every transformation.
std::vector<MndBulletOneCell> bullet_cells(const Monad& t) {
  std::vector<MndBulletOneCell> out;
  for (const auto& p : enumerate_endofunctors(t.base, {}))
    for (const auto& psi : enumerate_nat_trans(compose(p, t.functor), compose(t.functor, p))) {
      MndBulletOneCell c{t, t, p, psi};
      if (check_cell(c).ok()) out.push_back(std::move(c));
    }
  return out;
}

std::vector<CoMndOneCell> comonad_cells(const Comonad& g) {
  std::vector<CoMndOneCell> out;
  for (const auto& p : enumerate_endofunctors(g.base, {}))
    for (const auto& pi : enumerate_nat_trans(compose(p, g.functor), compose(g.functor, p))) {
      CoMndOneCell c{g, g, p, pi};
      if (check_cell(c).ok()) out.push_back(std::move(c));
    }
  return out;
}

std::vector<Monad> test_monads() {
  std::vector<Monad> out = enumerate_monads(fixtures::z2());
  out.push_back(closure("c1"));
  out.push_back(closure("c2"));
  out.push_back(identity_monad(fixtures::chain2()));
  return out;
}

}  // namespace

TEST(TwoFunctors, IdentitiesArePreserved) {
  for (const auto& m : test_monads()) {
    const EmAlgebraCategory em = em_category(m);
    const KleisliCategory kl = kleisli_category(m);
    const AdjROneCell r = identity_adj_r_cell(em.adjunction());
    const AdjLOneCell l = identity_adj_l_cell(kl.adjunction());
    EXPECT_EQ(phiE_1cell(r), identity_cell(m));
    EXPECT_EQ(psiE_1cell(identity_cell(m), em, em), r);
    EXPECT_EQ(phiK_1cell(l), identity_bullet_cell(m));
    EXPECT_EQ(psiK_1cell(identity_bullet_cell(m), kl, kl), l);
    EXPECT_EQ(phiE_2cell(identity_two_cell(r)), identity_two_cell(identity_cell(m)));
    EXPECT_EQ(psiE_2cell(identity_two_cell(identity_cell(m)), em, em), identity_two_cell(r));
    EXPECT_EQ(phiK_2cell(identity_two_cell(l)), identity_two_cell(identity_bullet_cell(m)));
    EXPECT_EQ(psiK_2cell(identity_two_cell(identity_bullet_cell(m)), kl, kl), identity_two_cell(l));
  }
  for (const auto& g : fixtures::interior_comonads_c3()) {
    const EmCoalgebraCategory coem = em_coalgebra_category(g.comonad);
    const AdjLOneCell l = identity_adj_l_cell(coem.adjunction());
    EXPECT_EQ(vecPhiE_1cell(l), identity_cell(g.comonad));
    EXPECT_EQ(vecPsiE_1cell(identity_cell(g.comonad), coem, coem), l);
    EXPECT_EQ(vecPhiE_2cell(identity_two_cell(l)), identity_two_cell(identity_cell(g.comonad)));
    EXPECT_EQ(vecPsiE_2cell(identity_two_cell(identity_cell(g.comonad)), coem, coem), identity_two_cell(l));
  }
}

TEST(TwoFunctors, KleisliSideRoundTripsAndComposition) {
  for (const auto& t : test_monads()) {
    const KleisliCategory kl = kleisli_category(t);
    const auto cells = bullet_cells(t);
    ASSERT_FALSE(cells.empty());
    for (const auto& c : cells) {
      const AdjLOneCell a = psiK_1cell(c, kl, kl);
      EXPECT_TRUE(check_cell(a).ok());
      EXPECT_EQ(phiK_1cell(a), c);
      EXPECT_TRUE(check_cell(psiK_2cell(identity_two_cell(c), kl, kl)).ok());
    }
    for (const auto& p : cells)
      for (const auto& q : cells)
        EXPECT_EQ(psiK_1cell(compose(q, p), kl, kl), compose(psiK_1cell(q, kl, kl), psiK_1cell(p, kl, kl)));
  }
}

TEST(TwoFunctors, ComonadSideRoundTripsAndComposition) {
  std::vector<Comonad> comonads = enumerate_comonads(fixtures::z2());
  for (const auto& g : fixtures::interior_comonads_c3()) comonads.push_back(g.comonad);
  for (const auto& g : comonads) {
    const EmCoalgebraCategory coem = em_coalgebra_category(g);
    const auto cells = comonad_cells(g);
    ASSERT_FALSE(cells.empty());
    for (const auto& c : cells) {
      const AdjLOneCell a = vecPsiE_1cell(c, coem, coem);
      EXPECT_TRUE(check_cell(a).ok());
      EXPECT_EQ(vecPhiE_1cell(a), c);
      for (Obj n : coem.category()->objects()) {
        const Obj image = a.lower()(n);
        EXPECT_EQ(coem.carrier(image), c.functor(coem.carrier(n)));
      }
    }
    for (const auto& p : cells)
      for (const auto& q : cells)
        EXPECT_EQ(vecPsiE_1cell(compose(q, p), coem, coem),
                  compose(vecPsiE_1cell(q, coem, coem), vecPsiE_1cell(p, coem, coem)));
  }
}

TEST(TwoFunctors, EmSideRoundTripsAndComposition) {
  for (const auto& s : test_monads()) {
    const EmAlgebraCategory em = em_category(s);
    const auto cells = enumerate_mnd_endo_cells(s);
    for (const auto& c : cells) {
      const AdjROneCell a = psiE_1cell(c, em, em);
      EXPECT_TRUE(check_cell(a).ok());
      EXPECT_EQ(phiE_1cell(a), c);
      EXPECT_TRUE(check_cell(phiE_1cell(a)).ok());
    }
    for (const auto& p : cells)
      for (const auto& q : cells)
        EXPECT_EQ(psiE_1cell(compose(q, p), em, em), compose(psiE_1cell(q, em, em), psiE_1cell(p, em, em)));
  }
}

TEST(TwoFunctors, LiftingCellOfFixtureLaw) {
  const DistributiveLaw dl = fixtures::law_c2_c1();
  const EmAlgebraCategory em = em_category(dl.s);
  const AdjROneCell cell = psiE_1cell(MndOneCell{dl.s, dl.s, dl.t.functor, dl.phi}, em, em);
  ASSERT_EQ(em.category()->object_count(), 2u);
  for (Obj a : em.category()->objects()) {
    const Obj image = cell.upper()(a);
    EXPECT_EQ(em.carrier(image), dl.t.functor(em.carrier(a)));  // c1 on the fixed points {1, 2}
  }
  const MndOneCell back = phiE_1cell(cell);
  EXPECT_EQ(back.phi, dl.phi);
  const NatTrans u_lambda = whisker_left(em.forgetful(), cell.mate);
  EXPECT_EQ(u_lambda.components(), dl.phi.components());
}

TEST(TwoFunctors, LiftedMultiplicationSitsOverMu) {
  const DistributiveLaw dl = fixtures::law_c2_c1();
  const EmAlgebraCategory em = em_category(dl.s);
  const MonadObjectInMnd mo = make_monad_object(dl);
  const AdjRTwoCell mult = psiE_2cell(mo.mult, em, em);
  EXPECT_TRUE(check_cell(mult).ok());
  for (Obj a : em.category()->objects())
    EXPECT_EQ(em.underlying(mult.beta[a]), dl.t.mult[em.carrier(a)]);
}

TEST(TwoFunctors, ExtensionFunctorFollowsFormula) {
  const DistributiveLaw dl = fixtures::law_c2_c1();
  const KleisliExtension ke = extend_monad(dl);
  const KleisliCategory& kl = ke.kleisli;
  const FinCategory& base = *dl.s.base;
  for (Mor y : kl.category()->morphisms()) {
    const Obj x = kl.category()->src(y), z = kl.category()->tgt(y);
    const Mor expected = base.compose(dl.phi[z], dl.s.functor(kl.underlying(y)));
    EXPECT_EQ(kl.underlying(ke.extended.functor(y)), expected);
    EXPECT_EQ(kl.category()->src(ke.extended.functor(y)), dl.s.functor(x));
  }
  EXPECT_TRUE(check_monad_laws(ke.extended).ok());
}

TEST(TwoFunctors, KleisliTwoCellsOfStructureMaps) {
  const DistributiveLaw dl = fixtures::law_c2_c1();
  const KleisliCategory kl = kleisli_category(dl.t);
  const MndBulletOneCell cell{dl.t, dl.t, dl.s.functor, dl.phi};
  EXPECT_TRUE(check_cell(psiK_2cell(MndBulletTwoCell{compose(cell, cell), cell, dl.s.mult}, kl, kl)).ok());
  EXPECT_TRUE(check_cell(psiK_2cell(MndBulletTwoCell{identity_bullet_cell(dl.t), cell, dl.s.unit}, kl, kl)).ok());
}

TEST(TwoFunctors, AdjRTwoCellConditionsAgree) {
  for (const auto& s : test_monads()) {
    const auto cells = enumerate_adj_r_endo_cells(em_category(s));
    for (const auto& from : cells)
      for (const auto& to : cells)
        for (const auto& cand : enumerate_adj_r_candidates(from, to)) {
          EXPECT_EQ(cand.mate_condition, cand.adjoint_condition);
          if (cand.mate_condition) EXPECT_TRUE(check_cell(cand.cell).ok());
        }
  }
}

TEST(Lifting, IdentityLaw) {
  const Monad id = identity_monad(fixtures::chain3());
  const LiftedMonad lm = lift_monad(identity_dist_law(id, id));
  EXPECT_EQ(lm.lifted.functor, Functor::identity(lm.em.category()));
  EXPECT_EQ(extract_dist_law(lm), identity_dist_law(id, id));
  const KleisliExtension ke = extend_monad(identity_dist_law(id, id));
  EXPECT_EQ(ke.extended.functor, Functor::identity(ke.kleisli.category()));
  EXPECT_EQ(extract_from_extension(ke), identity_dist_law(id, id));
  EXPECT_TRUE(check_joint_compatibility(lm, ke));
}

TEST(Lifting, FixtureLawLiftsToClosureOnFixedPoints) {
  const DistributiveLaw dl = fixtures::law_c2_c1();
  const LiftedMonad lm = lift_monad(dl);
  EXPECT_TRUE(check_lifting(lm).ok());
  EXPECT_TRUE(check_monad_laws(lm.lifted).ok());
  const FinCategory& up = *lm.em.category();
  ASSERT_EQ(up.object_count(), 2u);
  oracle::Map m;
  for (Obj a : up.objects()) m.push_back(ix(lm.lifted.functor(a)));
  EXPECT_TRUE(oracle::monotone(m) && oracle::inflationary(m) && oracle::idempotent(m));
  EXPECT_EQ(extract_dist_law(lm), dl);
}

TEST(Lifting, EnumeratedLiftingsExtractToLaws) {
  const auto laws = enumerate_dist_laws(closure("c2"), closure("c1"));
  for (const auto& lm : enumerate_liftings(closure("c2"), closure("c1"))) {
    const DistributiveLaw dl = extract_dist_law(lm);
    EXPECT_NE(std::find(laws.begin(), laws.end(), dl), laws.end());
  }
  EXPECT_EQ(enumerate_liftings(closure("c2"), closure("c1")).size(), 1u);
  EXPECT_EQ(enumerate_liftings(closure("c1"), closure("c2")).size(), 0u);
  for (const auto& t : fixtures::closure_monads_c3())
    EXPECT_EQ(enumerate_liftings(closure("id"), t.monad).size(), 1u) << t.name;
}

TEST(Lifting, ExtensionAgreesWithLifting) {
  for (const auto& s : fixtures::closure_monads_c3())
    for (const auto& t : fixtures::closure_monads_c3())
      for (const auto& dl : enumerate_dist_laws(s.monad, t.monad)) {
        const KleisliExtension ke = extend_monad(dl);
        EXPECT_TRUE(check_extension(ke).ok());
        EXPECT_EQ(extract_from_extension(ke), extract_dist_law(lift_monad(dl)));
      }
}

TEST(Lifting, JointCompatibilityNeedsSameMonads) {
  const LiftedMonad lm = lift_monad(fixtures::law_c2_c1());
  const Monad id = identity_monad(fixtures::chain3());
  const KleisliExtension other = extend_monad(identity_dist_law(id, id));
  try {
    check_joint_compatibility(lm, other);
    FAIL() << "expected BaseMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BaseMismatch);
  }
}

TEST(Lifting, MixedIdentityAndTopClosure) {
  const Monad id = identity_monad(fixtures::chain3());
  const MixedDistributiveLaw trivial = identity_mixed_law(id, identity_comonad(fixtures::chain3()));
  const LiftedComonad lc = lift_comonad(trivial);
  const CoalgebraLifting cl = colift_monad(trivial);
  EXPECT_EQ(lc.lifted.functor, Functor::identity(lc.em.category()));
  EXPECT_EQ(cl.lifted.functor, Functor::identity(cl.coem.category()));
  EXPECT_TRUE(check_mixed_compatibility(lc, cl));

  const auto laws = enumerate_mixed_laws(closure("c3"), interior("id"));
  ASSERT_EQ(laws.size(), 1u);
  const LiftedComonad top_lc = lift_comonad(laws[0]);
  const CoalgebraLifting top_cl = colift_monad(laws[0]);
  EXPECT_EQ(top_lc.lifted.functor, Functor::identity(top_lc.em.category()));
  for (Obj n : top_cl.coem.category()->objects())
    EXPECT_EQ(top_cl.coem.carrier(top_cl.lifted.functor(n)), closure("c3").functor(top_cl.coem.carrier(n)));
  EXPECT_TRUE(check_mixed_compatibility(top_lc, top_cl));
}

TEST(Lifting, MixedRoundTripsOnAllPairs) {
  for (const auto& s : fixtures::closure_monads_c3())
    for (const auto& g : fixtures::interior_comonads_c3())
      for (const auto& ml : enumerate_mixed_laws(s.monad, g.comonad)) {
        const LiftedComonad lc = lift_comonad(ml);
        const CoalgebraLifting cl = colift_monad(ml);
        EXPECT_TRUE(check_lifting(lc).ok());
        EXPECT_TRUE(check_lifting(cl).ok());
        EXPECT_EQ(extract_mixed_law(lc), ml);
        EXPECT_EQ(extract_mixed_law(cl), ml);
        const NatTrans lhs = whisker_left(lc.em.forgetful(), lc.cell.mate);
        const NatTrans rhs = whisker_left(cl.coem.forgetful(), cl.cell.mate);
        EXPECT_EQ(lhs.components(), rhs.components()) << s.name << "," << g.name;
      }
}

TEST(MonadObject, IdentityAndFixture) {
  const Monad id = identity_monad(fixtures::chain3());
  EXPECT_TRUE(check_monad_object(make_monad_object(identity_dist_law(id, id))).ok());
  EXPECT_TRUE(check_monad_object(make_monad_object(fixtures::law_c2_c1())).ok());
}

TEST(MonadObject, PerturbedLawFailsNamedAxiom) {
  const Monad id = identity_monad(fixtures::z2());
  const DistributiveLaw bad = make_dist_law(id, id, {{"*", "g"}});
  const Report r = check_monad_object(make_monad_object(bad));
  EXPECT_FALSE(r.ok());
  for (const auto& f : r.failures()) EXPECT_TRUE(is_registered_tag(f.tag));
}

TEST(HomIso, IdentityOnTwoChainAndC1) {
  for (const Monad& s : {identity_monad(fixtures::chain2()), closure("c1")}) {
    HomCategorySizes sizes;
    const Report r = hom_iso_roundtrip(s, {}, &sizes);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(sizes.mnd_one_cells, sizes.adj_one_cells);
    EXPECT_EQ(sizes.mnd_two_cells, sizes.adj_two_cells);
    EXPECT_GT(sizes.mnd_one_cells, 0u);
  }
}

TEST(HomIso, GroupMonads) {
  for (const auto& s : enumerate_monads(fixtures::z2())) EXPECT_TRUE(hom_iso_roundtrip(s).ok());
}
