#include <gtest/gtest.h>

#include <algorithm>

#include "catlaw/errors.hpp"
#include "catlaw/fixtures.hpp"
#include "catlaw/monad.hpp"
#include "oracles.hpp"

using namespace catlaw;

namespace {

const RawFunctor kC1{{{"0", "0"}, {"1", "2"}, {"2", "2"}}, {}};

template <class T>
std::vector<oracle::Map> maps_of(const std::vector<T>& all) {
  std::vector<oracle::Map> out;
  for (const auto& s : all) out.push_back(oracle::object_map(s.functor));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Map> sorted(std::vector<oracle::Map> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Monad, IdentityMonadOnThreeChain) {
  EXPECT_TRUE(check_monad_laws(identity_monad(fixtures::chain3())).ok());
  EXPECT_TRUE(check_comonad_laws(identity_comonad(fixtures::chain3())).ok());
}

TEST(Monad, ClosureMonadWithForcedStructure) {
  const Monad c1 = make_monad(fixtures::chain3(), kC1, {}, {});
  const Report r = check_monad_laws(c1);
  EXPECT_TRUE(r.ok());
  for (const char* tag : {tags::kMonadAssoc, tags::kMonadLeftUnit, tags::kMonadRightUnit})
    EXPECT_NE(r.find(tag), nullptr) << tag;
  EXPECT_EQ(c1, fixtures::find(fixtures::closure_monads_c3(), "c1"));
}

TEST(Monad, UnitComponentNamingUnknownMorphism) {
  try {
    make_monad(fixtures::chain3(), kC1, {}, {{"1", "nonexistent"}});
    FAIL() << "expected UnitComponentMistyped";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Typing);
    EXPECT_EQ(e.code(), "UnitComponentMistyped");
  }
}

TEST(Monad, UnitComponentInWrongHom) {
  EXPECT_THROW(make_monad(fixtures::chain3(), kC1, {}, {{"1", "f01"}}), Error);
  EXPECT_THROW(make_monad(fixtures::chain3(), kC1, {{"0", "f02"}}, {}), Error);
}

TEST(Monad, LawFailureOnGroupIsNamed) {
  const CategoryPtr z = fixtures::z2();
  const RawFunctor id{{{"*", "*"}}, {{"e", "e"}, {"g", "g"}}};
  const Monad bad = make_monad(z, id, {{"*", "g"}}, {{"*", "e"}});
  const Report r = check_monad_laws(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.failed(tags::kMonadLeftUnit));
  EXPECT_TRUE(r.failed(tags::kMonadRightUnit));
  EXPECT_FALSE(r.failed(tags::kMonadAssoc));
}

TEST(Monad, EnumerationMatchesClosureOracle) {
  struct Case {
    CategoryPtr c;
    std::size_t n;
    std::size_t expected;
  };
  for (const auto& [c, n, expected] : {Case{fixtures::chain2(), 2, 2}, Case{fixtures::chain3(), 3, 4},
                                       Case{fixtures::trivial(), 1, 1}}) {
    const auto monads = enumerate_monads(c);
    const auto comonads = enumerate_comonads(c);
    EXPECT_EQ(monads.size(), expected);
    EXPECT_EQ(comonads.size(), expected);
    EXPECT_EQ(maps_of(monads), sorted(oracle::closures_on_chain(n)));
    EXPECT_EQ(maps_of(comonads), sorted(oracle::interiors_on_chain(n)));
  }
}

TEST(Monad, EnumeratedMonadsAreClosureOperators) {
  for (const auto& m : enumerate_monads(fixtures::chain3())) {
    const oracle::Map s = oracle::object_map(m.functor);
    EXPECT_TRUE(oracle::monotone(s));
    EXPECT_TRUE(oracle::inflationary(s));
    EXPECT_TRUE(oracle::idempotent(s));
    EXPECT_TRUE(check_monad_laws(m).ok());
  }
  for (const auto& w : enumerate_comonads(fixtures::chain3())) {
    const oracle::Map g = oracle::object_map(w.functor);
    EXPECT_TRUE(oracle::deflationary(g));
    EXPECT_TRUE(oracle::idempotent(g));
    EXPECT_TRUE(check_comonad_laws(w).ok());
  }
}

TEST(Monad, EnumerationOnGroupFindsBothUnitChoices) {
  // On one object with Z/2: only the identity functor admits a natural unit,
  // and the unit laws force mu to be the inverse of eta.
  const CategoryPtr z = fixtures::z2();
  const auto monads = enumerate_monads(z);
  ASSERT_EQ(monads.size(), 2u);
  for (const auto& m : monads) {
    EXPECT_EQ(m.functor, Functor::identity(z));
    EXPECT_EQ(m.mult[obj_at(0)], m.unit[obj_at(0)]);
  }
  EXPECT_EQ(enumerate_comonads(z).size(), 2u);
}

TEST(Monad, DualityWithOppositeCategory) {
  for (const auto& c : {fixtures::chain2(), fixtures::chain3(), fixtures::z2(), fixtures::trivial()})
    EXPECT_EQ(enumerate_comonads(c).size(), enumerate_monads(opposite(*c)).size());
}

TEST(Monad, EnumerationOrderIsCanonicalAndJobIndependent) {
  const auto one = enumerate_monads(fixtures::chain3(), {10'000'000, 1});
  const auto many = enumerate_monads(fixtures::chain3(), {10'000'000, 8});
  EXPECT_EQ(one, many);
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end(), [](const Monad& a, const Monad& b) { return canonical_less(a, b); }));
}

TEST(Monad, CapIsEnforced) {
  try {
    enumerate_monads(fixtures::chain3(), {5, 1});
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 5u);
    EXPECT_GT(e.estimate(), 5u);
  }
}

TEST(Monad, EmptyCategoryHasOnlyTheIdentityMonad) {
  EXPECT_EQ(enumerate_monads(fixtures::empty()).size(), 1u);
}
