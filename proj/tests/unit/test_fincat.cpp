#include <gtest/gtest.h>

#include "catlaw/enumerate.hpp"
#include "catlaw/errors.hpp"
#include "catlaw/fixtures.hpp"
#include "catlaw/io.hpp"
#include "catlaw/monad.hpp"
#include "oracles.hpp"

using namespace catlaw;
using nlohmann::json;

namespace {

CategoryPtr parse(const char* text) { return validate_category(io::parse_raw_category(json::parse(text))); }

const char* kC2Explicit = R"({
  "objects": ["a", "b"],
  "morphisms": [{"id": "id_a", "src": "a", "tgt": "a"}, {"id": "id_b", "src": "b", "tgt": "b"},
                {"id": "f", "src": "a", "tgt": "b"}],
  "identities": {"a": "id_a", "b": "id_b"},
  "composition": [{"first": "id_a", "then": "f", "equals": "f"}, {"first": "f", "then": "id_b", "equals": "f"},
                  {"first": "id_a", "then": "id_a", "equals": "id_a"}, {"first": "id_b", "then": "id_b", "equals": "id_b"}]
})";

CategoryPtr chain(std::size_t n) {
  RawCategory raw;
  auto name = [](std::size_t i) { return std::string(1, static_cast<char>('a' + i)); };
  for (std::size_t i = 0; i < n; ++i) raw.objects.push_back(name(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) raw.morphisms.push_back({name(i) + name(j), name(i), name(j)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        raw.composition.push_back({name(i) + name(j), name(j) + name(k), name(i) + name(k)});
  return validate_category(raw);
}

Issue expect_validation_issue(const char* text, const std::string& code) {
  try {
    parse(text);
  } catch (const ValidationError& e) {
    for (const auto& i : e.issues())
      if (i.code == code) return i;
    ADD_FAILURE() << "no " << code << " among " << e.what();
    return {};
  }
  ADD_FAILURE() << "expected a validation error";
  return {};
}

}  // namespace

TEST(FinCategory, TwoChainIsValid) {
  const CategoryPtr c = parse(kC2Explicit);
  EXPECT_EQ(c->object_count(), 2u);
  EXPECT_EQ(c->morphism_count(), 3u);
  const Mor f = c->morphism("f");
  EXPECT_EQ(c->compose(f, c->identity(c->object("a"))), f);
  EXPECT_EQ(c->compose(c->identity(c->object("b")), f), f);
  EXPECT_TRUE(c->is_thin());
}

TEST(FinCategory, WrongUnitCompositeIsUnitLawViolation) {
  std::string text = kC2Explicit;
  text.replace(text.find(R"({"first": "id_a", "then": "f", "equals": "f"})"),
               std::string(R"({"first": "id_a", "then": "f", "equals": "f"})").size(),
               R"({"first": "id_a", "then": "f", "equals": "id_a"})");
  expect_validation_issue(text.c_str(), "UnitLawViolation");
}

TEST(FinCategory, ThreeChainIsValid) {
  const CategoryPtr c = fixtures::chain3();
  EXPECT_EQ(c->morphism_count(), 6u);
  EXPECT_EQ(c->compose(c->morphism("f12"), c->morphism("f01")), c->morphism("f02"));
  EXPECT_EQ(*c, *parse(R"({"objects": ["0", "1", "2"],
    "morphisms": [{"id": "f01", "src": "0", "tgt": "1"}, {"id": "f12", "src": "1", "tgt": "2"},
                  {"id": "f02", "src": "0", "tgt": "2"}],
    "composition": [{"first": "f01", "then": "f12", "equals": "f02"}]})"));
}

TEST(FinCategory, MissingCompositeIsReported) {
  expect_validation_issue(R"({"objects": ["0", "1", "2"],
    "morphisms": [{"id": "f01", "src": "0", "tgt": "1"}, {"id": "f12", "src": "1", "tgt": "2"},
                  {"id": "f02", "src": "0", "tgt": "2"}]})",
                          "MissingComposite");
}

TEST(FinCategory, NonAssociativeTableIsReported) {
  // Two parallel loops on one object with a table that is not associative.
  expect_validation_issue(R"({"objects": ["*"],
    "morphisms": [{"id": "p", "src": "*", "tgt": "*"}, {"id": "q", "src": "*", "tgt": "*"}],
    "composition": [{"first": "p", "then": "p", "equals": "q"}, {"first": "p", "then": "q", "equals": "p"},
                    {"first": "q", "then": "p", "equals": "q"}, {"first": "q", "then": "q", "equals": "q"}]})",
                          "NonAssociative");
}

TEST(FinCategory, DanglingIdIsReported) {
  expect_validation_issue(R"({"objects": ["a"], "morphisms": [{"id": "f", "src": "a", "tgt": "z"}]})", "DanglingId");
}

TEST(FinCategory, ValidationIsIdempotent) {
  for (const auto& c : {fixtures::chain2(), fixtures::chain3(), fixtures::z2(), fixtures::trivial(), fixtures::empty(),
                        chain(5)}) {
    EXPECT_EQ(*validate_category(to_raw(*c)), *c);
    EXPECT_EQ(*opposite(*opposite(*c)), *c);
  }
}

TEST(FinCategory, CanonicalOrderIgnoresInputOrder) {
  const CategoryPtr a = parse(R"({"objects": ["b", "a"], "morphisms": [{"id": "f", "src": "a", "tgt": "b"}]})");
  EXPECT_EQ(*a, *fixtures::chain2());
  EXPECT_EQ(a->id(obj_at(0)), "a");
}

TEST(FinCategory, AssociativityExhaustiveOnFixtures) {
  for (const auto& c : {fixtures::chain2(), fixtures::chain3(), fixtures::z2(), fixtures::trivial()}) {
    const Report r = check_associativity(*c, 0, 1'000'000);
    EXPECT_TRUE(r.ok());
  }
}

TEST(FinCategory, AssociativitySampledOnLargerCategory) {
  const CategoryPtr big = chain(12);  // well over 1000 composable triples
  const Report a = check_associativity(*big, 42);
  const Report b = check_associativity(*big, 42);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.size(), b.size());
  EXPECT_TRUE(check_associativity(*big, 7, 100).ok());
}

TEST(Functor, IdentityIsValid) {
  const CategoryPtr c = fixtures::chain3();
  EXPECT_TRUE(check_functor(Functor::identity(c)).ok());
}

TEST(Functor, SwapOnTwoChainHasNoImageForF) {
  try {
    make_functor(fixtures::chain2(), fixtures::chain2(), RawFunctor{{{"a", "b"}, {"b", "a"}}, {}});
    FAIL() << "expected a typing error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "SourceTargetMismatch");
  }
}

TEST(Functor, CompositionMatchesPointwiseComposition) {
  const auto monads = fixtures::closure_monads_c3();
  for (const auto& g : monads)
    for (const auto& f : monads) {
      const oracle::Map gm = oracle::object_map(g.monad.functor), fm = oracle::object_map(f.monad.functor);
      oracle::Map expected;
      for (std::size_t x = 0; x < fm.size(); ++x) expected.push_back(gm[fm[x]]);
      const Functor gf = compose(g.monad.functor, f.monad.functor);
      EXPECT_EQ(oracle::object_map(gf), expected) << g.name << " after " << f.name;
      EXPECT_TRUE(check_functor(gf).ok());
    }
  // c2 after c1 sends 0 to c2(0) = 1
  const Functor c21 = compose(fixtures::find(monads, "c2").functor, fixtures::find(monads, "c1").functor);
  EXPECT_EQ(c21(obj_at(0)), obj_at(1));
}

TEST(Functor, Equality) {
  const auto monads = fixtures::closure_monads_c3();
  const Functor& id = fixtures::find(monads, "id").functor;
  const Functor& c1 = fixtures::find(monads, "c1").functor;
  EXPECT_TRUE(equal(c1, c1));
  EXPECT_FALSE(equal(id, c1));
  EXPECT_EQ(id(obj_at(0)), c1(obj_at(0)));
  EXPECT_NE(id(obj_at(1)), c1(obj_at(1)));
  EXPECT_THROW(equal(id, Functor::identity(fixtures::chain2())), Error);
}

TEST(NatTrans, IdentityIsNatural) {
  for (const auto& m : fixtures::closure_monads_c3())
    EXPECT_TRUE(check_naturality(NatTrans::identity(m.monad.functor)).ok());
}

TEST(NatTrans, WhiskeringAndVerticalUnits) {
  const CategoryPtr c = fixtures::chain3();
  const Functor id = Functor::identity(c);
  for (const auto& f : enumerate_endofunctors(c, {}))
    for (const auto& g : enumerate_endofunctors(c, {}))
      for (const auto& alpha : enumerate_nat_trans(f, g)) {
        EXPECT_EQ(whisker_left(id, alpha), alpha);
        EXPECT_EQ(whisker_right(alpha, id), alpha);
        EXPECT_EQ(vcomp(alpha, NatTrans::identity(f)), alpha);
        EXPECT_EQ(vcomp(NatTrans::identity(g), alpha), alpha);
      }
}

TEST(NatTrans, EqualComponentsByDifferentRoutes) {
  const auto monads = fixtures::closure_monads_c3();
  const Functor& c1 = fixtures::find(monads, "c1").functor;
  const NatTrans a = NatTrans::identity(compose(c1, c1));
  const NatTrans b = whisker_left(c1, NatTrans::identity(c1));
  const NatTrans c = hcomp(NatTrans::identity(c1), NatTrans::identity(c1));
  EXPECT_TRUE(equal(a, b));
  EXPECT_TRUE(equal(b, c));
  EXPECT_TRUE(difference_witness(a, c).empty());
}

TEST(NatTrans, InterchangeExhaustiveOnFixtures) {
  for (const auto& c : {fixtures::chain2(), fixtures::chain3(), fixtures::z2()}) {
    const auto functors = enumerate_endofunctors(c, {});
    std::vector<NatTrans> all;
    for (const auto& f : functors)
      for (const auto& g : functors)
        for (auto& t : enumerate_nat_trans(f, g)) all.push_back(std::move(t));
    for (const auto& alpha : all)
      for (const auto& beta : all) {
        // β * α with α: F → F', β: G → G'
        const NatTrans h = hcomp(beta, alpha);
        const NatTrans one = vcomp(whisker_left(beta.target(), alpha), whisker_right(beta, alpha.source()));
        const NatTrans two = vcomp(whisker_right(beta, alpha.target()), whisker_left(beta.source(), alpha));
        EXPECT_EQ(h, one);
        EXPECT_EQ(h, two);
      }
  }
}

TEST(NatTrans, VerticalCompositionIsTypeChecked) {
  const auto monads = fixtures::closure_monads_c3();
  const NatTrans& eta1 = fixtures::find(monads, "c1").unit;
  const NatTrans& eta2 = fixtures::find(monads, "c2").unit;
  try {
    vcomp(eta1, eta2);
    FAIL() << "expected CompositionTypeMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CompositionTypeMismatch);
  }
  EXPECT_THROW(retype(eta1, eta2.source(), eta2.target()), Error);
}

TEST(NatTrans, DifferenceWitnessNamesObjectAndMorphisms) {
  const CategoryPtr z = fixtures::z2();
  const Functor id = Functor::identity(z);
  const NatTrans e = NatTrans::identity(id);
  const NatTrans g(id, id, {z->morphism("g")});
  EXPECT_EQ(first_difference(e, g), obj_at(0));
  const std::string w = difference_witness(e, g);
  EXPECT_NE(w.find('*'), std::string::npos);
  EXPECT_NE(w.find('e'), std::string::npos);
  EXPECT_NE(w.find('g'), std::string::npos);
}
