#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "catlaw/errors.hpp"
#include "catlaw/fixtures.hpp"
#include "catlaw/io.hpp"
#include "catlaw/selftest.hpp"

using namespace catlaw;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = CATLAW_FIXTURE_DIR;

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("catlaw-io-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Io, FixtureCorpusLoads) {
  io::Loader loader;
  EXPECT_EQ(*loader.category(kFixtures / "categories/C3.json"), *fixtures::chain3());
  EXPECT_EQ(*loader.category(kFixtures / "categories/C2.json"), *fixtures::chain2());
  EXPECT_EQ(*loader.category(kFixtures / "categories/Z2.json"), *fixtures::z2());
  const auto c3 = fixtures::closure_monads_c3();
  for (const char* name : {"c1", "c2", "c3"})
    EXPECT_EQ(loader.monad(kFixtures / (std::string(name) + ".json")), fixtures::find(c3, name)) << name;
  EXPECT_EQ(loader.monad(kFixtures / "id3.json"), fixtures::find(c3, "id"));
  const auto i3 = fixtures::interior_comonads_c3();
  for (const char* name : {"i1", "i2", "i3"})
    EXPECT_EQ(loader.comonad(kFixtures / (std::string(name) + ".json")), fixtures::find(i3, name)) << name;
  EXPECT_EQ(loader.comonad(kFixtures / "bottom2.json"), fixtures::find(fixtures::interior_comonads_c2(), "bottom"));
  EXPECT_EQ(loader.monad(kFixtures / "top2.json"), fixtures::find(fixtures::closure_monads_c2(), "top"));
  EXPECT_EQ(loader.dist_law(kFixtures / "law_c2_c1.json"), fixtures::law_c2_c1());
  EXPECT_TRUE(check_dist_law(loader.dist_law(kFixtures / "law_identity.json")).ok());
  EXPECT_TRUE(check_mixed_law(loader.mixed_law(kFixtures / "mixed_c1_i1.json")).ok());
  EXPECT_TRUE(check_monad_laws(loader.monad(kFixtures / "idz2.json")).ok());
}

TEST(Io, CategoryJsonRoundTrip) {
  for (const auto& c : {fixtures::chain2(), fixtures::chain3(), fixtures::z2(), fixtures::empty()})
    EXPECT_EQ(*validate_category(io::parse_raw_category(io::to_json(*c))), *c);
  const EmAlgebraCategory em = em_category(fixtures::law_c2_c1().s);
  EXPECT_EQ(*validate_category(io::parse_raw_category(io::to_json(*em.category()))), *em.category());
}

TEST_F(ScratchDir, MonadJsonRoundTrip) {
  for (const auto& m : enumerate_monads(fixtures::z2())) {
    const fs::path p = write("m.json", io::to_json(m).dump());
    io::Loader loader;
    EXPECT_EQ(loader.monad(p), m);
  }
}

TEST_F(ScratchDir, LiftingAndExtensionFilesRoundTrip) {
  const DistributiveLaw dl = fixtures::law_c2_c1();
  const LiftedMonad lm = lift_monad(dl);
  const KleisliExtension ke = extend_monad(dl);
  io::Loader loader;
  EXPECT_EQ(loader.lifting(write("lift.json", io::to_json(lm).dump())), lm);
  EXPECT_EQ(loader.extension(write("ext.json", io::to_json(ke).dump())), ke);
}

TEST_F(ScratchDir, ParseErrors) {
  io::Loader loader;
  EXPECT_EQ(error_code([&] { loader.category(write("bad.json", "{ not json")); }), "ParseError");
  EXPECT_EQ(error_code([&] { loader.category(write("nobj.json", R"({"morphisms": []})")); }), "MissingField");
  EXPECT_EQ(error_code([&] { loader.category(dir_ / "absent.json"); }), "UnreadableFile");
  EXPECT_EQ(error_code([&] { loader.category(write("num.json", R"({"objects": [1]})")); }), "ParseError");
}

TEST_F(ScratchDir, NestedPathsResolveAgainstReferencingFile) {
  fs::create_directories(dir_ / "cats");
  write("cats/c.json", R"({"objects": ["a", "b"], "morphisms": [{"id": "f", "src": "a", "tgt": "b"}]})");
  const fs::path m = write("m.json", R"({"category": "cats/c.json", "endofunctor": {"objects": {"a": "b", "b": "b"}}})");
  io::Loader loader;
  EXPECT_EQ(loader.monad(m), fixtures::find(fixtures::closure_monads_c2(), "top"));
}

TEST_F(ScratchDir, InlineCategory) {
  const fs::path m = write("m.json", R"({"category": {"objects": ["x"]}, "endofunctor": {"objects": {"x": "x"}}})");
  io::Loader loader;
  EXPECT_TRUE(check_monad_laws(loader.monad(m)).ok());
}

TEST(Report, EveryTagIsRegisteredAndUnique) {
  const auto& all = law_tags();
  std::set<std::string> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  EXPECT_TRUE(is_registered_tag(tags::kRoundTrip));
  EXPECT_FALSE(is_registered_tag("made.up"));
}

TEST(Verification, JsonSchema) {
  VerificationReport r({"demo", "x"});
  r.check("a", tags::kRoundTrip, true);
  r.check("b", tags::kCountEquality, false, "1 vs 2");
  r.results()["n"] = 3;
  const json j = r.to_json();
  EXPECT_EQ(j["schema_version"], VerificationReport::kSchemaVersion);
  EXPECT_EQ(j["command"], json::array({"demo", "x"}));
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_EQ(j["checks"][1]["witness"], "1 vs 2");
  EXPECT_FALSE(j["checks"][0].contains("witness"));
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_FALSE(j.contains("duration"));
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.to_text(0.25).find("0.250 s"), std::string::npos);
}

TEST(Verification, SelftestUsesRegisteredTagsAndPasses) {
  const VerificationReport r = run_selftest_core({});
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks()) EXPECT_TRUE(is_registered_tag(c.tag)) << c.id << " " << c.tag;
  std::size_t criteria = 0;
  for (const auto& c : r.checks()) criteria += c.tag == tags::kCriterion ? 1 : 0;
  EXPECT_EQ(criteria, 8u);
}
