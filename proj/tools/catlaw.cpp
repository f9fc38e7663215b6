#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catlaw/construct.hpp"
#include "catlaw/distlaw.hpp"
#include "catlaw/errors.hpp"
#include "catlaw/io.hpp"
#include "catlaw/selftest.hpp"
#include "catlaw/twofunctors.hpp"
#include "catlaw/verification.hpp"

namespace {

using namespace catlaw;
using io::json;
namespace fs = std::filesystem;

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t cap = EnumerationOptions{}.cap;

  EnumerationOptions options() const { return {cap, jobs}; }
};

using Run = std::function<void(VerificationReport&)>;

json error_json(const std::exception& e) {
  json err = {{"message", e.what()}};
  if (const auto* ce = dynamic_cast<const CapExceeded*>(&e)) {
    err["kind"] = "cap";
    err["code"] = ce->code();
    err["estimate"] = ce->estimate();
    err["cap"] = ce->cap();
  } else if (const auto* ve = dynamic_cast<const ValidationError*>(&e)) {
    err["kind"] = "validation";
    err["code"] = ve->code();
    json issues = json::array();
    for (const auto& i : ve->issues()) issues.push_back({{"code", i.code}, {"detail", i.detail}});
    err["issues"] = issues;
  } else if (const auto* ee = dynamic_cast<const Error*>(&e)) {
    err["kind"] = ee->kind() == ErrorKind::Parse ? "parse" : "typing";
    err["code"] = ee->code();
  } else {
    err["kind"] = "parse";
    err["code"] = "ParseError";
  }
  return err;
}

int emit(const Globals& g, const VerificationReport& report, std::optional<json> error, double seconds) {
  if (g.format == "json") {
    json out = report.to_json();
    if (error) out["error"] = *error;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << report.to_text(seconds);
    if (error) std::cout << "error: " << (*error)["message"].get<std::string>() << '\n';
  }
  if (error) return (*error)["kind"] == "cap" ? kCapExceeded : kInputError;
  return report.ok() ? kPass : kCheckFailed;
}

int execute(const Globals& g, std::vector<std::string> command, const Run& run) {
  VerificationReport report(std::move(command));
  const auto start = std::chrono::steady_clock::now();
  std::optional<json> error;
  try {
    run(report);
  } catch (const std::exception& e) {
    error = error_json(e);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return emit(g, report, error, seconds);
}

// Law checks gate constructions that assume them.
bool laws_hold(VerificationReport& r, const std::string& id, const Monad& m) {
  const Report laws = check_monad_laws(m);
  r.add(id, laws);
  return laws.ok();
}

bool laws_hold(VerificationReport& r, const std::string& id, const Comonad& w) {
  const Report laws = check_comonad_laws(w);
  r.add(id, laws);
  return laws.ok();
}

void record_adjunction(VerificationReport& r, const Adjunction& a, const std::string& dump) {
  r.add("triangles", check_triangle_identities(a));
  r.results()["objects"] = a.upper()->objects().size();
  r.results()["morphisms"] = a.upper()->morphisms().size();
  r.results()["category"] = io::to_json(*a.upper());
  if (!dump.empty()) io::write_json(dump, io::to_json(*a.upper()));
}

void cmd_validate(VerificationReport& r, const std::string& file, std::uint64_t seed) {
  io::Loader loader;
  const json j = io::read_json(file);
  if (j.contains("T")) {
    const DistributiveLaw dl = loader.dist_law(file);
    r.results()["kind"] = "distributive-law";
    if (laws_hold(r, "S", dl.s) & laws_hold(r, "T", dl.t)) r.add("law", check_dist_law(dl));
  } else if (j.contains("G")) {
    const MixedDistributiveLaw ml = loader.mixed_law(file);
    r.results()["kind"] = "mixed-distributive-law";
    if (laws_hold(r, "S", ml.s) & laws_hold(r, "G", ml.g)) r.add("law", check_mixed_law(ml));
  } else if (j.value("kind", "") == "comonad" || j.contains("delta") || j.contains("epsilon")) {
    r.results()["kind"] = "comonad";
    laws_hold(r, "comonad", loader.comonad(file));
  } else if (j.contains("endofunctor")) {
    r.results()["kind"] = "monad";
    laws_hold(r, "monad", loader.monad(file));
  } else {
    const CategoryPtr c = loader.category(file);
    r.results()["kind"] = "category";
    r.check("category", tags::kCategoryAxioms, true);
    r.add("category", check_associativity(*c, seed));
    r.results()["objects"] = c->objects().size();
    r.results()["morphisms"] = c->morphisms().size();
  }
}

template <class Structure>
void record_enumeration(VerificationReport& r, const std::vector<Structure>& all) {
  json list = json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    laws_hold(r, std::to_string(i), all[i]);
    json entry = io::to_json(all[i]);
    entry.erase("category");
    list.push_back(std::move(entry));
  }
  r.results()["count"] = all.size();
  r.results()["structures"] = list;
}

void cmd_lift(VerificationReport& r, const Globals& g, const std::string& file, const std::string& dump) {
  io::Loader loader;
  const DistributiveLaw dl = loader.dist_law(file);
  const Report law = check_dist_law(dl);
  r.add("law", law);
  if (!law.ok()) return;
  const LiftedMonad lm = lift_monad(dl, g.options());
  r.add("lifting", check_lifting(lm));
  r.check("extract-after-lift", tags::kRoundTrip, extract_dist_law(lm) == dl);
  r.results()["lifted"] = io::to_json(lm)["lifted"];
  if (!dump.empty()) io::write_json(dump, io::to_json(lm));
}

void cmd_extend(VerificationReport& r, const std::string& file, const std::string& dump) {
  io::Loader loader;
  const DistributiveLaw dl = loader.dist_law(file);
  const Report law = check_dist_law(dl);
  r.add("law", law);
  if (!law.ok()) return;
  const KleisliExtension ke = extend_monad(dl);
  r.add("extension", check_extension(ke));
  r.check("extract-after-extend", tags::kRoundTrip, extract_from_extension(ke) == dl);
  r.results()["extended"] = io::to_json(ke)["extended"];
  if (!dump.empty()) io::write_json(dump, io::to_json(ke));
}

void cmd_extract_em(VerificationReport& r, const Globals& g, const std::string& file) {
  io::Loader loader;
  const LiftedMonad lm = loader.lifting(file, g.options());
  const Report lifting = check_lifting(lm);
  r.add("lifting", lifting);
  if (!lifting.ok()) return;
  const DistributiveLaw dl = extract_dist_law(lm);
  r.add("law", check_dist_law(dl));
  r.check("lift-after-extract", tags::kRoundTrip, lift_monad(dl, g.options()) == lm);
  r.results()["phi"] = io::to_json(dl.phi);
}

void cmd_extract_kleisli(VerificationReport& r, const std::string& file) {
  io::Loader loader;
  const KleisliExtension ke = loader.extension(file);
  const Report extension = check_extension(ke);
  r.add("extension", extension);
  if (!extension.ok()) return;
  const DistributiveLaw dl = extract_from_extension(ke);
  r.add("law", check_dist_law(dl));
  r.check("extend-after-extract", tags::kRoundTrip, extend_monad(dl) == ke);
  r.results()["phi"] = io::to_json(dl.phi);
}

void cmd_roundtrip(VerificationReport& r, const Globals& g, const std::string& s_file, const std::string& t_file) {
  io::Loader loader;
  const Monad s = loader.monad(s_file);
  const Monad t = loader.monad(t_file);
  if (!laws_hold(r, "S", s) || !laws_hold(r, "T", t)) return;
  const auto opts = g.options();
  const auto laws = enumerate_dist_laws(s, t, opts);
  const auto liftings = enumerate_liftings(s, t, opts);
  const auto extensions = enumerate_extensions(s, t, opts);
  r.results()["counts"] = {{"laws", laws.size()}, {"liftings", liftings.size()}, {"extensions", extensions.size()}};
  r.check("laws-vs-liftings", tags::kCountEquality, laws.size() == liftings.size());
  r.check("laws-vs-extensions", tags::kCountEquality, laws.size() == extensions.size());
  for (std::size_t i = 0; i < laws.size(); ++i) {
    const std::string id = "law-" + std::to_string(i);
    const LiftedMonad lm = lift_monad(laws[i], opts);
    const KleisliExtension ke = extend_monad(laws[i]);
    r.add(id, check_dist_law(laws[i]));
    r.add(id + "/lifting", check_lifting(lm));
    r.add(id + "/extension", check_extension(ke));
    r.check(id + "/extract-after-lift", tags::kRoundTrip, extract_dist_law(lm) == laws[i]);
    r.check(id + "/extract-after-extend", tags::kRoundTrip, extract_from_extension(ke) == laws[i]);
    r.check(id + "/joint", tags::kJointCompat, check_joint_compatibility(lm, ke));
  }
  for (std::size_t i = 0; i < liftings.size(); ++i)
    r.check("lifting-" + std::to_string(i) + "/lift-after-extract", tags::kRoundTrip,
            lift_monad(extract_dist_law(liftings[i]), opts) == liftings[i]);
  for (std::size_t i = 0; i < extensions.size(); ++i)
    r.check("extension-" + std::to_string(i) + "/extend-after-extract", tags::kRoundTrip,
            extend_monad(extract_from_extension(extensions[i])) == extensions[i]);
}

void cmd_roundtrip_mixed(VerificationReport& r, const Globals& g, const std::string& s_file,
                         const std::string& g_file) {
  io::Loader loader;
  const Monad s = loader.monad(s_file);
  const Comonad w = loader.comonad(g_file);
  if (!laws_hold(r, "S", s) || !laws_hold(r, "G", w)) return;
  const auto opts = g.options();
  const auto laws = enumerate_mixed_laws(s, w, opts);
  const auto lifted = enumerate_comonad_liftings(s, w, opts);
  const auto colifted = enumerate_coalgebra_liftings(s, w, opts);
  r.results()["counts"] = {
      {"laws", laws.size()}, {"comonad_liftings", lifted.size()}, {"coalgebra_liftings", colifted.size()}};
  r.check("laws-vs-comonad-liftings", tags::kCountEquality, laws.size() == lifted.size());
  r.check("laws-vs-coalgebra-liftings", tags::kCountEquality, laws.size() == colifted.size());
  for (std::size_t i = 0; i < laws.size(); ++i) {
    const std::string id = "law-" + std::to_string(i);
    const LiftedComonad lc = lift_comonad(laws[i], opts);
    const CoalgebraLifting cl = colift_monad(laws[i], opts);
    r.add(id, check_mixed_law(laws[i]));
    r.add(id + "/comonad-lifting", check_lifting(lc));
    r.add(id + "/coalgebra-lifting", check_lifting(cl));
    r.check(id + "/extract-after-lift", tags::kRoundTrip, extract_mixed_law(lc) == laws[i]);
    r.check(id + "/extract-after-colift", tags::kRoundTrip, extract_mixed_law(cl) == laws[i]);
    r.check(id + "/compatibility", tags::kMixedCompat, check_mixed_compatibility(lc, cl));
  }
  for (std::size_t i = 0; i < lifted.size(); ++i)
    r.check("comonad-lifting-" + std::to_string(i) + "/lift-after-extract", tags::kRoundTrip,
            lift_comonad(extract_mixed_law(lifted[i]), opts) == lifted[i]);
  for (std::size_t i = 0; i < colifted.size(); ++i)
    r.check("coalgebra-lifting-" + std::to_string(i) + "/colift-after-extract", tags::kRoundTrip,
            colift_monad(extract_mixed_law(colifted[i]), opts) == colifted[i]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-category monads, distributive laws and their liftings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--cap", g.cap, "Upper bound on enumerated candidates");

  std::vector<std::string> command;
  Run run;

  auto unary = [&](const std::string& name, const std::string& help, const std::string& what,
                   std::function<void(VerificationReport&, const std::string&)> body) {
    auto* sub = app.add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, what)->required();
    sub->callback([&command, &run, name, file, body] {
      command = {name, *file};
      run = [file, body](VerificationReport& r) { body(r, *file); };
    });
    return sub;
  };
  auto binary = [&](CLI::App* parent, const std::string& name, std::vector<std::string> prefix,
                    const std::string& help, std::function<void(VerificationReport&, const std::string&,
                                                                const std::string&)> body) {
    auto* sub = parent->add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("first", *a)->required();
    sub->add_option("second", *b)->required();
    sub->callback([&command, &run, prefix, a, b, body] {
      command = prefix;
      command.push_back(*a);
      command.push_back(*b);
      run = [a, b, body](VerificationReport& r) { body(r, *a, *b); };
    });
    return sub;
  };

  unary("validate", "Validate a category, (co)monad or law file", "JSON file",
        [&g](VerificationReport& r, const std::string& f) { cmd_validate(r, f, g.seed); });
  unary("monads", "Enumerate all monads on a category", "category file", [&g](VerificationReport& r, const std::string& f) {
    io::Loader loader;
    record_enumeration(r, enumerate_monads(loader.category(f), g.options()));
  });
  unary("comonads", "Enumerate all comonads on a category", "category file",
        [&g](VerificationReport& r, const std::string& f) {
          io::Loader loader;
          record_enumeration(r, enumerate_comonads(loader.category(f), g.options()));
        });

  std::string dump;
  unary("em", "Build the Eilenberg-Moore adjunction of a monad", "monad file",
        [&g, &dump](VerificationReport& r, const std::string& f) {
          io::Loader loader;
          const Monad m = loader.monad(f);
          if (!laws_hold(r, "monad", m)) return;
          const EmAlgebraCategory em = em_category(m, g.options());
          r.check("induced-monad", tags::kRoundTrip, induced_monad(em.adjunction()) == m);
          record_adjunction(r, em.adjunction(), dump);
        })
      ->add_option("--dump", dump, "Write the constructed category as JSON");
  unary("coem", "Build the coalgebra adjunction of a comonad", "comonad file",
        [&g, &dump](VerificationReport& r, const std::string& f) {
          io::Loader loader;
          const Comonad w = loader.comonad(f);
          if (!laws_hold(r, "comonad", w)) return;
          const EmCoalgebraCategory coem = em_coalgebra_category(w, g.options());
          r.check("induced-comonad", tags::kRoundTrip, induced_comonad(coem.adjunction()) == w);
          record_adjunction(r, coem.adjunction(), dump);
        })
      ->add_option("--dump", dump, "Write the constructed category as JSON");
  unary("kleisli", "Build the Kleisli adjunction of a monad", "monad file",
        [&dump](VerificationReport& r, const std::string& f) {
          io::Loader loader;
          const Monad m = loader.monad(f);
          if (!laws_hold(r, "monad", m)) return;
          const KleisliCategory kl = kleisli_category(m);
          r.check("induced-monad", tags::kRoundTrip, induced_monad(kl.adjunction()) == m);
          record_adjunction(r, kl.adjunction(), dump);
        })
      ->add_option("--dump", dump, "Write the constructed category as JSON");

  auto* distlaw = app.add_subcommand("distlaw", "Distributive laws ST → TS");
  distlaw->require_subcommand(1);
  auto* mixed = app.add_subcommand("mixed", "Mixed distributive laws SG → GS");
  mixed->require_subcommand(1);
  for (auto* parent : {distlaw, mixed}) {
    const bool is_mixed = parent == mixed;
    const std::string group = parent->get_name();
    auto* check = parent->add_subcommand("check", "Check a law file");
    auto file = std::make_shared<std::string>();
    check->add_option("file", *file)->required();
    check->callback([&command, &run, group, file, is_mixed] {
      command = {group, "check", *file};
      run = [file, is_mixed](VerificationReport& r) {
        io::Loader loader;
        if (is_mixed) {
          const MixedDistributiveLaw ml = loader.mixed_law(*file);
          if (laws_hold(r, "S", ml.s) & laws_hold(r, "G", ml.g)) r.add("law", check_mixed_law(ml));
        } else {
          const DistributiveLaw dl = loader.dist_law(*file);
          if (laws_hold(r, "S", dl.s) & laws_hold(r, "T", dl.t)) r.add("law", check_dist_law(dl));
        }
      };
    });
    binary(parent, "enumerate", {group, "enumerate"}, "Enumerate all laws between two structures",
           [&g, is_mixed](VerificationReport& r, const std::string& a, const std::string& b) {
             io::Loader loader;
             const Monad s = loader.monad(a);
             json laws = json::array();
             if (is_mixed) {
               const Comonad w = loader.comonad(b);
               if (!(laws_hold(r, "S", s) & laws_hold(r, "G", w))) return;
               for (const auto& ml : enumerate_mixed_laws(s, w, g.options())) {
                 r.add("law-" + std::to_string(laws.size()), check_mixed_law(ml));
                 laws.push_back(io::to_json(ml.psi));
               }
             } else {
               const Monad t = loader.monad(b);
               if (!(laws_hold(r, "S", s) & laws_hold(r, "T", t))) return;
               for (const auto& dl : enumerate_dist_laws(s, t, g.options())) {
                 r.add("law-" + std::to_string(laws.size()), check_dist_law(dl));
                 laws.push_back(io::to_json(dl.phi));
               }
             }
             r.results()["count"] = laws.size();
             r.results()["laws"] = laws;
           });
  }

  std::string lift_dump, extend_dump;
  unary("lift", "Lift T to the Eilenberg-Moore category of S along a law", "law file",
        [&g, &lift_dump](VerificationReport& r, const std::string& f) { cmd_lift(r, g, f, lift_dump); })
      ->add_option("--dump", lift_dump, "Write the lifting as JSON");
  unary("extend", "Extend S to the Kleisli category of T along a law", "law file",
        [&extend_dump](VerificationReport& r, const std::string& f) { cmd_extend(r, f, extend_dump); })
      ->add_option("--dump", extend_dump, "Write the extension as JSON");
  unary("extract-em", "Recover the law from a lifting file", "lifting file",
        [&g](VerificationReport& r, const std::string& f) { cmd_extract_em(r, g, f); });
  unary("extract-kleisli", "Recover the law from an extension file", "extension file",
        [](VerificationReport& r, const std::string& f) { cmd_extract_kleisli(r, f); });
  binary(&app, "roundtrip", {"roundtrip"}, "Laws, liftings and extensions for a pair of monads",
         [&g](VerificationReport& r, const std::string& a, const std::string& b) { cmd_roundtrip(r, g, a, b); });
  binary(&app, "roundtrip-mixed", {"roundtrip-mixed"}, "Mixed laws and both liftings for a monad and a comonad",
         [&g](VerificationReport& r, const std::string& a, const std::string& b) {
           cmd_roundtrip_mixed(r, g, a, b);
         });
  unary("homiso", "Hom-category isomorphism at a monad", "monad file",
        [&g](VerificationReport& r, const std::string& f) {
          io::Loader loader;
          const Monad m = loader.monad(f);
          if (!laws_hold(r, "monad", m)) return;
          HomCategorySizes sizes;
          r.add("homiso", hom_iso_roundtrip(m, g.options(), &sizes));
          r.results()["mnd_1cells"] = sizes.mnd_one_cells;
          r.results()["mnd_2cells"] = sizes.mnd_two_cells;
          r.results()["adj_1cells"] = sizes.adj_one_cells;
          r.results()["adj_2cells"] = sizes.adj_two_cells;
          r.results()["adj_candidate_pairs"] = sizes.adj_candidate_pairs;
        });
  app.add_subcommand("selftest", "Run the fixture-corpus acceptance suite")->callback([&] {
    command = {"selftest"};
    run = [&g](VerificationReport& r) { r.merge(run_selftest(g.options())); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  return execute(g, command, run);
}
