#include "catlaw/io.hpp"

#include <fstream>

#include "catlaw/errors.hpp"

namespace catlaw::io {

namespace fs = std::filesystem;

namespace {

Error parse_error(const std::string& what) { return Error(ErrorKind::Parse, "ParseError", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw parse_error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::Parse, "MissingField", std::string("missing field '") + key + "'");
  return *it;
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::map<std::string, std::string> string_map(const json& j, const char* what) {
  if (!j.is_object()) throw parse_error(std::string(what) + " must be an object of id strings");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace(it.key(), string_of(it.value(), what));
  return out;
}

RawFunctor parse_functor(const json& j) {
  RawFunctor raw;
  raw.objects = string_map(field(j, "objects"), "endofunctor object map");
  if (j.contains("morphisms")) raw.morphisms = string_map(j.at("morphisms"), "endofunctor morphism map");
  return raw;
}

RawComponents components(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return string_map(j.at(key), key);
}

fs::path resolve(const fs::path& base, const std::string& ref) {
  fs::path p(ref);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

RawCategory parse_raw_category(const json& j) {
  RawCategory raw;
  const json& objects = field(j, "objects");
  if (!objects.is_array()) throw parse_error("'objects' must be an array");
  for (const auto& o : objects) raw.objects.push_back(string_of(o, "object id"));
  if (j.contains("morphisms")) {
    const json& ms = j.at("morphisms");
    if (!ms.is_array()) throw parse_error("'morphisms' must be an array");
    for (const auto& m : ms)
      raw.morphisms.push_back({string_of(field(m, "id"), "morphism id"), string_of(field(m, "src"), "src"),
                               string_of(field(m, "tgt"), "tgt")});
  }
  if (j.contains("identities")) raw.identities = string_map(j.at("identities"), "identities");
  if (j.contains("composition")) {
    const json& cs = j.at("composition");
    if (!cs.is_array()) throw parse_error("'composition' must be an array");
    for (const auto& c : cs)
      raw.composition.push_back({string_of(field(c, "first"), "first"), string_of(field(c, "then"), "then"),
                                 string_of(field(c, "equals"), "equals")});
  }
  return raw;
}

json to_json(const FinCategory& c) {
  json objects = json::array(), morphisms = json::array(), identities = json::object(),
       composition = json::array();
  for (Obj x : c.objects()) {
    objects.push_back(c.id(x));
    identities[c.id(x)] = c.id(c.identity(x));
  }
  for (Mor f : c.morphisms()) morphisms.push_back({{"id", c.id(f)}, {"src", c.id(c.src(f))}, {"tgt", c.id(c.tgt(f))}});
  for (Mor f : c.morphisms())
    for (Mor g : c.morphisms())
      if (!c.is_identity(f) && !c.is_identity(g) && c.composable(g, f))
        composition.push_back({{"first", c.id(f)}, {"then", c.id(g)}, {"equals", c.id(c.compose(g, f))}});
  return {{"objects", objects}, {"morphisms", morphisms}, {"identities", identities}, {"composition", composition}};
}

json to_json(const Functor& f) {
  json objects = json::object(), morphisms = json::object();
  for (Obj x : f.source().objects()) objects[f.source().id(x)] = f.target().id(f(x));
  for (Mor m : f.source().morphisms()) morphisms[f.source().id(m)] = f.target().id(f(m));
  return {{"objects", objects}, {"morphisms", morphisms}};
}

json to_json(const NatTrans& alpha) {
  json out = json::object();
  for (Obj x : alpha.domain().objects()) out[alpha.domain().id(x)] = alpha.codomain().id(alpha[x]);
  return out;
}

json to_json(const Monad& m) {
  return {{"category", to_json(*m.base)}, {"endofunctor", to_json(m.functor)}, {"mu", to_json(m.mult)},
          {"eta", to_json(m.unit)}};
}

json to_json(const Comonad& c) {
  return {{"category", to_json(*c.base)}, {"endofunctor", to_json(c.functor)}, {"delta", to_json(c.comult)},
          {"epsilon", to_json(c.counit)}};
}

json to_json(const DistributiveLaw& dl) {
  return {{"S", to_json(dl.s)}, {"T", to_json(dl.t)}, {"phi", to_json(dl.phi)}};
}

json to_json(const MixedDistributiveLaw& ml) {
  return {{"S", to_json(ml.s)}, {"G", to_json(ml.g)}, {"psi", to_json(ml.psi)}};
}

namespace {

json structure_json(const Monad& m) {
  return {{"endofunctor", to_json(m.functor)}, {"mu", to_json(m.mult)}, {"eta", to_json(m.unit)}};
}

Monad structure_on(const CategoryPtr& c, const json& j) {
  return make_monad(c, parse_functor(field(j, "endofunctor")), components(j, "mu"), components(j, "eta"));
}

}  // namespace

json to_json(const LiftedMonad& lm) {
  return {{"S", to_json(lm.s)}, {"T", to_json(lm.t)}, {"lifted", structure_json(lm.lifted)}};
}

json to_json(const KleisliExtension& ke) {
  return {{"S", to_json(ke.s)}, {"T", to_json(ke.t)}, {"extended", structure_json(ke.extended)}};
}

json read_json(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Parse, "UnreadableFile", "cannot open '" + file.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(file.string() + ": " + e.what());
  }
}

void write_json(const fs::path& file, const json& j) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorKind::Parse, "UnwritableFile", "cannot write '" + file.string() + "'");
  out << j.dump(2) << '\n';
}

CategoryPtr Loader::category(const fs::path& file) {
  std::error_code ec;
  fs::path key = fs::weakly_canonical(file, ec);
  if (ec) key = file;
  if (auto it = categories_.find(key); it != categories_.end()) return it->second;
  CategoryPtr c = validate_category(parse_raw_category(read_json(file)));
  categories_.emplace(key, c);
  return c;
}

CategoryPtr Loader::category(const json& j, const fs::path& base) {
  if (j.is_string()) return category(resolve(base, j.get<std::string>()));
  return validate_category(parse_raw_category(j));
}

Monad Loader::monad(const json& j, const fs::path& base) {
  if (j.is_string()) return monad(resolve(base, j.get<std::string>()));
  const CategoryPtr c = category(field(j, "category"), base);
  return make_monad(c, parse_functor(field(j, "endofunctor")), components(j, "mu"), components(j, "eta"));
}

Comonad Loader::comonad(const json& j, const fs::path& base) {
  if (j.is_string()) return comonad(resolve(base, j.get<std::string>()));
  const CategoryPtr c = category(field(j, "category"), base);
  return make_comonad(c, parse_functor(field(j, "endofunctor")), components(j, "delta"), components(j, "epsilon"));
}

Monad Loader::monad(const fs::path& file) { return monad(read_json(file), file.parent_path()); }

Comonad Loader::comonad(const fs::path& file) { return comonad(read_json(file), file.parent_path()); }

DistributiveLaw Loader::dist_law(const fs::path& file) {
  const json j = read_json(file);
  const fs::path base = file.parent_path();
  const Monad s = monad(field(j, "S"), base);
  const Monad t = monad(field(j, "T"), base);
  return make_dist_law(s, t, components(j, "phi"));
}

MixedDistributiveLaw Loader::mixed_law(const fs::path& file) {
  const json j = read_json(file);
  const fs::path base = file.parent_path();
  const Monad s = monad(field(j, "S"), base);
  const Comonad g = comonad(field(j, "G"), base);
  return make_mixed_law(s, g, components(j, "psi"));
}

LiftedMonad Loader::lifting(const fs::path& file, const EnumerationOptions& opts) {
  const json j = read_json(file);
  const fs::path base = file.parent_path();
  const Monad s = monad(field(j, "S"), base);
  const Monad t = monad(field(j, "T"), base);
  EmAlgebraCategory em = em_category(s, opts);
  Monad lifted = structure_on(em.category(), field(j, "lifted"));
  AdjROneCell cell = make_adj_r_cell(em.adjunction(), em.adjunction(), t.functor, lifted.functor);
  return {s, t, std::move(em), std::move(cell), std::move(lifted)};
}

KleisliExtension Loader::extension(const fs::path& file) {
  const json j = read_json(file);
  const fs::path base = file.parent_path();
  const Monad s = monad(field(j, "S"), base);
  const Monad t = monad(field(j, "T"), base);
  KleisliCategory kl = kleisli_category(t);
  Monad extended = structure_on(kl.category(), field(j, "extended"));
  AdjLOneCell cell = make_adj_l_cell(kl.adjunction(), kl.adjunction(), s.functor, extended.functor);
  return {s, t, std::move(kl), std::move(cell), std::move(extended)};
}

}  // namespace catlaw::io
