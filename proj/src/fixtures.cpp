#include "catlaw/fixtures.hpp"

#include "catlaw/errors.hpp"

namespace catlaw::fixtures {

namespace {

RawComponents unique_components(const FinCategory& c, const Functor& f, const Functor& g) {
  RawComponents raw;
  for (Obj x : c.objects()) {
    const auto& hom = c.hom(f(x), g(x));
    if (hom.size() != 1) throw typing_error("NotThin", "no unique arrow at " + c.id(x));
    raw.emplace(c.id(x), c.id(hom.front()));
  }
  return raw;
}

RawFunctor raw_of(const Functor& f) {
  RawFunctor raw;
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (Obj x : src.objects()) raw.objects.emplace(src.id(x), tgt.id(f(x)));
  for (Mor m : src.morphisms()) raw.morphisms.emplace(src.id(m), tgt.id(f(m)));
  return raw;
}

}  // namespace

CategoryPtr chain2() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}};
  return validate_category(raw);
}

CategoryPtr chain3() {
  RawCategory raw;
  raw.objects = {"0", "1", "2"};
  raw.morphisms = {{"f01", "0", "1"}, {"f12", "1", "2"}, {"f02", "0", "2"}};
  raw.composition = {{"f01", "f12", "f02"}};
  return validate_category(raw);
}

CategoryPtr z2() {
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"e", "*", "*"}, {"g", "*", "*"}};
  raw.identities = {{"*", "e"}};
  raw.composition = {{"g", "g", "e"}};
  return validate_category(raw);
}

CategoryPtr trivial() {
  RawCategory raw;
  raw.objects = {"*"};
  return validate_category(raw);
}

CategoryPtr empty() { return validate_category({}); }

Functor thin_functor(const CategoryPtr& c, const std::vector<std::string>& images) {
  if (images.size() != c->object_count()) throw typing_error("FunctorInvalid", "wrong number of object images");
  RawFunctor raw;
  for (Obj x : c->objects()) raw.objects.emplace(c->id(x), images[ix(x)]);
  return make_functor(c, c, raw);
}

Monad thin_monad(const CategoryPtr& c, const std::vector<std::string>& images) {
  const Functor s = thin_functor(c, images);
  const Functor id = Functor::identity(c);
  return make_monad(c, raw_of(s), unique_components(*c, compose(s, s), s), unique_components(*c, id, s));
}

Comonad thin_comonad(const CategoryPtr& c, const std::vector<std::string>& images) {
  const Functor g = thin_functor(c, images);
  const Functor id = Functor::identity(c);
  return make_comonad(c, raw_of(g), unique_components(*c, g, compose(g, g)), unique_components(*c, g, id));
}

std::vector<NamedMonad> closure_monads_c3() {
  const CategoryPtr c = chain3();
  return {{"id", identity_monad(c)},
          {"c1", thin_monad(c, {"0", "2", "2"})},
          {"c2", thin_monad(c, {"1", "1", "2"})},
          {"c3", thin_monad(c, {"2", "2", "2"})}};
}

std::vector<NamedMonad> closure_monads_c2() {
  const CategoryPtr c = chain2();
  return {{"id", identity_monad(c)}, {"top", thin_monad(c, {"b", "b"})}};
}

std::vector<NamedComonad> interior_comonads_c3() {
  const CategoryPtr c = chain3();
  return {{"id", identity_comonad(c)},
          {"i1", thin_comonad(c, {"0", "0", "2"})},
          {"i2", thin_comonad(c, {"0", "1", "1"})},
          {"i3", thin_comonad(c, {"0", "0", "0"})}};
}

std::vector<NamedComonad> interior_comonads_c2() {
  const CategoryPtr c = chain2();
  return {{"id", identity_comonad(c)}, {"bottom", thin_comonad(c, {"a", "a"})}};
}

const Monad& find(const std::vector<NamedMonad>& all, const std::string& name) {
  for (const auto& m : all)
    if (m.name == name) return m.monad;
  throw Error(ErrorKind::Parse, "DanglingId", "no fixture monad '" + name + "'");
}

const Comonad& find(const std::vector<NamedComonad>& all, const std::string& name) {
  for (const auto& m : all)
    if (m.name == name) return m.comonad;
  throw Error(ErrorKind::Parse, "DanglingId", "no fixture comonad '" + name + "'");
}

DistributiveLaw law_c2_c1() {
  const auto all = closure_monads_c3();
  return make_dist_law(find(all, "c2"), find(all, "c1"), {});
}

Order order_of(const FinCategory& c) {
  const std::size_t n = c.object_count();
  Order leq(n, std::vector<bool>(n, false));
  for (Obj x : c.objects())
    for (Obj y : c.objects()) leq[ix(x)][ix(y)] = !c.hom(x, y).empty();
  return leq;
}

namespace {

std::vector<std::vector<std::size_t>> operators(const Order& leq, bool inflationary) {
  const std::size_t n = leq.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  if (n == 0) return {{}};
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (f[f[x]] != f[x]) ok = false;
      if (inflationary ? !leq[x][f[x]] : !leq[f[x]][x]) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y)
        if (leq[x][y] && !leq[f[x]][f[y]]) ok = false;
    }
    if (ok) out.push_back(f);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i == n) return out;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> closure_operators(const Order& leq) { return operators(leq, true); }
std::vector<std::vector<std::size_t>> interior_operators(const Order& leq) { return operators(leq, false); }

bool pointwise_below(const Order& leq, const std::vector<std::size_t>& first, const std::vector<std::size_t>& second) {
  for (std::size_t x = 0; x < leq.size(); ++x)
    if (!leq[first[second[x]]][second[first[x]]]) return false;
  return true;
}

std::vector<std::size_t> object_indices(const Functor& f) {
  std::vector<std::size_t> out;
  for (Obj y : f.object_map()) out.push_back(ix(y));
  return out;
}

}  // namespace catlaw::fixtures
