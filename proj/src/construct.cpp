#include "catlaw/construct.hpp"

#include "catlaw/errors.hpp"

namespace catlaw {

namespace {

std::string bracket(const FinCategory& c, Obj x, Mor structure) {
  return "⟨" + c.id(x) + "|" + c.id(structure) + "⟩";
}

struct PendingMorphism {
  std::string id;
  Mor underlying;
};

Error internal(const std::string& what) { return typing_error("ConstructionInconsistent", what); }

}  // namespace

// ---------------------------------------------------------------------------
// Eilenberg-Moore algebras

EmAlgebraCategory::EmAlgebraCategory(Monad m, Adjunction a, std::vector<Mor> structure)
    : monad_(std::move(m)), adjunction_(std::move(a)), structure_(std::move(structure)) {
  for (Obj x : cat().objects()) by_structure_.emplace(std::pair{carrier(x), structure_[ix(x)]}, x);
}

std::optional<Obj> EmAlgebraCategory::find_algebra(Obj carrier, Mor structure) const {
  auto it = by_structure_.find({carrier, structure});
  if (it == by_structure_.end()) return std::nullopt;
  return it->second;
}

std::optional<Mor> EmAlgebraCategory::find_morphism(Obj a, Obj b, Mor f) const {
  for (Mor m : cat().hom(a, b))
    if (underlying(m) == f) return m;
  return std::nullopt;
}

EmAlgebraCategory em_category(const Monad& m, const EnumerationOptions& opts) {
  const auto& c = *m.base;
  const auto& S = m.functor;
  std::uint64_t candidates = 0;
  for (Obj x : c.objects()) candidates = sat_add(candidates, c.hom(S(x), x).size());
  if (candidates > opts.cap) throw CapExceeded("algebra enumeration", candidates, opts.cap);

  struct Algebra {
    Obj carrier;
    Mor structure;
    std::string id;
  };
  std::vector<Algebra> algebras;
  for (Obj x : c.objects())
    for (Mor chi : c.hom(S(x), x))
      if (c.compose(chi, m.unit[x]) == c.identity(x) &&
          c.compose(chi, m.mult[x]) == c.compose(chi, S(chi)))
        algebras.push_back({x, chi, bracket(c, x, chi)});

  RawCategory raw;
  std::vector<PendingMorphism> pending;
  // (source algebra, target algebra, underlying) -> id, for composites
  std::map<std::tuple<std::size_t, std::size_t, Mor>, std::string> ids;
  for (const auto& a : algebras) raw.objects.push_back(a.id);
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = 0; j < algebras.size(); ++j) {
      const auto& a = algebras[i];
      const auto& b = algebras[j];
      for (Mor f : c.hom(a.carrier, b.carrier)) {
        if (c.compose(f, a.structure) != c.compose(b.structure, S(f))) continue;
        std::string id = c.id(f) + "@" + a.id + "→" + b.id;
        raw.morphisms.push_back({id, a.id, b.id});
        pending.push_back({id, f});
        ids.emplace(std::tuple{i, j, f}, id);
        if (i == j && f == c.identity(a.carrier)) raw.identities.emplace(a.id, id);
      }
    }
  for (const auto& [k1, first] : ids)
    for (const auto& [k2, then] : ids) {
      const auto& [i, j, f] = k1;
      const auto& [j2, l, g] = k2;
      if (j != j2) continue;
      raw.composition.push_back({first, then, ids.at({i, l, c.compose(g, f)})});
    }
  const CategoryPtr alg = validate_category(raw);

  std::vector<Obj> u_objects(alg->object_count());
  std::vector<Mor> structure(alg->object_count());
  for (const auto& a : algebras) {
    const Obj o = alg->object(a.id);
    u_objects[ix(o)] = a.carrier;
    structure[ix(o)] = a.structure;
  }
  std::vector<Mor> u_morphisms(alg->morphism_count());
  for (const auto& p : pending) u_morphisms[ix(alg->morphism(p.id))] = p.underlying;
  const Functor U(alg, m.base, u_objects, u_morphisms);

  auto lookup_algebra = [&](Obj carrier, Mor chi) {
    for (const auto& a : algebras)
      if (a.carrier == carrier && a.structure == chi) return alg->object(a.id);
    throw internal("free algebra missing from the enumeration");
  };
  auto lookup_morphism = [&](Obj a, Obj b, Mor f) {
    for (Mor h : alg->hom(a, b))
      if (u_morphisms[ix(h)] == f) return h;
    throw internal("expected algebra morphism missing");
  };

  std::vector<Obj> f_objects(c.object_count());
  for (Obj x : c.objects()) f_objects[ix(x)] = lookup_algebra(S(x), m.mult[x]);
  std::vector<Mor> f_morphisms(c.morphism_count());
  for (Mor f : c.morphisms())
    f_morphisms[ix(f)] = lookup_morphism(f_objects[ix(c.src(f))], f_objects[ix(c.tgt(f))], S(f));
  const Functor F(m.base, alg, f_objects, f_morphisms);

  NatTrans unit(Functor::identity(m.base), compose(U, F), m.unit.components());
  std::vector<Mor> counit_components(alg->object_count());
  for (Obj a : alg->objects())
    counit_components[ix(a)] = lookup_morphism(F(U(a)), a, structure[ix(a)]);
  NatTrans counit(compose(F, U), Functor::identity(alg), counit_components);

  return EmAlgebraCategory(m, make_adjunction(F, U, std::move(unit), std::move(counit)), std::move(structure));
}

// ---------------------------------------------------------------------------
// Eilenberg-Moore coalgebras

EmCoalgebraCategory::EmCoalgebraCategory(Comonad c, Adjunction a, std::vector<Mor> structure)
    : comonad_(std::move(c)), adjunction_(std::move(a)), structure_(std::move(structure)) {
  for (Obj x : cat().objects()) by_structure_.emplace(std::pair{carrier(x), structure_[ix(x)]}, x);
}

std::optional<Obj> EmCoalgebraCategory::find_coalgebra(Obj carrier, Mor structure) const {
  auto it = by_structure_.find({carrier, structure});
  if (it == by_structure_.end()) return std::nullopt;
  return it->second;
}

std::optional<Mor> EmCoalgebraCategory::find_morphism(Obj a, Obj b, Mor f) const {
  for (Mor m : cat().hom(a, b))
    if (underlying(m) == f) return m;
  return std::nullopt;
}

EmCoalgebraCategory em_coalgebra_category(const Comonad& w, const EnumerationOptions& opts) {
  const auto& c = *w.base;
  const auto& G = w.functor;
  std::uint64_t candidates = 0;
  for (Obj x : c.objects()) candidates = sat_add(candidates, c.hom(x, G(x)).size());
  if (candidates > opts.cap) throw CapExceeded("coalgebra enumeration", candidates, opts.cap);

  struct Coalgebra {
    Obj carrier;
    Mor structure;
    std::string id;
  };
  std::vector<Coalgebra> coalgebras;
  for (Obj x : c.objects())
    for (Mor xi : c.hom(x, G(x)))
      if (c.compose(w.counit[x], xi) == c.identity(x) &&
          c.compose(w.comult[x], xi) == c.compose(G(xi), xi))
        coalgebras.push_back({x, xi, bracket(c, x, xi)});

  RawCategory raw;
  std::vector<PendingMorphism> pending;
  std::map<std::tuple<std::size_t, std::size_t, Mor>, std::string> ids;
  for (const auto& a : coalgebras) raw.objects.push_back(a.id);
  for (std::size_t i = 0; i < coalgebras.size(); ++i)
    for (std::size_t j = 0; j < coalgebras.size(); ++j) {
      const auto& a = coalgebras[i];
      const auto& b = coalgebras[j];
      for (Mor f : c.hom(a.carrier, b.carrier)) {
        if (c.compose(b.structure, f) != c.compose(G(f), a.structure)) continue;
        std::string id = c.id(f) + "@" + a.id + "→" + b.id;
        raw.morphisms.push_back({id, a.id, b.id});
        pending.push_back({id, f});
        ids.emplace(std::tuple{i, j, f}, id);
        if (i == j && f == c.identity(a.carrier)) raw.identities.emplace(a.id, id);
      }
    }
  for (const auto& [k1, first] : ids)
    for (const auto& [k2, then] : ids) {
      const auto& [i, j, f] = k1;
      const auto& [j2, l, g] = k2;
      if (j != j2) continue;
      raw.composition.push_back({first, then, ids.at({i, l, c.compose(g, f)})});
    }
  const CategoryPtr coalg = validate_category(raw);

  std::vector<Obj> u_objects(coalg->object_count());
  std::vector<Mor> structure(coalg->object_count());
  for (const auto& a : coalgebras) {
    const Obj o = coalg->object(a.id);
    u_objects[ix(o)] = a.carrier;
    structure[ix(o)] = a.structure;
  }
  std::vector<Mor> u_morphisms(coalg->morphism_count());
  for (const auto& p : pending) u_morphisms[ix(coalg->morphism(p.id))] = p.underlying;
  const Functor U(coalg, w.base, u_objects, u_morphisms);

  auto lookup_coalgebra = [&](Obj carrier, Mor xi) {
    for (const auto& a : coalgebras)
      if (a.carrier == carrier && a.structure == xi) return coalg->object(a.id);
    throw internal("cofree coalgebra missing from the enumeration");
  };
  auto lookup_morphism = [&](Obj a, Obj b, Mor f) {
    for (Mor h : coalg->hom(a, b))
      if (u_morphisms[ix(h)] == f) return h;
    throw internal("expected coalgebra morphism missing");
  };

  std::vector<Obj> f_objects(c.object_count());
  for (Obj x : c.objects()) f_objects[ix(x)] = lookup_coalgebra(G(x), w.comult[x]);
  std::vector<Mor> f_morphisms(c.morphism_count());
  for (Mor f : c.morphisms())
    f_morphisms[ix(f)] = lookup_morphism(f_objects[ix(c.src(f))], f_objects[ix(c.tgt(f))], G(f));
  const Functor F(w.base, coalg, f_objects, f_morphisms);

  std::vector<Mor> unit_components(coalg->object_count());
  for (Obj a : coalg->objects()) unit_components[ix(a)] = lookup_morphism(a, F(U(a)), structure[ix(a)]);
  NatTrans unit(Functor::identity(coalg), compose(F, U), unit_components);
  NatTrans counit(compose(U, F), Functor::identity(w.base), w.counit.components());

  return EmCoalgebraCategory(w, make_adjunction(U, F, std::move(unit), std::move(counit)),
                             std::move(structure));
}

// ---------------------------------------------------------------------------
// Kleisli

KleisliCategory::KleisliCategory(Monad m, Adjunction a, std::vector<Mor> underlying)
    : monad_(std::move(m)), adjunction_(std::move(a)), underlying_(std::move(underlying)) {}

std::optional<Mor> KleisliCategory::find_morphism(Obj x, Obj y, Mor f) const {
  for (Mor m : cat().hom(x, y))
    if (underlying(m) == f) return m;
  return std::nullopt;
}

KleisliCategory kleisli_category(const Monad& m) {
  const auto& c = *m.base;
  const auto& S = m.functor;
  auto sharp = [&](Mor f, Obj y) { return "♯⟨" + c.id(f) + "|" + c.id(y) + "⟩"; };

  RawCategory raw;
  std::vector<PendingMorphism> pending;
  for (Obj x : c.objects()) {
    raw.objects.push_back(c.id(x));
    raw.identities.emplace(c.id(x), sharp(m.unit[x], x));
  }
  struct Arrow {
    Obj src;
    Obj tgt;
    Mor underlying;
  };
  std::vector<Arrow> arrows;
  for (Obj x : c.objects())
    for (Obj y : c.objects())
      for (Mor f : c.hom(x, S(y))) {
        raw.morphisms.push_back({sharp(f, y), c.id(x), c.id(y)});
        pending.push_back({sharp(f, y), f});
        arrows.push_back({x, y, f});
      }
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      if (a.tgt != b.src) continue;
      // b♯ ∘ a♯ = (μ_Z ∘ S b ∘ a)♯
      const Mor h = c.compose(m.mult[b.tgt], c.compose(S(b.underlying), a.underlying));
      raw.composition.push_back({sharp(a.underlying, a.tgt), sharp(b.underlying, b.tgt), sharp(h, b.tgt)});
    }
  const CategoryPtr kl = validate_category(raw);
  for (Obj x : c.objects())
    if (kl->id(x) != c.id(x)) throw internal("Kleisli objects out of step with the base");

  std::vector<Mor> underlying(kl->morphism_count());
  for (const auto& p : pending) underlying[ix(kl->morphism(p.id))] = p.underlying;
  auto lookup = [&](Obj x, Obj y, Mor f) {
    for (Mor h : kl->hom(x, y))
      if (underlying[ix(h)] == f) return h;
    throw internal("expected Kleisli morphism missing");
  };

  std::vector<Obj> objects(c.object_count());
  for (Obj x : c.objects()) objects[ix(x)] = x;
  std::vector<Mor> d_morphisms(c.morphism_count());
  for (Mor f : c.morphisms())
    d_morphisms[ix(f)] = lookup(c.src(f), c.tgt(f), c.compose(m.unit[c.tgt(f)], f));
  const Functor D(m.base, kl, objects, d_morphisms);

  std::vector<Obj> v_objects(kl->object_count());
  for (Obj x : kl->objects()) v_objects[ix(x)] = S(x);
  std::vector<Mor> v_morphisms(kl->morphism_count());
  for (Mor h : kl->morphisms())
    v_morphisms[ix(h)] = c.compose(m.mult[kl->tgt(h)], S(underlying[ix(h)]));
  const Functor V(kl, m.base, v_objects, v_morphisms);

  NatTrans unit(Functor::identity(m.base), compose(V, D), m.unit.components());
  std::vector<Mor> counit_components(kl->object_count());
  for (Obj y : kl->objects()) counit_components[ix(y)] = lookup(S(y), y, c.identity(S(y)));
  NatTrans counit(compose(D, V), Functor::identity(kl), counit_components);

  return KleisliCategory(m, make_adjunction(D, V, std::move(unit), std::move(counit)), std::move(underlying));
}

// ---------------------------------------------------------------------------
// Comparison functors

CommutingSquareR comparison_functor_em(const Adjunction& a, const EnumerationOptions& opts) {
  const EmAlgebraCategory em = em_category(induced_monad(a), opts);
  const auto& x = *a.upper();
  const auto& R = a.right;
  std::vector<Obj> objects(x.object_count());
  for (Obj o : x.objects()) {
    auto alg = em.find_algebra(R(o), R(a.counit[o]));
    if (!alg) throw internal("comparison image is not an algebra");
    objects[ix(o)] = *alg;
  }
  std::vector<Mor> morphisms(x.morphism_count());
  for (Mor g : x.morphisms()) {
    auto m = em.find_morphism(objects[ix(x.src(g))], objects[ix(x.tgt(g))], R(g));
    if (!m) throw internal("comparison image is not an algebra morphism");
    morphisms[ix(g)] = *m;
  }
  Functor K(a.upper(), em.category(), std::move(objects), std::move(morphisms));
  return make_square_r(a, em.adjunction(), Functor::identity(a.lower()), std::move(K));
}

CommutingSquareL comparison_functor_kleisli(const Adjunction& a) {
  const KleisliCategory kl = kleisli_category(induced_monad(a));
  const auto& x = *a.upper();
  const auto& L = a.left;
  std::vector<Obj> objects(kl.cat().object_count());
  for (Obj o : kl.cat().objects()) objects[ix(o)] = L(o);
  std::vector<Mor> morphisms(kl.cat().morphism_count());
  for (Mor h : kl.cat().morphisms()) {
    const Obj y = kl.cat().tgt(h);
    morphisms[ix(h)] = x.compose(a.counit[L(y)], L(kl.underlying(h)));
  }
  Functor K(kl.category(), a.upper(), std::move(objects), std::move(morphisms));
  return make_square_l(kl.adjunction(), a, Functor::identity(a.lower()), std::move(K));
}

}  // namespace catlaw
