#pragma once

// Eilenberg-Moore categories of algebras and coalgebras, Kleisli categories,
// and the comparison functors into / out of them.
//
// Canonical ids (stable across runs, so constructed categories compare equal
// on the nose):
//   algebra / coalgebra      ⟨X|χ⟩
//   algebra morphism         f@⟨X|χ⟩→⟨Y|χ'⟩
//   Kleisli morphism X → Y   ♯⟨f|Y⟩   (f : X → S Y in the base)

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "catlaw/adjunction.hpp"
#include "catlaw/enumerate.hpp"
#include "catlaw/monad.hpp"

namespace catlaw {

class EmAlgebraCategory {
 public:
  const Monad& monad() const { return monad_; }
  const CategoryPtr& category() const { return adjunction_.upper(); }
  const FinCategory& cat() const { return *adjunction_.upper(); }
  const Functor& forgetful() const { return adjunction_.right; }  // U^S
  const Functor& free() const { return adjunction_.left; }        // F^S
  const Adjunction& adjunction() const { return adjunction_; }    // F^S ⊣ U^S

  Obj carrier(Obj algebra) const { return forgetful()(algebra); }
  Mor structure(Obj algebra) const { return structure_[ix(algebra)]; }
  Mor underlying(Mor m) const { return forgetful()(m); }

  std::optional<Obj> find_algebra(Obj carrier, Mor structure) const;
  // The algebra morphism a → b over f, if f is one.
  std::optional<Mor> find_morphism(Obj a, Obj b, Mor f) const;

 private:
  friend EmAlgebraCategory em_category(const Monad& m, const EnumerationOptions& opts);
  EmAlgebraCategory(Monad m, Adjunction a, std::vector<Mor> structure);

  Monad monad_;
  Adjunction adjunction_;
  std::vector<Mor> structure_;
  std::map<std::pair<Obj, Mor>, Obj> by_structure_;
};

class EmCoalgebraCategory {
 public:
  const Comonad& comonad() const { return comonad_; }
  const CategoryPtr& category() const { return adjunction_.lower(); }
  const FinCategory& cat() const { return *adjunction_.lower(); }
  const Functor& forgetful() const { return adjunction_.left; }   // U^G, the left adjoint
  const Functor& cofree() const { return adjunction_.right; }     // F^G
  const Adjunction& adjunction() const { return adjunction_; }    // U^G ⊣ F^G

  Obj carrier(Obj coalgebra) const { return forgetful()(coalgebra); }
  Mor structure(Obj coalgebra) const { return structure_[ix(coalgebra)]; }
  Mor underlying(Mor m) const { return forgetful()(m); }

  std::optional<Obj> find_coalgebra(Obj carrier, Mor structure) const;
  std::optional<Mor> find_morphism(Obj a, Obj b, Mor f) const;

 private:
  friend EmCoalgebraCategory em_coalgebra_category(const Comonad& c, const EnumerationOptions& opts);
  EmCoalgebraCategory(Comonad c, Adjunction a, std::vector<Mor> structure);

  Comonad comonad_;
  Adjunction adjunction_;
  std::vector<Mor> structure_;
  std::map<std::pair<Obj, Mor>, Obj> by_structure_;
};

class KleisliCategory {
 public:
  const Monad& monad() const { return monad_; }
  const CategoryPtr& category() const { return adjunction_.upper(); }
  const FinCategory& cat() const { return *adjunction_.upper(); }
  const Functor& free() const { return adjunction_.left; }       // D_S
  const Functor& forgetful() const { return adjunction_.right; }  // V_S
  const Adjunction& adjunction() const { return adjunction_; }    // D_S ⊣ V_S

  // Objects of the Kleisli category share indices with the base.
  Obj base_object(Obj x) const { return x; }
  Mor underlying(Mor m) const { return underlying_[ix(m)]; }  // f : X → S Y
  std::optional<Mor> find_morphism(Obj x, Obj y, Mor f) const;

 private:
  friend KleisliCategory kleisli_category(const Monad& m);
  KleisliCategory(Monad m, Adjunction a, std::vector<Mor> underlying);

  Monad monad_;
  Adjunction adjunction_;
  std::vector<Mor> underlying_;
};

// All algebras and algebra morphisms. Throws CapExceeded when the number of
// candidate structure maps exceeds opts.cap.
EmAlgebraCategory em_category(const Monad& m, const EnumerationOptions& opts = {});
EmCoalgebraCategory em_coalgebra_category(const Comonad& c, const EnumerationOptions& opts = {});
KleisliCategory kleisli_category(const Monad& m);

// K : X → C^{RL}, A ↦ (RA, RεA), as the square (Id_C, K) from a into the
// Eilenberg-Moore adjunction of the induced monad.
CommutingSquareR comparison_functor_em(const Adjunction& a, const EnumerationOptions& opts = {});
// K : C_{RL} → X, X ↦ LX, y♯ ↦ ε_{LY} ∘ Ly, as the square (Id_C, K) from the
// Kleisli adjunction of the induced monad into a.
CommutingSquareL comparison_functor_kleisli(const Adjunction& a);

}  // namespace catlaw
