#pragma once

#include "catlaw/fincat.hpp"
#include "catlaw/monad.hpp"
#include "catlaw/report.hpp"

namespace catlaw {

// L ⊣ R : C → X, carried as the unit/counit 4-tuple. The direction is that
// of the left adjoint.
struct Adjunction {
  Functor left;     // L : C → X
  Functor right;    // R : X → C
  NatTrans unit;    // Id_C → R∘L
  NatTrans counit;  // L∘R → Id_X

  const CategoryPtr& lower() const { return left.source_ptr(); }  // C
  const CategoryPtr& upper() const { return left.target_ptr(); }  // X

  friend bool operator==(const Adjunction& a, const Adjunction& b);
};

Report check_triangle_identities(const Adjunction& a);

// Throws a Typing error (TriangleIdentityViolation) unless both triangle
// identities hold.
Adjunction make_adjunction(Functor left, Functor right, NatTrans unit, NatTrans counit);
Adjunction identity_adjunction(const CategoryPtr& c);

// (C, RL, RεL, η)
Monad induced_monad(const Adjunction& a);
// (X, LR, LηR, ε)
Comonad induced_comonad(const Adjunction& a);

// 1-cell shape of Adj_R: J : C → D, K : X → Y with R̄∘K = J∘R strictly.
struct CommutingSquareR {
  Adjunction dom;  // L ⊣ R : C → X
  Adjunction cod;  // L̄ ⊣ R̄ : D → Y
  Functor lower;   // J : C → D
  Functor upper;   // K : X → Y
};

// 1-cell shape of Adj_L: same data with K∘L = L̄∘J strictly.
struct CommutingSquareL {
  Adjunction dom;
  Adjunction cod;
  Functor lower;   // J
  Functor upper;   // K
};

Report check_square(const CommutingSquareR& sq);
Report check_square(const CommutingSquareL& sq);
// Throw a Typing error (SquareDoesNotCommute) when the constraint fails.
CommutingSquareR make_square_r(Adjunction dom, Adjunction cod, Functor lower, Functor upper);
CommutingSquareL make_square_l(Adjunction dom, Adjunction cod, Functor lower, Functor upper);

// λ = ε̄KL ∘ L̄Jη : L̄J → KL
NatTrans mate_right(const CommutingSquareR& sq);
// ρ = R̄Kε ∘ η̄JR : JR → R̄K
NatTrans mate_left(const CommutingSquareL& sq);

// Transposes back across both adjunctions. For a strict square these must
// return the identity on JR = R̄K (resp. L̄J = KL).
NatTrans transpose_mate_right(const CommutingSquareR& sq, const NatTrans& lambda);
NatTrans transpose_mate_left(const CommutingSquareL& sq, const NatTrans& rho);

}  // namespace catlaw
