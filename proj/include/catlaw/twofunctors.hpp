#pragma once

// Cells of Mnd, Mnd•, CoMnd, Adj_R and Adj_L over finite categories, the
// 2-functor actions between them, and the lifting / extension theorems
// built on top.

#include <vector>

#include "catlaw/adjunction.hpp"
#include "catlaw/construct.hpp"
#include "catlaw/distlaw.hpp"
#include "catlaw/enumerate.hpp"
#include "catlaw/report.hpp"

namespace catlaw {

// ---------------------------------------------------------------------------
// Cells

// (P, φ) : (C,S) → (D,T) with φ : T P → P S
struct MndOneCell {
  Monad src;
  Monad dst;
  Functor functor;
  NatTrans phi;

  friend bool operator==(const MndOneCell& a, const MndOneCell& b);
};

struct MndTwoCell {
  MndOneCell from;
  MndOneCell to;
  NatTrans theta;  // P → Q

  friend bool operator==(const MndTwoCell& a, const MndTwoCell& b);
};

// (P, ψ) : (C,S) → (D,T) with ψ : P S → T P
struct MndBulletOneCell {
  Monad src;
  Monad dst;
  Functor functor;
  NatTrans psi;

  friend bool operator==(const MndBulletOneCell& a, const MndBulletOneCell& b);
};

struct MndBulletTwoCell {
  MndBulletOneCell from;
  MndBulletOneCell to;
  NatTrans theta;

  friend bool operator==(const MndBulletTwoCell& a, const MndBulletTwoCell& b);
};

// (P, π) : (X,G) → (Y,H) with π : P G → H P
struct CoMndOneCell {
  Comonad src;
  Comonad dst;
  Functor functor;
  NatTrans pi;

  friend bool operator==(const CoMndOneCell& a, const CoMndOneCell& b);
};

struct CoMndTwoCell {
  CoMndOneCell from;
  CoMndOneCell to;
  NatTrans theta;

  friend bool operator==(const CoMndTwoCell& a, const CoMndTwoCell& b);
};

// (J, K, λ) with R̄K = JR and λ : L̄J → KL its mate.
struct AdjROneCell {
  CommutingSquareR square;
  NatTrans mate;

  const Functor& lower() const { return square.lower; }
  const Functor& upper() const { return square.upper; }
  friend bool operator==(const AdjROneCell& a, const AdjROneCell& b);
};

struct AdjRTwoCell {
  AdjROneCell from;
  AdjROneCell to;
  NatTrans alpha;  // J → J'
  NatTrans beta;   // K → K'

  friend bool operator==(const AdjRTwoCell& a, const AdjRTwoCell& b);
};

// (J, K, ρ) with KL = L̄J and ρ : JR → R̄K its mate.
struct AdjLOneCell {
  CommutingSquareL square;
  NatTrans mate;

  const Functor& lower() const { return square.lower; }
  const Functor& upper() const { return square.upper; }
  friend bool operator==(const AdjLOneCell& a, const AdjLOneCell& b);
};

struct AdjLTwoCell {
  AdjLOneCell from;
  AdjLOneCell to;
  NatTrans alpha;
  NatTrans beta;

  friend bool operator==(const AdjLTwoCell& a, const AdjLTwoCell& b);
};

Report check_cell(const MndOneCell& c);
Report check_cell(const MndTwoCell& c);
Report check_cell(const MndBulletOneCell& c);
Report check_cell(const MndBulletTwoCell& c);
Report check_cell(const CoMndOneCell& c);
Report check_cell(const CoMndTwoCell& c);
// Square constraint plus equality of the stored mate with the recomputed one.
Report check_cell(const AdjROneCell& c);
Report check_cell(const AdjLOneCell& c);
// Both 2-cell conditions, each reported under its own tag.
Report check_cell(const AdjRTwoCell& c);
Report check_cell(const AdjLTwoCell& c);

// Mate computed from the square. Throws SquareDoesNotCommute.
AdjROneCell make_adj_r_cell(const Adjunction& dom, const Adjunction& cod, const Functor& j, const Functor& k);
AdjLOneCell make_adj_l_cell(const Adjunction& dom, const Adjunction& cod, const Functor& j, const Functor& k);

MndOneCell identity_cell(const Monad& m);
MndBulletOneCell identity_bullet_cell(const Monad& m);
CoMndOneCell identity_cell(const Comonad& c);
AdjROneCell identity_adj_r_cell(const Adjunction& a);
AdjLOneCell identity_adj_l_cell(const Adjunction& a);

MndTwoCell identity_two_cell(const MndOneCell& c);
MndBulletTwoCell identity_two_cell(const MndBulletOneCell& c);
CoMndTwoCell identity_two_cell(const CoMndOneCell& c);
AdjRTwoCell identity_two_cell(const AdjROneCell& c);
AdjLTwoCell identity_two_cell(const AdjLOneCell& c);

// q ∘ p (p first)
MndOneCell compose(const MndOneCell& q, const MndOneCell& p);
MndBulletOneCell compose(const MndBulletOneCell& q, const MndBulletOneCell& p);
CoMndOneCell compose(const CoMndOneCell& q, const CoMndOneCell& p);
AdjROneCell compose(const AdjROneCell& q, const AdjROneCell& p);
AdjLOneCell compose(const AdjLOneCell& q, const AdjLOneCell& p);

// Vertical composition b ∘ a of 2-cells.
MndTwoCell vcomp(const MndTwoCell& b, const MndTwoCell& a);
AdjRTwoCell vcomp(const AdjRTwoCell& b, const AdjRTwoCell& a);

// ---------------------------------------------------------------------------
// 2-functor actions

// (J, K, λ) ↦ (J, R̄λ)
MndOneCell phiE_1cell(const AdjROneCell& c);
// (α, β) ↦ α
MndTwoCell phiE_2cell(const AdjRTwoCell& c);
// (P, φ) ↦ (P, P^φ, λ^P) between Eilenberg-Moore adjunctions, with
// P^φ(N, χ) = (PN, Pχ ∘ φ_N).
AdjROneCell psiE_1cell(const MndOneCell& c, const EmAlgebraCategory& src, const EmAlgebraCategory& dst);
AdjROneCell psiE_1cell(const MndOneCell& c, const EnumerationOptions& opts = {});
// θ ↦ (θ, θ^φ). Throws TwoCellLawViolation when some θ_N is not an algebra
// morphism between the lifted algebras.
AdjRTwoCell psiE_2cell(const MndTwoCell& c, const EmAlgebraCategory& src, const EmAlgebraCategory& dst);
AdjRTwoCell psiE_2cell(const MndTwoCell& c, const EnumerationOptions& opts = {});

// (J, K, ρ) ↦ (J, ρL)
MndBulletOneCell phiK_1cell(const AdjLOneCell& c);
MndBulletTwoCell phiK_2cell(const AdjLTwoCell& c);
// (P, ψ) ↦ (P, P_ψ, ρ) between Kleisli adjunctions, with P_ψ(y♯) = (ψ_Y ∘ Py)♯.
AdjLOneCell psiK_1cell(const MndBulletOneCell& c, const KleisliCategory& src, const KleisliCategory& dst);
AdjLOneCell psiK_1cell(const MndBulletOneCell& c);
// ϑ ↦ (ϑ, ϑ^ψ) with ϑ^ψ(X) = (η^T_{QX} ∘ ϑ_X)♯. The result is returned as
// computed; check_cell reports any law failure.
AdjLTwoCell psiK_2cell(const MndBulletTwoCell& c, const KleisliCategory& src, const KleisliCategory& dst);
AdjLTwoCell psiK_2cell(const MndBulletTwoCell& c);

// (J, K, ρ) ↦ (K, L̄ρ)
CoMndOneCell vecPhiE_1cell(const AdjLOneCell& c);
// (α, β) ↦ β
CoMndTwoCell vecPhiE_2cell(const AdjLTwoCell& c);
// (P, π) ↦ (P^π, P, ρ) between coalgebra adjunctions, with
// P^π(N, ξ) = (PN, π_N ∘ Pξ).
AdjLOneCell vecPsiE_1cell(const CoMndOneCell& c, const EmCoalgebraCategory& src, const EmCoalgebraCategory& dst);
AdjLOneCell vecPsiE_1cell(const CoMndOneCell& c, const EnumerationOptions& opts = {});
// ϑ ↦ (ϑ^π, ϑ). Throws TwoCellLawViolation like psiE_2cell.
AdjLTwoCell vecPsiE_2cell(const CoMndTwoCell& c, const EmCoalgebraCategory& src, const EmCoalgebraCategory& dst);
AdjLTwoCell vecPsiE_2cell(const CoMndTwoCell& c, const EnumerationOptions& opts = {});

// ---------------------------------------------------------------------------
// Liftings and extensions

// T̂ on C^S over T with the lifted monad structure.
struct LiftedMonad {
  Monad s;
  Monad t;
  EmAlgebraCategory em;  // of S
  AdjROneCell cell;      // (T, T̂, λ_T) on F^S ⊣ U^S
  Monad lifted;          // (T̂, μ̂, η̂) on C^S

  friend bool operator==(const LiftedMonad& a, const LiftedMonad& b);
};

// S̃ on C_T over S with the extended monad structure.
struct KleisliExtension {
  Monad s;
  Monad t;
  KleisliCategory kleisli;  // of T
  AdjLOneCell cell;         // (S, S̃, ρ_S) on D_T ⊣ V_T
  Monad extended;           // (S̃, μ̃, η̃) on C_T

  friend bool operator==(const KleisliExtension& a, const KleisliExtension& b);
};

// Ĝ on C^S over G with the lifted comonad structure.
struct LiftedComonad {
  Monad s;
  Comonad g;
  EmAlgebraCategory em;  // of S
  AdjROneCell cell;      // (G, Ĝ, λ_G)
  Comonad lifted;

  friend bool operator==(const LiftedComonad& a, const LiftedComonad& b);
};

// Ŝ on C^G over S with the lifted monad structure.
struct CoalgebraLifting {
  Monad s;
  Comonad g;
  EmCoalgebraCategory coem;  // of G
  AdjLOneCell cell;          // (Ŝ, S, ρ_S) on U^G ⊣ F^G
  Monad lifted;

  friend bool operator==(const CoalgebraLifting& a, const CoalgebraLifting& b);
};

// ((C,S), (T,φ), μ^T, η^T) as a monad object in Mnd.
struct MonadObjectInMnd {
  Monad base;
  Monad t;
  MndOneCell cell;
  MndTwoCell mult;  // (TT, Tφ ∘ φT) → (T, φ)
  MndTwoCell unit;  // (Id, id) → (T, φ)
};

// Lifting / extension compatibility: underlying functor squares, structure
// maps over the base ones, and the (co)monad laws upstairs.
Report check_lifting(const LiftedMonad& lm);
Report check_extension(const KleisliExtension& ke);
Report check_lifting(const LiftedComonad& lc);
Report check_lifting(const CoalgebraLifting& cl);

MonadObjectInMnd make_monad_object(const DistributiveLaw& dl);
Report check_monad_object(const MonadObjectInMnd& mo);

LiftedMonad lift_monad(const DistributiveLaw& dl, const EnumerationOptions& opts = {});
// φ = U^S ε T̂ F^S ∘ U^S F^S T η
DistributiveLaw extract_dist_law(const LiftedMonad& lm);

KleisliExtension extend_monad(const DistributiveLaw& dl);
// φ = ρ_S D_T
DistributiveLaw extract_from_extension(const KleisliExtension& ke);

// True iff both recover the same law. Throws BaseMismatch unless both are
// over the same S and T.
bool check_joint_compatibility(const LiftedMonad& lm, const KleisliExtension& ke);

LiftedComonad lift_comonad(const MixedDistributiveLaw& ml, const EnumerationOptions& opts = {});
// ψ = U^S λ_G
MixedDistributiveLaw extract_mixed_law(const LiftedComonad& lc);
CoalgebraLifting colift_monad(const MixedDistributiveLaw& ml, const EnumerationOptions& opts = {});
// ψ = U^G ρ_S
MixedDistributiveLaw extract_mixed_law(const CoalgebraLifting& cl);
bool check_mixed_compatibility(const LiftedComonad& lc, const CoalgebraLifting& cl);

// Brute-force oracles: every functor over the base one on the constructed
// category, with structure maps over the base structure maps, filtered by
// the (co)monad laws. Independent of the law-side constructions.
std::vector<LiftedMonad> enumerate_liftings(const Monad& s, const Monad& t, const EnumerationOptions& opts = {});
std::vector<KleisliExtension> enumerate_extensions(const Monad& s, const Monad& t,
                                                   const EnumerationOptions& opts = {});
std::vector<LiftedComonad> enumerate_comonad_liftings(const Monad& s, const Comonad& g,
                                                      const EnumerationOptions& opts = {});
std::vector<CoalgebraLifting> enumerate_coalgebra_liftings(const Monad& s, const Comonad& g,
                                                           const EnumerationOptions& opts = {});

// ---------------------------------------------------------------------------
// Hom-category isomorphism at a fixed monad

struct HomCategorySizes {
  std::size_t mnd_one_cells = 0;
  std::size_t mnd_two_cells = 0;
  std::size_t adj_one_cells = 0;
  std::size_t adj_two_cells = 0;
  std::size_t adj_candidate_pairs = 0;  // natural (α, β) pairs examined
};

// Endo 1-cells and 2-cells of Mnd at (C,S) and of Adj_R at F^S ⊣ U^S.
std::vector<MndOneCell> enumerate_mnd_endo_cells(const Monad& s, const EnumerationOptions& opts = {});
std::vector<MndTwoCell> enumerate_mnd_two_cells(const MndOneCell& p, const MndOneCell& q);
std::vector<AdjROneCell> enumerate_adj_r_endo_cells(const EmAlgebraCategory& em, const EnumerationOptions& opts = {});

// Every natural (α, β) between the two cells, with both conditions
// evaluated separately.
struct AdjRCandidate {
  AdjRTwoCell cell;
  bool mate_condition = false;
  bool adjoint_condition = false;
};
std::vector<AdjRCandidate> enumerate_adj_r_candidates(const AdjROneCell& from, const AdjROneCell& to,
                                                      const EnumerationOptions& opts = {});

// Φ_E and Ψ_E mutually inverse and functorial on both hom-categories.
Report hom_iso_roundtrip(const Monad& s, const EnumerationOptions& opts = {}, HomCategorySizes* sizes = nullptr);

}  // namespace catlaw
