#pragma once

#include <optional>
#include <vector>

#include "catlaw/enumerate.hpp"
#include "catlaw/monad.hpp"
#include "catlaw/report.hpp"

namespace catlaw {

// φ : S∘T → T∘S
struct DistributiveLaw {
  Monad s;
  Monad t;
  NatTrans phi;

  friend bool operator==(const DistributiveLaw& a, const DistributiveLaw& b);
};

// ψ : S∘G → G∘S
struct MixedDistributiveLaw {
  Monad s;
  Comonad g;
  NatTrans psi;

  friend bool operator==(const MixedDistributiveLaw& a, const MixedDistributiveLaw& b);
};

// Typing and naturality entries, then one entry per axiom. Axioms are only
// evaluated when the candidate is well typed.
Report check_dist_law(const Monad& s, const Monad& t, const NatTrans& phi);
Report check_dist_law(const DistributiveLaw& dl);
Report check_mixed_law(const Monad& s, const Comonad& g, const NatTrans& psi);
Report check_mixed_law(const MixedDistributiveLaw& ml);

// First object X with hom(F X, G X) empty, if any.
std::optional<Obj> untypable_object(const Functor& f, const Functor& g);

// Resolve components and check typability first: throws a Typing error
// UnTypableComponent when some hom(ST X, TS X) is empty, BaseMismatch when
// the two structures live on different categories.
DistributiveLaw make_dist_law(const Monad& s, const Monad& t, const RawComponents& phi);
MixedDistributiveLaw make_mixed_law(const Monad& s, const Comonad& g, const RawComponents& psi);

DistributiveLaw identity_dist_law(const Monad& s, const Monad& t);  // requires S T = T S
MixedDistributiveLaw identity_mixed_law(const Monad& s, const Comonad& g);

// All law-satisfying candidates in canonical order. Untypable pairs yield an
// empty list. Throws CapExceeded when Π_X |hom(ST X, TS X)| exceeds the cap.
std::vector<DistributiveLaw> enumerate_dist_laws(const Monad& s, const Monad& t,
                                                 const EnumerationOptions& opts = {});
std::vector<MixedDistributiveLaw> enumerate_mixed_laws(const Monad& s, const Comonad& g,
                                                       const EnumerationOptions& opts = {});

}  // namespace catlaw
