#pragma once

#include <map>
#include <string>
#include <vector>

#include "catlaw/enumerate.hpp"
#include "catlaw/fincat.hpp"
#include "catlaw/report.hpp"

namespace catlaw {

// (C, S, μ, η) with μ: S∘S → S and η: Id → S.
struct Monad {
  CategoryPtr base;
  Functor functor;
  NatTrans mult;
  NatTrans unit;

  const FinCategory& category() const { return *base; }
  friend bool operator==(const Monad& a, const Monad& b);
};

// (C, G, δ, ε) with δ: G → G∘G and ε: G → Id.
struct Comonad {
  CategoryPtr base;
  Functor functor;
  NatTrans comult;
  NatTrans counit;

  const FinCategory& category() const { return *base; }
  friend bool operator==(const Comonad& a, const Comonad& b);
};

// Shape checks (typing and naturality of the structure maps) followed by
// the associativity and unit laws at every object.
Report check_monad_laws(const Monad& m);
Report check_comonad_laws(const Comonad& c);

// Id-based description as read from files; components may be omitted when
// the relevant hom-set is a singleton.
struct RawFunctor {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> morphisms;
};
using RawComponents = std::map<std::string, std::string>;

// Resolves ids and checks shape. Throws Typing errors:
// FunctorInvalid, MultComponentMistyped, UnitComponentMistyped (and the
// comonad analogues ComultComponentMistyped / CounitComponentMistyped).
Functor make_functor(const CategoryPtr& src, const CategoryPtr& tgt, const RawFunctor& raw);
NatTrans make_nat_trans(const Functor& f, const Functor& g, const RawComponents& raw,
                        const std::string& error_code);
Monad make_monad(const CategoryPtr& base, const RawFunctor& functor, const RawComponents& mult,
                 const RawComponents& unit);
Comonad make_comonad(const CategoryPtr& base, const RawFunctor& functor, const RawComponents& comult,
                     const RawComponents& counit);

Monad identity_monad(const CategoryPtr& base);
Comonad identity_comonad(const CategoryPtr& base);

// All law-satisfying (co)monads, canonically ordered (functor, then
// structure components). Throws CapExceeded.
std::vector<Monad> enumerate_monads(const CategoryPtr& c, const EnumerationOptions& opts = {});
std::vector<Comonad> enumerate_comonads(const CategoryPtr& c, const EnumerationOptions& opts = {});

bool canonical_less(const Monad& a, const Monad& b);
bool canonical_less(const Comonad& a, const Comonad& b);

}  // namespace catlaw
