#pragma once

// Built-in categories and (co)monads used by the self-test and the tests,
// plus brute-force counting oracles that only look at the order relation of
// a thin category.

#include <string>
#include <vector>

#include "catlaw/distlaw.hpp"
#include "catlaw/fincat.hpp"
#include "catlaw/monad.hpp"

namespace catlaw::fixtures {

CategoryPtr chain2();   // a → b
CategoryPtr chain3();   // 0 → 1 → 2
CategoryPtr z2();       // one object, {e, g} with g g = e
CategoryPtr trivial();  // one object, identity only
CategoryPtr empty();

// On a thin category: the functor with the given object images (by id, in
// object order), morphisms sent to the unique available arrow.
Functor thin_functor(const CategoryPtr& c, const std::vector<std::string>& images);
// Closure / interior operator as a monad / comonad on a thin category.
Monad thin_monad(const CategoryPtr& c, const std::vector<std::string>& images);
Comonad thin_comonad(const CategoryPtr& c, const std::vector<std::string>& images);

struct NamedMonad {
  std::string name;
  Monad monad;
};
struct NamedComonad {
  std::string name;
  Comonad comonad;
};

// id, c1 = (0,2,2), c2 = (1,1,2), c3 = (2,2,2) on chain3; id, top on chain2.
std::vector<NamedMonad> closure_monads_c3();
std::vector<NamedMonad> closure_monads_c2();
// id, i1 = (0,0,2), i2 = (0,1,1), i3 = (0,0,0) on chain3; id, bottom on chain2.
std::vector<NamedComonad> interior_comonads_c3();
std::vector<NamedComonad> interior_comonads_c2();

const Monad& find(const std::vector<NamedMonad>& all, const std::string& name);
const Comonad& find(const std::vector<NamedComonad>& all, const std::string& name);

// The unique law c2 c1 → c1 c2 on chain3.
DistributiveLaw law_c2_c1();

// ---------------------------------------------------------------------------
// Oracles on the order relation of a thin category: leq[x][y] iff x → y.

using Order = std::vector<std::vector<bool>>;
Order order_of(const FinCategory& c);

// Self-maps that are monotone, idempotent and inflationary (resp. deflationary),
// by scanning all n^n maps.
std::vector<std::vector<std::size_t>> closure_operators(const Order& leq);
std::vector<std::vector<std::size_t>> interior_operators(const Order& leq);

// s(t(x)) ≤ t(s(x)) for all x.
bool pointwise_below(const Order& leq, const std::vector<std::size_t>& first, const std::vector<std::size_t>& second);

// Object map of a functor as indices.
std::vector<std::size_t> object_indices(const Functor& f);

}  // namespace catlaw::fixtures
