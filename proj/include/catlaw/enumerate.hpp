#pragma once

// Brute-force search over functors and natural transformations between
// finite categories. These are the engines behind every enumeration oracle.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catlaw/fincat.hpp"

namespace catlaw {

struct EnumerationOptions {
  std::uint64_t cap = 10'000'000;
  unsigned jobs = 1;
};

// Saturating arithmetic for candidate-space estimates.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);

// Optional per-object / per-morphism allow-lists; an absent entry means
// "anything type-correct".
struct FunctorConstraints {
  std::vector<std::optional<std::vector<Obj>>> objects;
  std::vector<std::optional<std::vector<Mor>>> morphisms;
};

// All functors src → tgt satisfying the constraints, canonically ordered.
// Throws CapExceeded when the candidate space estimate exceeds opts.cap.
std::vector<Functor> enumerate_functors(const CategoryPtr& src, const CategoryPtr& tgt,
                                        const FunctorConstraints& constraints,
                                        const EnumerationOptions& opts, const std::string& what);

std::vector<Functor> enumerate_endofunctors(const CategoryPtr& c, const EnumerationOptions& opts);

// Per-object candidate components: allowed[x] ⊆ hom(F x, G x).
using ComponentChoices = std::vector<std::vector<Mor>>;

ComponentChoices component_choices(const Functor& f, const Functor& g);
std::uint64_t candidate_count(const ComponentChoices& choices);

// Every natural transformation F → G drawn from `choices` (default: all of
// each hom-set), canonically ordered.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g,
                                          const std::optional<ComponentChoices>& choices = std::nullopt);

// Visits the raw cartesian product of candidate components, natural or not.
void for_each_candidate(const Functor& f, const Functor& g, const ComponentChoices& choices,
                        const std::function<void(const NatTrans&)>& visit);

}  // namespace catlaw
