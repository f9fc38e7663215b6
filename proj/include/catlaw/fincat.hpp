#pragma once

// Finite categories with explicit composition tables, functors between them,
// and natural transformations. Everything here is immutable once built and
// equality is pointwise on the nose.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catlaw/report.hpp"

namespace catlaw {

enum class Obj : std::uint32_t {};
enum class Mor : std::uint32_t {};

constexpr std::size_t ix(Obj o) noexcept { return static_cast<std::size_t>(o); }
constexpr std::size_t ix(Mor m) noexcept { return static_cast<std::size_t>(m); }
constexpr Obj obj_at(std::size_t i) noexcept { return static_cast<Obj>(i); }
constexpr Mor mor_at(std::size_t i) noexcept { return static_cast<Mor>(i); }

// Unvalidated description, as read from a category file.
struct RawMorphism {
  std::string id;
  std::string src;
  std::string tgt;
};

// Diagrammatic order: `first` is applied first, so equals = then ∘ first.
struct RawComposite {
  std::string first;
  std::string then;
  std::string equals;
};

struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::map<std::string, std::string> identities;  // may be partial or empty
  std::vector<RawComposite> composition;
};

class FinCategory;
using CategoryPtr = std::shared_ptr<const FinCategory>;

class FinCategory {
 public:
  std::size_t object_count() const noexcept { return object_ids_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }

  auto objects() const {
    return std::views::iota(std::size_t{0}, object_count()) |
           std::views::transform([](std::size_t i) { return obj_at(i); });
  }
  auto morphisms() const {
    return std::views::iota(std::size_t{0}, morphism_count()) |
           std::views::transform([](std::size_t i) { return mor_at(i); });
  }

  const std::string& id(Obj x) const { return object_ids_[ix(x)]; }
  const std::string& id(Mor f) const { return morphisms_[ix(f)].id; }
  Obj src(Mor f) const { return morphisms_[ix(f)].src; }
  Obj tgt(Mor f) const { return morphisms_[ix(f)].tgt; }
  Mor identity(Obj x) const { return identities_[ix(x)]; }
  bool is_identity(Mor f) const { return identity(src(f)) == f && src(f) == tgt(f); }

  bool composable(Mor g, Mor f) const { return tgt(f) == src(g); }
  // g ∘ f. Precondition: composable(g, f).
  Mor compose(Mor g, Mor f) const { return composition_[ix(g) * morphism_count() + ix(f)]; }

  const std::vector<Mor>& hom(Obj a, Obj b) const { return homs_[ix(a) * object_count() + ix(b)]; }
  bool in_hom(Mor f, Obj a, Obj b) const { return src(f) == a && tgt(f) == b; }
  bool is_thin() const;

  std::optional<Obj> find_object(std::string_view id) const;
  std::optional<Mor> find_morphism(std::string_view id) const;
  // Throwing lookups (Parse error, code DanglingId).
  Obj object(std::string_view id) const;
  Mor morphism(std::string_view id) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  struct MorphismRecord {
    std::string id;
    Obj src;
    Obj tgt;
  };

  friend CategoryPtr validate_category(const RawCategory& raw);

  std::vector<std::string> object_ids_;
  std::vector<MorphismRecord> morphisms_;
  std::vector<Mor> identities_;
  std::vector<Mor> composition_;          // dense, morphism_count()²
  std::vector<std::vector<Mor>> homs_;    // dense, object_count()²
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
};

// Validates and canonicalizes (objects and morphisms sorted by id). Missing
// identities are synthesized as "id_<object>" together with their unit-law
// composites. Throws ValidationError listing every violated instance.
CategoryPtr validate_category(const RawCategory& raw);

// Associativity on every composable triple when there are at most
// `samples` of them, otherwise on `samples` triples drawn with `seed`.
Report check_associativity(const FinCategory& c, std::uint64_t seed, std::size_t samples = 1000);

RawCategory to_raw(const FinCategory& c);
CategoryPtr opposite(const FinCategory& c);
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

class Functor {
 public:
  Functor(CategoryPtr source, CategoryPtr target, std::vector<Obj> object_map,
          std::vector<Mor> morphism_map);

  static Functor identity(CategoryPtr c);

  Obj operator()(Obj x) const { return object_map_[ix(x)]; }
  Mor operator()(Mor f) const { return morphism_map_[ix(f)]; }

  const FinCategory& source() const { return *source_; }
  const FinCategory& target() const { return *target_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const CategoryPtr& target_ptr() const { return target_; }
  const std::vector<Obj>& object_map() const { return object_map_; }
  const std::vector<Mor>& morphism_map() const { return morphism_map_; }

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<Obj> object_map_;
  std::vector<Mor> morphism_map_;
};

// Components indexed by the objects of the shared source category; each
// component lives in the common target category.
class NatTrans {
 public:
  NatTrans(Functor source, Functor target, std::vector<Mor> components);

  static NatTrans identity(const Functor& f);

  Mor operator[](Obj x) const { return components_[ix(x)]; }

  const Functor& source() const { return source_; }
  const Functor& target() const { return target_; }
  const FinCategory& domain() const { return source_.source(); }
  const FinCategory& codomain() const { return source_.target(); }
  const std::vector<Mor>& components() const { return components_; }

  friend bool operator==(const NatTrans& a, const NatTrans& b);

 private:
  Functor source_;
  Functor target_;
  std::vector<Mor> components_;
};

// Empty iff F preserves sources/targets, identities and composition.
Report check_functor(const Functor& f);
// Empty iff every component is typed F X → G X and every naturality square commutes.
Report check_naturality(const NatTrans& alpha);

// g ∘ f (f applied first). Throws CompositionTypeMismatch.
Functor compose(const Functor& g, const Functor& f);
// β ∘ α (α applied first). Throws CompositionTypeMismatch.
NatTrans vcomp(const NatTrans& beta, const NatTrans& alpha);
// Fα: components F(α_X).
NatTrans whisker_left(const Functor& f, const NatTrans& alpha);
// αF: components α_{F X}.
NatTrans whisker_right(const NatTrans& alpha, const Functor& f);
// β * α : G F → G' F' for α: F → F', β: G → G'.
NatTrans hcomp(const NatTrans& beta, const NatTrans& alpha);

// Pointwise equality; throws TypeMismatch if the declared categories differ.
bool equal(const Functor& a, const Functor& b);
bool equal(const NatTrans& a, const NatTrans& b);

// First object where the components differ, if any (same shape assumed).
std::optional<Obj> first_difference(const NatTrans& a, const NatTrans& b);
// "at X: f vs g", or empty if equal.
std::string difference_witness(const NatTrans& a, const NatTrans& b);

// Records a pass for `tag`, or a failure carrying the first differing component.
void expect_equal(Report& report, const char* tag, const NatTrans& lhs, const NatTrans& rhs);

// The same components re-declared between F and G, which must equal the
// original source and target functors. Throws CompositionTypeMismatch.
NatTrans retype(const NatTrans& alpha, const Functor& f, const Functor& g);

// Lexicographic order on the index tables; the canonical enumeration order.
bool canonical_less(const Functor& a, const Functor& b);
bool canonical_less(const NatTrans& a, const NatTrans& b);

}  // namespace catlaw
