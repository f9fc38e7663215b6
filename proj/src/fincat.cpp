#include "catlaw/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <random>
#include <set>

#include "catlaw/enumerate.hpp"
#include "catlaw/errors.hpp"

namespace catlaw {

namespace {

constexpr Mor kNoMorphism = static_cast<Mor>(std::numeric_limits<std::uint32_t>::max());

std::string pair_text(const std::string& then, const std::string& first) {
  return then + "∘" + first;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(ErrorKind::Validation, issues.empty() ? "Invalid" : issues.front().code,
            [&] {
              std::string msg = std::to_string(issues.size()) + " violation(s)";
              for (const auto& i : issues) msg += "; " + i.code + ": " + i.detail;
              return msg;
            }()),
      issues_(std::move(issues)) {}

bool ValidationError::has(const std::string& code) const {
  return std::any_of(issues_.begin(), issues_.end(), [&](const Issue& i) { return i.code == code; });
}

CapExceeded::CapExceeded(std::string what, std::uint64_t estimate, std::uint64_t cap)
    : Error(ErrorKind::CapExceeded, "EnumerationCapExceeded",
            what + " needs an estimated " + std::to_string(estimate) + " candidates, cap is " +
                std::to_string(cap)),
      estimate_(estimate),
      cap_(cap) {}

Report check_associativity(const FinCategory& c, std::uint64_t seed, std::size_t samples) {
  std::vector<std::vector<Mor>> out_of(c.object_count());
  for (Mor f : c.morphisms()) out_of[ix(c.src(f))].push_back(f);
  std::uint64_t triples = 0;
  for (Mor f : c.morphisms())
    for (Mor g : out_of[ix(c.tgt(f))]) triples = sat_add(triples, out_of[ix(c.tgt(g))].size());

  Report report;
  auto check = [&](Mor f, Mor g, Mor h) {
    if (c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f)) return true;
    report.fail(tags::kCategoryAssociativity, c.id(h) + " after " + c.id(g) + " after " + c.id(f));
    return false;
  };
  if (triples <= samples) {
    for (Mor f : c.morphisms())
      for (Mor g : out_of[ix(c.tgt(f))])
        for (Mor h : out_of[ix(c.tgt(g))])
          if (!check(f, g, h)) return report;
  } else {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](const std::vector<Mor>& from) {
      return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    };
    for (std::size_t i = 0; i < samples; ++i) {
      const Mor f = mor_at(std::uniform_int_distribution<std::size_t>(0, c.morphism_count() - 1)(rng));
      const Mor g = pick(out_of[ix(c.tgt(f))]);
      if (!check(f, g, pick(out_of[ix(c.tgt(g))]))) return report;
    }
  }
  report.pass(tags::kCategoryAssociativity);
  return report;
}

bool FinCategory::is_thin() const {
  return std::all_of(homs_.begin(), homs_.end(), [](const auto& h) { return h.size() <= 1; });
}

std::optional<Obj> FinCategory::find_object(std::string_view id) const {
  auto it = object_index_.find(std::string(id));
  if (it == object_index_.end()) return std::nullopt;
  return obj_at(it->second);
}

std::optional<Mor> FinCategory::find_morphism(std::string_view id) const {
  auto it = morphism_index_.find(std::string(id));
  if (it == morphism_index_.end()) return std::nullopt;
  return mor_at(it->second);
}

Obj FinCategory::object(std::string_view id) const {
  if (auto o = find_object(id)) return *o;
  throw Error(ErrorKind::Parse, "DanglingId", "unknown object '" + std::string(id) + "'");
}

Mor FinCategory::morphism(std::string_view id) const {
  if (auto m = find_morphism(id)) return *m;
  throw Error(ErrorKind::Parse, "DanglingId", "unknown morphism '" + std::string(id) + "'");
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (&a == &b) return true;
  if (a.object_ids_ != b.object_ids_ || a.morphisms_.size() != b.morphisms_.size()) return false;
  for (std::size_t i = 0; i < a.morphisms_.size(); ++i) {
    const auto& x = a.morphisms_[i];
    const auto& y = b.morphisms_[i];
    if (x.id != y.id || x.src != y.src || x.tgt != y.tgt) return false;
  }
  return a.identities_ == b.identities_ && a.composition_ == b.composition_;
}

CategoryPtr validate_category(const RawCategory& raw) {
  std::vector<Issue> issues;
  auto issue = [&](std::string code, std::string detail) {
    issues.push_back({std::move(code), std::move(detail)});
  };

  // Objects, sorted and unique.
  std::vector<std::string> objects = raw.objects;
  std::sort(objects.begin(), objects.end());
  for (std::size_t i = 1; i < objects.size(); ++i)
    if (objects[i] == objects[i - 1]) issue("DuplicateId", "object '" + objects[i] + "'");
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  std::unordered_map<std::string, std::uint32_t> object_index;
  for (std::size_t i = 0; i < objects.size(); ++i)
    object_index.emplace(objects[i], static_cast<std::uint32_t>(i));

  // Morphisms, with synthesized identities.
  std::map<std::string, RawMorphism> morphisms;
  for (const auto& m : raw.morphisms) {
    if (!morphisms.emplace(m.id, m).second) issue("DuplicateId", "morphism '" + m.id + "'");
    if (!object_index.count(m.src))
      issue("DanglingId", "source '" + m.src + "' of morphism '" + m.id + "'");
    if (!object_index.count(m.tgt))
      issue("DanglingId", "target '" + m.tgt + "' of morphism '" + m.id + "'");
  }
  for (const auto& [obj, mor] : raw.identities) {
    if (!object_index.count(obj)) issue("DanglingId", "identity declared for unknown object '" + obj + "'");
    auto it = morphisms.find(mor);
    if (it == morphisms.end()) {
      issue("DanglingId", "identity morphism '" + mor + "'");
    } else if (it->second.src != obj || it->second.tgt != obj) {
      issue("IdentityMistyped", "'" + mor + "' is not an endomorphism of '" + obj + "'");
    }
  }
  std::map<std::string, std::string> identity_of;  // object -> morphism id
  for (const auto& obj : objects) {
    auto declared = raw.identities.find(obj);
    if (declared != raw.identities.end()) {
      identity_of[obj] = declared->second;
      continue;
    }
    const std::string synthesized = "id_" + obj;
    auto it = morphisms.find(synthesized);
    if (it == morphisms.end()) {
      morphisms.emplace(synthesized, RawMorphism{synthesized, obj, obj});
    } else if (it->second.src != obj || it->second.tgt != obj) {
      issue("DuplicateId", "'" + synthesized + "' exists but is not an endomorphism of '" + obj + "'");
    }
    identity_of[obj] = synthesized;
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  auto cat = std::make_shared<FinCategory>();
  cat->object_ids_ = objects;
  cat->object_index_ = object_index;
  for (const auto& [id, m] : morphisms) {
    cat->morphism_index_.emplace(id, static_cast<std::uint32_t>(cat->morphisms_.size()));
    cat->morphisms_.push_back({id, obj_at(object_index.at(m.src)), obj_at(object_index.at(m.tgt))});
  }
  const std::size_t n = objects.size();
  const std::size_t m = cat->morphisms_.size();
  cat->identities_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    cat->identities_[i] = mor_at(cat->morphism_index_.at(identity_of.at(objects[i])));
  cat->homs_.assign(n * n, {});
  for (std::size_t f = 0; f < m; ++f) {
    const auto& rec = cat->morphisms_[f];
    cat->homs_[ix(rec.src) * n + ix(rec.tgt)].push_back(mor_at(f));
  }

  // Composition table.
  auto& table = cat->composition_;
  table.assign(m * m, kNoMorphism);
  const FinCategory& c = *cat;
  for (const auto& entry : raw.composition) {
    auto first = c.find_morphism(entry.first);
    auto then = c.find_morphism(entry.then);
    auto equals = c.find_morphism(entry.equals);
    const std::string where = pair_text(entry.then, entry.first) + " = " + entry.equals;
    if (!first) issue("DanglingId", "morphism '" + entry.first + "' in " + where);
    if (!then) issue("DanglingId", "morphism '" + entry.then + "' in " + where);
    if (!equals) issue("DanglingId", "morphism '" + entry.equals + "' in " + where);
    if (!first || !then || !equals) continue;
    if (!c.composable(*then, *first)) {
      issue("NotComposable", where);
      continue;
    }
    // Unit-law entries are judged against the unit law itself.
    const bool first_is_id = c.is_identity(*first);
    const bool then_is_id = c.is_identity(*then);
    if (first_is_id || then_is_id) {
      const Mor expected = first_is_id ? *then : *first;
      if (*equals != expected) {
        issue("UnitLawViolation", where + " but the unit law requires " + c.id(expected));
        continue;
      }
    } else if (!c.in_hom(*equals, c.src(*first), c.tgt(*then))) {
      issue("CompositeMistyped", where + " does not lie in hom(" + c.id(c.src(*first)) + ", " +
                                     c.id(c.tgt(*then)) + ")");
      continue;
    }
    Mor& slot = table[ix(*then) * m + ix(*first)];
    if (slot != kNoMorphism && slot != *equals) {
      issue("ConflictingComposite", where + " but also = " + c.id(slot));
      continue;
    }
    slot = *equals;
  }
  // Unit-law composites are implied by the identities.
  for (std::size_t f = 0; f < m; ++f) {
    const Mor fm = mor_at(f);
    Mor& left = table[ix(c.identity(c.tgt(fm))) * m + f];
    if (left == kNoMorphism) left = fm;
    Mor& right = table[f * m + ix(c.identity(c.src(fm)))];
    if (right == kNoMorphism) right = fm;
  }
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f)
      if (c.composable(mor_at(g), mor_at(f)) && table[g * m + f] == kNoMorphism)
        issue("MissingComposite", pair_text(c.id(mor_at(g)), c.id(mor_at(f))));
  if (!issues.empty()) throw ValidationError(std::move(issues));

  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (!c.composable(mor_at(g), mor_at(f))) continue;
      for (std::size_t h = 0; h < m; ++h) {
        if (!c.composable(mor_at(h), mor_at(g))) continue;
        const Mor gf = c.compose(mor_at(g), mor_at(f));
        const Mor hg = c.compose(mor_at(h), mor_at(g));
        const Mor lhs = c.compose(mor_at(h), gf);
        const Mor rhs = c.compose(hg, mor_at(f));
        if (lhs != rhs)
          issue("NonAssociative", "(" + c.id(mor_at(h)) + ", " + c.id(mor_at(g)) + ", " +
                                      c.id(mor_at(f)) + "): " + c.id(lhs) + " vs " + c.id(rhs));
      }
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return cat;
}

RawCategory to_raw(const FinCategory& c) {
  RawCategory raw;
  for (Obj x : c.objects()) {
    raw.objects.push_back(c.id(x));
    raw.identities.emplace(c.id(x), c.id(c.identity(x)));
  }
  for (Mor f : c.morphisms()) raw.morphisms.push_back({c.id(f), c.id(c.src(f)), c.id(c.tgt(f))});
  for (Mor f : c.morphisms())
    for (Mor g : c.morphisms())
      if (c.composable(g, f)) raw.composition.push_back({c.id(f), c.id(g), c.id(c.compose(g, f))});
  return raw;
}

CategoryPtr opposite(const FinCategory& c) {
  RawCategory raw;
  for (Obj x : c.objects()) {
    raw.objects.push_back(c.id(x));
    raw.identities.emplace(c.id(x), c.id(c.identity(x)));
  }
  for (Mor f : c.morphisms()) raw.morphisms.push_back({c.id(f), c.id(c.tgt(f)), c.id(c.src(f))});
  // f then g in the opposite category is f ∘ g in the original.
  for (Mor f : c.morphisms())
    for (Mor g : c.morphisms())
      if (c.composable(f, g)) raw.composition.push_back({c.id(f), c.id(g), c.id(c.compose(f, g))});
  return validate_category(raw);
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

Functor::Functor(CategoryPtr source, CategoryPtr target, std::vector<Obj> object_map,
                 std::vector<Mor> morphism_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  if (object_map_.size() != source_->object_count() ||
      morphism_map_.size() != source_->morphism_count())
    throw typing_error("FunctorShapeMismatch", "object/morphism map sizes do not match the source");
  for (Obj y : object_map_)
    if (ix(y) >= target_->object_count())
      throw typing_error("FunctorShapeMismatch", "object image out of range");
  for (Mor g : morphism_map_)
    if (ix(g) >= target_->morphism_count())
      throw typing_error("FunctorShapeMismatch", "morphism image out of range");
}

Functor Functor::identity(CategoryPtr c) {
  std::vector<Obj> objs(c->object_count());
  std::vector<Mor> mors(c->morphism_count());
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = obj_at(i);
  for (std::size_t i = 0; i < mors.size(); ++i) mors[i] = mor_at(i);
  return Functor(c, c, std::move(objs), std::move(mors));
}

bool operator==(const Functor& a, const Functor& b) {
  return a.object_map_ == b.object_map_ && a.morphism_map_ == b.morphism_map_ &&
         same_category(a.source_, b.source_) && same_category(a.target_, b.target_);
}

NatTrans::NatTrans(Functor source, Functor target, std::vector<Mor> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_category(source_.source_ptr(), target_.source_ptr()) ||
      !same_category(source_.target_ptr(), target_.target_ptr()))
    throw Error(ErrorKind::TypeMismatch, "TypeMismatch",
                "natural transformation between functors with different categories");
  if (components_.size() != source_.source().object_count())
    throw typing_error("ComponentCountMismatch", "one component per source object is required");
  for (Mor c : components_)
    if (ix(c) >= codomain().morphism_count())
      throw typing_error("ComponentMistyped", "component out of range");
}

NatTrans NatTrans::identity(const Functor& f) {
  std::vector<Mor> comps;
  comps.reserve(f.source().object_count());
  for (Obj x : f.source().objects()) comps.push_back(f.target().identity(f(x)));
  return NatTrans(f, f, std::move(comps));
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.components_ == b.components_ && a.source_ == b.source_ && a.target_ == b.target_;
}

Report check_functor(const Functor& f) {
  Report report;
  const auto& s = f.source();
  const auto& t = f.target();
  for (Mor m : s.morphisms()) {
    const Mor image = f(m);
    if (t.src(image) != f(s.src(m)) || t.tgt(image) != f(s.tgt(m)))
      report.fail(tags::kFunctorSourceTarget,
                  s.id(m) + " ↦ " + t.id(image) + " : " + t.id(t.src(image)) + "→" + t.id(t.tgt(image)) +
                      ", expected hom(" + t.id(f(s.src(m))) + ", " + t.id(f(s.tgt(m))) + ")");
  }
  if (!report.ok()) return report;
  for (Obj x : s.objects())
    if (f(s.identity(x)) != t.identity(f(x)))
      report.fail(tags::kFunctorIdentity, "at " + s.id(x) + ": " + t.id(f(s.identity(x))) + " vs " +
                                              t.id(t.identity(f(x))));
  for (Mor a : s.morphisms())
    for (Mor b : s.morphisms())
      if (s.composable(b, a)) {
        const Mor lhs = f(s.compose(b, a));
        const Mor rhs = t.compose(f(b), f(a));
        if (lhs != rhs)
          report.fail(tags::kFunctorComposition,
                      "F(" + s.id(b) + "∘" + s.id(a) + ") = " + t.id(lhs) + " vs " + t.id(rhs));
      }
  return report;
}

Report check_naturality(const NatTrans& alpha) {
  Report report;
  const auto& c = alpha.domain();
  const auto& d = alpha.codomain();
  const auto& F = alpha.source();
  const auto& G = alpha.target();
  for (Obj x : c.objects())
    if (!d.in_hom(alpha[x], F(x), G(x)))
      report.fail(tags::kNatComponentType, "at " + c.id(x) + ": " + d.id(alpha[x]) + " is not in hom(" +
                                               d.id(F(x)) + ", " + d.id(G(x)) + ")");
  if (!report.ok()) return report;
  for (Mor f : c.morphisms()) {
    const Obj x = c.src(f);
    const Obj y = c.tgt(f);
    const Mor lhs = d.compose(G(f), alpha[x]);
    const Mor rhs = d.compose(alpha[y], F(f));
    if (lhs != rhs)
      report.fail(tags::kNaturality, "at " + c.id(f) + ": " + d.id(lhs) + " vs " + d.id(rhs));
  }
  return report;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target_ptr(), g.source_ptr()))
    throw Error(ErrorKind::CompositionTypeMismatch, "CompositionTypeMismatch",
                "functor target does not match the next functor's source");
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  objs.reserve(f.object_map().size());
  mors.reserve(f.morphism_map().size());
  for (Obj x : f.object_map()) objs.push_back(g(x));
  for (Mor m : f.morphism_map()) mors.push_back(g(m));
  return Functor(f.source_ptr(), g.target_ptr(), std::move(objs), std::move(mors));
}

NatTrans vcomp(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.target() == beta.source()))
    throw Error(ErrorKind::CompositionTypeMismatch, "CompositionTypeMismatch",
                "vertical composite needs target(α) = source(β)");
  const auto& d = alpha.codomain();
  std::vector<Mor> comps;
  comps.reserve(alpha.components().size());
  for (Obj x : alpha.domain().objects()) comps.push_back(d.compose(beta[x], alpha[x]));
  return NatTrans(alpha.source(), beta.target(), std::move(comps));
}

NatTrans whisker_left(const Functor& f, const NatTrans& alpha) {
  if (!same_category(alpha.source().target_ptr(), f.source_ptr()))
    throw Error(ErrorKind::CompositionTypeMismatch, "CompositionTypeMismatch",
                "whiskering functor does not start where the transformation lands");
  std::vector<Mor> comps;
  comps.reserve(alpha.components().size());
  for (Mor m : alpha.components()) comps.push_back(f(m));
  return NatTrans(compose(f, alpha.source()), compose(f, alpha.target()), std::move(comps));
}

NatTrans whisker_right(const NatTrans& alpha, const Functor& f) {
  if (!same_category(f.target_ptr(), alpha.source().source_ptr()))
    throw Error(ErrorKind::CompositionTypeMismatch, "CompositionTypeMismatch",
                "whiskering functor does not land where the transformation starts");
  std::vector<Mor> comps;
  comps.reserve(f.object_map().size());
  for (Obj x : f.object_map()) comps.push_back(alpha[x]);
  return NatTrans(compose(alpha.source(), f), compose(alpha.target(), f), std::move(comps));
}

NatTrans hcomp(const NatTrans& beta, const NatTrans& alpha) {
  // β * α = βF' ∘ Gα
  return vcomp(whisker_right(beta, alpha.target()), whisker_left(beta.source(), alpha));
}

bool equal(const Functor& a, const Functor& b) {
  if (!same_category(a.source_ptr(), b.source_ptr()) || !same_category(a.target_ptr(), b.target_ptr()))
    throw Error(ErrorKind::TypeMismatch, "TypeMismatch", "functors have different declared categories");
  return a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map();
}

bool equal(const NatTrans& a, const NatTrans& b) {
  if (!same_category(a.source().source_ptr(), b.source().source_ptr()) ||
      !same_category(a.source().target_ptr(), b.source().target_ptr()))
    throw Error(ErrorKind::TypeMismatch, "TypeMismatch",
                "transformations have different declared categories");
  return a == b;
}

std::optional<Obj> first_difference(const NatTrans& a, const NatTrans& b) {
  const std::size_t n = std::min(a.components().size(), b.components().size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.components()[i] != b.components()[i]) return obj_at(i);
  return std::nullopt;
}

std::string difference_witness(const NatTrans& a, const NatTrans& b) {
  if (auto x = first_difference(a, b))
    return "at " + a.domain().id(*x) + ": " + a.codomain().id(a[*x]) + " vs " + b.codomain().id(b[*x]);
  if (!(a.source() == b.source())) return "source functors differ";
  if (!(a.target() == b.target())) return "target functors differ";
  return {};
}

void expect_equal(Report& report, const char* tag, const NatTrans& lhs, const NatTrans& rhs) {
  std::string witness = difference_witness(lhs, rhs);
  if (witness.empty())
    report.pass(tag);
  else
    report.fail(tag, std::move(witness));
}

NatTrans retype(const NatTrans& alpha, const Functor& f, const Functor& g) {
  if (!(alpha.source() == f) || !(alpha.target() == g))
    throw Error(ErrorKind::CompositionTypeMismatch, "CompositionTypeMismatch",
                "re-declared functors differ from the transformation's own");
  return NatTrans(f, g, alpha.components());
}

bool canonical_less(const Functor& a, const Functor& b) {
  if (a.object_map() != b.object_map()) return a.object_map() < b.object_map();
  return a.morphism_map() < b.morphism_map();
}

bool canonical_less(const NatTrans& a, const NatTrans& b) {
  if (a.components() != b.components()) return a.components() < b.components();
  if (!(a.source() == b.source())) return canonical_less(a.source(), b.source());
  return canonical_less(a.target(), b.target());
}

}  // namespace catlaw
