#include "catlaw/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "catlaw/errors.hpp"
#include "catlaw/parallel.hpp"

namespace catlaw {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

struct Triple {
  std::size_t first;  // position of a
  std::size_t then;   // position of b
  std::size_t result; // position of b∘a
};

// Backtracking over the images of the non-identity morphisms of `src` for a
// fixed object map.
class MorphismSearch {
 public:
  MorphismSearch(const FinCategory& src, const FinCategory& tgt, const std::vector<Obj>& objects,
                 const FunctorConstraints& constraints)
      : src_(src), tgt_(tgt), objects_(objects) {
    for (Mor f : src.morphisms())
      if (!src.is_identity(f)) order_.push_back(f);
    position_.assign(src.morphism_count(), kIdentity);
    for (std::size_t p = 0; p < order_.size(); ++p) position_[ix(order_[p])] = p;

    candidates_.resize(order_.size());
    for (std::size_t p = 0; p < order_.size(); ++p) {
      const Mor f = order_[p];
      const auto& hom = tgt.hom(objects[ix(src.src(f))], objects[ix(src.tgt(f))]);
      const auto& allowed = constraints.morphisms.empty() ? std::nullopt : constraints.morphisms[ix(f)];
      for (Mor g : hom)
        if (!allowed || std::find(allowed->begin(), allowed->end(), g) != allowed->end())
          candidates_[p].push_back(g);
    }

    checks_.resize(order_.size());
    for (Mor a : order_)
      for (Mor b : order_)
        if (src.composable(b, a)) {
          const Mor ba = src.compose(b, a);
          const std::size_t pa = position_[ix(a)];
          const std::size_t pb = position_[ix(b)];
          const std::size_t pr = position_[ix(ba)];
          std::size_t last = std::max(pa, pb);
          if (pr != kIdentity) last = std::max(last, pr);
          checks_[last].push_back({pa, pb, pr});
        }
  }

  std::uint64_t estimate() const {
    std::uint64_t total = 1;
    for (const auto& c : candidates_) total = sat_mul(total, c.size());
    return total;
  }

  void run(std::vector<Functor>& out, const CategoryPtr& src_ptr, const CategoryPtr& tgt_ptr) {
    images_.assign(order_.size(), Mor{});
    src_ptr_ = &src_ptr;
    tgt_ptr_ = &tgt_ptr;
    out_ = &out;
    descend(0);
  }

 private:
  static constexpr std::size_t kIdentity = std::numeric_limits<std::size_t>::max();

  Mor image_at(std::size_t position, Obj identity_object) const {
    return position == kIdentity ? tgt_.identity(identity_object) : images_[position];
  }

  bool consistent(std::size_t p) const {
    for (const auto& t : checks_[p]) {
      const Mor a = order_[t.first];
      const Mor b = order_[t.then];
      const Mor lhs = image_at(t.result, objects_[ix(src_.src(a))]);
      const Mor rhs = tgt_.compose(images_[t.then], images_[t.first]);
      (void)b;
      if (lhs != rhs) return false;
    }
    return true;
  }

  void descend(std::size_t p) {
    if (p == order_.size()) {
      std::vector<Mor> mors(src_.morphism_count());
      for (Mor f : src_.morphisms())
        mors[ix(f)] = position_[ix(f)] == kIdentity ? tgt_.identity(objects_[ix(src_.src(f))])
                                                    : images_[position_[ix(f)]];
      out_->emplace_back(*src_ptr_, *tgt_ptr_, objects_, std::move(mors));
      return;
    }
    for (Mor g : candidates_[p]) {
      images_[p] = g;
      if (consistent(p)) descend(p + 1);
    }
  }

  const FinCategory& src_;
  const FinCategory& tgt_;
  const std::vector<Obj>& objects_;
  std::vector<Mor> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<Mor>> candidates_;
  std::vector<std::vector<Triple>> checks_;
  std::vector<Mor> images_;
  const CategoryPtr* src_ptr_ = nullptr;
  const CategoryPtr* tgt_ptr_ = nullptr;
  std::vector<Functor>* out_ = nullptr;
};

}  // namespace

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::vector<Functor> enumerate_functors(const CategoryPtr& src, const CategoryPtr& tgt,
                                        const FunctorConstraints& constraints,
                                        const EnumerationOptions& opts, const std::string& what) {
  const std::size_t n = src->object_count();
  std::vector<std::vector<Obj>> object_choices(n);
  std::uint64_t object_maps = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!constraints.objects.empty() && constraints.objects[i]) {
      object_choices[i] = *constraints.objects[i];
    } else {
      for (Obj y : tgt->objects()) object_choices[i].push_back(y);
    }
    object_maps = sat_mul(object_maps, object_choices[i].size());
  }
  if (object_maps > opts.cap) throw CapExceeded(what, object_maps, opts.cap);

  // Materialize object maps that send every morphism's endpoints somewhere
  // with a nonempty hom-set.
  std::vector<std::vector<Obj>> maps;
  if (object_maps > 0) {
    std::vector<std::size_t> digits(n, 0);
    std::vector<Obj> current(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) current[i] = object_choices[i][digits[i]];
      bool viable = true;
      for (Mor f : src->morphisms())
        if (tgt->hom(current[ix(src->src(f))], current[ix(src->tgt(f))]).empty()) {
          viable = false;
          break;
        }
      if (viable) maps.push_back(current);
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++digits[i] < object_choices[i].size()) break;
        digits[i] = 0;
      }
      if (i == n) break;
    }
  }

  std::uint64_t estimate = 0;
  for (const auto& m : maps) estimate = sat_add(estimate, MorphismSearch(*src, *tgt, m, constraints).estimate());
  if (estimate > opts.cap) throw CapExceeded(what, estimate, opts.cap);

  auto per_map = parallel_map(maps.size(), opts.jobs, [&](std::size_t i) {
    std::vector<Functor> found;
    MorphismSearch(*src, *tgt, maps[i], constraints).run(found, src, tgt);
    return found;
  });
  std::vector<Functor> all;
  for (auto& part : per_map)
    for (auto& f : part) all.push_back(std::move(f));
  std::sort(all.begin(), all.end(), [](const Functor& a, const Functor& b) { return canonical_less(a, b); });
  return all;
}

std::vector<Functor> enumerate_endofunctors(const CategoryPtr& c, const EnumerationOptions& opts) {
  return enumerate_functors(c, c, {}, opts, "endofunctor enumeration");
}

ComponentChoices component_choices(const Functor& f, const Functor& g) {
  ComponentChoices choices;
  for (Obj x : f.source().objects()) choices.push_back(f.target().hom(f(x), g(x)));
  return choices;
}

std::uint64_t candidate_count(const ComponentChoices& choices) {
  std::uint64_t total = 1;
  for (const auto& c : choices) total = sat_mul(total, c.size());
  return total;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g,
                                          const std::optional<ComponentChoices>& choices) {
  const auto& c = f.source();
  const auto& d = f.target();
  const ComponentChoices all = choices ? *choices : component_choices(f, g);
  const std::size_t n = c.object_count();

  // Naturality squares become checkable once both endpoints are assigned.
  std::vector<std::vector<Mor>> checks(n);
  for (Mor m : c.morphisms()) checks[std::max(ix(c.src(m)), ix(c.tgt(m)))].push_back(m);

  std::vector<NatTrans> out;
  std::vector<Mor> comps(n);
  auto descend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.emplace_back(f, g, comps);
      return;
    }
    for (Mor a : all[k]) {
      if (!d.in_hom(a, f(obj_at(k)), g(obj_at(k)))) continue;
      comps[k] = a;
      bool ok = true;
      for (Mor m : checks[k]) {
        const Obj x = c.src(m);
        const Obj y = c.tgt(m);
        if (d.compose(g(m), comps[ix(x)]) != d.compose(comps[ix(y)], f(m))) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };
  descend(descend, 0);
  return out;  // lexicographic by construction
}

void for_each_candidate(const Functor& f, const Functor& g, const ComponentChoices& choices,
                        const std::function<void(const NatTrans&)>& visit) {
  const std::size_t n = choices.size();
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> digits(n, 0);
  std::vector<Mor> comps(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) comps[i] = choices[i][digits[i]];
    visit(NatTrans(f, g, comps));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++digits[i] < choices[i].size()) break;
      digits[i] = 0;
    }
    if (i == n) return;
  }
}

}  // namespace catlaw
