#include "catlaw/twofunctors.hpp"

#include <map>

#include "catlaw/errors.hpp"
#include "catlaw/parallel.hpp"

namespace catlaw {

namespace {

Functor id_of(const CategoryPtr& c) { return Functor::identity(c); }

// Declared functors first, then component typing and naturality.
bool check_shape(const NatTrans& alpha, const Functor& dom, const Functor& cod, Report& report) {
  if (!(alpha.source() == dom) || !(alpha.target() == cod)) {
    report.fail(tags::kNatComponentType, "declared source/target functors differ from the cell's boundary");
    return false;
  }
  const Report r = check_naturality(alpha);
  report.merge(r);
  return r.ok();
}

Error one_cell_violation(const std::string& what) { return typing_error("OneCellLawViolation", what); }
Error two_cell_violation(const std::string& what) { return typing_error("TwoCellLawViolation", what); }

void require_same(bool same, const std::string& what) {
  if (!same) throw Error(ErrorKind::BaseMismatch, "BaseMismatch", what);
}

// One entry per tag, keeping the first failure, emitted in first-seen order.
class Tally {
 public:
  void record(const char* tag, bool ok, const std::function<std::string()>& witness) {
    auto it = index_.find(tag);
    if (it == index_.end()) {
      index_.emplace(tag, entries_.size());
      entries_.push_back({tag, true, {}});
      it = index_.find(tag);
    }
    Finding& f = entries_[it->second];
    if (!ok && f.passed) {
      f.passed = false;
      f.witness = witness();
    }
  }
  Report report() const {
    Report r;
    for (const auto& f : entries_) r.add(f);
    return r;
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<Finding> entries_;
};

// Constraints selecting functors K on `cat` with base(K x) = image of base(x)
// under `over`, for a forgetful functor `forget` into the base.
FunctorConstraints over_constraints(const FinCategory& cat, const Functor& forget, const Functor& over) {
  FunctorConstraints fc;
  fc.objects.resize(cat.object_count());
  fc.morphisms.resize(cat.morphism_count());
  for (Obj a : cat.objects()) {
    std::vector<Obj> allowed;
    for (Obj b : cat.objects())
      if (forget(b) == over(forget(a))) allowed.push_back(b);
    fc.objects[ix(a)] = std::move(allowed);
  }
  for (Mor m : cat.morphisms()) {
    std::vector<Mor> allowed;
    for (Mor n : cat.morphisms())
      if (forget(n) == over(forget(m))) allowed.push_back(n);
    fc.morphisms[ix(m)] = std::move(allowed);
  }
  return fc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Equality

bool operator==(const MndOneCell& a, const MndOneCell& b) {
  return a.src == b.src && a.dst == b.dst && a.functor == b.functor && a.phi == b.phi;
}
bool operator==(const MndTwoCell& a, const MndTwoCell& b) {
  return a.from == b.from && a.to == b.to && a.theta == b.theta;
}
bool operator==(const MndBulletOneCell& a, const MndBulletOneCell& b) {
  return a.src == b.src && a.dst == b.dst && a.functor == b.functor && a.psi == b.psi;
}
bool operator==(const MndBulletTwoCell& a, const MndBulletTwoCell& b) {
  return a.from == b.from && a.to == b.to && a.theta == b.theta;
}
bool operator==(const CoMndOneCell& a, const CoMndOneCell& b) {
  return a.src == b.src && a.dst == b.dst && a.functor == b.functor && a.pi == b.pi;
}
bool operator==(const CoMndTwoCell& a, const CoMndTwoCell& b) {
  return a.from == b.from && a.to == b.to && a.theta == b.theta;
}
bool operator==(const AdjROneCell& a, const AdjROneCell& b) {
  return a.square.dom == b.square.dom && a.square.cod == b.square.cod && a.lower() == b.lower() &&
         a.upper() == b.upper() && a.mate == b.mate;
}
bool operator==(const AdjRTwoCell& a, const AdjRTwoCell& b) {
  return a.from == b.from && a.to == b.to && a.alpha == b.alpha && a.beta == b.beta;
}
bool operator==(const AdjLOneCell& a, const AdjLOneCell& b) {
  return a.square.dom == b.square.dom && a.square.cod == b.square.cod && a.lower() == b.lower() &&
         a.upper() == b.upper() && a.mate == b.mate;
}
bool operator==(const AdjLTwoCell& a, const AdjLTwoCell& b) {
  return a.from == b.from && a.to == b.to && a.alpha == b.alpha && a.beta == b.beta;
}
bool operator==(const LiftedMonad& a, const LiftedMonad& b) {
  return a.s == b.s && a.t == b.t && a.cell == b.cell && a.lifted == b.lifted;
}
bool operator==(const KleisliExtension& a, const KleisliExtension& b) {
  return a.s == b.s && a.t == b.t && a.cell == b.cell && a.extended == b.extended;
}
bool operator==(const LiftedComonad& a, const LiftedComonad& b) {
  return a.s == b.s && a.g == b.g && a.cell == b.cell && a.lifted == b.lifted;
}
bool operator==(const CoalgebraLifting& a, const CoalgebraLifting& b) {
  return a.s == b.s && a.g == b.g && a.cell == b.cell && a.lifted == b.lifted;
}

// ---------------------------------------------------------------------------
// Cell checks

Report check_cell(const MndOneCell& c) {
  Report report;
  const Functor& P = c.functor;
  const Functor& S = c.src.functor;
  const Functor& T = c.dst.functor;
  const NatTrans& phi = c.phi;
  if (!check_shape(phi, compose(T, P), compose(P, S), report)) return report;
  // Pμ^S ∘ φS ∘ Tφ = φ ∘ μ^T P
  expect_equal(report, tags::kMndOneCellMult,
               vcomp(whisker_left(P, c.src.mult), vcomp(whisker_right(phi, S), whisker_left(T, phi))),
               vcomp(phi, whisker_right(c.dst.mult, P)));
  // Pη^S = φ ∘ η^T P
  expect_equal(report, tags::kMndOneCellUnit, whisker_left(P, c.src.unit), vcomp(phi, whisker_right(c.dst.unit, P)));
  return report;
}

Report check_cell(const MndTwoCell& c) {
  Report report;
  const Functor& T = c.from.dst.functor;
  const Functor& S = c.from.src.functor;
  if (!check_shape(c.theta, c.from.functor, c.to.functor, report)) return report;
  // φ^Q ∘ Tθ = θS ∘ φ^P
  expect_equal(report, tags::kMndTwoCell, vcomp(c.to.phi, whisker_left(T, c.theta)),
               vcomp(whisker_right(c.theta, S), c.from.phi));
  return report;
}

Report check_cell(const MndBulletOneCell& c) {
  Report report;
  const Functor& P = c.functor;
  const Functor& S = c.src.functor;
  const Functor& T = c.dst.functor;
  const NatTrans& psi = c.psi;
  if (!check_shape(psi, compose(P, S), compose(T, P), report)) return report;
  // μ^T P ∘ Tψ ∘ ψS = ψ ∘ Pμ^S
  expect_equal(report, tags::kMndBulletOneCellMult,
               vcomp(whisker_right(c.dst.mult, P), vcomp(whisker_left(T, psi), whisker_right(psi, S))),
               vcomp(psi, whisker_left(P, c.src.mult)));
  // η^T P = ψ ∘ Pη^S
  expect_equal(report, tags::kMndBulletOneCellUnit, whisker_right(c.dst.unit, P),
               vcomp(psi, whisker_left(P, c.src.unit)));
  return report;
}

Report check_cell(const MndBulletTwoCell& c) {
  Report report;
  const Functor& T = c.from.dst.functor;
  const Functor& S = c.from.src.functor;
  if (!check_shape(c.theta, c.from.functor, c.to.functor, report)) return report;
  // Tϑ ∘ ψ^P = ψ^Q ∘ ϑS
  expect_equal(report, tags::kMndBulletTwoCell, vcomp(whisker_left(T, c.theta), c.from.psi),
               vcomp(c.to.psi, whisker_right(c.theta, S)));
  return report;
}

Report check_cell(const CoMndOneCell& c) {
  Report report;
  const Functor& P = c.functor;
  const Functor& G = c.src.functor;
  const Functor& H = c.dst.functor;
  const NatTrans& pi = c.pi;
  if (!check_shape(pi, compose(P, G), compose(H, P), report)) return report;
  // δ^H P ∘ π = Hπ ∘ πG ∘ Pδ^G
  expect_equal(report, tags::kCoMndOneCellComult, vcomp(whisker_right(c.dst.comult, P), pi),
               vcomp(whisker_left(H, pi), vcomp(whisker_right(pi, G), whisker_left(P, c.src.comult))));
  // ε^H P ∘ π = Pε^G
  expect_equal(report, tags::kCoMndOneCellCounit, vcomp(whisker_right(c.dst.counit, P), pi),
               whisker_left(P, c.src.counit));
  return report;
}

Report check_cell(const CoMndTwoCell& c) {
  Report report;
  const Functor& H = c.from.dst.functor;
  const Functor& G = c.from.src.functor;
  if (!check_shape(c.theta, c.from.functor, c.to.functor, report)) return report;
  // Hϑ ∘ π^P = π^Q ∘ ϑG
  expect_equal(report, tags::kCoMndTwoCell, vcomp(whisker_left(H, c.theta), c.from.pi),
               vcomp(c.to.pi, whisker_right(c.theta, G)));
  return report;
}

Report check_cell(const AdjROneCell& c) {
  Report report = check_square(c.square);
  if (!report.ok()) return report;
  expect_equal(report, tags::kStoredMate, c.mate, mate_right(c.square));
  return report;
}

Report check_cell(const AdjLOneCell& c) {
  Report report = check_square(c.square);
  if (!report.ok()) return report;
  expect_equal(report, tags::kStoredMate, c.mate, mate_left(c.square));
  return report;
}

Report check_cell(const AdjRTwoCell& c) {
  Report report;
  const bool typed = check_shape(c.alpha, c.from.lower(), c.to.lower(), report) &
                     check_shape(c.beta, c.from.upper(), c.to.upper(), report);
  if (!typed) return report;
  const Functor& L = c.from.square.dom.left;
  const Functor& R = c.from.square.dom.right;
  const Functor& Lbar = c.from.square.cod.left;
  const Functor& Rbar = c.from.square.cod.right;
  // βL ∘ λ = λ' ∘ L̄α
  expect_equal(report, tags::kAdjTwoCellMate, vcomp(whisker_right(c.beta, L), c.from.mate),
               vcomp(c.to.mate, whisker_left(Lbar, c.alpha)));
  // R̄β = αR
  expect_equal(report, tags::kAdjTwoCellWhisker, whisker_left(Rbar, c.beta), whisker_right(c.alpha, R));
  return report;
}

Report check_cell(const AdjLTwoCell& c) {
  Report report;
  const bool typed = check_shape(c.alpha, c.from.lower(), c.to.lower(), report) &
                     check_shape(c.beta, c.from.upper(), c.to.upper(), report);
  if (!typed) return report;
  const Functor& L = c.from.square.dom.left;
  const Functor& R = c.from.square.dom.right;
  const Functor& Lbar = c.from.square.cod.left;
  const Functor& Rbar = c.from.square.cod.right;
  // ρ' ∘ αR = R̄β ∘ ρ
  expect_equal(report, tags::kAdjTwoCellMate, vcomp(c.to.mate, whisker_right(c.alpha, R)),
               vcomp(whisker_left(Rbar, c.beta), c.from.mate));
  // βL = L̄α
  expect_equal(report, tags::kAdjTwoCellWhisker, whisker_right(c.beta, L), whisker_left(Lbar, c.alpha));
  return report;
}

// ---------------------------------------------------------------------------
// Construction, identities, composition

AdjROneCell make_adj_r_cell(const Adjunction& dom, const Adjunction& cod, const Functor& j, const Functor& k) {
  CommutingSquareR sq = make_square_r(dom, cod, j, k);
  NatTrans mate = mate_right(sq);
  return {std::move(sq), std::move(mate)};
}

AdjLOneCell make_adj_l_cell(const Adjunction& dom, const Adjunction& cod, const Functor& j, const Functor& k) {
  CommutingSquareL sq = make_square_l(dom, cod, j, k);
  NatTrans mate = mate_left(sq);
  return {std::move(sq), std::move(mate)};
}

MndOneCell identity_cell(const Monad& m) {
  const Functor id = id_of(m.base);
  const Functor& S = m.functor;
  return {m, m, id, retype(NatTrans::identity(compose(S, id)), compose(S, id), compose(id, S))};
}

MndBulletOneCell identity_bullet_cell(const Monad& m) {
  const Functor id = id_of(m.base);
  const Functor& S = m.functor;
  return {m, m, id, retype(NatTrans::identity(compose(id, S)), compose(id, S), compose(S, id))};
}

CoMndOneCell identity_cell(const Comonad& c) {
  const Functor id = id_of(c.base);
  const Functor& G = c.functor;
  return {c, c, id, retype(NatTrans::identity(compose(id, G)), compose(id, G), compose(G, id))};
}

AdjROneCell identity_adj_r_cell(const Adjunction& a) {
  return make_adj_r_cell(a, a, id_of(a.lower()), id_of(a.upper()));
}

AdjLOneCell identity_adj_l_cell(const Adjunction& a) {
  return make_adj_l_cell(a, a, id_of(a.lower()), id_of(a.upper()));
}

MndTwoCell identity_two_cell(const MndOneCell& c) { return {c, c, NatTrans::identity(c.functor)}; }
MndBulletTwoCell identity_two_cell(const MndBulletOneCell& c) { return {c, c, NatTrans::identity(c.functor)}; }
CoMndTwoCell identity_two_cell(const CoMndOneCell& c) { return {c, c, NatTrans::identity(c.functor)}; }
AdjRTwoCell identity_two_cell(const AdjROneCell& c) {
  return {c, c, NatTrans::identity(c.lower()), NatTrans::identity(c.upper())};
}
AdjLTwoCell identity_two_cell(const AdjLOneCell& c) {
  return {c, c, NatTrans::identity(c.lower()), NatTrans::identity(c.upper())};
}

MndOneCell compose(const MndOneCell& q, const MndOneCell& p) {
  require_same(p.dst == q.src, "1-cells are not composable");
  const Functor qp = compose(q.functor, p.functor);
  // Qφ^P ∘ φ^Q P
  NatTrans phi = vcomp(whisker_left(q.functor, p.phi), whisker_right(q.phi, p.functor));
  return {p.src, q.dst, qp, retype(phi, compose(q.dst.functor, qp), compose(qp, p.src.functor))};
}

MndBulletOneCell compose(const MndBulletOneCell& q, const MndBulletOneCell& p) {
  require_same(p.dst == q.src, "1-cells are not composable");
  const Functor qp = compose(q.functor, p.functor);
  // ψ^Q P ∘ Qψ^P
  NatTrans psi = vcomp(whisker_right(q.psi, p.functor), whisker_left(q.functor, p.psi));
  return {p.src, q.dst, qp, retype(psi, compose(qp, p.src.functor), compose(q.dst.functor, qp))};
}

CoMndOneCell compose(const CoMndOneCell& q, const CoMndOneCell& p) {
  require_same(p.dst == q.src, "1-cells are not composable");
  const Functor qp = compose(q.functor, p.functor);
  // π^Q P ∘ Qπ^P
  NatTrans pi = vcomp(whisker_right(q.pi, p.functor), whisker_left(q.functor, p.pi));
  return {p.src, q.dst, qp, retype(pi, compose(qp, p.src.functor), compose(q.dst.functor, qp))};
}

AdjROneCell compose(const AdjROneCell& q, const AdjROneCell& p) {
  require_same(p.square.cod == q.square.dom, "1-cells are not composable");
  return make_adj_r_cell(p.square.dom, q.square.cod, compose(q.lower(), p.lower()), compose(q.upper(), p.upper()));
}

AdjLOneCell compose(const AdjLOneCell& q, const AdjLOneCell& p) {
  require_same(p.square.cod == q.square.dom, "1-cells are not composable");
  return make_adj_l_cell(p.square.dom, q.square.cod, compose(q.lower(), p.lower()), compose(q.upper(), p.upper()));
}

MndTwoCell vcomp(const MndTwoCell& b, const MndTwoCell& a) { return {a.from, b.to, vcomp(b.theta, a.theta)}; }

AdjRTwoCell vcomp(const AdjRTwoCell& b, const AdjRTwoCell& a) {
  return {a.from, b.to, vcomp(b.alpha, a.alpha), vcomp(b.beta, a.beta)};
}

// ---------------------------------------------------------------------------
// Eilenberg-Moore side

MndOneCell phiE_1cell(const AdjROneCell& c) {
  const Monad src = induced_monad(c.square.dom);
  const Monad dst = induced_monad(c.square.cod);
  const Functor& J = c.lower();
  NatTrans phi = whisker_left(c.square.cod.right, c.mate);
  return {src, dst, J, retype(phi, compose(dst.functor, J), compose(J, src.functor))};
}

MndTwoCell phiE_2cell(const AdjRTwoCell& c) { return {phiE_1cell(c.from), phiE_1cell(c.to), c.alpha}; }

namespace {

Functor lift_functor(const MndOneCell& c, const EmAlgebraCategory& src, const EmAlgebraCategory& dst) {
  const auto& base = *c.dst.base;
  const Functor& P = c.functor;
  const auto& cat = src.cat();
  std::vector<Obj> objects(cat.object_count());
  for (Obj a : cat.objects()) {
    const Obj n = src.carrier(a);
    auto image = dst.find_algebra(P(n), base.compose(P(src.structure(a)), c.phi[n]));
    if (!image) throw one_cell_violation("lifted structure at " + cat.id(a) + " is not an algebra");
    objects[ix(a)] = *image;
  }
  std::vector<Mor> morphisms(cat.morphism_count());
  for (Mor m : cat.morphisms()) {
    auto image = dst.find_morphism(objects[ix(cat.src(m))], objects[ix(cat.tgt(m))], P(src.underlying(m)));
    if (!image) throw one_cell_violation("lifted image of " + cat.id(m) + " is not an algebra morphism");
    morphisms[ix(m)] = *image;
  }
  return Functor(src.category(), dst.category(), std::move(objects), std::move(morphisms));
}

}  // namespace

AdjROneCell psiE_1cell(const MndOneCell& c, const EmAlgebraCategory& src, const EmAlgebraCategory& dst) {
  require_same(src.monad() == c.src && dst.monad() == c.dst, "algebra categories do not match the cell");
  return make_adj_r_cell(src.adjunction(), dst.adjunction(), c.functor, lift_functor(c, src, dst));
}

AdjROneCell psiE_1cell(const MndOneCell& c, const EnumerationOptions& opts) {
  return psiE_1cell(c, em_category(c.src, opts), em_category(c.dst, opts));
}

AdjRTwoCell psiE_2cell(const MndTwoCell& c, const EmAlgebraCategory& src, const EmAlgebraCategory& dst) {
  AdjROneCell from = psiE_1cell(c.from, src, dst);
  AdjROneCell to = psiE_1cell(c.to, src, dst);
  const auto& cat = src.cat();
  std::vector<Mor> components(cat.object_count());
  for (Obj a : cat.objects()) {
    auto m = dst.find_morphism(from.upper()(a), to.upper()(a), c.theta[src.carrier(a)]);
    if (!m) throw two_cell_violation("component at " + cat.id(a) + " is not an algebra morphism");
    components[ix(a)] = *m;
  }
  NatTrans beta(from.upper(), to.upper(), std::move(components));
  return {std::move(from), std::move(to), c.theta, std::move(beta)};
}

AdjRTwoCell psiE_2cell(const MndTwoCell& c, const EnumerationOptions& opts) {
  return psiE_2cell(c, em_category(c.from.src, opts), em_category(c.from.dst, opts));
}

// ---------------------------------------------------------------------------
// Kleisli side

MndBulletOneCell phiK_1cell(const AdjLOneCell& c) {
  const Monad src = induced_monad(c.square.dom);
  const Monad dst = induced_monad(c.square.cod);
  const Functor& J = c.lower();
  NatTrans psi = whisker_right(c.mate, c.square.dom.left);
  return {src, dst, J, retype(psi, compose(J, src.functor), compose(dst.functor, J))};
}

MndBulletTwoCell phiK_2cell(const AdjLTwoCell& c) { return {phiK_1cell(c.from), phiK_1cell(c.to), c.alpha}; }

AdjLOneCell psiK_1cell(const MndBulletOneCell& c, const KleisliCategory& src, const KleisliCategory& dst) {
  require_same(src.monad() == c.src && dst.monad() == c.dst, "Kleisli categories do not match the cell");
  const auto& base = *c.dst.base;
  const Functor& P = c.functor;
  const auto& cat = src.cat();
  std::vector<Obj> objects(cat.object_count());
  for (Obj x : cat.objects()) objects[ix(x)] = P(x);
  std::vector<Mor> morphisms(cat.morphism_count());
  for (Mor h : cat.morphisms()) {
    const Obj y = cat.tgt(h);
    const Mor underlying = base.compose(c.psi[y], P(src.underlying(h)));
    auto image = dst.find_morphism(P(cat.src(h)), P(y), underlying);
    if (!image) throw one_cell_violation("no Kleisli morphism over " + base.id(underlying));
    morphisms[ix(h)] = *image;
  }
  Functor K(src.category(), dst.category(), std::move(objects), std::move(morphisms));
  return make_adj_l_cell(src.adjunction(), dst.adjunction(), P, K);
}

AdjLOneCell psiK_1cell(const MndBulletOneCell& c) {
  return psiK_1cell(c, kleisli_category(c.src), kleisli_category(c.dst));
}

AdjLTwoCell psiK_2cell(const MndBulletTwoCell& c, const KleisliCategory& src, const KleisliCategory& dst) {
  AdjLOneCell from = psiK_1cell(c.from, src, dst);
  AdjLOneCell to = psiK_1cell(c.to, src, dst);
  const auto& base = *c.from.dst.base;
  const Monad& t = c.from.dst;
  const auto& cat = src.cat();
  std::vector<Mor> components(cat.object_count());
  for (Obj x : cat.objects()) {
    const Obj qx = c.to.functor(x);
    const Mor underlying = base.compose(t.unit[qx], c.theta[x]);
    auto m = dst.find_morphism(c.from.functor(x), qx, underlying);
    if (!m) throw two_cell_violation("no Kleisli morphism over " + base.id(underlying));
    components[ix(x)] = *m;
  }
  NatTrans beta(from.upper(), to.upper(), std::move(components));
  return {std::move(from), std::move(to), c.theta, std::move(beta)};
}

AdjLTwoCell psiK_2cell(const MndBulletTwoCell& c) {
  return psiK_2cell(c, kleisli_category(c.from.src), kleisli_category(c.from.dst));
}

// ---------------------------------------------------------------------------
// Coalgebra side

CoMndOneCell vecPhiE_1cell(const AdjLOneCell& c) {
  const Comonad src = induced_comonad(c.square.dom);
  const Comonad dst = induced_comonad(c.square.cod);
  const Functor& K = c.upper();
  NatTrans pi = whisker_left(c.square.cod.left, c.mate);
  return {src, dst, K, retype(pi, compose(K, src.functor), compose(dst.functor, K))};
}

CoMndTwoCell vecPhiE_2cell(const AdjLTwoCell& c) { return {vecPhiE_1cell(c.from), vecPhiE_1cell(c.to), c.beta}; }

AdjLOneCell vecPsiE_1cell(const CoMndOneCell& c, const EmCoalgebraCategory& src, const EmCoalgebraCategory& dst) {
  require_same(src.comonad() == c.src && dst.comonad() == c.dst, "coalgebra categories do not match the cell");
  const auto& base = *c.dst.base;
  const Functor& P = c.functor;
  const auto& cat = src.cat();
  std::vector<Obj> objects(cat.object_count());
  for (Obj a : cat.objects()) {
    const Obj n = src.carrier(a);
    auto image = dst.find_coalgebra(P(n), base.compose(c.pi[n], P(src.structure(a))));
    if (!image) throw one_cell_violation("lifted structure at " + cat.id(a) + " is not a coalgebra");
    objects[ix(a)] = *image;
  }
  std::vector<Mor> morphisms(cat.morphism_count());
  for (Mor m : cat.morphisms()) {
    auto image = dst.find_morphism(objects[ix(cat.src(m))], objects[ix(cat.tgt(m))], P(src.underlying(m)));
    if (!image) throw one_cell_violation("lifted image of " + cat.id(m) + " is not a coalgebra morphism");
    morphisms[ix(m)] = *image;
  }
  Functor J(src.category(), dst.category(), std::move(objects), std::move(morphisms));
  return make_adj_l_cell(src.adjunction(), dst.adjunction(), J, P);
}

AdjLOneCell vecPsiE_1cell(const CoMndOneCell& c, const EnumerationOptions& opts) {
  return vecPsiE_1cell(c, em_coalgebra_category(c.src, opts), em_coalgebra_category(c.dst, opts));
}

AdjLTwoCell vecPsiE_2cell(const CoMndTwoCell& c, const EmCoalgebraCategory& src, const EmCoalgebraCategory& dst) {
  AdjLOneCell from = vecPsiE_1cell(c.from, src, dst);
  AdjLOneCell to = vecPsiE_1cell(c.to, src, dst);
  const auto& cat = src.cat();
  std::vector<Mor> components(cat.object_count());
  for (Obj a : cat.objects()) {
    auto m = dst.find_morphism(from.lower()(a), to.lower()(a), c.theta[src.carrier(a)]);
    if (!m) throw two_cell_violation("component at " + cat.id(a) + " is not a coalgebra morphism");
    components[ix(a)] = *m;
  }
  NatTrans alpha(from.lower(), to.lower(), std::move(components));
  return {std::move(from), std::move(to), std::move(alpha), c.theta};
}

AdjLTwoCell vecPsiE_2cell(const CoMndTwoCell& c, const EnumerationOptions& opts) {
  return vecPsiE_2cell(c, em_coalgebra_category(c.from.src, opts), em_coalgebra_category(c.from.dst, opts));
}

// ---------------------------------------------------------------------------
// Liftings and extensions

Report check_lifting(const LiftedMonad& lm) {
  Report report;
  const Functor& U = lm.em.forgetful();
  const Functor& T = lm.t.functor;
  const Functor& That = lm.lifted.functor;
  if (compose(U, That) == compose(T, U))
    report.pass(tags::kLiftedSquare);
  else
    report.fail(tags::kLiftedSquare, "U T̂ differs from T U");
  if (report.ok()) {
    expect_equal(report, tags::kLiftedStructure, whisker_left(U, lm.lifted.mult), whisker_right(lm.t.mult, U));
    expect_equal(report, tags::kLiftedStructure, whisker_left(U, lm.lifted.unit), whisker_right(lm.t.unit, U));
  }
  report.merge(check_monad_laws(lm.lifted));
  return report;
}

Report check_extension(const KleisliExtension& ke) {
  Report report;
  const Functor& D = ke.kleisli.free();
  const Functor& S = ke.s.functor;
  const Functor& Stilde = ke.extended.functor;
  if (compose(Stilde, D) == compose(D, S))
    report.pass(tags::kExtensionSquare);
  else
    report.fail(tags::kExtensionSquare, "S̃ D differs from D S");
  if (report.ok()) {
    expect_equal(report, tags::kLiftedStructure, whisker_right(ke.extended.mult, D), whisker_left(D, ke.s.mult));
    expect_equal(report, tags::kLiftedStructure, whisker_right(ke.extended.unit, D), whisker_left(D, ke.s.unit));
  }
  report.merge(check_monad_laws(ke.extended));
  return report;
}

Report check_lifting(const LiftedComonad& lc) {
  Report report;
  const Functor& U = lc.em.forgetful();
  const Functor& G = lc.g.functor;
  if (compose(U, lc.lifted.functor) == compose(G, U))
    report.pass(tags::kLiftedSquare);
  else
    report.fail(tags::kLiftedSquare, "U Ĝ differs from G U");
  if (report.ok()) {
    expect_equal(report, tags::kLiftedStructure, whisker_left(U, lc.lifted.comult), whisker_right(lc.g.comult, U));
    expect_equal(report, tags::kLiftedStructure, whisker_left(U, lc.lifted.counit), whisker_right(lc.g.counit, U));
  }
  report.merge(check_comonad_laws(lc.lifted));
  return report;
}

Report check_lifting(const CoalgebraLifting& cl) {
  Report report;
  const Functor& U = cl.coem.forgetful();
  const Functor& S = cl.s.functor;
  if (compose(U, cl.lifted.functor) == compose(S, U))
    report.pass(tags::kLiftedSquare);
  else
    report.fail(tags::kLiftedSquare, "U Ŝ differs from S U");
  if (report.ok()) {
    expect_equal(report, tags::kLiftedStructure, whisker_left(U, cl.lifted.mult), whisker_right(cl.s.mult, U));
    expect_equal(report, tags::kLiftedStructure, whisker_left(U, cl.lifted.unit), whisker_right(cl.s.unit, U));
  }
  report.merge(check_monad_laws(cl.lifted));
  return report;
}

MonadObjectInMnd make_monad_object(const DistributiveLaw& dl) {
  MndOneCell cell{dl.s, dl.s, dl.t.functor, dl.phi};
  MndTwoCell mult{compose(cell, cell), cell, dl.t.mult};
  MndTwoCell unit{identity_cell(dl.s), cell, dl.t.unit};
  return {dl.s, dl.t, std::move(cell), std::move(mult), std::move(unit)};
}

Report check_monad_object(const MonadObjectInMnd& mo) {
  Report report = check_cell(mo.cell);
  report.merge(check_cell(mo.mult));
  report.merge(check_cell(mo.unit));
  report.merge(check_monad_laws(mo.t));
  return report;
}

LiftedMonad lift_monad(const DistributiveLaw& dl, const EnumerationOptions& opts) {
  EmAlgebraCategory em = em_category(dl.s, opts);
  const MonadObjectInMnd mo = make_monad_object(dl);
  AdjROneCell cell = psiE_1cell(mo.cell, em, em);
  const Functor& That = cell.upper();
  const AdjRTwoCell mult = psiE_2cell(mo.mult, em, em);
  const AdjRTwoCell unit = psiE_2cell(mo.unit, em, em);
  Monad lifted{em.category(), That, retype(mult.beta, compose(That, That), That),
               retype(unit.beta, id_of(em.category()), That)};
  return {dl.s, dl.t, std::move(em), std::move(cell), std::move(lifted)};
}

DistributiveLaw extract_dist_law(const LiftedMonad& lm) {
  const Functor& U = lm.em.forgetful();
  const Functor& F = lm.em.free();
  const Functor& T = lm.t.functor;
  const Functor& That = lm.lifted.functor;
  const NatTrans& eta = lm.em.adjunction().unit;
  const NatTrans& eps = lm.em.adjunction().counit;
  // U F T η : UFT → UFTUF, then U ε T̂ F : UFUT̂F → UT̂F
  const NatTrans first = whisker_left(U, whisker_left(F, whisker_left(T, eta)));
  const NatTrans then = whisker_left(U, whisker_right(whisker_right(eps, That), F));
  const Functor& S = lm.s.functor;
  return {lm.s, lm.t, retype(vcomp(then, first), compose(S, T), compose(T, S))};
}

KleisliExtension extend_monad(const DistributiveLaw& dl) {
  KleisliCategory kl = kleisli_category(dl.t);
  const MndBulletOneCell cell{dl.t, dl.t, dl.s.functor, dl.phi};
  const MndBulletTwoCell mult{compose(cell, cell), cell, dl.s.mult};
  const MndBulletTwoCell unit{identity_bullet_cell(dl.t), cell, dl.s.unit};
  AdjLOneCell adj_cell = psiK_1cell(cell, kl, kl);
  const Functor& Stilde = adj_cell.upper();
  const AdjLTwoCell mu = psiK_2cell(mult, kl, kl);
  const AdjLTwoCell eta = psiK_2cell(unit, kl, kl);
  Monad extended{kl.category(), Stilde, retype(mu.beta, compose(Stilde, Stilde), Stilde),
                 retype(eta.beta, id_of(kl.category()), Stilde)};
  return {dl.s, dl.t, std::move(kl), std::move(adj_cell), std::move(extended)};
}

DistributiveLaw extract_from_extension(const KleisliExtension& ke) {
  const NatTrans rho = mate_left(ke.cell.square);
  const NatTrans phi = whisker_right(rho, ke.kleisli.free());
  const Functor& S = ke.s.functor;
  const Functor& T = ke.t.functor;
  return {ke.s, ke.t, retype(phi, compose(S, T), compose(T, S))};
}

bool check_joint_compatibility(const LiftedMonad& lm, const KleisliExtension& ke) {
  require_same(lm.s == ke.s && lm.t == ke.t, "lifting and extension are over different monads");
  return extract_dist_law(lm).phi == extract_from_extension(ke).phi;
}

LiftedComonad lift_comonad(const MixedDistributiveLaw& ml, const EnumerationOptions& opts) {
  EmAlgebraCategory em = em_category(ml.s, opts);
  const MndOneCell cell{ml.s, ml.s, ml.g.functor, ml.psi};
  const MndTwoCell comult{cell, compose(cell, cell), ml.g.comult};
  const MndTwoCell counit{cell, identity_cell(ml.s), ml.g.counit};
  AdjROneCell adj_cell = psiE_1cell(cell, em, em);
  const Functor& Ghat = adj_cell.upper();
  const AdjRTwoCell delta = psiE_2cell(comult, em, em);
  const AdjRTwoCell eps = psiE_2cell(counit, em, em);
  Comonad lifted{em.category(), Ghat, retype(delta.beta, Ghat, compose(Ghat, Ghat)),
                 retype(eps.beta, Ghat, id_of(em.category()))};
  return {ml.s, ml.g, std::move(em), std::move(adj_cell), std::move(lifted)};
}

MixedDistributiveLaw extract_mixed_law(const LiftedComonad& lc) {
  const MndOneCell cell = phiE_1cell(lc.cell);
  const Functor& S = lc.s.functor;
  const Functor& G = lc.g.functor;
  return {lc.s, lc.g, retype(cell.phi, compose(S, G), compose(G, S))};
}

CoalgebraLifting colift_monad(const MixedDistributiveLaw& ml, const EnumerationOptions& opts) {
  EmCoalgebraCategory coem = em_coalgebra_category(ml.g, opts);
  const CoMndOneCell cell{ml.g, ml.g, ml.s.functor, ml.psi};
  const CoMndTwoCell mult{compose(cell, cell), cell, ml.s.mult};
  const CoMndTwoCell unit{identity_cell(ml.g), cell, ml.s.unit};
  AdjLOneCell adj_cell = vecPsiE_1cell(cell, coem, coem);
  const Functor& Shat = adj_cell.lower();
  const AdjLTwoCell mu = vecPsiE_2cell(mult, coem, coem);
  const AdjLTwoCell eta = vecPsiE_2cell(unit, coem, coem);
  Monad lifted{coem.category(), Shat, retype(mu.alpha, compose(Shat, Shat), Shat),
               retype(eta.alpha, id_of(coem.category()), Shat)};
  return {ml.s, ml.g, std::move(coem), std::move(adj_cell), std::move(lifted)};
}

MixedDistributiveLaw extract_mixed_law(const CoalgebraLifting& cl) {
  const CoMndOneCell cell = vecPhiE_1cell(cl.cell);
  const Functor& S = cl.s.functor;
  const Functor& G = cl.g.functor;
  return {cl.s, cl.g, retype(cell.pi, compose(S, G), compose(G, S))};
}

bool check_mixed_compatibility(const LiftedComonad& lc, const CoalgebraLifting& cl) {
  require_same(lc.s == cl.s && lc.g == cl.g, "liftings are over different structures");
  return extract_mixed_law(lc).psi == extract_mixed_law(cl).psi;
}

// ---------------------------------------------------------------------------
// Oracles

std::vector<LiftedMonad> enumerate_liftings(const Monad& s, const Monad& t, const EnumerationOptions& opts) {
  const EmAlgebraCategory em = em_category(s, opts);
  const auto& cat = em.cat();
  const Functor& U = em.forgetful();
  const auto functors = enumerate_functors(em.category(), em.category(), over_constraints(cat, U, t.functor), opts,
                                           "lifting enumeration");
  auto found = parallel_map(functors.size(), opts.jobs, [&](std::size_t i) -> std::optional<LiftedMonad> {
    const Functor& K = functors[i];
    std::vector<Mor> mu(cat.object_count()), eta(cat.object_count());
    for (Obj a : cat.objects()) {
      auto m = em.find_morphism(K(K(a)), K(a), t.mult[U(a)]);
      auto e = em.find_morphism(a, K(a), t.unit[U(a)]);
      if (!m || !e) return std::nullopt;
      mu[ix(a)] = *m;
      eta[ix(a)] = *e;
    }
    Monad lifted{em.category(), K, NatTrans(compose(K, K), K, mu), NatTrans(id_of(em.category()), K, eta)};
    if (!check_monad_laws(lifted).ok()) return std::nullopt;
    AdjROneCell cell = make_adj_r_cell(em.adjunction(), em.adjunction(), t.functor, K);
    return LiftedMonad{s, t, em, std::move(cell), std::move(lifted)};
  });
  std::vector<LiftedMonad> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

std::vector<KleisliExtension> enumerate_extensions(const Monad& s, const Monad& t, const EnumerationOptions& opts) {
  const KleisliCategory kl = kleisli_category(t);
  const auto& cat = kl.cat();
  const auto& base = *t.base;
  const Functor& D = kl.free();
  FunctorConstraints fc;
  fc.objects.resize(cat.object_count());
  fc.morphisms.resize(cat.morphism_count());
  for (Obj x : cat.objects()) fc.objects[ix(x)] = std::vector<Obj>{s.functor(x)};
  for (Mor f : base.morphisms()) {
    auto& slot = fc.morphisms[ix(D(f))];
    const Mor required = D(s.functor(f));
    if (!slot)
      slot = std::vector<Mor>{required};
    else if (slot->empty() || slot->front() != required)
      slot = std::vector<Mor>{};
  }
  const auto functors = enumerate_functors(kl.category(), kl.category(), fc, opts, "extension enumeration");
  auto found = parallel_map(functors.size(), opts.jobs, [&](std::size_t i) -> std::optional<KleisliExtension> {
    const Functor& K = functors[i];
    std::vector<Mor> mu(cat.object_count()), eta(cat.object_count());
    for (Obj x : cat.objects()) {
      mu[ix(x)] = D(s.mult[x]);
      eta[ix(x)] = D(s.unit[x]);
    }
    Monad extended{kl.category(), K, NatTrans(compose(K, K), K, mu), NatTrans(id_of(kl.category()), K, eta)};
    if (!check_monad_laws(extended).ok()) return std::nullopt;
    AdjLOneCell cell = make_adj_l_cell(kl.adjunction(), kl.adjunction(), s.functor, K);
    return KleisliExtension{s, t, kl, std::move(cell), std::move(extended)};
  });
  std::vector<KleisliExtension> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

std::vector<LiftedComonad> enumerate_comonad_liftings(const Monad& s, const Comonad& g,
                                                      const EnumerationOptions& opts) {
  const EmAlgebraCategory em = em_category(s, opts);
  const auto& cat = em.cat();
  const Functor& U = em.forgetful();
  const auto functors = enumerate_functors(em.category(), em.category(), over_constraints(cat, U, g.functor), opts,
                                           "comonad lifting enumeration");
  auto found = parallel_map(functors.size(), opts.jobs, [&](std::size_t i) -> std::optional<LiftedComonad> {
    const Functor& K = functors[i];
    std::vector<Mor> delta(cat.object_count()), eps(cat.object_count());
    for (Obj a : cat.objects()) {
      auto d = em.find_morphism(K(a), K(K(a)), g.comult[U(a)]);
      auto e = em.find_morphism(K(a), a, g.counit[U(a)]);
      if (!d || !e) return std::nullopt;
      delta[ix(a)] = *d;
      eps[ix(a)] = *e;
    }
    Comonad lifted{em.category(), K, NatTrans(K, compose(K, K), delta), NatTrans(K, id_of(em.category()), eps)};
    if (!check_comonad_laws(lifted).ok()) return std::nullopt;
    AdjROneCell cell = make_adj_r_cell(em.adjunction(), em.adjunction(), g.functor, K);
    return LiftedComonad{s, g, em, std::move(cell), std::move(lifted)};
  });
  std::vector<LiftedComonad> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

std::vector<CoalgebraLifting> enumerate_coalgebra_liftings(const Monad& s, const Comonad& g,
                                                           const EnumerationOptions& opts) {
  const EmCoalgebraCategory coem = em_coalgebra_category(g, opts);
  const auto& cat = coem.cat();
  const Functor& U = coem.forgetful();
  const auto functors = enumerate_functors(coem.category(), coem.category(), over_constraints(cat, U, s.functor),
                                           opts, "coalgebra lifting enumeration");
  auto found = parallel_map(functors.size(), opts.jobs, [&](std::size_t i) -> std::optional<CoalgebraLifting> {
    const Functor& K = functors[i];
    std::vector<Mor> mu(cat.object_count()), eta(cat.object_count());
    for (Obj a : cat.objects()) {
      auto m = coem.find_morphism(K(K(a)), K(a), s.mult[U(a)]);
      auto e = coem.find_morphism(a, K(a), s.unit[U(a)]);
      if (!m || !e) return std::nullopt;
      mu[ix(a)] = *m;
      eta[ix(a)] = *e;
    }
    Monad lifted{coem.category(), K, NatTrans(compose(K, K), K, mu), NatTrans(id_of(coem.category()), K, eta)};
    if (!check_monad_laws(lifted).ok()) return std::nullopt;
    AdjLOneCell cell = make_adj_l_cell(coem.adjunction(), coem.adjunction(), K, s.functor);
    return CoalgebraLifting{s, g, coem, std::move(cell), std::move(lifted)};
  });
  std::vector<CoalgebraLifting> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

// ---------------------------------------------------------------------------
// Hom-categories

std::vector<MndOneCell> enumerate_mnd_endo_cells(const Monad& s, const EnumerationOptions& opts) {
  const auto functors = enumerate_endofunctors(s.base, opts);
  const Functor& S = s.functor;
  std::uint64_t estimate = 0;
  for (const auto& p : functors)
    estimate = sat_add(estimate, candidate_count(component_choices(compose(S, p), compose(p, S))));
  if (estimate > opts.cap) throw CapExceeded("Mnd 1-cell enumeration", estimate, opts.cap);
  auto per_functor = parallel_map(functors.size(), opts.jobs, [&](std::size_t i) {
    const Functor& P = functors[i];
    std::vector<MndOneCell> cells;
    for (auto& phi : enumerate_nat_trans(compose(S, P), compose(P, S))) {
      MndOneCell c{s, s, P, std::move(phi)};
      if (check_cell(c).ok()) cells.push_back(std::move(c));
    }
    return cells;
  });
  std::vector<MndOneCell> out;
  for (auto& part : per_functor)
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

std::vector<MndTwoCell> enumerate_mnd_two_cells(const MndOneCell& p, const MndOneCell& q) {
  std::vector<MndTwoCell> out;
  for (auto& theta : enumerate_nat_trans(p.functor, q.functor)) {
    MndTwoCell c{p, q, std::move(theta)};
    if (check_cell(c).ok()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<AdjROneCell> enumerate_adj_r_endo_cells(const EmAlgebraCategory& em, const EnumerationOptions& opts) {
  const auto lowers = enumerate_endofunctors(em.monad().base, opts);
  auto per_lower = parallel_map(lowers.size(), opts.jobs, [&](std::size_t i) {
    const Functor& J = lowers[i];
    std::vector<AdjROneCell> cells;
    const auto uppers = enumerate_functors(em.category(), em.category(),
                                           over_constraints(em.cat(), em.forgetful(), J), opts,
                                           "Adj_R 1-cell enumeration");
    for (const auto& K : uppers) cells.push_back(make_adj_r_cell(em.adjunction(), em.adjunction(), J, K));
    return cells;
  });
  std::vector<AdjROneCell> out;
  for (auto& part : per_lower)
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

std::vector<AdjRCandidate> enumerate_adj_r_candidates(const AdjROneCell& from, const AdjROneCell& to,
                                                      const EnumerationOptions& opts) {
  const auto alphas = enumerate_nat_trans(from.lower(), to.lower());
  const auto betas = enumerate_nat_trans(from.upper(), to.upper());
  const std::uint64_t estimate = sat_mul(alphas.size(), betas.size());
  if (estimate > opts.cap) throw CapExceeded("Adj_R 2-cell enumeration", estimate, opts.cap);
  std::vector<AdjRCandidate> out;
  for (const auto& a : alphas)
    for (const auto& b : betas) {
      AdjRTwoCell cell{from, to, a, b};
      const Report r = check_cell(cell);
      const Finding* mate = r.find(tags::kAdjTwoCellMate);
      const Finding* adjoint = r.find(tags::kAdjTwoCellWhisker);
      out.push_back({std::move(cell), mate && mate->passed, adjoint && adjoint->passed});
    }
  return out;
}

Report hom_iso_roundtrip(const Monad& s, const EnumerationOptions& opts, HomCategorySizes* sizes) {
  const EmAlgebraCategory em = em_category(s, opts);
  const auto mnd_cells = enumerate_mnd_endo_cells(s, opts);
  const auto adj_cells = enumerate_adj_r_endo_cells(em, opts);
  HomCategorySizes n;
  n.mnd_one_cells = mnd_cells.size();
  n.adj_one_cells = adj_cells.size();

  Tally tally;
  tally.record(tags::kCountEquality, mnd_cells.size() == adj_cells.size(), [&] {
    return "1-cells: " + std::to_string(mnd_cells.size()) + " vs " + std::to_string(adj_cells.size());
  });

  // Ψ_E on every Mnd 1-cell, reused below.
  std::vector<AdjROneCell> lifted;
  lifted.reserve(mnd_cells.size());
  for (const auto& c : mnd_cells) lifted.push_back(psiE_1cell(c, em, em));
  for (std::size_t i = 0; i < mnd_cells.size(); ++i)
    tally.record(tags::kHomIso, phiE_1cell(lifted[i]) == mnd_cells[i],
                 [&] { return "Φ_E Ψ_E differs on Mnd 1-cell #" + std::to_string(i); });
  for (std::size_t i = 0; i < adj_cells.size(); ++i)
    tally.record(tags::kHomIso, psiE_1cell(phiE_1cell(adj_cells[i]), em, em) == adj_cells[i],
                 [&] { return "Ψ_E Φ_E differs on Adj_R 1-cell #" + std::to_string(i); });

  // Identities and composition of 1-cells.
  const MndOneCell id_mnd = identity_cell(s);
  const AdjROneCell id_adj = identity_adj_r_cell(em.adjunction());
  tally.record(tags::kHomIsoFunctorial, psiE_1cell(id_mnd, em, em) == id_adj,
               [] { return std::string("Ψ_E does not preserve the identity 1-cell"); });
  tally.record(tags::kHomIsoFunctorial, phiE_1cell(id_adj) == id_mnd,
               [] { return std::string("Φ_E does not preserve the identity 1-cell"); });
  for (std::size_t i = 0; i < mnd_cells.size(); ++i)
    for (std::size_t j = 0; j < mnd_cells.size(); ++j) {
      const MndOneCell qp = compose(mnd_cells[j], mnd_cells[i]);
      const AdjROneCell lifted_qp = compose(lifted[j], lifted[i]);
      tally.record(tags::kHomIsoFunctorial, psiE_1cell(qp, em, em) == lifted_qp, [&] {
        return "Ψ_E does not preserve the composite of #" + std::to_string(j) + " after #" + std::to_string(i);
      });
      tally.record(tags::kHomIsoFunctorial, phiE_1cell(lifted_qp) == qp, [&] {
        return "Φ_E does not preserve the composite of #" + std::to_string(j) + " after #" + std::to_string(i);
      });
    }

  // 2-cells between every ordered pair of 1-cells.
  const std::size_t m = mnd_cells.size();
  std::vector<std::vector<MndTwoCell>> two(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto& thetas = two[i * m + j];
      thetas = enumerate_mnd_two_cells(mnd_cells[i], mnd_cells[j]);
      const auto candidates = enumerate_adj_r_candidates(lifted[i], lifted[j], opts);
      std::size_t adj_two = 0;
      for (const auto& cand : candidates) {
        tally.record(tags::kAdjTwoCellEquivalence, cand.mate_condition == cand.adjoint_condition,
                     [&] { return "conditions disagree between 1-cells #" + std::to_string(i) + " and #" +
                                  std::to_string(j); });
        if (!(cand.mate_condition && cand.adjoint_condition)) continue;
        ++adj_two;
        tally.record(tags::kHomIso, psiE_2cell(phiE_2cell(cand.cell), em, em) == cand.cell,
                     [&] { return "Ψ_E Φ_E differs on an Adj_R 2-cell from #" + std::to_string(i); });
      }
      n.adj_candidate_pairs += candidates.size();
      n.adj_two_cells += adj_two;
      n.mnd_two_cells += thetas.size();
      tally.record(tags::kCountEquality, thetas.size() == adj_two, [&] {
        return "2-cells #" + std::to_string(i) + "→#" + std::to_string(j) + ": " + std::to_string(thetas.size()) +
               " vs " + std::to_string(adj_two);
      });
      for (const auto& theta : thetas)
        tally.record(tags::kHomIso, phiE_2cell(psiE_2cell(theta, em, em)) == theta,
                     [&] { return "Φ_E Ψ_E differs on an Mnd 2-cell from #" + std::to_string(i); });
    }

  // Identities and vertical composition of 2-cells.
  for (std::size_t i = 0; i < m; ++i) {
    tally.record(tags::kHomIsoFunctorial,
                 psiE_2cell(identity_two_cell(mnd_cells[i]), em, em) == identity_two_cell(lifted[i]),
                 [&] { return "Ψ_E does not preserve the identity 2-cell on #" + std::to_string(i); });
    tally.record(tags::kHomIsoFunctorial, phiE_2cell(identity_two_cell(lifted[i])) == identity_two_cell(mnd_cells[i]),
                 [&] { return "Φ_E does not preserve the identity 2-cell on #" + std::to_string(i); });
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (const auto& a : two[i * m + j])
          for (const auto& b : two[j * m + k]) {
            const AdjRTwoCell la = psiE_2cell(a, em, em);
            const AdjRTwoCell lb = psiE_2cell(b, em, em);
            tally.record(tags::kHomIsoFunctorial, psiE_2cell(vcomp(b, a), em, em) == vcomp(lb, la), [&] {
              return "Ψ_E does not preserve a vertical composite through #" + std::to_string(j);
            });
            tally.record(tags::kHomIsoFunctorial, phiE_2cell(vcomp(lb, la)) == vcomp(b, a), [&] {
              return "Φ_E does not preserve a vertical composite through #" + std::to_string(j);
            });
          }

  if (sizes) *sizes = n;
  return tally.report();
}

}  // namespace catlaw
