#include "catlaw/adjunction.hpp"

#include "catlaw/errors.hpp"

namespace catlaw {

bool operator==(const Adjunction& a, const Adjunction& b) {
  return a.left == b.left && a.right == b.right && a.unit == b.unit && a.counit == b.counit;
}

Report check_triangle_identities(const Adjunction& a) {
  Report report;
  const auto& c = *a.lower();
  const auto& x = *a.upper();
  const auto& L = a.left;
  const auto& R = a.right;
  for (Obj o : c.objects()) {
    const Mor lhs = x.compose(a.counit[L(o)], L(a.unit[o]));
    if (lhs != x.identity(L(o))) {
      report.fail(tags::kTriangleL, "at " + c.id(o) + ": " + x.id(lhs) + " vs " + x.id(x.identity(L(o))));
      break;
    }
  }
  if (!report.failed(tags::kTriangleL)) report.pass(tags::kTriangleL);
  for (Obj o : x.objects()) {
    const Mor lhs = c.compose(R(a.counit[o]), a.unit[R(o)]);
    if (lhs != c.identity(R(o))) {
      report.fail(tags::kTriangleR, "at " + x.id(o) + ": " + c.id(lhs) + " vs " + c.id(c.identity(R(o))));
      break;
    }
  }
  if (!report.failed(tags::kTriangleR)) report.pass(tags::kTriangleR);
  return report;
}

Adjunction make_adjunction(Functor left, Functor right, NatTrans unit, NatTrans counit) {
  if (!same_category(left.source_ptr(), right.target_ptr()) ||
      !same_category(left.target_ptr(), right.source_ptr()))
    throw Error(ErrorKind::TypeMismatch, "TypeMismatch", "adjoint functors are not opposed");
  const Functor id_c = Functor::identity(left.source_ptr());
  const Functor id_x = Functor::identity(left.target_ptr());
  if (!(unit.source() == id_c) || !(unit.target() == compose(right, left)))
    throw typing_error("UnitMistyped", "unit must be Id → R∘L");
  if (!(counit.source() == compose(left, right)) || !(counit.target() == id_x))
    throw typing_error("CounitMistyped", "counit must be L∘R → Id");
  Adjunction a{std::move(left), std::move(right), std::move(unit), std::move(counit)};
  for (const auto* r : {&a.unit, &a.counit}) {
    const Report nat = check_naturality(*r);
    if (!nat.ok()) throw typing_error("NotNatural", nat.failures().front().witness);
  }
  const Report tri = check_triangle_identities(a);
  if (!tri.ok()) throw typing_error("TriangleIdentityViolation", tri.failures().front().witness);
  return a;
}

Adjunction identity_adjunction(const CategoryPtr& c) {
  const Functor id = Functor::identity(c);
  return make_adjunction(id, id, NatTrans::identity(id), NatTrans::identity(id));
}

Monad induced_monad(const Adjunction& a) {
  const Functor RL = compose(a.right, a.left);
  NatTrans mult = whisker_right(whisker_left(a.right, a.counit), a.left);
  return Monad{a.lower(), RL, std::move(mult), a.unit};
}

Comonad induced_comonad(const Adjunction& a) {
  const Functor LR = compose(a.left, a.right);
  NatTrans comult = whisker_right(whisker_left(a.left, a.unit), a.right);
  return Comonad{a.upper(), LR, std::move(comult), a.counit};
}

Report check_square(const CommutingSquareR& sq) {
  Report report;
  const Functor lhs = compose(sq.cod.right, sq.upper);
  const Functor rhs = compose(sq.lower, sq.dom.right);
  if (lhs == rhs) {
    report.pass(tags::kSquareR);
  } else {
    report.fail(tags::kSquareR, "R̄∘K differs from J∘R");
  }
  return report;
}

Report check_square(const CommutingSquareL& sq) {
  Report report;
  const Functor lhs = compose(sq.upper, sq.dom.left);
  const Functor rhs = compose(sq.cod.left, sq.lower);
  if (lhs == rhs) {
    report.pass(tags::kSquareL);
  } else {
    report.fail(tags::kSquareL, "K∘L differs from L̄∘J");
  }
  return report;
}

CommutingSquareR make_square_r(Adjunction dom, Adjunction cod, Functor lower, Functor upper) {
  if (!same_category(lower.source_ptr(), dom.lower()) || !same_category(lower.target_ptr(), cod.lower()) ||
      !same_category(upper.source_ptr(), dom.upper()) || !same_category(upper.target_ptr(), cod.upper()))
    throw Error(ErrorKind::TypeMismatch, "TypeMismatch", "square functors do not connect the adjunctions");
  CommutingSquareR sq{std::move(dom), std::move(cod), std::move(lower), std::move(upper)};
  if (!check_square(sq).ok()) throw typing_error("SquareDoesNotCommute", "R̄∘K ≠ J∘R");
  return sq;
}

CommutingSquareL make_square_l(Adjunction dom, Adjunction cod, Functor lower, Functor upper) {
  if (!same_category(lower.source_ptr(), dom.lower()) || !same_category(lower.target_ptr(), cod.lower()) ||
      !same_category(upper.source_ptr(), dom.upper()) || !same_category(upper.target_ptr(), cod.upper()))
    throw Error(ErrorKind::TypeMismatch, "TypeMismatch", "square functors do not connect the adjunctions");
  CommutingSquareL sq{std::move(dom), std::move(cod), std::move(lower), std::move(upper)};
  if (!check_square(sq).ok()) throw typing_error("SquareDoesNotCommute", "K∘L ≠ L̄∘J");
  return sq;
}

NatTrans mate_right(const CommutingSquareR& sq) {
  const auto& L = sq.dom.left;
  const auto& Lbar = sq.cod.left;
  const auto& J = sq.lower;
  const auto& K = sq.upper;
  const NatTrans first = whisker_left(compose(Lbar, J), sq.dom.unit);        // L̄J → L̄JRL
  const NatTrans second = whisker_right(sq.cod.counit, compose(K, L));      // L̄R̄KL → KL
  return vcomp(second, first);
}

NatTrans mate_left(const CommutingSquareL& sq) {
  const auto& R = sq.dom.right;
  const auto& Rbar = sq.cod.right;
  const auto& J = sq.lower;
  const auto& K = sq.upper;
  const NatTrans first = whisker_right(sq.cod.unit, compose(J, R));         // JR → R̄L̄JR
  const NatTrans second = whisker_left(compose(Rbar, K), sq.dom.counit);    // R̄KLR → R̄K
  return vcomp(second, first);
}

NatTrans transpose_mate_right(const CommutingSquareR& sq, const NatTrans& lambda) {
  const auto& R = sq.dom.right;
  const auto& Rbar = sq.cod.right;
  const NatTrans a = whisker_right(sq.cod.unit, compose(sq.lower, R));          // JR → R̄L̄JR
  const NatTrans b = whisker_right(whisker_left(Rbar, lambda), R);              // R̄L̄JR → R̄KLR
  const NatTrans c = whisker_left(compose(Rbar, sq.upper), sq.dom.counit);      // R̄KLR → R̄K
  return vcomp(c, vcomp(b, a));
}

NatTrans transpose_mate_left(const CommutingSquareL& sq, const NatTrans& rho) {
  const auto& L = sq.dom.left;
  const auto& Lbar = sq.cod.left;
  const NatTrans a = whisker_left(compose(Lbar, sq.lower), sq.dom.unit);        // L̄J → L̄JRL
  const NatTrans b = whisker_right(whisker_left(Lbar, rho), L);                 // L̄JRL → L̄R̄KL
  const NatTrans c = whisker_right(sq.cod.counit, compose(sq.upper, L));        // L̄R̄KL → KL
  return vcomp(c, vcomp(b, a));
}

}  // namespace catlaw
