"""The Rota-Baxter identity and structural probes built on it.

A linear operator R on a commutative algebra is a Rota-Baxter operator
of weight w when

    R(u) R(v) = R( R(u) v + u R(v) + w u v )

holds for all u, v.  Everything here evaluates that identity exactly:
``rb_residual`` computes the left-minus-right polynomial for one pair
of monomials, ``rb_check`` sweeps all pairs within a degree budget, and
``rb_power_check`` / ``rb_multi_residual`` evaluate the iterated
weight-zero consequences

    (R(u))^k = k R(u (R(u))^{k-1})
    R(u_1)...R(u_k) = R( sum_i R(u_1)...u_i...R(u_k) ).

Kernel/image extraction and the unit-image classification for unital
algebras of nonzero weight round out the structural checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from .errors import NonzeroWeight
from .fields import FieldElement
from .operators import LinearOperator, MonomialOperatorTable
from .poly import Monomial, Polynomial


@dataclass(frozen=True)
class RBViolation:
    """A monomial pair whose Rota-Baxter residual is nonzero."""

    u: Monomial
    v: Monomial
    residual: Polynomial

    def to_json_dict(self) -> dict:
        return {
            "u": list(self.u.exponents),
            "v": list(self.v.exponents),
            "residual": self.residual.to_json_terms(),
        }


@dataclass(frozen=True)
class CheckReport:
    checked_pairs: int
    violation: Optional[RBViolation]

    @property
    def passed(self) -> bool:
        return self.violation is None

    def to_json_dict(self) -> dict:
        out = {
            "status": "pass" if self.passed else "fail",
            "checked_pairs": self.checked_pairs,
        }
        if self.violation is not None:
            out["violation"] = self.violation.to_json_dict()
        return out


def rb_residual(
    R: LinearOperator, u: Monomial, v: Monomial, weight: FieldElement
) -> Polynomial:
    """R(u)R(v) - R(R(u)v + uR(v) + weight*uv), exact."""
    algebra = R.algebra
    pu = Polynomial.monomial(algebra, u)
    pv = Polynomial.monomial(algebra, v)
    Ru = R.apply_monomial(u)
    Rv = R.apply_monomial(v)
    inner = Ru * pv + pu * Rv + (pu * pv).scale(weight)
    return Ru * Rv - R.apply(inner)


def rb_check(R: LinearOperator, weight: FieldElement, degree: int) -> CheckReport:
    """Exhaustive pairwise verification within a degree budget.

    On an untruncated algebra the pairs (u, v) with u <= v and
    deg(u) + deg(v) <= degree are checked; on a truncated algebra all
    basis pairs up to min(degree, truncation) are (the identity is then
    verified in the quotient).  Pairs are visited in canonical order, so
    the reported first violation is deterministic.
    """
    algebra = R.algebra
    truncated = algebra.truncation is not None
    top = min(degree, algebra.truncation) if truncated else degree
    basis = list(algebra.basis(top))
    checked = 0
    for i, u in enumerate(basis):
        for v in basis[i:]:
            if not truncated and u.degree() + v.degree() > top:
                continue
            checked += 1
            residual = rb_residual(R, u, v, weight)
            if not residual.is_zero():
                return CheckReport(checked, RBViolation(u, v, residual))
    return CheckReport(checked, None)


def rb_power_check(R: LinearOperator, w: Monomial, k: int) -> Polynomial:
    """Residual of (R(w))^k - k R(w (R(w))^{k-1}); zero means pass.

    Only meaningful at weight zero, where the identity follows from the
    Rota-Baxter relation; the operator's stored weight is enforced.
    """
    if not R.weight.is_zero():
        raise NonzeroWeight("the iterated power identity needs weight zero")
    if k < 2:
        raise ValueError("need k >= 2")
    algebra = R.algebra
    pw = Polynomial.monomial(algebra, w)
    Rw = R.apply_monomial(w)
    lhs = Rw**k
    rhs = R.apply(pw * Rw ** (k - 1)).scale(algebra.field.from_int(k))
    return lhs - rhs


def rb_multi_residual(R: LinearOperator, monomials: Sequence[Monomial]) -> Polynomial:
    """Residual of the k-ary weight-zero identity on distinct arguments.

    Prod_i R(u_i) minus R of the sum over i of the products with the
    i-th factor left bare.
    """
    if not R.weight.is_zero():
        raise NonzeroWeight("the iterated identity needs weight zero")
    if len(monomials) < 2:
        raise ValueError("need at least two arguments")
    algebra = R.algebra
    images = [R.apply_monomial(m) for m in monomials]
    lhs = images[0]
    for im in images[1:]:
        lhs = lhs * im
    inner = Polynomial.zero(algebra)
    for i, m in enumerate(monomials):
        piece = Polynomial.monomial(algebra, m)
        for j, im in enumerate(images):
            if j != i:
                piece = piece * im
        inner = inner + piece
    return lhs - R.apply(inner)


@dataclass(frozen=True)
class KernelImage:
    """Monomial-kernel part plus collision differences, and distinct targets."""

    kernel: Tuple[Polynomial, ...]
    image: Tuple[Tuple[Monomial, FieldElement], ...]


def op_kernel_image(R: MonomialOperatorTable, degree: Optional[int] = None) -> KernelImage:
    """Kernel and image bases of a monomial table on the bounded basis.

    Monomiality makes this exact linear algebra trivial: zero-image
    monomials span most of the kernel, and each target monomial hit by
    several sources contributes pairwise difference vectors.
    """
    algebra = R.algebra
    top = R.degree_bound if degree is None else min(degree, R.degree_bound)
    kernel: List[Polynomial] = []
    by_target = {}
    for m in algebra.basis(top):
        hit = R.entries.get(m)
        if hit is None:
            kernel.append(Polynomial.monomial(algebra, m))
        else:
            coeff, dst = hit
            by_target.setdefault(dst, []).append((m, coeff))
    image = []
    for dst in sorted(by_target, key=lambda t: t.sort_key()):
        sources = by_target[dst]
        image.append((dst, sources[0][1]))
        for (m1, c1), (m2, c2) in zip(sources, sources[1:]):
            diff = Polynomial(algebra, {m1: c2, m2: -c1})
            kernel.append(diff)
    kernel.sort(key=lambda p: p.terms()[0][0].sort_key())
    return KernelImage(tuple(kernel), tuple(image))


class UnitImageKind(Enum):
    SPLITTING_ZERO = "splitting_zero"
    SPLITTING_MINUS_LAMBDA = "splitting_minus_lambda"
    VIOLATION = "violation"


@dataclass(frozen=True)
class UnitConstraintResult:
    kind: UnitImageKind
    witness: Optional[Polynomial] = None


def check_unit_constraint(
    R: MonomialOperatorTable, weight: FieldElement
) -> UnitConstraintResult:
    """Classify R(1) for a monomial operator of nonzero weight.

    On a unital algebra a Rota-Baxter operator of weight w with scalar
    R(1) must have R(1) in {0, -w}.  A non-scalar R(1) = a*x^k is
    impossible for monomial operators: the pair (1, 1) forces

        2a R(x^k) = R(1)^2 - w R(1) = a^2 x^{2k} - w a x^k,

    a two-term polynomial, contradicting monomiality.  That forced
    right-hand side is returned as the witness.
    """
    algebra = R.algebra
    if not algebra.unital:
        raise ValueError("unit constraint applies to unital algebras")
    if weight.is_zero():
        raise ValueError("unit constraint applies to nonzero weight")
    one_mono = algebra.one_monomial()
    hit = R.entries.get(one_mono)
    if hit is None:
        return UnitConstraintResult(UnitImageKind.SPLITTING_ZERO)
    coeff, dst = hit
    if dst == one_mono:
        if coeff == -weight:
            return UnitConstraintResult(UnitImageKind.SPLITTING_MINUS_LAMBDA)
        # residual of the pair (1, 1): -c(c + w) * 1, nonzero here
        witness = Polynomial.monomial(algebra, one_mono, -coeff * (coeff + weight))
        return UnitConstraintResult(UnitImageKind.VIOLATION, witness)
    witness = Polynomial(
        algebra,
        {dst * dst: coeff * coeff, dst: -(weight * coeff)},
    )
    return UnitConstraintResult(UnitImageKind.VIOLATION, witness)
