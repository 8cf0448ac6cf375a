"""Spectrum gradings of finite-dimensional Rota-Baxter algebras.

For an operator R on a finite-dimensional algebra with split spectrum,
A decomposes as the direct sum of generalized eigenspaces A_lam.  For
nonzero eigenvalues lam, mu the product A_lam * A_mu is constrained by
the partial products

    lam o mu = lam*mu / (lam + mu + 1)    (weight 1)
    lam * mu = lam*mu / (lam + mu)        (weight 0)

to vanish (when the partial product is undefined or falls outside the
spectrum) or to land inside A_{lam o mu} / A_{lam * mu}.  This module
computes the decomposition by exact linear algebra, classifies every
product pair, and reports violations with witnesses.

Both partially defined operations are commutative and associative where
defined; on positive rationals they are honest semigroups, isomorphic
to multiplication on (1, oo) via x -> 1 + 1/x and to addition on
(0, oo) via x -> 1/x respectively; ``semigroup_iso_check`` verifies
those isomorphisms exactly on sample points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import (
    CharacteristicObstruction,
    NonSplitSpectrum,
    SearchBudgetExceeded,
    ZeroArgument,
)
from .fields import FieldElement, FieldKind, prime_field
from .operators import LinearOperator, MonomialOperatorTable
from .poly import AlgebraSpec, Polynomial

_EIGEN_ENUM_CAP = 65536


class PartialProductKind(Enum):
    CIRC = "circ"  # weight-1 composition law
    STAR = "star"  # weight-0 composition law


def partial_product(
    kind: PartialProductKind, lam: FieldElement, mu: FieldElement
) -> Optional[FieldElement]:
    """lam o mu or lam * mu; None when the denominator vanishes."""
    if lam.is_zero() or mu.is_zero():
        raise ZeroArgument("partial products take nonzero arguments")
    if kind is PartialProductKind.CIRC:
        denom = lam + mu + 1
    else:
        denom = lam + mu
    if denom.is_zero():
        return None
    return lam * mu / denom


@dataclass(frozen=True)
class IsoCounterexample:
    kind: PartialProductKind
    values: Tuple[Fraction, ...]
    lhs: Fraction
    rhs: Fraction


def semigroup_iso_check(
    kind: PartialProductKind, sample: Sequence[Fraction]
) -> Optional[IsoCounterexample]:
    """Verify the defining isomorphism and associativity on sample points.

    Weight one: phi(x) = 1 + 1/x turns o into multiplication.
    Weight zero: phi(x) = 1/x turns * into addition.
    Returns None on success, else the first counterexample found.
    """
    values = [Fraction(v) for v in sample]
    if any(v <= 0 for v in values):
        raise ValueError("sample values must be positive")

    def prod(x: Fraction, y: Fraction) -> Optional[Fraction]:
        denom = x + y + 1 if kind is PartialProductKind.CIRC else x + y
        if denom == 0:
            return None
        return x * y / denom

    def phi(x: Fraction) -> Fraction:
        return 1 + Fraction(1, 1) / x if kind is PartialProductKind.CIRC else 1 / x

    for x, y in itertools.product(values, repeat=2):
        combined = prod(x, y)
        if combined is None:
            continue
        lhs = phi(combined)
        rhs = phi(x) * phi(y) if kind is PartialProductKind.CIRC else phi(x) + phi(y)
        if lhs != rhs:
            return IsoCounterexample(kind, (x, y), lhs, rhs)
    for x, y, z in itertools.product(values, repeat=3):
        xy = prod(x, y)
        yz = prod(y, z)
        if xy is None or yz is None:
            continue
        left = prod(xy, z)
        right = prod(x, yz)
        if left is None or right is None:
            continue
        if left != right:
            return IsoCounterexample(kind, (x, y, z), left, right)
    return None


class ProductStatus(Enum):
    ZERO = "zero"
    CONTAINED = "contained"
    VIOLATION = "violation"


@dataclass(frozen=True)
class ProductCheck:
    left: FieldElement
    right: FieldElement
    status: ProductStatus
    product_eigenvalue: Optional[FieldElement] = None
    witness: Optional[Tuple[Polynomial, Polynomial, Polynomial]] = None

    def to_json_dict(self) -> dict:
        out = {
            "left": self.left.short_str(),
            "right": self.right.short_str(),
            "status": self.status.value,
            "product": None
            if self.product_eigenvalue is None
            else self.product_eigenvalue.short_str(),
        }
        if self.witness is not None:
            u, v, w = self.witness
            out["witness"] = {
                "u": u.to_json_terms(),
                "v": v.to_json_terms(),
                "uv": w.to_json_terms(),
            }
        return out


@dataclass
class GradingDecomposition:
    spectrum: List[FieldElement]
    spaces: Dict[FieldElement, List[Polynomial]]
    products: List[ProductCheck] = dataclass_field(default_factory=list)

    def violations(self) -> List[ProductCheck]:
        return [p for p in self.products if p.status is ProductStatus.VIOLATION]

    def dimension(self) -> int:
        return sum(len(basis) for basis in self.spaces.values())

    def to_json_dict(self) -> dict:
        return {
            "spectrum": [lam.short_str() for lam in self.spectrum],
            "spaces": [
                {
                    "eigenvalue": lam.short_str(),
                    "basis": [p.to_json_terms() for p in self.spaces[lam]],
                }
                for lam in self.spectrum
            ],
            "products": [p.to_json_dict() for p in self.products],
            "violations": len(self.violations()),
        }


def _diagonal_decomposition(R: MonomialOperatorTable):
    algebra = R.algebra
    spaces: Dict[FieldElement, List[Polynomial]] = {}
    for m in algebra.basis(algebra.truncation):
        hit = R.entries.get(m)
        lam = algebra.field.zero() if hit is None else hit[0]
        spaces.setdefault(lam, []).append(Polynomial.monomial(algebra, m))
    spectrum = sorted(spaces, key=lambda e: e.sort_key())
    return spectrum, spaces


def _matrix_decomposition(R: LinearOperator):
    algebra = R.algebra
    spec = algebra.field
    basis = list(algebra.basis(algebra.truncation))
    n = len(basis)
    mat = R.as_matrix(basis)
    if spec.kind is FieldKind.PRIME:
        if spec.p > _EIGEN_ENUM_CAP:
            raise SearchBudgetExceeded(
                f"eigenvalue enumeration over GF({spec.p}) is beyond desk scale"
            )
        candidates = [
            spec.from_int(v)
            for v in range(spec.p)
            if linalg.det(linalg.mat_sub_scalar_identity(mat, spec.from_int(v)), spec).is_zero()
        ]
    else:
        candidates = linalg.rational_roots(linalg.char_poly(mat, spec))
    spaces: Dict[FieldElement, List[Polynomial]] = {}
    covered = 0
    for lam in candidates:
        shifted = linalg.mat_sub_scalar_identity(mat, lam)
        power = linalg.mat_pow(shifted, n, spec)
        vectors = linalg.kernel_basis(power, spec)
        if not vectors:
            continue
        polys = [
            Polynomial(algebra, {m: c for m, c in zip(basis, vec) if not c.is_zero()})
            for vec in vectors
        ]
        spaces[lam] = polys
        covered += len(vectors)
    if covered != n:
        raise NonSplitSpectrum(
            f"generalized eigenspaces cover {covered} of {n} dimensions"
        )
    spectrum = sorted(spaces, key=lambda e: e.sort_key())
    return spectrum, spaces


def grading_decompose(R: LinearOperator, weight: FieldElement) -> GradingDecomposition:
    """Generalized eigenspace decomposition plus product classification.

    The algebra must be truncated (finite-dimensional).  ``weight``
    selects the composition law: weight one uses o, weight zero uses *.
    For each unordered pair of nonzero eigenvalues, products of basis
    elements must vanish when the law is undefined or leaves the
    spectrum, and must land in the indicated eigenspace otherwise.
    """
    algebra = R.algebra
    if algebra.truncation is None:
        raise ValueError("grading needs a finite-dimensional (truncated) algebra")
    if weight.is_one():
        kind = PartialProductKind.CIRC
    elif weight.is_zero():
        kind = PartialProductKind.STAR
    else:
        raise ValueError("grade at weight 0 or 1 (rescale other weights first)")

    if isinstance(R, MonomialOperatorTable) and R.is_diagonal():
        spectrum, spaces = _diagonal_decomposition(R)
    else:
        spectrum, spaces = _matrix_decomposition(R)

    basis_all = list(algebra.basis(algebra.truncation))
    index = {m: i for i, m in enumerate(basis_all)}
    spec = algebra.field

    def coords(p: Polynomial):
        vec = [spec.zero()] * len(basis_all)
        for m, c in p.terms():
            vec[index[m]] = c
        return vec

    products: List[ProductCheck] = []
    nonzero = [lam for lam in spectrum if not lam.is_zero()]
    for i, lam in enumerate(nonzero):
        for mu in nonzero[i:]:
            nu = partial_product(kind, lam, mu)
            forced_zero = nu is None or nu not in spaces
            target_vectors = None
            if not forced_zero:
                target_vectors = [coords(p) for p in spaces[nu]]
            status = ProductStatus.ZERO
            witness = None
            if lam == mu:
                pairs = itertools.combinations_with_replacement(spaces[lam], 2)
            else:
                pairs = itertools.product(spaces[lam], spaces[mu])
            any_contained = False
            for u, v in pairs:
                w = u * v
                if w.is_zero():
                    continue
                if forced_zero:
                    status = ProductStatus.VIOLATION
                    witness = (u, v, w)
                    break
                if linalg.in_span(target_vectors, coords(w), spec):
                    any_contained = True
                else:
                    status = ProductStatus.VIOLATION
                    witness = (u, v, w)
                    break
            if status is not ProductStatus.VIOLATION and any_contained:
                status = ProductStatus.CONTAINED
            products.append(ProductCheck(lam, mu, status, nu, witness))
    return GradingDecomposition(spectrum, spaces, products)


class QuotientFamily(Enum):
    WEIGHT_ONE_ALPHA_ONE = "weight_one_alpha_one"
    WEIGHT_ZERO_RECIPROCAL = "weight_zero_reciprocal"


def quotient_rb_from_family(
    source: QuotientFamily, N: int, p: int
) -> MonomialOperatorTable:
    """Monomial tables on k0[x]/(x^(N+1)) over GF(p).

    WEIGHT_ONE_ALPHA_ONE: R(x^i) = x^i / (2^i - 1), weight 1; requires
    that no 2^i - 1 (2 <= i <= N) is divisible by p.
    WEIGHT_ZERO_RECIPROCAL: R(x^i) = x^i / i, weight 0; requires N < p.
    """
    field = prime_field(p)
    algebra = AlgebraSpec(field, nvars=1, unital=False, truncation=N)
    entries = {}
    for i in range(1, N + 1):
        if source is QuotientFamily.WEIGHT_ONE_ALPHA_ONE:
            raw = 2**i - 1
            if raw % p == 0:
                raise CharacteristicObstruction(
                    f"2^{i} - 1 = {raw} is divisible by {p}", index=i
                )
        else:
            if i % p == 0:
                raise CharacteristicObstruction(f"{i} is divisible by {p}", index=i)
            raw = i
        coeff = field.from_int(raw).inverse()
        mono = algebra.monomial(i)
        entries[mono] = (coeff, mono)
    weight = (
        field.one()
        if source is QuotientFamily.WEIGHT_ONE_ALPHA_ONE
        else field.zero()
    )
    return MonomialOperatorTable(algebra, weight, N, entries)
