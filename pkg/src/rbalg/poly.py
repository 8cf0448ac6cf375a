"""Sparse commutative polynomials over an exact coefficient field.

An :class:`AlgebraSpec` fixes the coefficient field, the number of
variables, whether the algebra is unital, and an optional truncation
bound N (every monomial of total degree above N is identically zero;
that models the quotient by the ideal generated by the degree-(N+1)
monomials).  Non-unital algebras have no constant term anywhere.

Monomials are dense exponent vectors; polynomials are sparse mappings
monomial -> nonzero coefficient, canonical at all times.  The term
order used everywhere is (total degree, lexicographic exponents).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .errors import MixedAlgebras
from .fields import FieldElement, FieldSpec


@dataclass(frozen=True)
class Monomial:
    """A bare exponent vector; algebra constraints are enforced by users."""

    exponents: Tuple[int, ...]

    def degree(self) -> int:
        return sum(self.exponents)

    def is_constant(self) -> bool:
        return self.degree() == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(e * k for e in self.exponents))

    def sort_key(self):
        return (self.degree(), self.exponents)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def to_text(self) -> str:
        factors = [
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
            for i, e in enumerate(self.exponents)
            if e > 0
        ]
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Monomial{self.exponents}"


def _exponent_tuples(total: int, nvars: int) -> Iterator[Tuple[int, ...]]:
    if nvars == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _exponent_tuples(total - first, nvars - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class AlgebraSpec:
    """A free commutative polynomial algebra, possibly non-unital/truncated."""

    field: FieldSpec
    nvars: int = 1
    unital: bool = False
    truncation: Optional[int] = None

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if self.truncation is not None and self.truncation < 1:
            raise ValueError("truncation bound must be >= 1")

    def min_degree(self) -> int:
        return 0 if self.unital else 1

    def monomial(self, *exponents: int) -> Monomial:
        if len(exponents) != self.nvars:
            raise ValueError(
                f"expected {self.nvars} exponents, got {len(exponents)}"
            )
        if any(e < 0 for e in exponents):
            raise ValueError("exponents must be non-negative")
        return Monomial(tuple(exponents))

    def one_monomial(self) -> Monomial:
        if not self.unital:
            raise ValueError("non-unital algebra has no constant monomial")
        return Monomial((0,) * self.nvars)

    def admits(self, m: Monomial) -> bool:
        """True when m is a basis monomial (nonzero in this algebra)."""
        d = m.degree()
        if d < self.min_degree():
            return False
        if self.truncation is not None and d > self.truncation:
            return False
        return True

    def basis(self, max_degree: int) -> Iterator[Monomial]:
        """Basis monomials of degree <= max_degree in canonical order."""
        top = max_degree
        if self.truncation is not None:
            top = min(top, self.truncation)
        for d in range(self.min_degree(), top + 1):
            for exps in sorted(_exponent_tuples(d, self.nvars)):
                yield Monomial(exps)

    def dimension(self) -> int:
        if self.truncation is None:
            raise ValueError("only truncated algebras are finite-dimensional")
        return sum(1 for _ in self.basis(self.truncation))

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.to_string(),
            "nvars": self.nvars,
            "unital": self.unital,
            "truncation": self.truncation,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "AlgebraSpec":
        return AlgebraSpec(
            field=FieldSpec.from_string(data["field"]),
            nvars=int(data["nvars"]),
            unital=bool(data["unital"]),
            truncation=None if data.get("truncation") is None else int(data["truncation"]),
        )


class Polynomial:
    """Immutable sparse polynomial attached to an AlgebraSpec."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: AlgebraSpec, terms: Optional[Dict[Monomial, FieldElement]] = None):
        clean: Dict[Monomial, FieldElement] = {}
        if terms:
            trunc = algebra.truncation
            for mono, coeff in terms.items():
                if coeff.spec != algebra.field:
                    raise MixedAlgebras("coefficient from a different field")
                if coeff.is_zero():
                    continue
                if trunc is not None and mono.degree() > trunc:
                    continue
                if not algebra.unital and mono.is_constant():
                    raise ValueError("non-unital algebra has no constant term")
                if len(mono.exponents) != algebra.nvars:
                    raise ValueError("monomial arity does not match the algebra")
                clean[mono] = clean.get(mono, algebra.field.zero()) + coeff
                if clean[mono].is_zero():
                    del clean[mono]
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(algebra: AlgebraSpec) -> "Polynomial":
        return Polynomial(algebra)

    @staticmethod
    def monomial(algebra: AlgebraSpec, mono: Monomial, coeff: Optional[FieldElement] = None) -> "Polynomial":
        if coeff is None:
            coeff = algebra.field.one()
        return Polynomial(algebra, {mono: coeff})

    @staticmethod
    def one(algebra: AlgebraSpec) -> "Polynomial":
        return Polynomial.monomial(algebra, algebra.one_monomial())

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Terms as (monomial, coefficient), canonically ordered."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def support(self):
        return set(self._terms)

    def coeff(self, mono: Monomial) -> FieldElement:
        return self._terms.get(mono, self.algebra.field.zero())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(m.degree() for m in self._terms)

    def num_terms(self) -> int:
        return len(self._terms)

    # -- arithmetic -----------------------------------------------------------

    def _require_same_algebra(self, other: "Polynomial") -> None:
        if self.algebra != other.algebra:
            raise MixedAlgebras("polynomials belong to different algebras")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_algebra(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = terms.get(mono)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = total
        return Polynomial(self.algebra, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: FieldElement) -> "Polynomial":
        if c.is_zero():
            return Polynomial.zero(self.algebra)
        return Polynomial(self.algebra, {m: c * k for m, k in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.algebra.field.from_int(other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.__rmul__(other)
        self._require_same_algebra(other)
        trunc = self.algebra.truncation
        out: Dict[Monomial, FieldElement] = {}
        for m1, c1 in self._terms.items():
            d1 = m1.degree()
            for m2, c2 in other._terms.items():
                if trunc is not None and d1 + m2.degree() > trunc:
                    continue
                mono = m1 * m2
                piece = c1 * c2
                acc = out.get(mono)
                total = piece if acc is None else acc + piece
                if total.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = total
        return Polynomial(self.algebra, out)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 1:
            raise ValueError("polynomial powers need k >= 1")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self._terms.items())))

    # -- rendering -----------------------------------------------------------

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = [f"{c.short_str()}*{m.to_text()}" for m, c in self.terms()]
        return " + ".join(parts)

    @staticmethod
    def parse_text(algebra: AlgebraSpec, text: str) -> "Polynomial":
        text = text.strip()
        if text == "0":
            return Polynomial.zero(algebra)
        terms: Dict[Monomial, FieldElement] = {}
        for part in text.split(" + "):
            coeff_text, _, mono_text = part.partition("*")
            coeff = algebra.field.parse(coeff_text)
            exps = [0] * algebra.nvars
            if mono_text not in ("", "1"):
                for factor in mono_text.split("*"):
                    name, _, power = factor.partition("^")
                    idx = int(name[1:]) - 1
                    exps[idx] += int(power) if power else 1
            mono = Monomial(tuple(exps))
            acc = terms.get(mono)
            terms[mono] = coeff if acc is None else acc + coeff
        return Polynomial(algebra, terms)

    def to_json_terms(self) -> list:
        return [
            {"exponents": list(m.exponents), "coeff": c.short_str()}
            for m, c in self.terms()
        ]

    @staticmethod
    def from_json_terms(algebra: AlgebraSpec, data: Iterable[dict]) -> "Polynomial":
        terms = {}
        for item in data:
            mono = algebra.monomial(*item["exponents"])
            terms[mono] = algebra.field.parse(item["coeff"])
        return Polynomial(algebra, terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


def linear_combination(
    a: Polynomial, b: Polynomial, c1: FieldElement, c2: FieldElement
) -> Polynomial:
    """c1*a + c2*b, canonical."""
    if a.algebra != b.algebra:
        raise MixedAlgebras("polynomials belong to different algebras")
    return a.scale(c1) + b.scale(c2)
