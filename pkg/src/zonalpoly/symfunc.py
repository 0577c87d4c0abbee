"""Exact homogeneous symmetric polynomials in two bases.

A polynomial is a map from partitions of its degree to rational
coefficients, tagged by basis: ``monomial`` (m_lambda, the sum of all
distinct monomials with exponent multiset lambda) or ``powersum``
(products p_lambda = p_{lambda_1} p_{lambda_2} ... with p_k = sum x_i^k).
All symbolic coefficients are ``fractions.Fraction`` values, so every
identity in this module is exact; floating point enters only through
evaluation at float arguments.

Conversion tables are memoized per degree with ``lru_cache``; concurrent
first access may compute a table twice but always publishes a consistent
value, and polynomials themselves are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterator, Mapping, Sequence

from .partitions import Partition, partitions_of

__all__ = [
    "MONOMIAL",
    "POWERSUM",
    "SymPoly",
    "p_to_m",
    "m_to_p",
]

MONOMIAL = "monomial"
POWERSUM = "powersum"


@dataclass(frozen=True)
class SymPoly:
    """Homogeneous symmetric polynomial of fixed degree in a fixed basis.

    Zero coefficients are never stored, so structural equality of two
    SymPoly values is exact polynomial equality.
    """

    degree: int
    basis: str
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in (MONOMIAL, POWERSUM):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean: dict[Partition, Fraction] = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if lam.weight != self.degree:
                raise ValueError(
                    f"key {lam!r} has weight {lam.weight}, expected {self.degree}"
                )
            c = Fraction(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if not isinstance(other, SymPoly):
            return NotImplemented
        if (self.degree, self.basis) != (other.degree, other.basis):
            raise ValueError("can only add polynomials of equal degree and basis")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymPoly(self.degree, self.basis, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-1) * other

    def __mul__(self, scalar) -> "SymPoly":
        if not isinstance(scalar, Rational):
            return NotImplemented
        return SymPoly(
            self.degree,
            self.basis,
            {lam: c * scalar for lam, c in self.coeffs.items()},
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def coefficient(self, lam) -> Fraction:
        """The coefficient attached to partition ``lam`` (zero if absent)."""
        return self.coeffs.get(Partition(lam), Fraction(0))

    def sorted_items(self) -> list[tuple[Partition, Fraction]]:
        """Coefficients keyed in the canonical partition enumeration order."""
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        return sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])

    def evaluate(self, xs: Sequence):
        """Value at the point ``xs``.

        Exact when the coordinates are rationals; float otherwise.  In the
        monomial basis m_lambda sums over all distinct permutations of
        lambda padded to len(xs), and vanishes when lambda has more parts
        than there are coordinates.
        """
        if self.basis == POWERSUM:
            return self._evaluate_powersum(xs)
        return self._evaluate_monomial(xs)

    def _evaluate_powersum(self, xs):
        sums: dict[int, object] = {}
        total = 0
        for lam, c in self.coeffs.items():
            term = c
            for k in lam:
                if k not in sums:
                    sums[k] = sum(x ** k for x in xs)
                term = term * sums[k]
            total = total + term
        return total

    def _evaluate_monomial(self, xs):
        n = len(xs)
        total = 0
        for lam, c in self.coeffs.items():
            if len(lam) > n:
                continue
            orbit = 0
            for expo in _distinct_permutations(lam.padded(n)):
                prod = 1
                for x, e in zip(xs, expo):
                    if e:
                        prod = prod * x ** e
                orbit = orbit + prod
            total = total + c * orbit
        return total


def _distinct_permutations(pool: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not pool:
        yield ()
        return
    prev = None
    for idx, v in enumerate(pool):
        if v == prev:
            continue
        prev = v
        rest = pool[:idx] + pool[idx + 1 :]
        for tail in _distinct_permutations(rest):
            yield (v,) + tail


@lru_cache(maxsize=None)
def p_to_m(lam: Partition) -> SymPoly:
    """Expansion of the power-sum product p_lambda in the monomial basis.

    Built by repeatedly multiplying a monomial-basis polynomial by a single
    power sum: merging part k into a key either bumps one existing part
    value or appends a new part, with the orbit multiplicity of the bumped
    value as coefficient.
    """
    lam = Partition(lam)
    coeffs: dict[Partition, Fraction] = {Partition(): Fraction(1)}
    degree = 0
    for k in lam:
        coeffs = _multiply_by_power_sum(coeffs, k)
        degree += k
    return SymPoly(degree, MONOMIAL, coeffs)


def _multiply_by_power_sum(
    coeffs: dict[Partition, Fraction], k: int
) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for mu, c in coeffs.items():
        # v = 0 appends a new part k; v > 0 bumps one part of that value.
        for v in set(mu) | {0}:
            merged = list(mu)
            if v:
                merged.remove(v)
            merged.append(v + k)
            nu = Partition(sorted(merged, reverse=True))
            mult = nu.count(v + k)
            out[nu] = out.get(nu, Fraction(0)) + c * mult
    return out


@lru_cache(maxsize=None)
def _monomial_to_power_matrix(f: int) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the basis-change matrix sending p_mu to monomials, degree f."""
    parts = partitions_of(f)
    index = {lam: i for i, lam in enumerate(parts)}
    k = len(parts)
    forward = [[Fraction(0)] * k for _ in range(k)]
    for j, mu in enumerate(parts):
        for lam, c in p_to_m(mu).coeffs.items():
            forward[index[lam]][j] = c
    return _invert_rational(forward)


def _invert_rational(matrix: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Gauss-Jordan inverse over the rationals."""
    k = len(matrix)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(matrix)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col]), None)
        if pivot is None:
            raise RuntimeError("basis-change matrix is singular; this is a bug")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


def m_to_p(poly: SymPoly) -> SymPoly:
    """The unique power-sum-basis representation of a monomial-basis polynomial."""
    if poly.basis != MONOMIAL:
        raise ValueError("m_to_p expects a monomial-basis polynomial")
    parts = partitions_of(poly.degree)
    inverse = _monomial_to_power_matrix(poly.degree)
    vec = [poly.coefficient(lam) for lam in parts]
    out: dict[Partition, Fraction] = {}
    for i, mu in enumerate(parts):
        val = sum((inverse[i][j] * vec[j] for j in range(len(parts))), Fraction(0))
        if val:
            out[mu] = val
    return SymPoly(poly.degree, POWERSUM, out)
