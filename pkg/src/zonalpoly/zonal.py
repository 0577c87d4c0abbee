"""Zonal polynomials via an explicit coefficient recursion.

Each polynomial Z_kappa is homogeneous symmetric of degree f = |kappa|,
expanded in monomial symmetric functions with coefficients supported on
the partitions dominated by kappa, and normalized so that the coefficient
of m_{(1,...,1)} equals f!.  Rows are produced by a triangular recursion:
the provisional top coefficient is 1, every lower coefficient is a
positively-weighted sum of coefficients above it in dominance divided by
rho(kappa) - rho(g), and the finished row is rescaled once.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .partitions import Partition, dominated_by, partitions_of, rho, sym_group_degree
from .symfunc import MONOMIAL, POWERSUM, SymPoly, m_to_p, p_to_m

__all__ = [
    "DataIntegrityError",
    "ZonalTable",
    "double_factorial",
    "zonal_row",
    "zonal_table",
    "zonal_in_powersums",
    "zonal_at_identity",
    "character_degree",
    "check_trace_identity",
    "check_leading_coefficients",
]

#: Degrees whose rows are pinned by published reference values; violations
#: of the nonnegative-integer property are hard errors there and warnings
#: beyond.
TABULATED_LIMIT = 6


class DataIntegrityError(ValueError):
    """A computed table violates a structural property it must satisfy."""


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ...; by convention 1 for k <= 0."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@lru_cache(maxsize=None)
def _raising_moves(g: Partition) -> tuple[tuple[int, Partition], ...]:
    """All single raises of g: move t units from part j up to part i < j.

    Yields (g_i - g_j + 2t, h) where h is the re-sorted result; every
    (i, j, t) choice counts separately even when several produce the same
    h.  t is capped by g_j, and zero parts are dropped after sorting.
    """
    parts = list(g)
    moves: list[tuple[int, Partition]] = []
    for j in range(1, len(parts)):
        for i in range(j):
            for t in range(1, parts[j] + 1):
                lifted = parts.copy()
                lifted[i] += t
                lifted[j] -= t
                h = Partition(sorted((x for x in lifted if x), reverse=True))
                moves.append((parts[i] - parts[j] + 2 * t, h))
    return tuple(moves)


@lru_cache(maxsize=None)
def zonal_row(kappa: Partition) -> SymPoly:
    """The zonal polynomial for kappa, in the monomial basis.

    Partitions g below kappa are visited in descending lexicographic
    order, which refines descending dominance, so every coefficient a
    raise of g lands on is already final.  Raises landing outside the
    dominance interval (g, kappa] contribute nothing because their
    coefficient is zero.
    """
    kappa = Partition(kappa)
    if not kappa:
        raise ValueError("kappa must be a nonempty partition")
    f = kappa.weight
    rho_top = rho(kappa)
    coeffs: dict[Partition, Fraction] = {kappa: Fraction(1)}
    for g in partitions_of(f):
        if g == kappa or not dominated_by(g, kappa):
            continue
        acc = Fraction(0)
        for numer, h in _raising_moves(g):
            c = coeffs.get(h)
            if c:
                acc += numer * c
        denom = rho_top - rho(g)
        if denom <= 0:  # impossible while strict dominance implies rho gaps > 0
            raise DataIntegrityError(f"vanishing denominator at {g!r} under {kappa!r}")
        if acc:
            coeffs[g] = acc / denom
    ones = Partition((1,) * f)
    lead = coeffs.get(ones)
    if not lead:
        raise RuntimeError(f"row {kappa!r} never reached the all-ones monomial")
    scale = Fraction(factorial(f)) / lead
    coeffs = {lam: c * scale for lam, c in coeffs.items()}
    _check_row_coefficients(kappa, coeffs)
    return SymPoly(f, MONOMIAL, coeffs)


def _check_row_coefficients(kappa: Partition, coeffs: dict[Partition, Fraction]) -> None:
    bad = {
        lam: c for lam, c in coeffs.items() if c.denominator != 1 or c < 0
    }
    if not bad:
        return
    message = f"row {kappa!r} has non-integer or negative coefficients: {bad}"
    if kappa.weight <= TABULATED_LIMIT:
        raise DataIntegrityError(message)
    warnings.warn(message, stacklevel=3)


@dataclass(frozen=True)
class ZonalTable:
    """All zonal polynomials of one degree, keyed in enumeration order."""

    degree: int
    rows: Mapping[Partition, SymPoly]

    def __iter__(self):
        return iter(self.rows.items())


@lru_cache(maxsize=None)
def zonal_table(f: int) -> ZonalTable:
    """The full table for degree f.

    Exact at any degree; the cost grows with the partition count, and
    degrees much above 12 get slow.
    """
    if f < 1:
        raise ValueError("f must be at least 1")
    return ZonalTable(f, {kappa: zonal_row(kappa) for kappa in partitions_of(f)})


def zonal_in_powersums(kappa) -> SymPoly:
    """The row for kappa converted to the power-sum basis.

    The conversion must land on integer coefficients; anything else means
    a corrupted table and raises DataIntegrityError.
    """
    poly = m_to_p(zonal_row(Partition(kappa)))
    fractional = {lam: c for lam, c in poly.coeffs.items() if c.denominator != 1}
    if fractional:
        raise DataIntegrityError(
            f"power-sum coefficients for {Partition(kappa)!r} are not integers: {fractional}"
        )
    return poly


def zonal_at_identity(kappa, n: int) -> Fraction:
    """Z_kappa evaluated at n ones; zero iff kappa has more than n parts."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(zonal_row(Partition(kappa)).evaluate((Fraction(1),) * n))


def character_degree(kappa) -> int:
    """Degree of the symmetric-group irreducible indexed by the doubled partition."""
    return sym_group_degree(Partition(kappa).doubled())


def check_trace_identity(f: int) -> tuple[bool, dict[Partition, Fraction]]:
    """Exact check that the character-weighted row sum is a pure power of p_1.

    Verifies sum_kappa chi(kappa) Z_kappa = ((2f)! / (2^f f!)) p_1^f as
    symmetric polynomials, where chi(kappa) is the doubled-partition
    character degree.  Returns (ok, per-monomial discrepancy map); the map
    is empty exactly when the identity holds.
    """
    if f < 1:
        raise ValueError("f must be at least 1")
    total = SymPoly(f, MONOMIAL, {})
    for kappa in partitions_of(f):
        total = total + character_degree(kappa) * zonal_row(kappa)
    ratio = Fraction(factorial(2 * f), 2**f * factorial(f))
    expected = ratio * p_to_m(Partition((1,) * f))
    diff = total - expected
    return (not diff.coeffs, dict(diff.coeffs))


def check_leading_coefficients(f: int) -> bool:
    """Whether the single-row polynomial starts at (2f-1)!! and ends at f!.

    Asserts the m_{(f)} coefficient of the (f,) row is (2f-1)!! and its
    m_{(1,...,1)} coefficient is f!.
    """
    if f < 1:
        raise ValueError("f must be at least 1")
    row = zonal_row(Partition((f,)))
    return row.coefficient((f,)) == double_factorial(2 * f - 1) and row.coefficient(
        (1,) * f
    ) == factorial(f)
