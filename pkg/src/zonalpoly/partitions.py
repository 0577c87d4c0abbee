"""Integer partitions and their scalar statistics.

Partitions index every polynomial, character, and coefficient in this
package.  They are stored as nonincreasing tuples of positive integers
without trailing zeros; padding to a fixed number of parts happens at
the call sites that need it.  The empty partition (weight 0) is valid.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "partitions_of",
    "dominated_by",
    "conjugate",
    "part_square_sum",
    "part_index_sum",
    "rho",
    "lb_eigenvalue",
    "gl_dimension",
    "sym_group_degree",
]


class Partition(tuple):
    """A nonincreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self)

    def padded(self, n: int) -> tuple[int, ...]:
        """The parts padded with zeros to length ``n``."""
        if len(self) > n:
            raise ValueError(f"{self!r} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def doubled(self) -> "Partition":
        """The partition with every part doubled."""
        return Partition(2 * p for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _descending(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for head in range(min(remaining, cap), 0, -1):
        for tail in _descending(remaining - head, head):
            yield (head,) + tail


@lru_cache(maxsize=None)
def partitions_of(f: int) -> tuple[Partition, ...]:
    """All partitions of ``f``, in descending lexicographic order.

    ``(f,)`` comes first and ``(1,)*f`` last; ``f = 0`` yields the single
    empty partition.
    """
    if f < 0:
        raise ValueError("f must be nonnegative")
    return tuple(Partition(p) for p in _descending(f, f))


def dominated_by(g: Sequence[int], f: Sequence[int]) -> bool:
    """Whether ``g`` is below or equal to ``f`` in the dominance order.

    True iff every prefix sum of ``g`` is at most the corresponding prefix
    sum of ``f``.  Both partitions must have the same weight.
    """
    if sum(g) != sum(f):
        raise ValueError("dominance compares partitions of equal weight")
    gs = fs = 0
    for k in range(max(len(g), len(f))):
        gs += g[k] if k < len(g) else 0
        fs += f[k] if k < len(f) else 0
        if gs > fs:
            return False
    return True


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram; an involution."""
    if not p:
        return Partition()
    return Partition(sum(1 for q in p if q > i) for i in range(p[0]))


def part_square_sum(p: Sequence[int]) -> int:
    """Sum of squared parts."""
    return sum(q * q for q in p)


def part_index_sum(p: Sequence[int]) -> int:
    """Sum of parts weighted by their 1-based row index."""
    return sum(i * q for i, q in enumerate(p, start=1))


def rho(p: Sequence[int]) -> int:
    """The statistic sum(p_i * (p_i - i)), with rows indexed from 1.

    Equals ``part_square_sum(p) - part_index_sum(p)``.  For g strictly
    below f in dominance (equal weights), rho(f) - rho(g) > 0, which keeps
    the recursion denominators of the zonal table away from zero.
    """
    return part_square_sum(p) - part_index_sum(p)


def lb_eigenvalue(p: Sequence[int], n: int) -> int:
    """Laplace-Beltrami eigenvalue sum(k_i * (k_i + n - i - 1)) in n variables."""
    if len(p) > n:
        raise ValueError(f"{tuple(p)} has more than {n} parts")
    return sum(q * (q + n - i - 1) for i, q in enumerate(p, start=1))


def gl_dimension(parts: Sequence[int], n: int) -> int:
    """Dimension of the GL(n) irreducible with highest weight ``parts``.

    The weight is padded with zeros to ``n`` entries, which must then be
    nonincreasing and nonnegative.  Computed as the exact integer ratio

        prod_{i<j} ((w_i - w_j) + (j - i)) / prod_{i<j} (j - i).
    """
    w = [int(x) for x in parts]
    if len(w) > n:
        raise ValueError(f"weight {tuple(parts)} has more than {n} entries")
    w += [0] * (n - len(w))
    if any(w[i] < w[i + 1] for i in range(n - 1)) or (w and w[-1] < 0):
        raise ValueError(f"weight must be nonincreasing and nonnegative: {tuple(parts)}")
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= (w[i] - w[j]) + (j - i)
            den *= j - i
    q, r = divmod(num, den)
    if r:  # cannot happen for a dominant weight
        raise ArithmeticError("difference-product ratio is not an integer")
    return q


def sym_group_degree(p: Sequence[int]) -> int:
    """Degree of the symmetric-group irreducible indexed by ``p``.

    Hook-length formula: |p|! divided by the product of hook lengths.
    """
    p = Partition(p)
    conj = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(p.weight) // hooks
