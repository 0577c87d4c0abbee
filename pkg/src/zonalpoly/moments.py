"""Orthogonal-group moment integrals: exact closed forms and Monte Carlo.

The exact side expands integrals of powers of tr(D_a Q D_b Q') over Haar
measure into character-weighted products of zonal polynomial values; all
of it runs on rationals.  The Monte Carlo side estimates the same
quantities from the Haar sampler and reports a z-score against the exact
value.  Eigenvalue inputs are rationals so both paths share inputs
bit-for-bit.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import exp, factorial, sqrt
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .haar import as_generator, sample_orthogonal_batch
from .partitions import Partition, partitions_of
from .symfunc import SymPoly
from .zonal import (
    character_degree,
    double_factorial,
    zonal_at_identity,
    zonal_in_powersums,
    zonal_row,
)

__all__ = [
    "DiagonalSpec",
    "MomentReport",
    "SeriesResult",
    "ResidualInconsistencyError",
    "normalizing_product",
    "exact_trace_power_integral",
    "bilinear_coefficient",
    "residual_values",
    "residual_coefficient",
    "mc_trace_power",
    "mc_splitting",
    "mc_linear_trace_power",
    "mc_exponential_trace",
    "hyper0f0",
]


@dataclass(frozen=True)
class DiagonalSpec:
    """Latent roots of a diagonal matrix, held as exact rationals."""

    eigenvalues: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "DiagonalSpec":
        if isinstance(values, DiagonalSpec):
            return values
        return cls(tuple(Fraction(v) for v in values))

    def floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.eigenvalues])

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)


@dataclass(frozen=True)
class MomentReport:
    """One exact-vs-Monte-Carlo comparison."""

    exact_value: Fraction | float
    mc_estimate: float
    mc_std_err: float
    samples: int
    z_score: float
    resampled: int = 0


@dataclass(frozen=True)
class SeriesResult:
    """A truncated exponential-trace series with its exact terms."""

    value: float
    terms: tuple[Fraction, ...]
    tail_bound: float | None


class ResidualInconsistencyError(ArithmeticError):
    """The residual coefficient came out different at different dimensions."""

    def __init__(self, f: int, g: Partition, h: Partition, values):
        self.values = tuple(values)
        detail = ", ".join(f"n={n}: {v}" for n, v in self.values)
        super().__init__(
            f"residual coefficient for f={f}, g={tuple(g)}, h={tuple(h)} "
            f"depends on the dimension ({detail})"
        )


def normalizing_product(n: int, f: int) -> int:
    """The product n (n+2) (n+4) ... (n+2f-2); 1 when f = 0.

    Valid for every n >= 1; equals the single-row zonal polynomial at the
    n-dimensional identity.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if f < 0:
        raise ValueError("f must be nonnegative")
    out = 1
    for k in range(f):
        out *= n + 2 * k
    return out


def _trace_power_prefactor(f: int) -> Fraction:
    return Fraction(2**f * factorial(f), factorial(2 * f))


def exact_trace_power_integral(a, b, f: int) -> Fraction:
    """The Haar average of tr(D_a Q D_b Q')^f, exactly.

    Expands the trace power into character-weighted zonal polynomials and
    integrates the splitting rule term by term:

        (2^f f! / (2f)!) * sum_kappa chi(kappa) Z_kappa(a) Z_kappa(b) / Z_kappa(I_n)

    over partitions kappa of f with at most n parts.
    """
    a = DiagonalSpec.of(a)
    b = DiagonalSpec.of(b)
    n = len(a)
    if n != len(b):
        raise ValueError("a and b must have the same number of eigenvalues")
    if n < 1:
        raise ValueError("spectra must be nonempty")
    if f < 0:
        raise ValueError("f must be nonnegative")
    if f == 0:
        return Fraction(1)
    total = Fraction(0)
    for kappa in partitions_of(f):
        if len(kappa) > n:
            continue
        za = Fraction(zonal_row(kappa).evaluate(a.eigenvalues))
        if not za:
            continue
        zb = Fraction(zonal_row(kappa).evaluate(b.eigenvalues))
        if not zb:
            continue
        total += character_degree(kappa) * za * zb / zonal_at_identity(kappa, n)
    return _trace_power_prefactor(f) * total


def bilinear_coefficient(f: int, n: int, g, h) -> Fraction:
    """Coefficient of m_g(a) m_h(b) in the exact trace-power integral.

    Extracted symbolically from the zonal expansion; symmetric in (g, h).
    """
    g = Partition(g)
    h = Partition(h)
    if g.weight != f or h.weight != f:
        raise ValueError("g and h must be partitions of f")
    total = Fraction(0)
    for kappa in partitions_of(f):
        if len(kappa) > n:
            continue
        row = zonal_row(kappa)
        bg = row.coefficient(g)
        if not bg:
            continue
        bh = row.coefficient(h)
        if not bh:
            continue
        total += character_degree(kappa) * bg * bh / zonal_at_identity(kappa, n)
    return _trace_power_prefactor(f) * total


def residual_values(f: int, g, h, n_values: Iterable[int]) -> list[tuple[int, Fraction]]:
    """The residual (2f-1)!! c(n) a_{g,h} - b_{(f),g} b_{(f),h} at each n."""
    g = Partition(g)
    h = Partition(h)
    if g.weight != f or h.weight != f:
        raise ValueError("g and h must be partitions of f")
    if g == (f,) or h == (f,):
        raise ValueError("the residual excludes the single-row partition")
    top = zonal_row(Partition((f,)))
    cross = top.coefficient(g) * top.coefficient(h)
    out = []
    for n in n_values:
        value = (
            double_factorial(2 * f - 1)
            * normalizing_product(n, f)
            * bilinear_coefficient(f, n, g, h)
            - cross
        )
        out.append((n, value))
    return out


def residual_coefficient(f: int, g, h, n_values: Sequence[int] | None = None) -> Fraction:
    """The dimension-free residual coefficient, if it exists.

    Evaluates the residual at two dimensions (by default n = f and
    n = f + 1, large enough that every partition of f contributes) and
    returns the common value.  A residual that still depends on n raises
    ResidualInconsistencyError carrying both values.
    """
    if n_values is None:
        n_values = (f, f + 1)
    if len(n_values) < 2:
        raise ValueError("need at least two dimensions to compare")
    values = residual_values(f, g, h, n_values)
    if any(v != values[0][1] for _, v in values[1:]):
        raise ResidualInconsistencyError(f, Partition(g), Partition(h), values)
    return values[0][1]


# ---------------------------------------------------------------------------
# Monte Carlo estimators
# ---------------------------------------------------------------------------


def _sample_chunks(samples: int, threads: int, rng) -> list[tuple[int, np.random.Generator]]:
    """Split a sample budget across independent child streams.

    With one thread the caller's stream is used directly, so single-thread
    results depend only on the seed.
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    gen = as_generator(rng)
    if threads == 1:
        return [(samples, gen)]
    base, extra = divmod(samples, threads)
    sizes = [base + (1 if t < extra else 0) for t in range(threads)]
    children = gen.spawn(threads)
    return [(size, child) for size, child in zip(sizes, children) if size]


def _run_chunks(chunks, worker) -> np.ndarray:
    if len(chunks) == 1:
        count, gen = chunks[0]
        return worker(count, gen)
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(lambda cg: worker(*cg), chunks))
    return np.concatenate(parts)


def _summarize(exact, values: np.ndarray, resampled: int = 0) -> MomentReport:
    m = values.size
    mean = float(values.mean())
    std_err = float(values.std(ddof=1) / sqrt(m)) if m > 1 else 0.0
    z = (mean - float(exact)) / std_err if std_err > 0 else 0.0
    return MomentReport(exact, mean, std_err, m, z, resampled)


def mc_trace_power(a, b, f: int, samples: int, rng, threads: int = 1) -> MomentReport:
    """Monte Carlo counterpart of exact_trace_power_integral."""
    a = DiagonalSpec.of(a)
    b = DiagonalSpec.of(b)
    n = len(a)
    if n != len(b):
        raise ValueError("a and b must have the same number of eigenvalues")
    exact = exact_trace_power_integral(a, b, f)
    if f == 0:
        return MomentReport(exact, 1.0, 0.0, samples, 0.0)
    av, bv = a.floats(), b.floats()

    def worker(count: int, gen: np.random.Generator) -> np.ndarray:
        q = sample_orthogonal_batch(n, count, gen)
        t = np.einsum("mij,i,j->m", q * q, av, bv)
        return t**f

    values = _run_chunks(_sample_chunks(samples, threads, rng), worker)
    return _summarize(exact, values)


@lru_cache(maxsize=None)
def _powersum_terms(kappa: Partition) -> tuple[tuple[float, tuple[int, ...]], ...]:
    poly = zonal_in_powersums(kappa)
    return tuple((float(c), tuple(lam)) for lam, c in poly.sorted_items())


def _evaluate_powersum_batch(kappa: Partition, xs: np.ndarray) -> np.ndarray:
    """Z_kappa at each row of xs, via power sums (float path)."""
    powers: dict[int, np.ndarray] = {}
    out = np.zeros(xs.shape[0])
    for c, lam in _powersum_terms(kappa):
        term = np.full(xs.shape[0], c)
        for k in lam:
            if k not in powers:
                powers[k] = (xs**k).sum(axis=1)
            term = term * powers[k]
        out += term
    return out


def mc_splitting(kappa, a, b, samples: int, rng, threads: int = 1) -> MomentReport:
    """Monte Carlo check of the zonal splitting rule.

    Estimates the Haar mean of Z_kappa at the latent roots of
    D_a H D_b H', against the exact value Z_kappa(a) Z_kappa(b) / Z_kappa(I_n).
    The per-sample roots come from a symmetric eigensolve, which needs a
    nonnegative spectrum on at least one side.
    """
    kappa = Partition(kappa)
    a = DiagonalSpec.of(a)
    b = DiagonalSpec.of(b)
    n = len(a)
    if n != len(b):
        raise ValueError("a and b must have the same number of eigenvalues")
    if len(kappa) > n:
        raise ValueError(f"kappa {tuple(kappa)} has more than {n} parts")
    exact = (
        Fraction(zonal_row(kappa).evaluate(a.eigenvalues))
        * Fraction(zonal_row(kappa).evaluate(b.eigenvalues))
        / zonal_at_identity(kappa, n)
    )
    av, bv = a.floats(), b.floats()
    if np.all(av >= 0):
        outer, inner, transpose_h = np.sqrt(av), bv, False
    elif np.all(bv >= 0):
        outer, inner, transpose_h = np.sqrt(bv), av, True
    else:
        raise ValueError("one of the spectra must be nonnegative for the eigensolve")

    resampled = 0

    def eigenvalues_of(q: np.ndarray) -> np.ndarray:
        h = q.transpose(0, 2, 1) if transpose_h else q
        core = np.einsum("mik,k,mjk->mij", h, inner, h)
        return np.linalg.eigvalsh(outer[None, :, None] * core * outer[None, None, :])

    def worker(count: int, gen: np.random.Generator) -> np.ndarray:
        nonlocal resampled
        q = sample_orthogonal_batch(n, count, gen)
        try:
            eigs = eigenvalues_of(q)
        except np.linalg.LinAlgError:
            eigs = np.empty((count, n))
            for idx in range(count):
                while True:
                    try:
                        eigs[idx] = eigenvalues_of(q[idx : idx + 1])[0]
                        break
                    except np.linalg.LinAlgError:
                        resampled += 1
                        q[idx : idx + 1] = sample_orthogonal_batch(n, 1, gen)
        return _evaluate_powersum_batch(kappa, eigs)

    values = _run_chunks(_sample_chunks(samples, threads, rng), worker)
    return _summarize(exact, values, resampled)


def _exact_gram(matrix) -> list[list[Fraction]] | None:
    try:
        rows = [[Fraction(x) for x in row] for row in matrix]
    except (TypeError, ValueError):
        return None
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return [
        [sum((rows[i][k] * rows[j][k] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def mc_linear_trace_power(matrix, f: int, samples: int, rng, threads: int = 1) -> MomentReport:
    """Haar moment of tr(A H)^f for a full square matrix A.

    Odd powers integrate to zero by the H -> -H symmetry and are reported
    exactly without sampling.  Even powers compare against

        sum_kappa chi(kappa) Z_kappa(spectrum of A A') / Z_kappa(I_n)

    over partitions kappa of f/2; the value is exact when A A' is
    rational diagonal and floating otherwise.
    """
    if f < 0:
        raise ValueError("f must be nonnegative")
    amat = np.array([[float(x) for x in row] for row in matrix])
    n = amat.shape[0]
    if amat.shape != (n, n):
        raise ValueError("matrix must be square")
    if f % 2 == 1:
        return MomentReport(Fraction(0), 0.0, 0.0, 0, 0.0)
    if f == 0:
        return MomentReport(Fraction(1), 1.0, 0.0, samples, 0.0)

    gram_exact = _exact_gram(matrix)
    if gram_exact is not None and all(
        gram_exact[i][j] == 0 for i in range(n) for j in range(n) if i != j
    ):
        spectrum: Sequence = sorted((gram_exact[i][i] for i in range(n)), reverse=True)
        exact: Fraction | float = Fraction(0)
    else:
        spectrum = sorted(np.linalg.eigvalsh(amat @ amat.T), reverse=True)
        exact = 0.0
    for kappa in partitions_of(f // 2):
        if len(kappa) > n:
            continue
        z = zonal_row(kappa).evaluate(spectrum)
        exact = exact + character_degree(kappa) * z / zonal_at_identity(kappa, n)

    def worker(count: int, gen: np.random.Generator) -> np.ndarray:
        q = sample_orthogonal_batch(n, count, gen)
        t = np.einsum("ij,mji->m", amat, q)
        return t**f

    values = _run_chunks(_sample_chunks(samples, threads, rng), worker)
    return _summarize(exact, values)


def mc_exponential_trace(a, b, reference: float, samples: int, rng, threads: int = 1) -> MomentReport:
    """MC mean of exp(tr(D_a Q D_b Q') / 2), z-scored against ``reference``.

    The natural reference is a truncated hyper0f0 value, so the z-score
    mixes truncation error with sampling error.
    """
    a = DiagonalSpec.of(a)
    b = DiagonalSpec.of(b)
    n = len(a)
    if n != len(b):
        raise ValueError("a and b must have the same number of eigenvalues")
    av, bv = a.floats(), b.floats()

    def worker(count: int, gen: np.random.Generator) -> np.ndarray:
        q = sample_orthogonal_batch(n, count, gen)
        t = np.einsum("mij,i,j->m", q * q, av, bv)
        return np.exp(0.5 * t)

    values = _run_chunks(_sample_chunks(samples, threads, rng), worker)
    return _summarize(reference, values)


def hyper0f0(a, b, max_degree: int) -> SeriesResult:
    """Truncated series sum_f (1/(2^f f!)) <tr(D_a Q D_b Q')^f>.

    The per-degree terms are exact rationals; ``value`` is their floating
    sum.  For nonnegative spectra the integrand is bounded by the sorted
    pairing s = sum a_i^ b_i^, so the reported tail bound is the exact
    tail of exp(s/2) past the truncation degree.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    a = DiagonalSpec.of(a)
    b = DiagonalSpec.of(b)
    terms = tuple(
        exact_trace_power_integral(a, b, f) / (2**f * factorial(f))
        for f in range(max_degree + 1)
    )
    value = float(sum(terms))
    tail: float | None = None
    if all(x >= 0 for x in a) and all(x >= 0 for x in b):
        s = sum(
            x * y
            for x, y in zip(sorted(a.eigenvalues), sorted(b.eigenvalues))
        )
        half = float(s) / 2.0
        partial = sum(half**f / factorial(f) for f in range(max_degree + 1))
        tail = max(exp(half) - partial, 0.0)
    return SeriesResult(value, terms, tail)
