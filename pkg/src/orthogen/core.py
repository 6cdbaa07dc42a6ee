"""Orthogonal matrix generation from a set of distinct positive values.

Given m distinct values y_0..y_{m-1} > 0, the generator builds a family of
monic polynomials containing only even (respectively odd) powers, chosen so
that same-parity polynomials are orthogonal over the sample points, and
assembles a 2m x 2m orthonormal matrix sampled at +/-y_k. Each induction
step solves one small dense system per parity for the unknown trailing
coefficients of the next polynomial.

Matrix layout: column j < m holds the samples at -y_j (input order) and
column m + j holds the samples at +y_{m-1-j}, so the sample sequence runs
monotonically when the values are given in descending order. Consequently
every row satisfies the mirror relation row[k] == +/-row[n-1-k] (+ for even
rows, - for odd rows).
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import linsolve
from .errors import ConditioningWarning, DegenerateValuesError, ZeroRowError

DEFAULT_MAX_M = 16
MAX_M_ENV_VAR = "ORTHOGEN_MAX_M"

# Relative gap below which two values are close enough to wreck conditioning.
NEAR_DUPLICATE_RTOL = 1e-6


def soft_max_m() -> int:
    """Soft cap on m (half the matrix size); above it we warn, not refuse."""
    raw = os.environ.get(MAX_M_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_M
    try:
        return int(raw)
    except ValueError:
        warnings.warn(
            f"ignoring non-integer {MAX_M_ENV_VAR}={raw!r}", ConditioningWarning
        )
        return DEFAULT_MAX_M


def validate_values(values: Sequence[float]) -> np.ndarray:
    """Check a value set and return it as a float array (order preserved).

    Values must be finite, strictly positive, and pairwise distinct.
    Near-duplicates and sizes beyond the soft cap draw a
    :class:`ConditioningWarning`.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DegenerateValuesError("expected a non-empty flat sequence of values")
    for i, v in enumerate(arr):
        if not np.isfinite(v):
            raise DegenerateValuesError(f"non-finite value {v} at index {i}")
        if v <= 0.0:
            raise DegenerateValuesError(f"non-positive value {v:g} at index {i}")
    seen: dict[float, int] = {}
    for i, v in enumerate(arr):
        if v in seen:
            raise DegenerateValuesError(f"duplicate value {v:g}")
        seen[float(v)] = i
    m = arr.size
    for i in range(m):
        for j in range(i + 1, m):
            gap = abs(arr[i] - arr[j]) / max(arr[i], arr[j])
            if gap < NEAR_DUPLICATE_RTOL:
                warnings.warn(
                    f"values {arr[i]:g} and {arr[j]:g} differ by a relative gap "
                    f"of {gap:.2e}; the coefficient systems will be nearly singular",
                    ConditioningWarning,
                )
    cap = soft_max_m()
    if m > cap:
        warnings.warn(
            f"m={m} exceeds the soft cap {cap}; double-precision conditioning "
            "degrades for large matrices",
            ConditioningWarning,
        )
    return arr


class EquationSystem(NamedTuple):
    """One induction step: ``matrix @ coefficients = rhs`` (rhs already negated)."""

    matrix: np.ndarray
    rhs: np.ndarray


@dataclass(frozen=True)
class ReducedBasis:
    """Monic even/odd polynomial family evaluated on the generator values.

    ``even_evals[t][k]`` is the degree-2t monic polynomial at ``values[k]``;
    ``even_coefs[t]`` holds its trailing coefficients, highest power first
    (the leading coefficient is implicitly 1). Same layout for the odd family
    at degrees 2t+1.
    """

    values: np.ndarray
    even_evals: list[np.ndarray]
    odd_evals: list[np.ndarray]
    even_coefs: list[np.ndarray]
    odd_coefs: list[np.ndarray]

    @property
    def m(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class OrthoMatrix:
    """An assembled 2m x 2m orthonormal matrix plus its provenance.

    ``norm_scales[i]`` is the positive factor that scaled row i's monic
    polynomial samples to unit length.
    """

    n: int
    entries: np.ndarray
    values: np.ndarray
    norm_scales: np.ndarray


# All reductions over the sample points go through math.fsum: exactly
# rounded sums make every derived quantity independent of value order, so
# permuting the input permutes matrix columns bit-for-bit.


def _fdot(a: np.ndarray, b: np.ndarray) -> float:
    return math.fsum((a * b).tolist())


def _system(evals: Sequence[np.ndarray], values: np.ndarray, t: int, parity: int) -> EquationSystem:
    exps = 2 * (t - np.arange(1, t + 1)) + parity
    powers = values[None, :] ** exps[:, None]
    head = values ** (2 * t + parity)
    matrix = np.empty((t, t))
    rhs = np.empty(t)
    for i in range(t):
        for p in range(t):
            matrix[i, p] = _fdot(evals[i], powers[p])
        rhs[i] = -_fdot(evals[i], head)
    return EquationSystem(matrix, rhs)


def _even_system(even_evals: Sequence[np.ndarray], values: np.ndarray, t: int) -> EquationSystem:
    return _system(even_evals, values, t, parity=0)


def _odd_system(odd_evals: Sequence[np.ndarray], values: np.ndarray, t: int) -> EquationSystem:
    return _system(odd_evals, values, t, parity=1)


def build_even_system(basis: ReducedBasis, t: int) -> EquationSystem:
    """System whose solution gives the trailing coefficients of the degree-2t
    even polynomial: matrix[i][p-1] = sum_k even_evals[i][k] * y_k^(2(t-p)),
    rhs[i] = -sum_k even_evals[i][k] * y_k^(2t)."""
    if not 1 <= t <= basis.m - 1:
        raise ValueError(f"degree index t={t} outside 1..{basis.m - 1}")
    return _even_system(basis.even_evals, basis.values, t)


def build_odd_system(basis: ReducedBasis, t: int) -> EquationSystem:
    """Odd-family counterpart of :func:`build_even_system` (degree 2t+1)."""
    if not 1 <= t <= basis.m - 1:
        raise ValueError(f"degree index t={t} outside 1..{basis.m - 1}")
    return _odd_system(basis.odd_evals, basis.values, t)


def _next_eval(
    values: np.ndarray, head_exp: int, coeffs: np.ndarray, prior: Sequence[np.ndarray]
) -> np.ndarray:
    """Evaluate the freshly solved polynomial, then scrub solver roundoff.

    The lower same-parity monomials span exactly the same space as the prior
    evaluation vectors, so any error in the solved coefficients lives inside
    that span; projecting it out (twice, the usual reorthogonalization
    safeguard) leaves the mathematically identical evaluation with far less
    noise for badly conditioned value sets.
    """
    t = coeffs.size
    exps = np.concatenate([[head_exp], head_exp - 2.0 * np.arange(1, t + 1)])
    weights = np.concatenate([[1.0], coeffs])
    terms = weights[:, None] * values[None, :] ** exps[:, None]
    v = np.array([math.fsum(terms[:, k].tolist()) for k in range(values.size)])
    for _ in range(2):
        for e in prior:
            v = v - (_fdot(v, e) / _fdot(e, e)) * e
    return v


def induct_basis(values: Sequence[float]) -> ReducedBasis:
    """Build the full monic even/odd family for a value set.

    The induction itself runs on values rescaled by 1/max(y) so that every
    power stays in (0, 1]; coefficients and evaluations are scaled back to
    the caller's units afterwards. The generated matrix is invariant under
    this rescaling, which only exists to keep the systems well conditioned
    for value sets like primes or Fibonacci numbers.
    """
    raw = validate_values(values)
    m = raw.size
    unit = raw.max()
    y = raw / unit

    even_evals = [np.ones(m)]
    odd_evals = [y.copy()]
    even_coefs = [np.empty(0)]
    odd_coefs = [np.empty(0)]
    for t in range(1, m):
        d_even = linsolve.solve(*_even_system(even_evals, y, t))
        d_odd = linsolve.solve(*_odd_system(odd_evals, y, t))
        even_evals.append(_next_eval(y, 2 * t, d_even, even_evals))
        odd_evals.append(_next_eval(y, 2 * t + 1, d_odd, odd_evals))
        even_coefs.append(d_even)
        odd_coefs.append(d_odd)

    # Undo the rescaling: a degree-g evaluation picks up unit**g, the trailing
    # coefficient at power g-2p picks up unit**(2p).
    for t in range(m):
        even_evals[t] = even_evals[t] * unit ** (2 * t)
        odd_evals[t] = odd_evals[t] * unit ** (2 * t + 1)
        gaps = 2.0 * np.arange(1, t + 1)
        even_coefs[t] = even_coefs[t] * unit**gaps
        odd_coefs[t] = odd_coefs[t] * unit**gaps

    return ReducedBasis(
        values=raw,
        even_evals=even_evals,
        odd_evals=odd_evals,
        even_coefs=even_coefs,
        odd_coefs=odd_coefs,
    )


def normalize_row(evals: Sequence[float]) -> tuple[float, np.ndarray]:
    """Scale half-row samples to unit row length.

    Returns ``(c, c * evals)`` with the positive root
    ``c = (2 * sum(evals**2)) ** -0.5``; the factor 2 accounts for the
    mirrored half of the row.
    """
    evals = np.asarray(evals, dtype=float)
    energy = _fdot(evals, evals)
    if energy == 0.0:
        raise ZeroRowError("cannot normalize an all-zero row")
    c = 1.0 / math.sqrt(2.0 * energy)
    return c, c * evals


def assemble_matrix(values: Sequence[float]) -> OrthoMatrix:
    """Generate the 2m x 2m orthonormal matrix for a value set.

    Row 2t samples the even polynomial of degree 2t, row 2t+1 the odd one of
    degree 2t+1, each scaled to unit length with positive normalization; the
    left half is evaluated at the negated values, the right half at the
    positive values in reversed column order (see module docstring).
    """
    basis = induct_basis(values)
    m = basis.m
    n = 2 * m
    entries = np.empty((n, n))
    scales = np.empty(n)
    for t in range(m):
        c_even, unit_even = normalize_row(basis.even_evals[t])
        c_odd, unit_odd = normalize_row(basis.odd_evals[t])
        entries[2 * t, :m] = unit_even
        entries[2 * t, m:] = unit_even[::-1]
        entries[2 * t + 1, :m] = -unit_odd
        entries[2 * t + 1, m:] = unit_odd[::-1]
        scales[2 * t] = c_even
        scales[2 * t + 1] = c_odd
    return OrthoMatrix(n=n, entries=entries, values=basis.values, norm_scales=scales)
