"""Brute-force reference constructions used by the test suite.

These deliberately avoid the coefficient-induction path: the Gram-Schmidt
oracle orthonormalizes the raw monomial family over the mirrored sample
points, and the small-case oracle solves the t=1 coefficient equations in
closed form with exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegenerateFamilyError

# Post-projection norm below this fraction of the original row norm means the
# monomial family is linearly dependent (duplicate sample values).
COLLAPSE_RTOL = 1e-12


def gram_schmidt_matrix(values: Sequence[float]) -> np.ndarray:
    """Orthonormal rows spanning monomials of increasing degree on +/-values.

    Uses the same column layout as the generator (negated values in input
    order, then positive values reversed) so rows are directly comparable up
    to a per-row sign. Modified Gram-Schmidt with one reorthogonalization
    pass; values are pre-divided by their maximum, which cannot change the
    result (each monomial row is scaled by a positive constant) but keeps the
    family well conditioned.
    """
    vals = np.asarray(values, dtype=float)
    x = np.concatenate([-vals, vals[::-1]])
    x = x / np.abs(x).max()
    n = x.size
    rows: list[np.ndarray] = []
    for degree in range(n):
        row = x**degree
        original_norm = float(np.linalg.norm(row))
        for _ in range(2):
            for basis_row in rows:
                row = row - np.dot(row, basis_row) * basis_row
        norm = float(np.linalg.norm(row))
        if norm < COLLAPSE_RTOL * original_norm:
            raise DegenerateFamilyError(
                f"monomial of degree {degree} collapses under projection; "
                "sample values are not distinct"
            )
        rows.append(row / norm)
    return np.vstack(rows)


def small_case_coefficients(values: Sequence[float]) -> tuple[Fraction, ...]:
    """Exact trailing coefficients of the first nontrivial polynomials, m <= 2.

    For two values this solves the 1x1 systems directly: the degree-2 even
    polynomial x^2 + d has d = -(sum y^2)/m, and the degree-3 odd polynomial
    x^3 + d*x has d = -(sum y^4)/(sum y^2). Returns () for m = 1.
    """
    vals = [Fraction(v) for v in values]
    m = len(vals)
    if m > 2:
        raise ValueError(f"closed form implemented only for m <= 2, got m={m}")
    if m <= 1:
        return ()
    sum_sq = sum(v**2 for v in vals)
    sum_quad = sum(v**4 for v in vals)
    d_even = -sum_sq / m
    d_odd = -sum_quad / sum_sq
    return (d_even, d_odd)
