import numpy as np
import pytest

from conftest import random_values
from orthogen.core import (
    assemble_matrix,
    build_even_system,
    build_odd_system,
    induct_basis,
    normalize_row,
    validate_values,
)
from orthogen.errors import ConditioningWarning, DegenerateValuesError, ZeroRowError
from orthogen.linsolve import determinant, solve
from orthogen.presets import preset_values
from reference_matrices import DCT_8, DTT_4


def test_even_system_two_values():
    basis = induct_basis([1.0, 2.0])
    system = build_even_system(basis, 1)
    np.testing.assert_allclose(system.matrix, [[2.0]], atol=1e-15)
    np.testing.assert_allclose(system.rhs, [-5.0], atol=1e-15)
    assert solve(system.matrix, system.rhs)[0] == pytest.approx(-2.5, abs=1e-14)
    # the resulting quadratic is orthogonal to the constant over the values
    assert (1.0 - 2.5) + (4.0 - 2.5) == pytest.approx(0.0)


def test_odd_system_two_values():
    basis = induct_basis([1.0, 2.0])
    system = build_odd_system(basis, 1)
    np.testing.assert_allclose(system.matrix, [[5.0]], atol=1e-15)
    np.testing.assert_allclose(system.rhs, [-17.0], atol=1e-15)
    assert solve(system.matrix, system.rhs)[0] == pytest.approx(-3.4, abs=1e-14)
    assert 1.0 * (1.0 - 3.4) + 2.0 * (8.0 - 6.8) == pytest.approx(0.0, abs=1e-12)


def test_degree_index_bounds():
    basis = induct_basis([1.0, 2.0])
    with pytest.raises(ValueError):
        build_even_system(basis, 0)
    with pytest.raises(ValueError):
        build_odd_system(basis, 2)


def test_two_value_coefficients():
    basis = induct_basis([1.0, 2.0])
    assert basis.even_coefs[1][0] == pytest.approx(-2.5, abs=1e-14)
    assert basis.odd_coefs[1][0] == pytest.approx(-3.4, abs=1e-14)


def test_single_value_basis():
    basis = induct_basis([3.0])
    np.testing.assert_allclose(basis.even_evals[0], [1.0])
    np.testing.assert_allclose(basis.odd_evals[0], [3.0])
    assert basis.even_coefs[0].size == 0
    assert basis.odd_coefs[0].size == 0


def test_base_case_evaluations():
    vals = [0.9, 0.5, 0.2]
    basis = induct_basis(vals)
    np.testing.assert_allclose(basis.even_evals[0], np.ones(3))
    np.testing.assert_allclose(basis.odd_evals[0], vals)


# Monic coefficients of the Chebyshev-rooted family, highest power first.
DCT_EVEN_COEFS = [[], [-0.5], [-1.0, 0.125], [-1.5, 0.5625, -0.03125]]
DCT_ODD_COEFS = [[], [-0.75], [-1.25, 0.3125], [-1.75, 0.875, -0.109375]]


def test_dct_coefficients():
    basis = induct_basis(preset_values("dct", 8))
    for t in range(4):
        np.testing.assert_allclose(basis.even_coefs[t], DCT_EVEN_COEFS[t], atol=1e-9)
        np.testing.assert_allclose(basis.odd_coefs[t], DCT_ODD_COEFS[t], atol=1e-9)


# Published 7-decimal coefficients of the arithmetic-sequence family on
# {1/8, 3/8, 5/8, 7/8}.
DTT8_EVEN_COEFS = [
    [],
    [-0.3281250],
    [-0.7991071, 0.0725098],
    [-1.1434659, 0.3055975, -0.0111580],
]
DTT8_ODD_COEFS = [
    [],
    [-0.5781250],
    [-0.9895833, 0.1826288],
    [-1.2536058, 0.4145900, -0.0312727],
]


def test_dtt_coefficients():
    basis = induct_basis(preset_values("dtt", 8))
    for t in range(4):
        np.testing.assert_allclose(basis.even_coefs[t], DTT8_EVEN_COEFS[t], atol=5e-8)
        np.testing.assert_allclose(basis.odd_coefs[t], DTT8_ODD_COEFS[t], atol=5e-8)


def test_same_parity_discrete_orthogonality():
    rng = np.random.default_rng(23)
    for _ in range(20):
        m = int(rng.integers(2, 9))
        basis = induct_basis(random_values(rng, m))
        for evals in (basis.even_evals, basis.odd_evals):
            stacked = np.vstack(evals)
            gram = stacked @ stacked.T
            scale = np.abs(np.diag(gram)).max()
            off = gram - np.diag(np.diag(gram))
            assert np.abs(off).max() <= 1e-8 * scale


def test_normalize_row_examples():
    c, unit = normalize_row([1.0, 1.0, 1.0, 1.0])
    assert c == pytest.approx(1 / np.sqrt(8))
    assert 2 * np.sum(unit**2) == pytest.approx(1.0, abs=1e-12)

    c, _ = normalize_row([1.0])
    assert c == pytest.approx(1 / np.sqrt(2))

    c, unit = normalize_row([0.75, 0.25])
    np.testing.assert_allclose(np.abs(unit), [0.6708204, 0.2236068], atol=5e-8)


def test_normalize_row_zero_raises():
    with pytest.raises(ZeroRowError):
        normalize_row([0.0, 0.0])


def test_validate_rejects_bad_values():
    with pytest.raises(DegenerateValuesError, match="duplicate value 1"):
        validate_values([1.0, 1.0, 2.0])
    with pytest.raises(DegenerateValuesError, match="non-positive value -3"):
        validate_values([1.0, -3.0])
    with pytest.raises(DegenerateValuesError, match="non-positive value 0"):
        validate_values([0.0, 1.0])
    with pytest.raises(DegenerateValuesError, match="non-finite"):
        validate_values([1.0, np.nan])
    with pytest.raises(DegenerateValuesError):
        validate_values([])


def test_validate_warns_on_near_duplicates():
    with pytest.warns(ConditioningWarning, match="relative gap"):
        validate_values([1.0, 1.0 + 1e-9])


def test_validate_soft_cap_and_env_override(monkeypatch):
    values = np.linspace(1.0, 2.0, 17)
    with pytest.warns(ConditioningWarning, match="soft cap"):
        validate_values(values)
    monkeypatch.setenv("ORTHOGEN_MAX_M", "32")
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        validate_values(values)


def test_assemble_two_by_two():
    r = 1 / np.sqrt(2)
    for y in (1.0, 0.3, 42.0):
        matrix = assemble_matrix([y])
        np.testing.assert_allclose(matrix.entries, [[r, r], [-r, r]], atol=1e-15)


def test_assemble_dct_matches_reference():
    matrix = assemble_matrix(preset_values("dct", 8))
    np.testing.assert_allclose(matrix.entries, DCT_8, atol=5e-7)


def test_assemble_dtt4_matches_reference():
    matrix = assemble_matrix([0.75, 0.25])
    np.testing.assert_allclose(matrix.entries, DTT_4, atol=5e-7)


def test_dct_norm_scales():
    matrix = assemble_matrix(preset_values("dct", 8))
    expected = [1 / np.sqrt(8), 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0]
    np.testing.assert_allclose(matrix.norm_scales, expected, rtol=1e-12)


def test_dtt_norm_scales():
    # published 7-decimal row scale factors of the n=8 arithmetic family
    matrix = assemble_matrix(preset_values("dtt", 8))
    expected = [
        1 / np.sqrt(8),
        0.6172134,
        1.2344268,
        2.6259518,
        6.0168115,
        15.3381041,
        46.2167518,
        190.4421354,
    ]
    np.testing.assert_allclose(matrix.norm_scales, expected, rtol=1e-6)


def test_orthonormality_random_sets():
    rng = np.random.default_rng(5)
    for _ in range(40):
        m = int(rng.integers(1, 9))
        matrix = assemble_matrix(random_values(rng, m))
        gram = matrix.entries @ matrix.entries.T
        assert np.abs(gram - np.eye(matrix.n)).max() <= 1e-9


def test_row_norms_unit():
    rng = np.random.default_rng(6)
    matrix = assemble_matrix(random_values(rng, 6))
    norms = np.linalg.norm(matrix.entries, axis=1)
    np.testing.assert_allclose(norms, 1.0, atol=1e-12)


def test_mirror_parity_layout():
    rng = np.random.default_rng(8)
    matrix = assemble_matrix(random_values(rng, 5))
    n = matrix.n
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    np.testing.assert_allclose(
        matrix.entries, signs[:, None] * matrix.entries[:, ::-1], atol=1e-12
    )


def test_scale_invariance():
    rng = np.random.default_rng(9)
    for _ in range(10):
        m = int(rng.integers(1, 9))
        vals = random_values(rng, m)
        base = assemble_matrix(vals).entries
        for lam in (1e-2, 0.5, 3.0, 1e2):
            scaled = assemble_matrix(lam * vals).entries
            assert np.abs(scaled - base).max() <= 1e-9


def test_permutation_equivariance():
    rng = np.random.default_rng(10)
    vals = random_values(rng, 6)
    m = vals.size
    base = assemble_matrix(vals).entries
    perm = rng.permutation(m)
    permuted = assemble_matrix(vals[perm]).entries
    # column of value perm[k] sits at k on the left and at n-1-k on the right
    for k in range(m):
        np.testing.assert_allclose(permuted[:, k], base[:, perm[k]], atol=1e-12)
        np.testing.assert_allclose(
            permuted[:, 2 * m - 1 - k], base[:, 2 * m - 1 - perm[k]], atol=1e-12
        )


def test_determinant_recurrence():
    # Growing a system appends the previous moment column and a new row, so
    # expanding along that row gives det(A_t) = (-1)^(t+1) * det(A_{t-1}) *
    # sum_k P_{2(t-1)}(y_k)^2; the cofactor sign alternates because the
    # columns hold powers in descending order. Same for the odd family.
    rng = np.random.default_rng(12)
    for _ in range(10):
        basis = induct_basis(random_values(rng, 5))
        for t in (2, 3, 4):
            sign = (-1.0) ** (t + 1)
            even_t = determinant(build_even_system(basis, t).matrix)
            even_prev = determinant(build_even_system(basis, t - 1).matrix)
            growth = float(np.sum(basis.even_evals[t - 1] ** 2))
            assert even_t == pytest.approx(sign * even_prev * growth, rel=1e-6)

            odd_t = determinant(build_odd_system(basis, t).matrix)
            odd_prev = determinant(build_odd_system(basis, t - 1).matrix)
            growth = float(np.sum(basis.odd_evals[t - 1] ** 2))
            assert odd_t == pytest.approx(sign * odd_prev * growth, rel=1e-6)


def test_assemble_propagates_validation_errors():
    with pytest.raises(DegenerateValuesError):
        assemble_matrix([2.0, 2.0])
