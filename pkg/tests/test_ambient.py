import random
import warnings

import pytest

from subsym.ambient import (
    AmbientModel,
    AmbientSymTensor,
    CompositionParts,
    TracelessMatrix,
    ambient_laplacian,
    central_action_check,
    central_element,
    compose_decompose,
    dv,
    dv_bracket,
    euler_ops,
    higher_symmetry_op,
    mat_mul,
    mat_trace,
    uncorrected_vw0,
    r_poly,
    random_traceless,
    sl_basis,
    trace_projection_oracle,
    u_quadric,
    verify_composition_identity,
)
from subsym.scalars import GR_ZERO, gr, rat
from subsym.weyl import WeylOperator


@pytest.fixture(scope="module")
def m1():
    return AmbientModel(1)


@pytest.fixture(scope="module")
def m2():
    return AmbientModel(2)


def test_r_poly_structure(m1):
    r = r_poly(m1)
    expected = (
        m1.up(0) * m1.dn(0) + m1.up(1) * m1.dn(1) + m1.up(2) * m1.dn(2)
    )
    assert r == expected
    assert m1.bidegree(r) == (1, 1)


def test_euler_eigenvalues(m1):
    E, Eb = euler_ops(m1)
    f = m1.ring.gen("x0", 3) * m1.dn(1)
    assert E.apply(f) == f.scale(3)
    assert Eb.apply(f) == f
    r = r_poly(m1)
    assert E.apply(r) == r and Eb.apply(r) == r


def test_laplacian_of_r_counts_dimensions(m1):
    # the h = 1 instance of the lap(r h) lemma: lap(r) = n + 2
    assert ambient_laplacian(m1).apply(r_poly(m1)) == m1.ring.const(m1.n + 2)


def test_laplacian_kills_unpaired_monomials(m1):
    f = m1.ring.gen("x0", 3) * m1.ring.gen("x_inf", 2)
    assert ambient_laplacian(m1).apply(f) == m1.ring.zero()


def test_traceless_guard():
    with pytest.raises(ValueError):
        TracelessMatrix([[1, 0], [0, 1]])


def test_dv_zero():
    m = AmbientModel(1)
    V = TracelessMatrix([[0] * 3 for _ in range(3)])
    assert not dv(m, V)


def test_commutation_full_basis():
    for n in (1, 2, 3):
        m = AmbientModel(n)
        lap = ambient_laplacian(m)
        rmul = WeylOperator.mul_by(r_poly(m))
        for V in sl_basis(m.N):
            dV = dv(m, V)
            assert not lap.commutator(dV)
            assert not dV.commutator(rmul)


def test_mixed_signature_commutation():
    m = AmbientModel(2, (1, -1))
    lap = ambient_laplacian(m)
    for V in sl_basis(4)[:6]:
        assert not lap.commutator(dv(m, V))


def test_bracket_closure_seeded(m2):
    rng = random.Random(42)
    for _ in range(5):
        V = random_traceless(2, rng)
        W = random_traceless(2, rng)
        assert dv(m2, V).commutator(dv(m2, W)) == dv(m2, dv_bracket(V, W))


def test_bracket_antisymmetry(m2):
    rng = random.Random(1)
    V = random_traceless(2, rng)
    W = random_traceless(2, rng)
    B1 = dv_bracket(V, W)
    B2 = dv_bracket(W, V)
    assert all(
        (B1[i][j] + B2[i][j]) == GR_ZERO for i in range(4) for j in range(4)
    )
    assert dv_bracket(V, V).is_zero()


def test_central_action(m1):
    assert not central_action_check(m1, 0, -1)
    assert not central_action_check(m1, -1, 0)
    assert not central_action_check(m1, -2, 2, bound=2)
    # w1 = w2: eigenvalue 0
    f = m1.up(1) * m1.dn(1)
    assert central_element(m1).apply(f) == m1.ring.zero()


def test_higher_symmetry_d1_reduces_to_dv(m2):
    rng = random.Random(3)
    V = random_traceless(2, rng)
    T = AmbientSymTensor.from_matrix(V)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert higher_symmetry_op(m2, T) == dv(m2, V)


def test_higher_symmetry_commutes(m2):
    rng = random.Random(7)
    T = AmbientSymTensor.random_column_symmetric(2, 4, rng, density=0.2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        op = higher_symmetry_op(m2, T)
    assert not ambient_laplacian(m2).commutator(op)
    assert not op.commutator(WeylOperator.mul_by(r_poly(m2)))


def test_higher_symmetry_column_invariance(m2):
    rng = random.Random(11)
    T = AmbientSymTensor.random_column_symmetric(2, 4, rng, density=0.2)
    assert T.is_column_symmetric()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert higher_symmetry_op(m2, T.column_permuted((1, 0))) == higher_symmetry_op(m2, T)


def test_compose_decompose_trace_free(m2):
    rng = random.Random(42)
    for _ in range(5):
        V = random_traceless(2, rng)
        W = random_traceless(2, rng)
        parts = compose_decompose(m2, V, W, -1, -1)
        assert parts.T.is_totally_trace_free()
        assert parts.vw2.is_column_symmetric()
        assert parts.vw2.is_totally_trace_free()


def test_compose_decompose_n3():
    m3 = AmbientModel(3)
    rng = random.Random(2)
    V = random_traceless(3, rng)
    W = random_traceless(3, rng)
    parts = compose_decompose(m3, V, W, -1, -2)
    assert parts.T.is_totally_trace_free()


def test_trace_oracle_matches_closed_form(m2):
    rng = random.Random(42)
    for _ in range(5):
        V = random_traceless(2, rng)
        W = random_traceless(2, rng)
        parts = compose_decompose(m2, V, W, -1, -1)
        orc = trace_projection_oracle(m2, V, W)
        assert orc is not None
        assert orc[0] == parts.U and orc[1] == parts.Utilde


def test_resolution_reconstructs_tensor_product(m2):
    # V (x) W equals T plus the delta terms, entry by entry
    rng = random.Random(9)
    N = 4
    for _ in range(5):
        V = random_traceless(2, rng)
        W = random_traceless(2, rng)
        parts = compose_decompose(m2, V, W, -1, -1)
        U, Ut = parts.U, parts.Utilde
        upu = [[U[i][j] + Ut[i][j] for j in range(N)] for i in range(N)]
        tr = mat_trace(upu)
        for B in range(N):
            for D in range(N):
                for A in range(N):
                    for C in range(N):
                        val = parts.T.entries.get(((B, D), (A, C)), GR_ZERO)
                        if B == C:
                            val = val + U[D][A]
                        if D == A:
                            val = val + Ut[B][C]
                        if B == A:
                            val = val - upu[D][C] * gr(rat(1, N))
                        if D == C:
                            val = val - upu[B][A] * gr(rat(1, N))
                        if B == A and D == C:
                            val = val + tr * gr(rat(1, N * N))
                        assert val == V[B][A] * W[D][C]


def test_vw1_reduces_to_half_bracket_when_weights_equal(m2):
    rng = random.Random(13)
    V = random_traceless(2, rng)
    W = random_traceless(2, rng)
    parts = compose_decompose(m2, V, W, -1, -1)  # w1 = w2
    VW = mat_mul(V.entries, W.entries)
    WV = mat_mul(W.entries, V.entries)
    half = gr(rat(-1, 2))
    expected = [[(VW[i][j] - WV[i][j]) * half for j in range(4)] for i in range(4)]
    assert parts.vw1.entries == expected


def test_vw1_antisymmetric_part_vanishes_for_equal_matrices(m2):
    rng = random.Random(17)
    V = random_traceless(2, rng)
    parts = compose_decompose(m2, V, V, -1, -1)
    assert parts.vw1.is_zero()


def test_composition_identity_seeded(m2):
    rng = random.Random(42)
    for _ in range(2):
        V = random_traceless(2, rng)
        W = random_traceless(2, rng)
        assert not verify_composition_identity(m2, V, W, -1, -1, degree_bound=2)


def test_composition_identity_other_weights():
    m = AmbientModel(1)
    rng = random.Random(5)
    V = random_traceless(1, rng)
    W = random_traceless(1, rng)
    assert not verify_composition_identity(m, V, W, 0, -1, degree_bound=2)
    assert not verify_composition_identity(m, V, W, -1, 0, degree_bound=2)


def test_weight_precondition(m2):
    rng = random.Random(1)
    V = random_traceless(2, rng)
    W = random_traceless(2, rng)
    with pytest.raises(ValueError):
        compose_decompose(m2, V, W, 0, 0)


def test_corrected_scalar_differs_from_printed(m2):
    rng = random.Random(42)
    V = random_traceless(2, rng)
    W = random_traceless(2, rng)
    parts = compose_decompose(m2, V, W, -1, -1)
    assert parts.vw0 != uncorrected_vw0(m2, V, W, -1, -1)


def test_principal_part_of_composition_is_top_quadratic_form(m2):
    # the order-2 part of D_V D_W is the quadratic form of the raw V (x) W
    from subsym.ambient import t_part_operator

    rng = random.Random(21)
    V = random_traceless(2, rng)
    W = random_traceless(2, rng)
    N = 4
    raw = AmbientSymTensor(
        2,
        N,
        {
            ((B, D), (A, C)): V[B][A] * W[D][C]
            for B in range(N)
            for D in range(N)
            for A in range(N)
            for C in range(N)
        },
    )
    comp = dv(m2, V).compose(dv(m2, W))
    assert comp.principal_part(2) == t_part_operator(m2, raw).principal_part(2)


def test_sampled_operator_equality_helper(m1):
    from subsym.weyl import equal_on_monomials

    a = ambient_laplacian(m1)
    b = ambient_laplacian(m1)
    assert equal_on_monomials(a, b, 2)
    assert not equal_on_monomials(a, a + WeylOperator.identity(m1.ring), 2)


def test_uncorrected_scalar_fails_identity(m2):
    # regression guard: the correction is load-bearing
    from subsym.ambient import composition_rhs_operator, bidegree_monomials

    rng = random.Random(42)
    V = random_traceless(2, rng)
    W = random_traceless(2, rng)
    parts = compose_decompose(m2, V, W, -1, -1)
    wrong = uncorrected_vw0(m2, V, W, -1, -1) - parts.vw0
    lhs = dv(m2, V).compose(dv(m2, W))
    rhs = composition_rhs_operator(m2, V, W, -1, -1) + WeylOperator.identity(m2.ring).scale(wrong)
    f = next(iter(bidegree_monomials(m2, -1, -1, 2)))
    assert lhs.apply(f) != rhs.apply(f)
