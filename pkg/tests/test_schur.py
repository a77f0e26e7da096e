import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from gnmoments.errors import IndexOutOfRange, NoNormalIndex
from gnmoments.exact import MomentSequence, Polynomial, RationalFunction, moments_of
from gnmoments.hankel import hankel_matrix, inertia, normal_indices
from gnmoments.schur import PolyMatrix2x2, pq_polynomials, resolvent, schur_chain, schur_step

from oracles import inertia_oracle, rand_sequence, rand_strict_rf, sequences

lam = Polynomial.x()
ONE = Polynomial((1,))


def S(*xs):
    return MomentSequence(xs)


def step_tuple(st):
    return (st.gap, st.p, st.eps, st.a_sq, st.induced)


def test_step_examples():
    assert step_tuple(schur_step(S(1, 0, 1, 0, 1))) == (1, lam, 1, 1, S(1, 0, 0))
    assert step_tuple(schur_step(S(1, 1, 1, 1, 1))) == (1, lam - 1, 1, 1, S(0, 0, 0))
    assert step_tuple(schur_step(S(0, 1, 0, 1))) == (2, lam**2 - 1, 1, 1, S())


def test_step_without_normal_index():
    with pytest.raises(NoNormalIndex):
        schur_step(S(0, 0, 0))


def test_step_example_functions():
    # the step relation -s_m/phi = p + eps a^2 phi_1 on the functions themselves
    phi = RationalFunction(-lam, lam**2 - 1)
    phi1 = RationalFunction(-1) / phi - RationalFunction(lam)
    assert moments_of(phi1, 2) == S(1, 0, 0)
    phi = RationalFunction(-1, lam - 1)
    assert RationalFunction(-1) / phi == RationalFunction(lam - 1)


def test_chain_examples():
    c = schur_chain(S(1, 0, 1, 0, 1))
    assert [step_tuple(s)[:4] for s in c.steps] == [(1, lam, 1, 1), (1, lam, 1, 1)]
    assert c.residual == S(0)
    c = schur_chain(S(1, 1, 1, 1, 1))
    assert [step_tuple(s)[:4] for s in c.steps] == [(1, lam - 1, 1, 1)]
    assert c.residual == S(0, 0, 0)
    c = schur_chain(S(0, 0, 0))
    assert c.steps == () and c.residual == S(0, 0, 0)


def test_pq_examples():
    assert pq_polynomials(schur_chain(S(1, 0, 1, 0, 1))) == ([ONE, lam, lam**2 - 1], [Polynomial(), ONE, lam])
    assert pq_polynomials(schur_chain(S(1, 1, 1, 1, 1))) == ([ONE, lam - 1], [Polynomial(), ONE])
    assert pq_polynomials(schur_chain(S(0, 0, 0))) == ([ONE], [Polynomial()])


def test_resolvent_examples():
    W = resolvent(schur_chain(S(1, 0, 1, 0, 1)), 2)
    assert W == PolyMatrix2x2.of([[-1, -lam], [lam, lam**2 - 1]])
    assert W.scale == 1 and W.det() == ONE
    W = resolvent(schur_chain(S(-1, 0)), 1)
    assert W == PolyMatrix2x2.of([[0, 1], [-1, lam]]) and W.scale == 1
    assert resolvent(schur_chain(S(3, 1, 4)), 0) == PolyMatrix2x2.identity()


def test_resolvent_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        resolvent(schur_chain(S(1, 0, 1, 0, 1)), 3)


def test_chain_of_rational_moments_reconstructs_function():
    # W applied to the last induced function returns phi (scaled by the moment scale)
    rng = random.Random(13)
    for _ in range(60):
        r = rng.randint(1, 4)
        phi = rand_strict_rf(rng, r)
        ell = 2 * r + rng.randint(0, 2)
        c = schur_chain(moments_of(phi, ell))
        cur = phi * RationalFunction(1 / c.moment_scale)
        for st in c.steps:
            cur = _induced_function(cur, st)
        W = resolvent(c)
        back = (RationalFunction(W.w11) * cur + RationalFunction(W.w12)) / (RationalFunction(W.w21) * cur + RationalFunction(W.w22))
        assert back * RationalFunction(c.moment_scale) == phi


def _induced_function(phi, st):
    # -s_m/phi = p + eps a^2 phi_1 with s_m = eps after normalization
    return (RationalFunction(-st.eps) / phi - RationalFunction(st.p)) / RationalFunction(st.eps * st.a_sq)


def test_induced_sequences_are_moments_of_induced_functions():
    rng = random.Random(17)
    for _ in range(60):
        phi = rand_strict_rf(rng, rng.randint(1, 4))
        c = schur_chain(moments_of(phi, rng.randint(2, 12)))
        cur = phi * RationalFunction(1 / c.moment_scale)
        for st in c.steps:
            cur = _induced_function(cur, st)
            if len(st.induced):
                assert moments_of(cur, st.induced.ell) == st.induced


# properties
@given(sequences(1, 13))
def test_determinant_invariant(s):
    c = schur_chain(s)
    scale = F(1)
    for j in range(c.N + 1):
        if j:
            scale *= c.steps[j - 1].a_sq
        W = resolvent(c, j)
        assert W.scale == scale
        assert W.det() == Polynomial((scale,))


@given(sequences(1, 13))
def test_wronskian_is_constant(s):
    P, Q = pq_polynomials(schur_chain(s))
    for j in range(1, len(P)):
        assert (P[j] * Q[j - 1] - P[j - 1] * Q[j]).degree <= 0


@given(sequences(1, 13))
def test_chain_shape(s):
    c = schur_chain(s)
    assert c.normal_indices == normal_indices(s).indices[: c.N] or c.N == 0
    assert c.n_N == sum(st.gap for st in c.steps)
    assert list(c.kappa_offsets) == sorted(c.kappa_offsets)
    P, _ = pq_polynomials(c)
    assert [p.degree for p in P[1:]] == list(c.normal_indices)
    for st in c.steps:
        assert st.p.is_monic() and st.a_sq > 0
        f = st.induced.first_nonzero()
        assert f is None or abs(st.induced[f]) == 1


@given(sequences(1, 13))
def test_normal_index_shift(s):
    ni = normal_indices(s).indices
    assume(len(ni) >= 1)
    st = schur_step(s)
    if len(st.induced):
        assert normal_indices(st.induced).indices == tuple(k - ni[0] for k in ni[1:])


@given(sequences(1, 13))
def test_degeneracy_transport(s):
    c = schur_chain(s)
    if c.n_N < s.n + 1 and len(c.residual):
        assert not normal_indices(c.residual)


def _bookkeeping_holds(s) -> bool:
    """Induced Hankel inertia after step j equals that of S_i minus S_{n_j - 1}."""
    c = schur_chain(s)
    n, nj = s.n, 0
    for st in c.steps:
        nj += st.gap
        base = inertia_oracle(hankel_matrix(c.source, nj).rows())
        if not len(st.induced):
            continue
        for i in range(nj, n + 1):
            ind = inertia(hankel_matrix(st.induced, i - nj + 1))
            full = inertia(hankel_matrix(c.source, i + 1))
            if (ind.nu_plus, ind.nu_minus) != (full.nu_plus - base[0], full.nu_minus - base[2]):
                return False
            if ind.nu_zero != full.nu_zero:
                return False
    return True


@given(sequences(1, 13))
def test_inertia_bookkeeping(s):
    assert _bookkeeping_holds(s)


def test_inertia_bookkeeping_random():
    rng = random.Random(19)
    for _ in range(100):
        assert _bookkeeping_holds(rand_sequence(rng, rng.randint(0, 12)))
