"""Property suites that do not depend on golden values."""

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from kumcoh import fock
from kumcoh import intlat as il
from kumcoh import sympfin as sf
from kumcoh import torusring as tr

PROP = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

coeff = st.integers(-3, 3)
torus_class = st.lists(coeff, min_size=16, max_size=16).map(tr.TorusClass)
basis_index = st.integers(0, 15)


# ---------------------------------------------------------------- exterior algebra

@PROP
@given(basis_index, basis_index)
def test_torus_supercommutative(i, j):
    x, y = tr.TorusClass.basis(i), tr.TorusClass.basis(j)
    assert x * y == y * x * ((-1) ** (tr.degree_of(i) * tr.degree_of(j)))


@PROP
@given(torus_class, torus_class, torus_class)
def test_torus_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


# ---------------------------------------------------------------- cup product on A^[2]

def _token(k, i):
    return fock.MultWord.G(k, tr.TorusClass.basis(i)), tr.degree_of(i) + 2 * k


mult_token = st.one_of(
    st.just((fock.MultWord.D(), 2)),
    st.builds(_token, st.integers(0, 1), basis_index),
)


@PROP
@given(mult_token, mult_token)
def test_cup_supercommutative(a, b):
    (w1, d1), (w2, d2) = a, b
    assert fock.class_of(w1 * w2, 2) == fock.class_of(w2 * w1, 2) * ((-1) ** (d1 * d2))


@PROP
@given(mult_token, mult_token, mult_token)
def test_cup_associative(a, b, c):
    (w1, _), (w2, _), (w3, _) = a, b, c
    left = fock.apply_mult_word(w1, fock.apply_mult_word(w2, fock.class_of(w3, 2)))
    assert left == fock.class_of(w1 * w2 * w3, 2)


# ---------------------------------------------------------------- adjointness

MONOS2 = fock.enumerate_monomials(2)
MONOS1 = fock.enumerate_monomials(1)


@PROP
@given(mult_token, st.sampled_from(MONOS2), st.sampled_from(MONOS2))
def test_cup_operator_self_adjoint(tok, mx, my):
    w, dw = tok
    x, y = fock.FockState({mx: 1}), fock.FockState({my: 1})
    left = fock.vacuum_pairing(fock.apply_mult_word(w, x), y)
    right = fock.vacuum_pairing(x, fock.apply_mult_word(w, y))
    assert left == right * ((-1) ** (dw * x.degree()))


@PROP
@given(basis_index, st.sampled_from(MONOS1), st.sampled_from(MONOS2))
def test_creation_adjoint_in_second_slot(i, mu, mv):
    # (v, q_1(a) u) = (-1) (-1)^{|a||v|} (q_{-1}(a) v, u)
    a = tr.TorusClass.basis(i)
    u, v = fock.FockState({mu: 1}), fock.FockState({mv: 1})
    left = fock.vacuum_pairing(v, fock.act(fock.op_q(1, a), u))
    right = fock.vacuum_pairing(fock.act(fock.op_q(-1, a), v), u)
    assert left == -right * ((-1) ** (tr.degree_of(i) * v.degree()))


@PROP
@given(st.sampled_from(MONOS2), st.sampled_from(MONOS2))
def test_pairing_graded_symmetric(mx, my):
    x, y = fock.FockState({mx: 1}), fock.FockState({my: 1})
    assert fock.vacuum_pairing(x, y) == fock.vacuum_pairing(y, x) * ((-1) ** (x.degree() * y.degree()))


# ---------------------------------------------------------------- Smith normal form

def int_matrix(rows, cols, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols), min_size=rows, max_size=rows)


matrices = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(lambda s: int_matrix(*s))


@PROP
@given(matrices)
def test_snf_postconditions(m):
    u, d, v = il.snf(m, check=False)
    assert il.matmul(il.matmul(u, m), v) == d
    assert abs(il.det_int(u)) == 1 and abs(il.det_int(v)) == 1
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            assert i == j or x == 0
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert nz == diag[: len(nz)]
    assert all(nz[k + 1] % nz[k] == 0 for k in range(len(nz) - 1))


@PROP
@given(matrices)
def test_snf_factor_product_is_det(m):
    # for a square matrix the product of invariant factors is |det|
    n = min(len(m), len(m[0]))
    sq = [r[:n] for r in m[:n]]
    det = abs(il.det_int(sq))
    facs = il.invariant_factors(sq)
    prod = 1
    for f in facs:
        prod *= f
    assert (prod if len(facs) == n else 0) == det


# ---------------------------------------------------------------- lattices

def _nonsingular(m):
    return il.det_int(m) != 0


square3 = int_matrix(3, 3, -4, 4).filter(_nonsingular)
pos_def3 = st.tuples(int_matrix(3, 3, -2, 2).filter(_nonsingular)).map(
    lambda t: il.matmul(t[0], il.transpose(t[0])))


@PROP
@given(pos_def3, square3)
def test_discriminant_index_consistency(gram, m):
    sup = il.IntLattice.from_gram(gram)
    sub = il.IntLattice(m, gram)
    idx = il.index(sub, sup)
    assert idx == abs(il.det_int(m))
    assert idx * idx * il.discr(sup) == il.discr(sub)


@PROP
@given(int_matrix(2, 4, -5, 5).filter(lambda m: il.rank(m) == 2))
def test_saturation_idempotent(rows):
    amb = il.IntLattice.from_gram(il.identity(4))
    sub = il.IntLattice(rows, amb.ambient)
    sat = il.saturate(sub, amb)
    again = il.saturate(sat, amb)
    assert il.rational_hnf(sat.basis) == il.rational_hnf(again.basis)
    assert all(sat.contains(r) for r in rows)
    prod = 1
    for f in il.quotient_invariants(sub, sat):
        prod *= f
    assert prod == il.index(sub, sat)


# ---------------------------------------------------------------- symplectic

@settings(max_examples=4, deadline=None)
@given(st.sampled_from([2, 3]))
def test_m_equals_n(q):
    assert sf.ideal_dims(q).m_equals_n


@PROP
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_transvection_preserves_form(q, v):
    sp = sf.SympSpace(q)
    t = sp.transvection(np.array(v) % q)
    assert not ((t.T @ sp.form @ t - sp.form) % q).any()


@PROP
@given(st.sampled_from([3, 5]), st.lists(st.integers(0, 4), min_size=4, max_size=4),
       st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_transvection_preserves_isotropy(q, v, w):
    sp = sf.SympSpace(q)
    t = sp.transvection(np.array(v) % q)
    x, y = np.array(w) % q, np.array(v[::-1]) % q
    assert sp.omega(t @ x % q, t @ y % q) == sp.omega(x, y)
