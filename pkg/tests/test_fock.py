from fractions import Fraction
from itertools import product

import pytest

from kumcoh import fock
from kumcoh import torusring as tr

ONE, X, a, s = tr.ONE, tr.X, tr.a, tr.astar
B = [tr.TorusClass.basis(i) for i in range(16)]


def _gen_binom(r, j):
    out = Fraction(1)
    for k in range(j):
        out = out * (r - k) / (k + 1)
    return out


def goettsche_oracle(n):
    """Poincare polynomial of A^[n] from the product formula, as a truncated series in q."""
    b = (1, 4, 6, 4, 1)
    series = {(0, 0): Fraction(1)}  # (q-degree, t-degree) -> coefficient
    for k in range(1, n + 1):
        for i, bi in enumerate(b):
            # factor (1 + u)^r with u = -(-1)^i t^(2k-2+i) q^k
            r, c, e = -(-1) ** i * bi, -(-1) ** i, 2 * k - 2 + i
            out = {}
            for (qd, td), v in series.items():
                j = 0
                while qd + j * k <= n:
                    key = (qd + j * k, td + j * e)
                    out[key] = out.get(key, 0) + v * _gen_binom(r, j) * c ** j
                    j += 1
            series = out
    return tuple(int(series.get((n, d), 0)) for d in range(4 * n + 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_goettsche_against_product_formula(n):
    assert fock.goettsche_betti(n) == goettsche_oracle(n)


def test_monomial_count_matches_betti():
    for n in (1, 2, 3):
        assert len(fock.enumerate_monomials(n)) == sum(fock.goettsche_betti(n))


def test_vacuum_and_unit():
    assert fock.unit(0) == fock.FockState.vacuum()
    assert fock.integral(fock.state((1, X), (1, X))) == 1
    assert fock.integral(fock.state((2, X))) == 0
    assert fock.integral(fock.state((3, X))) == 0
    assert fock.integral(fock.state((1, X), (1, X), (1, X))) == 1


def test_zero_state_pairs_to_zero():
    z = fock.state((1, X)) - fock.state((1, X))
    assert z.is_zero()
    assert fock.vacuum_pairing(z, fock.state((1, ONE), (1, ONE))) == 0


def test_weight_mismatch_raises():
    with pytest.raises(ValueError):
        fock.vacuum_pairing(fock.state((1, X)), fock.state((1, ONE), (1, X)))


def test_heisenberg_relation():
    # [q_{-m}(a), q_m(b)] = -m integral(ab) on the vacuum
    v = fock.unit(0)
    for ia, ib in [(0, 15), (15, 0), (1, 14), (14, 1), (5, 10), (3, 3)]:
        for m in (1, 2, 3):
            c = fock.supercommutator(fock.op_q(-m, B[ia]), fock.op_q(m, B[ib]))
            assert fock.act(c, v) == v * (-m * tr.integrate(B[ia] * B[ib]))


def test_heisenberg_commuting_creators():
    for ia, ib in product((0, 1, 5, 15), repeat=2):
        c = fock.supercommutator(fock.op_q(1, B[ia]), fock.op_q(2, B[ib]))
        assert fock.act(c, fock.unit(0)).is_zero()


def test_pairing_graded_symmetry():
    states = [fock.FockState({m: 1}) for m in fock.enumerate_monomials(2)]
    for x in states:
        for y in states:
            if x.degree() + y.degree() != 8:
                continue
            sign = (-1) ** (x.degree() * y.degree())
            assert fock.vacuum_pairing(x, y) == sign * fock.vacuum_pairing(y, x)


def test_boundary_on_h2():
    for n in (2, 3):
        src = fock.state((2, X), *[(1, X)] * (n - 2))
        assert fock.apply_mult_word(fock.MultWord.D(), src) == fock.state(*[(1, X)] * n)


def test_boundary_of_unit():
    # d.1 = -1/2 q2(1) q1(1)^(n-2)|0>
    for n in (2, 3):
        got = fock.apply_mult_word(fock.MultWord.D(), fock.unit(n))
        assert got == fock.state((2, ONE), *[(1, ONE)] * (n - 2), coeff=Fraction(-1, 2))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_creation_from_dq1(m):
    battery = [fock.unit(0), fock.state((1, X)), fock.state((1, a(2))), fock.state((1, ONE), (1, a(3)))]
    for c in (ONE, a(1), a(1) * a(2), X):
        ok, bad = fock.creation_from_dq1(m, c, battery)
        assert ok, bad


def test_a2_basis_size_and_degrees():
    rows = fock.hilb_basis_a2()
    assert len(rows) == 144
    assert [sum(1 for r in rows if r.degree == d) for d in range(9)] == list(fock.goettsche_betti(2))


def test_a2_blocks_unimodular():
    rep = fock.a2_block_report()
    assert set(rep) == {0, 1, 2, 3, 4}
    for info in rep.values():
        assert abs(info["det"]) == 1


def test_a2_word_basis_spans_same_lattice():
    rep = fock.word_basis_report()
    assert sorted(rep) == list(range(9))
    for d, info in rep.items():
        assert info["integral"], d
        assert abs(info["det"]) == 1, d


def test_a2_odd_pairings():
    assert fock.vacuum_pairing(fock.state((2, a(1))), fock.state((2, s(1)))) == 2
    assert fock.vacuum_pairing(fock.state((1, ONE), (1, s(1))), fock.state((1, X), (1, a(1)))) == 1


def _kummer_odd_pair():
    h = Fraction(1, 2)
    p1 = (fock.state((1, s(1)), (1, ONE), (1, ONE), coeff=h), fock.state((1, a(1) * a(2)), (1, s(2)), (1, ONE)))
    p2 = (fock.state((2, a(1)), (1, ONE), coeff=h), fock.state((2, s(1)), (1, ONE)))
    return p1, p2


def test_kummer_odd_pairings_are_units():
    for x, y in _kummer_odd_pair():
        assert abs(fock.kummer_pairing(x, y)) == 1


def test_kummer_sign_not_fixed_by_argument_order():
    # reversing the pairing order flips the Kummer signs together with the A^[2] ones
    (x1, y1), (x2, y2) = _kummer_odd_pair()
    forward = (fock.kummer_pairing(x1, y1), fock.kummer_pairing(x2, y2))
    backward = (fock.kummer_pairing(y1, x1), fock.kummer_pairing(y2, x2))
    assert backward == (-forward[0], -forward[1])
    assert fock.vacuum_pairing(fock.state((2, s(1))), fock.state((2, a(1)))) == -2


def test_kummer_class_e4():
    # e is the class of -d, so e^4 = d^4 on K_2(A)
    k, d = fock.kummer_word(), fock.MultWord.D()
    assert fock.integral(fock.apply_mult_word(k * d ** 4, fock.unit(3))) == 324
    e = fock.state((2, ONE), (1, ONE), coeff=Fraction(1, 2))
    assert e == -fock.apply_mult_word(d, fock.unit(3))


def test_multiplication_g_on_odd_class():
    g = fock.apply_mult_word(fock.MultWord.G(1, a(1)), fock.state((2, s(1)), (1, ONE)))
    assert g == fock.state((3, X), coeff=2) - fock.state((1, X), (1, X), (1, ONE))


def test_theta_table():
    table = fock.theta_image_table()
    counts = [sum(1 for r in table if r.degree == d) for d in range(9)]
    assert counts[2] == counts[6] == 7
    assert counts[3] == counts[5] == 8
    assert counts[1] == counts[7] == 0
    rep = fock.theta_gram_report()
    assert abs(rep[4]["det"]) == 3 ** 22
    for d in (0, 2, 3):
        assert abs(rep[d]["det"]) == 1


def test_imsym_counts():
    assert fock.imsym_report() == {"generators": 111, "rank_on_A3": 103, "with_G0_a": 75,
                                   "annihilated": 75, "image_dim": 28}


def test_word_algebra():
    w = fock.MultWord.G(0, a(1))
    assert w * fock.MultWord.one() == w
    assert (w ** 2) == w * w
    assert (w - w) == fock.MultWord()
