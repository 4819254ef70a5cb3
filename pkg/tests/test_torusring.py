from itertools import permutations
from math import comb

import pytest

from kumcoh import torusring as tr


def _perm_sign(seq):
    # count inversions directly
    return (-1) ** sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def test_sixteen_monomials():
    assert len(tr.MONOMIALS) == 16
    assert tr.MONOMIALS[tr.TOP] == (1, 2, 3, 4)
    assert tr.betti_numbers() == tuple(comb(4, d) for d in range(5))


@pytest.mark.parametrize("order", list(permutations((1, 2, 3, 4), 3)))
def test_mono_sign_matches_permutation_sign(order):
    got = tr.TorusClass.mono(*order)
    idx = tr.INDEX[tuple(sorted(order))]
    assert got == tr.TorusClass.basis(idx, _perm_sign(order))


def test_generators_square_to_zero():
    for i in (1, 2, 3, 4):
        assert (tr.a(i) * tr.a(i)).is_zero()


def test_left_and_right_duals():
    for i in range(16):
        b = tr.TorusClass.basis(i)
        assert tr.integrate(b * tr.pd_dual(i)) == 1
        assert tr.integrate(tr.right_dual(i) * b) == 1
        d = tr.degree_of(i)
        assert tr.right_dual(i) == tr.pd_dual(i) * ((-1) ** (d * (4 - d)))


def test_sweedler_reproduces_product():
    # sum_i (a e_i) * integral(e_i^ b) = a b
    for ia in (0, 1, 5, 12):
        a = tr.TorusClass.basis(ia)
        for ib in range(16):
            b = tr.TorusClass.basis(ib)
            total = tr.TorusClass([0] * 16)
            for s, left, right in tr.diagonal_sweedler(a):
                total = total + left * (s * tr.integrate(right * b))
            assert total == a * b


def test_gram_is_signed_permutation():
    g = tr.gram_matrix()
    for row in g:
        assert sorted(abs(x) for x in row) == [0] * 15 + [1]


def test_homogeneity():
    x = tr.a(1) + tr.a(1) * tr.a(2)
    assert x.degrees() == {1, 2}
    with pytest.raises(ValueError):
        x.degree()
    assert x.part(2) == tr.a(1) * tr.a(2)


def test_immutable():
    with pytest.raises(AttributeError):
        tr.ONE.coeffs = (0,) * 16


def test_table_duals():
    assert tr.STAR_CONVENTION == "right"
    for i in (1, 2, 3, 4):
        assert tr.integrate(tr.astar(i) * tr.a(i)) == 1
    assert len(tr.h2_monomials()) == 6
