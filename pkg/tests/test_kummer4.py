from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from kumcoh import intlat as il
from kumcoh import kummer4 as k4


def det_oracle(m):
    """Plain Fraction Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in m]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def test_bb_form():
    assert k4.bb(k4.h2_vector("e"), k4.h2_vector("e")) == -6
    assert k4.bb(k4.h2_vector("u1"), k4.h2_vector("u2")) == 1
    assert abs(det_oracle(k4.BB)) == 6


def test_sym_gram_entries():
    g = k4.sym2_gram()
    u1u2 = k4.SYM_INDEX[(0, 1)]
    # (c/3)(B11 B22 + 2 B12^2) = 3 * 2
    assert g[u1u2][u1u2] == 6
    ee = k4.SYM_INDEX[(6, 6)]
    assert g[ee][ee] == 3 * 3 * 36


def test_discr_pi_prime_closed_form():
    # det(3I + 3J) on 80 coordinates = 3^79 (3 + 80 * 3)
    assert det_oracle(k4.pi_prime_gram()) == 3 ** 79 * 243 == 3 ** 84


def test_discr_sym_oracle():
    assert abs(det_oracle(k4.sym2_gram())) == 2 ** 14 * 3 ** 38


def test_fujiki_symmetric():
    vecs = [k4.h2_vector(l) for l in k4.H2_LABELS]
    for quad in combinations_with_replacement(range(7), 4):
        a, b, c, d = (vecs[i] for i in quad)
        assert k4.fujiki_quadruple(a, b, c, d) == k4.fujiki_quadruple(d, c, a, b)
    e = k4.h2_vector("e")
    assert k4.fujiki_quadruple(e, e, e, e) == 324


def test_certification(h4):
    cert = k4.certification(h4)
    assert cert["discr_Pi'"] == 3 ** 84
    assert cert["discr_Sym"] == 2 ** 14 * 3 ** 38
    assert cert["discr_Sym^sat"] == cert["discr_Pi'^sat"] == 3 ** 22
    assert cert["discr_F"] == 1 and cert["F_integral"]
    assert cert["rank"] == 108
    assert cert["Sym^over=Sym^sat"] and cert["Pi'^over=Pi'^sat"]


def test_full_lattice_unimodular_oracle(h4):
    assert abs(det_oracle(h4.full.gram)) == 1


def test_quotients(h4):
    assert il.primary_parts(il.quotient_invariants(h4.sym, h4.sym_sat)) == {2: 7, 3: 8}
    assert il.quotient_invariants(h4.pi_prime, h4.pi_sat) == [3] * 31
    assert il.primary_parts(il.quotient_invariants(h4.sum_sat, h4.full)) == {3: 19, 27: 1}


def test_indices_match_discriminants(h4):
    # |F : L|^2 = discr L / discr F
    assert il.index(h4.sum_base, h4.full) ** 2 == il.discr(h4.sym) * il.discr(h4.pi_prime)
    assert il.index(h4.sum_base, h4.full) == 2 ** 7 * 3 ** 61
    assert il.index(h4.sum_sat, h4.full) == 3 ** 22


def test_sym_glue_count():
    assert len(k4.sym_glue()) == 14


def test_appendix(h4):
    av = k4.appendix_verify(h4)
    assert av["xxxi_count"] == 31 and av["xxxi_rank_mod3"] == 31
    assert av["xxxi_span_equals_D"] and av["dim_D"] == 31
    assert av["xxxi_divisible"]
    assert av["xix_count"] == 19 and av["xix_rank_mod_sat"] == 19
    assert av["xix_divisible"]
    assert av["lambda_nonisotropic"]
    # only part of the planes stay non-isotropic under the standard form
    assert av["xxxi_nonisotropic_under_standard_form"] == 9


def test_negative_controls(h4):
    nc = k4.negative_controls(h4)
    assert not nc["(Z_t-Z_0)/3 in F"]
    assert not nc["line sum/3 in F"]
    # (M) = (N): isotropic plane translates are divisible as well
    assert nc["isotropic plane"] and nc["isotropic translate difference/3 in F"]


def test_parse_sym():
    assert k4.parse_sym("u1^2-u1v2+v2^2") == {("u1", "u1"): 1, ("u1", "v2"): -1, ("v2", "v2"): 1}
    with pytest.raises(ValueError):
        k4.parse_sym("u1^2+x")


def test_pi_combination_needs_zero_sum():
    with pytest.raises(ValueError):
        k4.pi_combination({1: 1})


def test_class_identities(h4):
    ids = k4.class_identities(h4)
    for key in ("W = 9Y_p + e^2", "c2 = sum Z / 3", "c2 = (72Y_p - e^2)/3",
                "Y_p = (u1u2+v1v2+w1w2)/6", "Sym cap Pi = <3c2>"):
        assert ids[key], key
    assert ids["c2 gcd in F"] == 1
    assert ids["W.e^2"] == 243
    assert ids["Y_p.e^2"] == -9
    assert ids["Z_0.e^2"] == -12
    assert ids["Z_0^2"] == 4
    assert ids["Z_t.Z_t'"] == 1
    assert ids["c2^2"] == 756


def test_z_vectors_gram():
    zs = [k4.z_vector(t) for t in (0, 1, 5)]
    assert [k4.pair(z, z) for z in zs] == [4, 4, 4]
    assert k4.pair(zs[1], zs[2]) == 1


def test_involution_eigenranks(h4):
    mod = k4.involution_on(h4.full)
    n = len(mod.action)
    plus = [[mod.action[i][j] + (i == j) for j in range(n)] for i in range(n)]
    minus = [[mod.action[i][j] - (i == j) for j in range(n)] for i in range(n)]
    # invariants: Sym (28) and the 40 pairs {t, -t}; anti-invariants: 40
    assert n - il.rank(minus) == 68
    assert n - il.rank(plus) == 40


def test_involution_invariants(h4):
    assert k4.involution_invariants(h4) == {2: (0, 0, 7), 3: (0, 8, 0), 4: (40, 0, 28)}


def test_fock_crosscheck():
    fc = k4.fock_crosscheck()
    assert fc["quadruples"] == 210
    assert fc["mismatches"] == []
    assert fc["Y_p.e^2"] == -9
    assert fc["e^4"] == 324
    assert fc["u1u2e^2"] == -18
    assert fc["W.e^2"] == 243
    assert fc["c2 identity"]
