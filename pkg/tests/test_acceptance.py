"""The ten acceptance criteria, one test each.

Every test records named sub-checks; the terminal summary prints one
PASS/FAIL line per criterion (see conftest.py).
"""

import time
from fractions import Fraction

import pytest

import test_properties as props
from kumcoh import fock
from kumcoh import intlat as il
from kumcoh import kummer4 as k4
from kumcoh import quotientbb as qb
from kumcoh import sympfin as sf
from kumcoh import torusring as tr

RESULTS: dict[int, tuple[bool, list[str]]] = {}


def criterion(n, checks):
    failed = [name for name, ok in checks if not ok]
    RESULTS[n] = (not failed, failed)
    line = f"criterion {n}: {'PASS' if not failed else 'FAIL'}"
    print(line + (f" (failed: {', '.join(failed)})" if failed else ""))
    assert not failed, failed


def test_criterion_01_hilbert_basis():
    one, x, a, s = tr.ONE, tr.X, tr.a, tr.astar
    blocks = fock.a2_block_report()
    h = Fraction(1, 2)
    p1 = fock.kummer_pairing(fock.state((1, s(1)), (1, one), (1, one), coeff=h),
                             fock.state((1, a(1) * a(2)), (1, s(2)), (1, one)))
    p2 = fock.kummer_pairing(fock.state((2, a(1)), (1, one), coeff=h), fock.state((2, s(1)), (1, one)))
    criterion(1, [
        ("144 classes", len(fock.hilb_basis_a2()) == 144),
        ("blocks unimodular", all(abs(b["det"]) == 1 for b in blocks.values())),
        ("<q2(ai), q2(ai*)> = 2", fock.vacuum_pairing(fock.state((2, a(1))), fock.state((2, s(1)))) == 2),
        ("odd Kummer pairings = (1, -1)", (p1, p2) == (1, -1)),
    ])


def test_criterion_02_betti():
    table = fock.theta_image_table()
    counts = [sum(1 for r in table if r.degree == d) for d in range(9)]
    rank4 = k4.build_h4().full.rank
    kummer = (1, counts[1], counts[2], counts[3], rank4, counts[5], counts[6], counts[7], 1)
    criterion(2, [
        ("A^[2] Betti", fock.goettsche_betti(2) == (1, 4, 13, 32, 44, 32, 13, 4, 1)),
        ("K_2(A) Betti", kummer == (1, 0, 7, 8, 108, 8, 7, 0, 1)),
    ])


def test_criterion_03_symplectic_tables():
    want = {2: (11, 5, 11, 6), 3: (50, 31, 51, 20), 5: (355, 270, 375, 20)}
    checks = []
    for q, (n, d, o, u) in want.items():
        if q == 5:
            # time an uncached run
            t0 = time.perf_counter()
            dims = sf.ideal_dims.__wrapped__(5)
            comb = sf.combined_dims.__wrapped__(5)
            counts = sf.plane_counts.__wrapped__(5)
            checks.append(("q=5 under 3 minutes", time.perf_counter() - t0 < 180))
        else:
            dims, comb, counts = sf.ideal_dims(q), sf.combined_dims(q), sf.plane_counts(q)
        checks += [
            (f"q={q} dims", (dims.dim_N, dims.dim_D, comb.dim_O, comb.dim_U) == (n, d, o, u)),
            (f"q={q} plane counts", counts == sf.formula_counts(q)),
        ]
    c3 = sf.combined_dims(3)
    checks.append(("q=3 kernels", (c3.ker_pr2, c3.ker_pr1) == (1, 31)))
    criterion(3, checks)


def test_criterion_04_gxi_orbits():
    orbits = sf.gxi_orbits()
    criterion(4, [
        ("orbit sizes", sorted(len(o) for o in orbits) == [5, 30]),
        ("listed orbit", sf.listed_five_orbit() in orbits),
    ])


def test_criterion_05_lattice_certification(h4):
    cert = k4.certification(h4)
    pp = il.primary_parts
    criterion(5, [
        ("discr Pi'", cert["discr_Pi'"] == 3 ** 84),
        ("discr Sym", cert["discr_Sym"] == 2 ** 14 * 3 ** 38),
        ("discr sat", cert["discr_Sym^sat"] == cert["discr_Pi'^sat"] == 3 ** 22),
        ("|det F| = 1", cert["discr_F"] == 1),
        ("Sym^sat/Sym", pp(il.quotient_invariants(h4.sym, h4.sym_sat)) == {2: 7, 3: 8}),
        ("Pi'^sat/Pi'", pp(il.quotient_invariants(h4.pi_prime, h4.pi_sat)) == {3: 31}),
        ("F/sum", pp(il.quotient_invariants(h4.sum_sat, h4.full)) == {3: 19, 27: 1}),
    ])


def test_criterion_06_appendix(h4):
    av = k4.appendix_verify(h4)
    criterion(6, [
        ("XXXI divisible", av["xxxi_count"] == 31 and av["xxxi_divisible"]),
        ("XXXI independent", av["xxxi_rank_mod3"] == 31),
        ("XIX divisible", av["xix_count"] == 19 and av["xix_divisible"]),
        ("XIX independent", av["xix_rank_mod_sat"] == 19),
        ("Lambda non-isotropic", av["lambda_nonisotropic"]),
    ])


def test_criterion_07_class_identities(h4):
    ids = k4.class_identities(h4)
    fc = k4.fock_crosscheck()
    criterion(7, [
        ("W = 9Y_p + e^2", ids["W = 9Y_p + e^2"]),
        ("c2 = sum Z/3", ids["c2 = sum Z / 3"]),
        ("c2 in Sym", ids["c2 = (72Y_p - e^2)/3"]),
        ("Y_p", ids["Y_p = (u1u2+v1v2+w1w2)/6"]),
        ("Sym cap Pi", ids["Sym cap Pi = <3c2>"]),
        ("c2 primitive", ids["c2 gcd in F"] == 1),
        ("cross-pipeline quadruples", fc["quadruples"] == 210 and not fc["mismatches"]),
        ("e^4 = 324", fc["e^4"] == 324),
        ("Z_0.e^2 = -12", ids["Z_0.e^2"] == -12),
    ])


def test_criterion_08_involution(h4):
    inv = k4.involution_invariants(h4)
    criterion(8, [
        ("invariants", inv == {2: (0, 0, 7), 3: (0, 8, 0), 4: (40, 0, 28)}),
        ("balance 60 = 60", qb.h4_normality_balance(inv) == (60, 60)),
    ])


def test_criterion_09_kprime_form(h4):
    sol = qb.solve_fujiki()
    inv = k4.involution_invariants(h4)
    criterion(9, [
        ("c = 8", sol.c == 8),
        ("Gram", sol.gram == qb.target_gram()),
        ("odd", sol.is_odd),
        ("D_e = 36", qb.ddelta_select() == 36),
        ("Betti and chi", qb.kprime_betti(inv) == (8, 0, 90, 108)),
    ])


PROPERTY_SUITES = [
    props.test_torus_supercommutative, props.test_torus_associative,
    props.test_cup_supercommutative, props.test_cup_associative,
    props.test_cup_operator_self_adjoint, props.test_creation_adjoint_in_second_slot,
    props.test_snf_postconditions, props.test_saturation_idempotent, props.test_m_equals_n,
    props.test_transvection_preserves_form, props.test_discriminant_index_consistency,
]


def test_criterion_10_property_suites():
    checks = []
    for suite in PROPERTY_SUITES:
        try:
            suite()
            ok = True
        except AssertionError:
            ok = False
        checks.append((suite.__name__, ok))
    criterion(10, checks)
