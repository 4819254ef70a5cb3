"""Command-line driver: every verification as a named report.

    python -m kumcoh --report h4-lattice --format json
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Callable, Optional

REPORTS = ("torus-ring", "hilb2-basis", "hilb3-theta", "symplectic-tables", "gxi-orbits",
           "h4-lattice", "appendix", "invariants", "bb-kprime")


class Report:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[dict] = []

    def check(self, name: str, expected: Any, actual: Any, ref: str, ok: Optional[bool] = None) -> None:
        if ok is None:
            ok = _norm(expected) == _norm(actual)
        self.checks.append({"name": name, "status": "pass" if ok else "fail",
                            "expected": _norm(expected), "actual": _norm(actual), "paper_ref": ref})

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)


def _norm(v: Any) -> Any:
    """JSON-friendly, order-stable form of a value."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, dict):
        return {str(k): _norm(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_norm(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted((_norm(x) for x in v), key=lambda x: json.dumps(x, sort_keys=True))
    if hasattr(v, "__dict__"):
        return _norm(vars(v))
    return str(v)


# ---------------------------------------------------------------- reports

def report_torus_ring(args) -> Report:
    from . import torusring as tr
    from . import fock
    r = Report("torus-ring")
    bad = 0
    for i in range(16):
        for j in range(16):
            x, y = tr.TorusClass.basis(i), tr.TorusClass.basis(j)
            sign = (-1) ** (tr.degree_of(i) * tr.degree_of(j))
            if x.wedge(y) != sign * y.wedge(x):
                bad += 1
    r.check("supercommutativity failures", 0, bad, "exterior algebra")
    g = tr.gram_matrix()
    signed_perm = all(sum(1 for v in row if v) == 1 and all(v in (0, 1, -1) for v in row) for row in g)
    r.check("Poincare Gram is a signed permutation", True, signed_perm, "Poincare duality on A")
    r.check("Betti numbers of A", (1, 4, 6, 4, 1), tr.betti_numbers(), "Betti numbers of A")
    r.check("integral of a1a2a3a4", 1, tr.integrate(tr.X), "normalization")
    lhs = fock.act(fock.supercommutator(fock.q_prime(), fock.op_q(1, tr.X)), fock.unit(0))
    r.check("[q', q1(x)]|0> = -q2(x)|0>", True, lhs == -1 * fock.state((2, tr.X)),
            "sign of the diagonal push-forward")
    r.check("Sweedler sign", 1, tr.SWEEDLER_SIGN, "sign of the diagonal push-forward")
    r.check("star convention", "right", tr.STAR_CONVENTION, "duals a_i*")
    return r


def report_hilb2(args) -> Report:
    from . import fock
    from . import torusring as tr
    r = Report("hilb2-basis")
    rows = fock.hilb_basis_a2()
    r.check("number of classes", 144, len(rows), "A^[2] basis")
    r.check("Betti numbers of A^[2]", (1, 4, 13, 32, 44, 32, 13, 4, 1), fock.goettsche_betti(2),
            "Goettsche formula")
    per_degree = [sum(1 for x in rows if x.degree == d) for d in range(9)]
    r.check("classes per degree", fock.goettsche_betti(2), per_degree, "A^[2] basis")
    blocks = fock.a2_block_report()
    for d, info in blocks.items():
        r.check(f"pairing block {d}/{8 - d} unimodular", True, abs(info["det"]) == 1, "A^[2] basis")
    words = fock.word_basis_report()
    r.check("word classes span the same lattice", True,
            all(w["integral"] and abs(w["det"]) == 1 for w in words.values()), "A^[2] multiplication words")
    one, x, a, s = tr.ONE, tr.X, tr.a, tr.astar
    r.check("<q2(ai), q2(ai*)>", 2, fock.vacuum_pairing(fock.state((2, a(1))), fock.state((2, s(1)))),
            "A^[2] odd pairings")
    r.check("<q1(1)q1(ai*), q1(x)q1(ai)>", 1,
            fock.vacuum_pairing(fock.state((1, one), (1, s(1))), fock.state((1, x), (1, a(1)))),
            "A^[2] odd pairings")
    for n in (2, 3):
        src = fock.state((2, x), *[(1, x)] * (n - 2))
        got = fock.apply_mult_word(fock.MultWord.D(), src)
        r.check(f"d.q2(x)q1(x)^{n - 2} = q1(x)^{n}", True, got == fock.state(*[(1, x)] * n),
                "H^2 basis of A^[n]")
        bstar = tr.dual_for_tables(tr.INDEX[(1, 2)])
        got = fock.apply_mult_word(fock.MultWord.D(), fock.state((1, bstar), *[(1, x)] * (n - 1)))
        r.check(f"d.q1(b*)q1(x)^{n - 1} = 0", True, got.is_zero(), "H^2 basis of A^[n]")
    g = fock.apply_mult_word(fock.MultWord.G(1, a(1)), fock.state((2, s(1)), (1, one)))
    want = fock.state((3, x), coeff=2) - fock.state((1, x), (1, x), (1, one))
    r.check("G1(ai).q2(ai*)q1(1) = 2q3(x) - q1(x)^2q1(1)", True, g == want, "odd cohomology of K_2(A)")
    battery = [fock.unit(0), fock.state((1, x)), fock.state((1, a(2))), fock.state((1, one), (1, a(3)))]
    for m in (1, 2, 3):
        for lab, c in (("1", one), ("a1", a(1)), ("x", x)):
            ok, _ = fock.creation_from_dq1(m, c, battery)
            r.check(f"(ad q')^{m} q1({lab}) = (-1)^m m! q{m + 1}({lab})", True, ok, "q' identity")
    rng = random.Random(args.seed)
    tokens = [fock.MultWord.D()] + [fock.MultWord.G(k, tr.TorusClass.basis(i)) for k in (0, 1) for i in range(16)]
    comm_bad = assoc_bad = 0
    for _ in range(12):
        w1, w2, w3 = (rng.choice(tokens) for _ in range(3))
        c1 = fock.class_of(w1 * w2, 2)
        c2 = fock.apply_mult_word(w1, fock.class_of(w2, 2))
        if c1 != c2:
            assoc_bad += 1
        p = _word_parity(w1) * _word_parity(w2)
        if fock.class_of(w1 * w2, 2) != (-1) ** p * fock.class_of(w2 * w1, 2):
            comm_bad += 1
        lhs = fock.apply_mult_word(w1, fock.apply_mult_word(w2, fock.class_of(w3, 2)))
        if lhs != fock.class_of(w1 * w2 * w3, 2):
            assoc_bad += 1
    r.check("sampled cup supercommutativity failures", 0, comm_bad, "cup product")
    r.check("sampled cup associativity failures", 0, assoc_bad, "cup product")
    return r


def _word_parity(w) -> int:
    from . import fock
    pars = {sum(fock._token_par(t) for t in toks) % 2 for toks in w.terms}
    return pars.pop() if len(pars) == 1 else 0


def report_hilb3(args) -> Report:
    from . import fock
    from . import torusring as tr
    r = Report("hilb3-theta")
    r.check("b2(A^[3])", 13, fock.goettsche_betti(3)[2], "Goettsche formula")
    gram = fock.theta_gram_report()
    for d in (0, 2, 3):
        r.check(f"theta block {d}/{8 - d} unimodular", True, abs(gram[d]["det"]) == 1, "theta table")
    r.check("theta block 4 determinant = discr Sym^sat", 3 ** 22, abs(gram[4]["det"]), "theta table")
    table = fock.theta_image_table()
    counts = [sum(1 for x in table if x.degree == d) for d in range(9)]
    r.check("b2(K_2(A)) from the table", 7, counts[2], "Betti numbers of K_2(A)")
    r.check("b3(K_2(A)) from the table", 8, counts[3], "Betti numbers of K_2(A)")
    one, a, s = tr.ONE, tr.a, tr.astar
    h = Fraction(1, 2)
    p1 = fock.kummer_pairing(fock.state((1, s(1)), (1, one), (1, one), coeff=h),
                             fock.state((1, a(1) * a(2)), (1, s(2)), (1, one)))
    p2 = fock.kummer_pairing(fock.state((2, a(1)), (1, one), coeff=h), fock.state((2, s(1)), (1, one)))
    r.check("|odd Kummer pairings| = 1", [1, 1], [abs(p1), abs(p2)], "odd cohomology of K_2(A)")
    r.check("odd Kummer pairing signs", [1, -1], [p1, p2], "odd cohomology of K_2(A)")
    r.check("ImSym counts", {"generators": 111, "rank_on_A3": 103, "with_G0_a": 75, "annihilated": 75,
                             "image_dim": 28}, fock.imsym_report(), "image of theta^* in degree 4")
    r.check("q3(1)|0> restricts to zero on K_2(A)", False, fock.annihilator_test(fock.state((3, one))), "class W")
    return r


def report_symplectic(args) -> Report:
    from . import sympfin as sf
    r = Report("symplectic-tables")
    tables = {2: (11, 5, 11, 6), 3: (50, 31, 51, 20), 5: (355, 270, 375, 20)}
    for q in ([args.q] if args.q else (2, 3, 5)):
        ref = "symplectic ideal tables"
        counts = sf.plane_counts(q)
        r.check(f"q={q} plane counts", sf.formula_counts(q), counts, "plane counting formulas")
        dims = sf.ideal_dims(q)
        comb = sf.combined_dims(q)
        n, d, o, u = tables[q]
        r.check(f"q={q} dim_N", n, dims.dim_N, ref)
        r.check(f"q={q} dim_D", d, dims.dim_D, ref)
        r.check(f"q={q} dim_O", o, comb.dim_O, ref)
        r.check(f"q={q} dim_U", u, comb.dim_U, ref)
        r.check(f"q={q} (M) = (N)", True, dims.m_equals_n, ref)
        r.check(f"q={q} D routes agree", True, dims.d_routes_agree, ref)
        r.check(f"q={q} X in D", True, sf.x_in_d_check(q), ref)
        r.check(f"q={q} pr1(O) = U", True, comb.pr1_is_U, ref)
        r.check(f"q={q} pr2(O) = (N)", True, comb.pr2_is_N, ref)
        if q == 3:
            r.check("q=3 ker pr1|O", 31, comb.ker_pr1, ref)
            r.check("q=3 ker pr2|O", 1, comb.ker_pr2, ref)
            other = sf.combined_dims(q, pair=1)
            r.check("q=3 second hyperbolic pair", [comb.dim_O, comb.dim_U], [other.dim_O, other.dim_U], ref)
        orbit, noniso = sf.transitivity_check(q)
        r.check(f"q={q} transitivity on non-isotropic planes", noniso, orbit, "transitivity")
    return r


def report_gxi(args) -> Report:
    from . import sympfin as sf
    r = Report("gxi-orbits")
    orbits = sf.gxi_orbits()
    r.check("orbit sizes", [5, 30], [len(o) for o in orbits], "orbits of G_xi")
    r.check("listed five-element orbit", True, sf.listed_five_orbit() in orbits, "orbits of G_xi")
    r.check("triple isotropy criterion", True, sf.triple_isotropy_check(), "planes of F_2^4 as triples")
    r.check("M_xi", [[0, 1], [1, 1]], sf.xi_matrix().tolist(), "multiplication by xi mod 2")
    return r


def report_h4(args) -> Report:
    from . import kummer4 as k4
    r = Report("h4-lattice")
    cert = k4.certification()
    ref = "integral basis of H^4(K_2(A))"
    r.check("discr Pi'", 3 ** 84, cert["discr_Pi'"], ref)
    r.check("discr Sym", 2 ** 14 * 3 ** 38, cert["discr_Sym"], ref)
    r.check("discr Sym^sat", 3 ** 22, cert["discr_Sym^sat"], ref)
    r.check("discr Pi'^sat", 3 ** 22, cert["discr_Pi'^sat"], ref)
    r.check("discr F", 1, cert["discr_F"], ref)
    r.check("F integral", True, cert["F_integral"], ref)
    r.check("rank", 108, cert["rank"], ref)
    r.check("Sym^over = Sym^sat", True, cert["Sym^over=Sym^sat"], ref)
    r.check("Pi'^over = Pi'^sat", True, cert["Pi'^over=Pi'^sat"], ref)
    m = k4.build_h4()
    from . import intlat as il
    r.check("Sym^sat/Sym", {2: 7, 3: 8}, il.primary_parts(il.quotient_invariants(m.sym, m.sym_sat)), ref)
    r.check("Pi'^sat/Pi'", {3: 31}, il.primary_parts(il.quotient_invariants(m.pi_prime, m.pi_sat)), ref)
    r.check("F/(Sym^sat+Pi'^sat)", {3: 19, 27: 1},
            il.primary_parts(il.quotient_invariants(m.sum_sat, m.full)), ref)
    r.check("index Sym+Pi'", 2 ** 7 * 3 ** 61, cert["index Sym+Pi'"], ref)
    r.check("index Sym^sat+Pi'^sat", 3 ** 22, cert["index Sym^sat+Pi'^sat"], ref)
    ids = k4.class_identities(m)
    for key in ("W = 9Y_p + e^2", "c2 = sum Z / 3", "c2 = (72Y_p - e^2)/3", "Y_p = (u1u2+v1v2+w1w2)/6",
                "Sym cap Pi = <3c2>"):
        r.check(key, True, ids[key], "class identities")
    r.check("c2 primitive (gcd)", 1, ids["c2 gcd in F"], "class identities")
    r.check("Z_0.e^2", -12, ids["Z_0.e^2"], "class identities")
    r.check("W.e^2", 243, ids["W.e^2"], "class identities")
    fc = k4.fock_crosscheck()
    r.check("Fujiki vs Fock quadruple mismatches", 0, len(fc["mismatches"]), "cross-pipeline")
    r.check("e^4 via Fock", 324, fc["e^4"], "cross-pipeline")
    r.check("u1u2e^2 via Fock", -18, fc["u1u2e^2"], "cross-pipeline")
    r.check("W.e^2 via Fock", 243, fc["W.e^2"], "cross-pipeline")
    r.check("c2 identity via Fock", True, fc["c2 identity"], "cross-pipeline")
    return r


def report_appendix(args) -> Report:
    from . import kummer4 as k4
    r = Report("appendix")
    av = k4.appendix_verify()
    ref = "divisible classes"
    r.check("XXXI count", 31, av["xxxi_count"], ref)
    r.check("XXXI rank mod 3", 31, av["xxxi_rank_mod3"], ref)
    r.check("XXXI span equals D", True, av["xxxi_span_equals_D"], ref)
    r.check("XXXI divisible by 3", True, av["xxxi_divisible"], ref)
    r.check("XIX count", 19, av["xix_count"], ref)
    r.check("XIX rank modulo Sym^sat+Pi'^sat", 19, av["xix_rank_mod_sat"], ref)
    r.check("XIX divisible by 3", True, av["xix_divisible"], ref)
    r.check("all Lambda non-isotropic", True, av["lambda_nonisotropic"], ref)
    nc = k4.negative_controls()
    r.check("(Z_t - Z_0)/3 not in H^4", False, nc["(Z_t-Z_0)/3 in F"], "negative control")
    r.check("line sum/3 not in H^4", False, nc["line sum/3 in F"], "negative control")
    return r


def report_invariants(args) -> Report:
    from . import kummer4 as k4
    from . import quotientbb as qb
    r = Report("invariants")
    inv = k4.involution_invariants()
    r.check("degree 2", (0, 0, 7), inv[2], "l-invariants")
    r.check("degree 3", (0, 8, 0), inv[3], "l-invariants")
    r.check("degree 4", (40, 0, 28), inv[4], "l-invariants")
    lhs, rhs = qb.h4_normality_balance(inv)
    r.check("H^4-normality balance", [60, 60], [lhs, rhs], "H^4-normality")
    return r


def report_bb(args) -> Report:
    from . import quotientbb as qb
    r = Report("bb-kprime")
    sol = qb.solve_fujiki()
    ref = "Beauville-Bogomolov form of K'"
    r.check("c", 8, sol.c, ref)
    r.check("t", "1/2", sol.t, ref)
    r.check("admissible t in scan", ["1/2"], qb.scan_t(), ref)
    r.check("gram", qb.target_gram(), sol.gram, ref)
    r.check("final block", [[-5, -4], [-4, -5]], [row[6:] for row in sol.gram[6:]], ref)
    r.check("odd", True, sol.is_odd, ref)
    r.check("signature", (3, 5), sol.signature, ref)
    from . import intlat as il
    r.check("discr", 6561, il.discr(sol.lattice), ref)
    r.check("Z'^2 readings agree", qb.z_square(), qb.z_square_alternative(), ref)
    r.check("D_e components", 36, qb.ddelta_select(), "parity selection")
    b2, b3, b4, chi = qb.kprime_betti()
    r.check("betti (b2, b3, b4)", (8, 0, 90), (b2, b3, b4), "Betti numbers of K'")
    r.check("chi", 108, chi, "Betti numbers of K'")
    return r


BUILDERS: dict[str, Callable] = {
    "torus-ring": report_torus_ring,
    "hilb2-basis": report_hilb2,
    "hilb3-theta": report_hilb3,
    "symplectic-tables": report_symplectic,
    "gxi-orbits": report_gxi,
    "h4-lattice": report_h4,
    "appendix": report_appendix,
    "invariants": report_invariants,
    "bb-kprime": report_bb,
}


def run(name: str, args) -> list[Report]:
    names = sorted(REPORTS) if name == "all" else [name]
    return [BUILDERS[n](args) for n in names]


def render(reports: list[Report], fmt: str) -> str:
    if fmt == "json":
        if len(reports) == 1:
            doc: Any = {"report": reports[0].name, "checks": reports[0].checks}
        else:
            doc = {"report": "all", "reports": [{"report": r.name, "checks": r.checks} for r in reports]}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = []
    for r in reports:
        for c in r.checks:
            lines.append(f"{c['status'].upper():4} {r.name}: {c['name']} = {json.dumps(c['actual'])}"
                         + ("" if c["status"] == "pass" else f" (expected {json.dumps(c['expected'])})"))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kumcoh", description="Run verification reports.")
    p.add_argument("--report", required=True, choices=REPORTS + ("all",))
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--q", type=int, choices=(2, 3, 5), default=None,
                   help="restrict symplectic-tables to one field size")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    reports = run(args.report, args)
    text = render(reports, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failures = [{"report": r.name, "check": c["name"], "expected": c["expected"], "actual": c["actual"]}
                for r in reports for c in r.checks if c["status"] == "fail"]
    for f in failures:
        sys.stderr.write(json.dumps(f, sort_keys=True) + "\n")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
