"""Integral model of H^4 of the generalized Kummer fourfold K_2(A).

The rational ambient space has 108 coordinates: the 28 monomials of
Sym^2 H^2 followed by the 80 classes Z_t - Z_0 for t != 0 in A[3] = F_3^4.
The two blocks are orthogonal, so the Gram matrix is block diagonal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd
from typing import Optional, Sequence

import numpy as np

from . import intlat as il
from . import sympfin as sf

H2_LABELS = ("u1", "u2", "v1", "v2", "w1", "w2", "e")
FUJIKI_C = 9
N_SYM = 28
N_PI = 80
DIM = N_SYM + N_PI


def bb_gram() -> list[list[int]]:
    g = [[0] * 7 for _ in range(7)]
    for i in (0, 2, 4):
        g[i][i + 1] = g[i + 1][i] = 1
    g[6][6] = -6
    return g


BB = bb_gram()


def bb(x: Sequence, y: Sequence) -> Fraction:
    return sum((Fraction(x[i]) * BB[i][j] * y[j] for i in range(7) for j in range(7) if x[i] and y[j]),
               Fraction(0))


def h2_vector(label: str) -> list[int]:
    v = [0] * 7
    v[H2_LABELS.index(label)] = 1
    return v


def fujiki_quadruple(a1: Sequence, a2: Sequence, a3: Sequence, a4: Sequence) -> Fraction:
    """a1.a2.a3.a4 = c/3 (B12 B34 + B13 B24 + B14 B23) with c = 9."""
    return Fraction(FUJIKI_C, 3) * (bb(a1, a2) * bb(a3, a4) + bb(a1, a3) * bb(a2, a4)
                                    + bb(a1, a4) * bb(a2, a3))


SYM_MONOMIALS = tuple((i, j) for i in range(7) for j in range(i, 7))
SYM_INDEX = {m: k for k, m in enumerate(SYM_MONOMIALS)}


def sym_label(k: int) -> str:
    i, j = SYM_MONOMIALS[k]
    return f"{H2_LABELS[i]}^2" if i == j else f"{H2_LABELS[i]}{H2_LABELS[j]}"


@lru_cache(maxsize=None)
def _sym2_gram() -> tuple:
    vecs = [h2_vector(l) for l in H2_LABELS]
    rows = []
    for i, j in SYM_MONOMIALS:
        rows.append(tuple(int(fujiki_quadruple(vecs[i], vecs[j], vecs[k], vecs[l])) for k, l in SYM_MONOMIALS))
    return tuple(rows)


def sym2_gram() -> list[list[int]]:
    return [list(r) for r in _sym2_gram()]


def pi_gram() -> list[list[int]]:
    """Z_t . Z_t' over all 81 points: 4 on the diagonal, 1 elsewhere."""
    return [[4 if i == j else 1 for j in range(81)] for i in range(81)]


def pi_prime_gram() -> list[list[int]]:
    """Gram of Z_t - Z_0, t != 0: 6 on the diagonal, 3 elsewhere."""
    return [[6 if i == j else 3 for j in range(N_PI)] for i in range(N_PI)]


def cross_pairing(d1: Sequence, d2: Sequence) -> Fraction:
    """Z_t . D1 . D2 = 2 B(D1, D2), for every t."""
    return 2 * bb(d1, d2)


# ---------------------------------------------------------------- ambient vectors

def ambient_gram() -> list[list[int]]:
    g = [[0] * DIM for _ in range(DIM)]
    s = sym2_gram()
    for i in range(N_SYM):
        g[i][:N_SYM] = s[i]
    for i in range(N_PI):
        for j in range(N_PI):
            g[N_SYM + i][N_SYM + j] = 6 if i == j else 3
    return g


def zero() -> list[Fraction]:
    return [Fraction(0)] * DIM


def sym_poly(terms: dict) -> list[Fraction]:
    """Vector of sum c * (H2_LABELS[i] H2_LABELS[j]) given {(label_i, label_j): c}."""
    v = zero()
    for (a, b), c in terms.items():
        i, j = sorted((H2_LABELS.index(a), H2_LABELS.index(b)))
        v[SYM_INDEX[(i, j)]] += Fraction(c)
    return v


def add(*vs: Sequence, coeffs: Optional[Sequence] = None) -> list[Fraction]:
    coeffs = coeffs or [1] * len(vs)
    out = zero()
    for c, v in zip(coeffs, vs):
        for k, x in enumerate(v):
            if x:
                out[k] += Fraction(c) * x
    return out


def scale(v: Sequence, c) -> list[Fraction]:
    return [Fraction(c) * x for x in v]


F3 = sf.SympSpace(3, sf.BLOCK_FORM)


def tau_code(t: Sequence[int]) -> int:
    return F3.encode(t)


def pi_combination(alpha: dict) -> list[Fraction]:
    """Vector of sum alpha_t Z_t with sum alpha_t = 0, via the basis Z_t - Z_0."""
    if sum(alpha.values()) != 0:
        raise ValueError("coefficients must sum to zero to lie in Pi'")
    v = zero()
    for t, c in alpha.items():
        if t:
            v[N_SYM + t - 1] += Fraction(c)
    return v


def c2_vector() -> list[Fraction]:
    return sym_poly({("u1", "u2"): 4, ("v1", "v2"): 4, ("w1", "w2"): 4, ("e", "e"): Fraction(-1, 3)})


def yp_vector() -> list[Fraction]:
    return sym_poly({("u1", "u2"): Fraction(1, 6), ("v1", "v2"): Fraction(1, 6), ("w1", "w2"): Fraction(1, 6)})


def e2_vector() -> list[Fraction]:
    return sym_poly({("e", "e"): 1})


def z_vector(t: int) -> list[Fraction]:
    """Z_t, with Z_0 = (3 c_2 - sum_{t != 0} (Z_t - Z_0)) / 81."""
    z0 = scale(c2_vector(), Fraction(3, 81))
    for k in range(N_PI):
        z0[N_SYM + k] -= Fraction(1, 81)
    if t == 0:
        return z0
    z0[N_SYM + t - 1] += 1
    return z0


def pair(x: Sequence, y: Sequence) -> Fraction:
    return il.pair(x, y, _ambient())


@lru_cache(maxsize=None)
def _ambient_tuple() -> tuple:
    return tuple(tuple(r) for r in ambient_gram())


def _ambient():
    return _ambient_tuple()


# ---------------------------------------------------------------- glue data

def sym_glue() -> list[tuple[str, list[Fraction]]]:
    """Divisible classes of Sym: e.y/3, (y^2 - e.y/3)/2, e^2/3, (u1u2+v1v2+w1w2)/6."""
    out = []
    for y in H2_LABELS[:6]:
        out.append((f"e{y}/3", sym_poly({("e", y): Fraction(1, 3)})))
    for y in H2_LABELS[:6]:
        out.append((f"({y}^2-e{y}/3)/2", sym_poly({(y, y): Fraction(1, 2), ("e", y): Fraction(-1, 6)})))
    out.append(("e^2/3", sym_poly({("e", "e"): Fraction(1, 3)})))
    out.append(("(u1u2+v1v2+w1w2)/6", yp_vector()))
    return out


def _plane(v, w) -> frozenset[int]:
    return F3.span(np.array(v), np.array(w))


# (spanning vectors of Lambda, list of translations t')
XXXI_DATA = [
    (((1, 0, 0, 0), (0, 1, 0, 0)), "perp34"),
    (((0, 0, 1, 0), (0, 0, 0, 1)), "perp12"),
    (((1, 0, 0, 1), (0, 1, 2, 1)), [(0, 1, 1, 2), (1, 0, 0, 2), (1, 1, 1, 1), (2, 2, 2, 2)]),
    (((1, 0, 0, 0), (0, 1, 0, 1)), [(0, 0, 0, 1), (2, 0, 1, 2), (1, 0, 2, 0), (1, 0, 2, 1)]),
    (((1, 0, 0, 0), (0, 1, 1, 1)), [(0, 0, 1, 1), (1, 0, 0, 1)]),
    (((1, 0, 1, 1), (0, 1, 0, 1)), [(0, 1, 0, 2), (1, 0, 2, 2)]),
    (((1, 0, 1, 0), (0, 1, 0, 1)), [(0, 1, 0, 2), (1, 0, 2, 0)]),
    (((1, 0, 0, 0), (0, 1, 0, 2)), [(1, 0, 1, 0)]),
    (((1, 0, 1, 1), (0, 1, 2, 2)), [(1, 1, 0, 2)]),
]


def xxxi_entries() -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """The 31 pairs (Lambda, t')."""
    out = []
    for (v, w), spec in XXXI_DATA:
        lam = _plane(v, w)
        if spec == "perp34":
            ts = [F3.vec(k) for k in sorted(_plane((0, 0, 1, 0), (0, 0, 0, 1))) if k]
        elif spec == "perp12":
            ts = [F3.vec(k) for k in sorted(_plane((1, 0, 0, 0), (0, 1, 0, 0)))
                  if k not in (0, tau_code((1, 0, 0, 0)))]
        else:
            ts = [np.array(t) for t in spec]
        for t in ts:
            out.append((lam, tuple(int(x) for x in t)))
    return out


def translate_sum(lam: frozenset[int], t: Sequence[int]) -> dict:
    """Coefficients of sum_{s in Lambda} (Z_s - Z_{s+t})."""
    alpha: dict = {}
    tv = np.array(t)
    for s in lam:
        k = tau_code(F3.vec(s) + tv)
        alpha[s] = alpha.get(s, 0) + 1
        alpha[k] = alpha.get(k, 0) - 1
    return {k: c for k, c in alpha.items() if c}


def xxxi_vectors() -> list[list[Fraction]]:
    return [pi_combination(translate_sum(lam, t)) for lam, t in xxxi_entries()]


_TERM = re.compile(r"([+-]?)([uvw][12])(\^2|[uvw][12])")

XIX_DATA = [
    ("u2^2", ((0, 0, 0, 1), (0, 0, 1, 0))),
    ("v2^2+v2u2+u2^2", ((0, 0, 0, 1), (0, 1, 1, 0))),
    ("w2^2+w2u2+u2^2", ((0, 0, 1, 0), (0, 1, 0, 1))),
    ("w2^2-w2u2+u2^2", ((0, 0, 1, 0), (0, 1, 0, 2))),
    ("w2^2-w2v2+w2u2+v2^2+v2u2+u2^2", ((0, 0, 1, 2), (0, 1, 0, 1))),
    ("w1^2+w1u2+u2^2", ((0, 0, 0, 1), (1, 0, 2, 0))),
    ("w1^2-w1u2+u2^2", ((0, 0, 0, 1), (1, 0, 1, 0))),
    ("v1^2+v1u2+u2^2", ((0, 0, 1, 0), (1, 0, 0, 1))),
    ("v1^2-v1u2+u2^2", ((0, 0, 1, 0), (1, 0, 0, 2))),
    ("v1^2+v1w1-v1u2+w1^2+w1u2+u2^2", ((0, 0, 1, 2), (1, 0, 0, 2))),
    ("v1^2+v1w1-v1w2-v1v2+v1u2+w1^2+w1w2+w1v2-w1u2+w2^2-w2v2+w2u2+v2^2+v2u2+u2^2",
     ((0, 0, 1, 2), (1, 1, 0, 1))),
    ("v1^2-v1w1+v1w2-v1v2+v1u2+w1^2+w1w2-w1v2+w1u2+w2^2+w2v2-w2u2+v2^2+v2u2+u2^2",
     ((0, 0, 1, 1), (1, 2, 0, 1))),
    ("u1^2", ((0, 1, 0, 0), (1, 0, 0, 0))),
    ("u1^2-u1v2+v2^2", ((0, 1, 0, 0), (1, 0, 0, 1))),
    ("u1^2+u1v2+v2^2", ((0, 1, 0, 0), (1, 0, 0, 2))),
    ("u1^2+u1w1+w1^2", ((0, 1, 0, 2), (1, 0, 0, 0))),
    ("u1^2+u1w1-u1v2+w1^2+w1v2+v2^2", ((0, 1, 0, 2), (1, 0, 0, 1))),
    ("u1^2-u1w1+u1w2-u1u2+w1^2+w1w2-w1u2+w2^2+w2u2+u2^2", ((0, 1, 0, 1), (1, 0, 1, 0))),
    ("u1^2+u1v1-u1w1+v1^2+v1w1+w1^2", ((0, 1, 2, 1), (1, 0, 0, 0))),
]


def parse_sym(text: str) -> dict:
    terms: dict = {}
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        a = m.group(2)
        b = a if m.group(3) == "^2" else m.group(3)
        key = (a, b)
        terms[key] = terms.get(key, 0) + sign
    if pos != len(text):
        raise ValueError(f"trailing text in {text!r}")
    return terms


def plane_sum_prime(lam: frozenset[int]) -> dict:
    """Coefficients of sum_{t in Lambda} (Z_t - Z_0)."""
    alpha = {t: 1 for t in lam}
    alpha[0] = alpha.get(0, 0) - len(lam)
    return {k: c for k, c in alpha.items() if c}


def xix_entries() -> list[tuple[str, frozenset[int], list[Fraction]]]:
    out = []
    for text, (v, w) in XIX_DATA:
        lam = _plane(v, w)
        vec = add(sym_poly(parse_sym(text)), pi_combination(plane_sum_prime(lam)))
        out.append((text, lam, vec))
    return out


def xix_vectors() -> list[list[Fraction]]:
    return [v for _, _, v in xix_entries()]


# ---------------------------------------------------------------- lattices

def _unit_rows(start: int, count: int) -> list[list[int]]:
    return [[1 if k == start + i else 0 for k in range(DIM)] for i in range(count)]


class H4Model:
    """All lattices of the construction, built once."""

    def __init__(self):
        amb = _ambient()
        self.ambient = amb
        self.sym = il.IntLattice(_unit_rows(0, N_SYM), amb, [sym_label(k) for k in range(N_SYM)], "Sym")
        self.pi_prime = il.IntLattice(_unit_rows(N_SYM, N_PI), amb,
                                      [f"Z{k + 1}-Z0" for k in range(N_PI)], "Pi'")
        sg = sym_glue()
        self.sym_over = il.add_glue(self.sym, [v for _, v in sg], [n for n, _ in sg], "Sym^over")
        thirds = [scale(v, Fraction(1, 3)) for v in xxxi_vectors()]
        self.pi_over = il.add_glue(self.pi_prime, thirds, [f"XXXI[{i}]/3" for i in range(len(thirds))],
                                   "Pi'^over")
        self.sum_over = il.IntLattice(self.sym_over.basis + self.pi_over.basis, amb, None,
                                      "Sym^over+Pi'^over")
        self.sum_base = il.IntLattice(self.sym.basis + self.pi_prime.basis, amb, None, "Sym+Pi'")
        xix = [scale(v, Fraction(1, 3)) for v in xix_vectors()]
        self.full = il.add_glue(self.sum_over, [z_vector(0)] + xix,
                                ["Z0"] + [f"XIX[{i}]/3" for i in range(len(xix))], "F")
        self.sym_sat = il.saturate(self.sym, self.full, "Sym^sat")
        self.pi_sat = il.saturate(self.pi_prime, self.full, "Pi'^sat")
        self.sum_sat = il.IntLattice(self.sym_sat.basis + self.pi_sat.basis, amb, None, "Sym^sat+Pi'^sat")


@lru_cache(maxsize=1)
def build_h4() -> H4Model:
    return H4Model()


def same_lattice(a: il.IntLattice, b: il.IntLattice) -> bool:
    return il.rational_hnf(a.basis) == il.rational_hnf(b.basis)


def certification(model: Optional[H4Model] = None) -> dict:
    m = model or build_h4()
    return {
        "discr_Pi'": il.discr(m.pi_prime),
        "discr_Sym": il.discr(m.sym),
        "discr_Sym^sat": il.discr(m.sym_sat),
        "discr_Pi'^sat": il.discr(m.pi_sat),
        "discr_F": il.discr(m.full),
        "F_integral": m.full.is_integral(),
        "Sym^over=Sym^sat": same_lattice(m.sym_over, m.sym_sat),
        "Pi'^over=Pi'^sat": same_lattice(m.pi_over, m.pi_sat),
        "Sym^sat/Sym": il.factor_counts(il.quotient_invariants(m.sym, m.sym_sat)),
        "Pi'^sat/Pi'": il.factor_counts(il.quotient_invariants(m.pi_prime, m.pi_sat)),
        "F/(Sym^sat+Pi'^sat)": il.factor_counts(il.quotient_invariants(m.sum_sat, m.full)),
        "index Sym+Pi'": il.index(m.sum_base, m.full),
        "index Sym^sat+Pi'^sat": il.index(m.sum_sat, m.full),
        "rank": m.full.rank,
    }


# ---------------------------------------------------------------- divisible classes

def _alpha_mod3(v: Sequence[Fraction]) -> np.ndarray:
    """Pi' coordinates of v as an element of k[V] (coefficient of X_0 fixed by augmentation 0)."""
    out = np.zeros(81)
    coords = [v[N_SYM + k] for k in range(N_PI)]
    for k, c in enumerate(coords):
        out[k + 1] = int(c) % 3
    out[0] = (-sum(int(c) for c in coords)) % 3
    return out


def d_space_f3() -> sf.ModPSpan:
    """D for F_3^4 with the form used to read the listed planes."""
    return sf.d_space(F3, sf.ideal_n(F3))


def in_lattice(lat: il.IntLattice, v: Sequence) -> bool:
    return lat.contains(v)


def appendix_verify(model: Optional[H4Model] = None) -> dict:
    m = model or build_h4()
    xxxi = xxxi_vectors()
    xix = xix_vectors()
    mod3 = sf.span_of(np.array([_alpha_mod3(v) for v in xxxi]), 3)
    d = d_space_f3()
    entries = xxxi_entries()
    lam_noniso = all(not F3.is_isotropic(lam) for lam, _ in entries)
    xix_noniso = all(not F3.is_isotropic(lam) for _, lam, _ in xix_entries())
    std = sf.SympSpace(3)
    std_noniso = sum(1 for lam, _ in entries if not std.is_isotropic(lam))
    # XIX independence modulo Sym^sat + Pi'^sat: rank mod 3 of their thirds in F/(sum_sat)
    coords = m.full.coords([scale(v, Fraction(1, 3)) for v in xix] + m.sum_sat.basis)
    sat_span = sf.span_of(np.array([[int(x) % 3 for x in r] for r in coords[len(xix):]]), 3)
    xix_rows = np.array([[int(x) % 3 for x in r] for r in coords[: len(xix)]])
    before = sat_span.dim
    sat_span.add(xix_rows)
    return {
        "xxxi_count": len(xxxi),
        "xxxi_rank_mod3": mod3.dim,
        "xxxi_span_equals_D": sf.span_equal(mod3, d),
        "dim_D": d.dim,
        "xxxi_divisible": all(in_lattice(m.full, scale(v, Fraction(1, 3))) for v in xxxi),
        "xix_count": len(xix),
        "xix_rank_mod_sat": sat_span.dim - before,
        "xix_divisible": all(in_lattice(m.full, scale(v, Fraction(1, 3))) for v in xix),
        "lambda_nonisotropic": lam_noniso and xix_noniso,
        "xxxi_nonisotropic_under_standard_form": std_noniso,
    }


def negative_controls(model: Optional[H4Model] = None) -> dict:
    """Candidates that must not be divisible by 3, plus the isotropic-plane variant."""
    m = model or build_h4()
    e1 = tau_code((1, 0, 0, 0))
    single = scale(pi_combination({e1: 1, 0: -1}), Fraction(1, 3))
    line = sf.SympSpace(3).span(np.array([1, 0, 0, 0]))
    line_sum = scale(pi_combination(plane_sum_prime(line)), Fraction(1, 3))
    iso = _plane((1, 0, 0, 0), (0, 0, 1, 0))
    iso_vec = scale(pi_combination(translate_sum(iso, (0, 1, 0, 0))), Fraction(1, 3))
    return {
        "(Z_t-Z_0)/3 in F": in_lattice(m.full, single),
        "line sum/3 in F": in_lattice(m.full, line_sum),
        "isotropic plane": F3.is_isotropic(iso),
        "isotropic translate difference/3 in F": in_lattice(m.full, iso_vec),
    }


# ---------------------------------------------------------------- identities

def _primitive_gcd(lat: il.IntLattice, v: Sequence) -> int:
    c = lat.coords([v])[0]
    if any(x.denominator != 1 for x in c):
        raise il.LatticeError("vector is not in the lattice")
    g = 0
    for x in c:
        g = gcd(g, int(x))
    return g


def sym_pi_intersection() -> list[Fraction]:
    """Generator of Sym intersected with Pi = <Z_t>, as an ambient vector."""
    zs = [z_vector(t) for t in range(81)]
    sym_rows = _unit_rows(0, N_SYM)
    # integer relations sum a_i s_i = sum b_t Z_t, i.e. kernel of the stacked transpose
    mat = [[Fraction(r[k]) for r in sym_rows] + [-z[k] for z in zs] for k in range(DIM)]
    ker = il.primitive_int_rows(il.nullspace(mat))
    if len(ker) != 1:
        raise il.LatticeError(f"intersection has rank {len(ker)}")
    a = ker[0][:N_SYM]
    return [Fraction(x) for x in a] + [Fraction(0)] * N_PI


def class_identities(model: Optional[H4Model] = None) -> dict:
    m = model or build_h4()
    yp, e2, c2 = yp_vector(), e2_vector(), c2_vector()
    zs = [z_vector(t) for t in range(81)]
    sum_z = add(*zs)
    w = add(scale(yp, 81), scale(sum_z, -1))  # W = sum (Y_p - Z_t)
    inter = sym_pi_intersection()
    three_c2 = scale(c2, 3)
    return {
        "W = 9Y_p + e^2": w == add(scale(yp, 9), e2),
        "c2 = sum Z / 3": c2 == scale(sum_z, Fraction(1, 3)),
        "c2 = (72Y_p - e^2)/3": c2 == scale(add(scale(yp, 72), scale(e2, -1)), Fraction(1, 3)),
        "Y_p = (u1u2+v1v2+w1w2)/6": yp == sym_poly({("u1", "u2"): Fraction(1, 6), ("v1", "v2"): Fraction(1, 6),
                                                     ("w1", "w2"): Fraction(1, 6)}),
        "Sym cap Pi = <3c2>": inter == three_c2 or inter == scale(three_c2, -1),
        "c2 gcd in F": _primitive_gcd(m.full, c2),
        "W.e^2": pair(w, e2),
        "Y_p.e^2": pair(yp, e2),
        "Z_0.e^2": pair(zs[0], e2),
        "Z_0^2": pair(zs[0], zs[0]),
        "Z_t.Z_t'": pair(zs[1], zs[2]),
        "c2^2": pair(c2, c2),
    }


# ---------------------------------------------------------------- involution

def involution_ambient() -> list[list[int]]:
    """Identity on Sym, Z_t -> Z_{-t} on Pi (row-vector convention; the matrix is symmetric)."""
    p = [[1 if i == j else 0 for j in range(DIM)] for i in range(N_SYM)] + [[0] * DIM for _ in range(N_PI)]
    for t in range(1, 81):
        s = tau_code(-F3.vec(t))
        p[N_SYM + t - 1][N_SYM + s - 1] = 1
    return p


def involution_on(lat: il.IntLattice) -> il.InvolutionModule:
    perm = involution_ambient()
    imgs = [[sum((b[i] * perm[i][j] for i in range(DIM) if b[i] and perm[i][j]), Fraction(0))
             for j in range(DIM)] for b in lat.basis]
    c = lat.coords(imgs)
    if any(x.denominator != 1 for r in c for x in r):
        raise il.LatticeError("involution does not preserve the lattice")
    action = [[int(c[j][i]) for j in range(lat.rank)] for i in range(lat.rank)]  # column convention
    return il.InvolutionModule(action, lat.gram)


def involution_invariants(model: Optional[H4Model] = None) -> dict[int, tuple[int, int, int]]:
    m = model or build_h4()
    h2 = il.InvolutionModule(il.identity(7), BB)
    h3 = il.InvolutionModule([[-int(i == j) for j in range(8)] for i in range(8)])
    return {
        2: il.equivariant_decompose(h2),
        3: il.equivariant_decompose(h3),
        4: il.equivariant_decompose(involution_on(m.full)),
    }


# ---------------------------------------------------------------- Fock cross-check

def fock_h2_words():
    """Multiplication words on A^[3] whose classes pull back to u1, ..., w2, e."""
    from . import fock
    from . import torusring as tr
    mono = {"u1": (1, 2), "u2": (3, 4), "v1": (1, 3), "v2": (4, 2), "w1": (1, 4), "w2": (2, 3)}
    out = {}
    for lab, gens in mono.items():
        out[lab] = fock.MultWord.G(0, tr.TorusClass.mono(*gens))
    # d.1 = -q_2(1)q_1(1)/2, so e = theta^*(q_2(1)q_1(1)/2) is the class of -d
    out["e"] = -fock.MultWord.D()
    return out


def fock_quadruple(labels: Sequence[str], words=None) -> Fraction:
    from . import fock
    words = words or fock_h2_words()
    w = fock.MultWord.one()
    for lab in labels:
        w = w * words[lab]
    return fock.integral(fock.kummer_restrict(fock.class_of(w, 3)))


def fock_crosscheck() -> dict:
    from . import fock
    from . import torusring as tr
    words = fock_h2_words()
    mismatches = []
    count = 0
    for quad in combinations_with_replacement(H2_LABELS, 4):
        count += 1
        lattice_side = fujiki_quadruple(*[h2_vector(l) for l in quad])
        fock_side = fock_quadruple(quad, words)
        if lattice_side != fock_side:
            mismatches.append((quad, lattice_side, fock_side))
    e2 = fock.class_of(words["e"] * words["e"], 3)
    w_state = fock.state((3, tr.ONE))
    yp_state = fock.state((1, tr.X), (1, tr.ONE), (1, tr.ONE), coeff=Fraction(1, 2))
    sym_c2 = (4 * (words["u1"] * words["u2"] + words["v1"] * words["v2"] + words["w1"] * words["w2"])
              - Fraction(1, 3) * words["e"] * words["e"])
    c2_equal = fock.kummer_restrict(fock.chern2_a3()) == fock.kummer_restrict(fock.class_of(sym_c2, 3))
    return {
        "quadruples": count,
        "mismatches": mismatches,
        "e^4": fock_quadruple(("e",) * 4, words),
        "u1u2e^2": fock_quadruple(("u1", "u2", "e", "e"), words),
        "W.e^2": fock.kummer_pairing(w_state, e2),
        "Y_p.e^2": fock.kummer_pairing(yp_state, e2),
        "c2 identity": c2_equal,
    }
