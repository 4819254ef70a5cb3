"""Beauville-Bogomolov lattice, Fujiki constant and Betti numbers of K'.

K' is the blow-up of K_2(A)/iota along the image of Z_0.  Every pairing on
H^2(K') is t times a rational number, with t = sqrt(2 / c) and c the Fujiki
constant; integrality and primitivity then pin t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

import numpy as np

from . import intlat as il
from . import kummer4 as k4

# Fixed locus of iota on K_2(A): a K3 surface and 36 isolated points.
K3_BETTI = (1, 0, 22, 0, 1)
ISOLATED_POINTS = 36
E_FOURTH = -1          # E_l^4 for the exceptional divisors over the isolated points
DE_CANDIDATES = (1, 35, 36)
PULLBACK_DEGREE = 8    # (pi_1* s_1^* a)^4 = 8 a^4

KPRIME_LABELS = ("u1", "u2", "v1", "v2", "w1", "w2", "(e'+Z')/2", "(e'-Z')/2")


@dataclass(frozen=True)
class SymbolicGram:
    """Gram = t * base, t a formal positive scalar."""
    base: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    def at(self, t: Fraction) -> list[list[Fraction]]:
        return [[t * x for x in row] for row in self.base]


def passage_factor() -> int:
    """B_K'(pi s^* a, pi s^* b) = 6 t B(a, b): (8 * 9)^(1/2) / sqrt(2) = 6."""
    square = PULLBACK_DEGREE * k4.FUJIKI_C // 2
    root = int(round(square ** 0.5))
    if root * root != square:
        raise ArithmeticError("passage factor is not an integer")
    return root


def e_square() -> Fraction:
    """B_K'(e', e') / t."""
    e = k4.h2_vector("e")
    return passage_factor() * k4.bb(e, e)


def z_square() -> Fraction:
    """B_K'(Z', Z') / t, from -8 Z_0.e^2 = -12 sqrt(2c) B(Z', Z') and sqrt(2c) = 2 / t."""
    z0e2 = k4.pair(k4.z_vector(0), k4.e2_vector())
    return Fraction(8, 12) * z0e2 / 2


def z_square_alternative() -> Fraction:
    """-8 sqrt(1/(2c)) / t = -8 / 2 = -4."""
    return Fraction(-8, 2)


def kprime_gram_symbolic() -> SymbolicGram:
    f = passage_factor()
    base = [[Fraction(0)] * 8 for _ in range(8)]
    for i in range(6):
        for j in range(6):
            base[i][j] = f * Fraction(k4.BB[i][j])
    ee, zz, ez = e_square(), z_square(), Fraction(0)  # e' and Z' are orthogonal
    base[6][6] = (ee + 2 * ez + zz) / 4
    base[7][7] = (ee - 2 * ez + zz) / 4
    base[6][7] = base[7][6] = (ee - zz) / 4
    return SymbolicGram(tuple(tuple(r) for r in base), KPRIME_LABELS)


def _entry_gcd(m: Sequence[Sequence[Fraction]]) -> int:
    g = 0
    for r in m:
        for x in r:
            g = gcd(g, int(x))
    return g


def admissible(t: Fraction, sg: Optional[SymbolicGram] = None) -> bool:
    sg = sg or kprime_gram_symbolic()
    m = sg.at(t)
    return all(x.denominator == 1 for r in m for x in r) and _entry_gcd(m) == 1


def signature(m: Sequence[Sequence[Fraction]]) -> tuple[int, int]:
    ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in m]))
    return int((ev > 1e-9).sum()), int((ev < -1e-9).sum())


def scan_t(bound: int = 12) -> list[Fraction]:
    sg = kprime_gram_symbolic()
    out = set()
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            t = Fraction(p, q)
            if admissible(t, sg):
                out.add(t)
    return sorted(out)


def target_gram() -> list[list[int]]:
    g = [[0] * 8 for _ in range(8)]
    for i in (0, 2, 4):
        g[i][i + 1] = g[i + 1][i] = 3
    g[6][6] = g[7][7] = -5
    g[6][7] = g[7][6] = -4
    return g


@dataclass
class FujikiSolution:
    t: Fraction
    c: Fraction
    gram: list[list[int]]
    lattice: il.IntLattice
    is_odd: bool
    matches_target: bool
    signature: tuple[int, int]
    negative_root_signature: tuple[int, int]


def solve_fujiki() -> FujikiSolution:
    ts = scan_t()
    if len(ts) != 1:
        raise ArithmeticError(f"expected a unique admissible t, found {ts}")
    t = ts[0]
    sg = kprime_gram_symbolic()
    gram = [[int(x) for x in r] for r in sg.at(t)]
    lat = il.IntLattice.from_gram(gram, KPRIME_LABELS, "H2(K')")
    return FujikiSolution(
        t=t,
        c=2 / (t * t),
        gram=gram,
        lattice=lat,
        is_odd=any(gram[i][i] % 2 for i in range(8)),
        matches_target=gram == target_gram(),
        signature=signature(sg.at(t)),
        negative_root_signature=signature(sg.at(-t)),
    )


def ddelta_values(e4: int = 324, candidates: Sequence[int] = DE_CANDIDATES) -> dict[int, Fraction]:
    """((pi_2* s^* e + D_e) / 2)^4 = (e^4 + d E^4) / 2 for each candidate number d of components."""
    return {d: Fraction(e4 + d * E_FOURTH, 2) for d in candidates}


def ddelta_select(e4: Optional[int] = None) -> int:
    if e4 is None:
        e = k4.h2_vector("e")
        e4 = int(k4.fujiki_quadruple(e, e, e, e))
    ok = [d for d, v in ddelta_values(e4).items() if v.denominator == 1]
    if len(ok) != 1:
        raise ArithmeticError(f"parity selection is not unique: {ok}")
    return ok[0]


def _invariants(inv: Optional[dict] = None) -> dict[int, tuple[int, int, int]]:
    inv = dict(inv) if inv is not None else dict(k4.involution_invariants())
    inv.setdefault(0, (0, 0, 1))
    inv.setdefault(1, (0, 0, 0))
    return inv


def h4_normality_balance(inv: Optional[dict] = None, points: int = ISOLATED_POINTS,
                         k3: Sequence[int] = K3_BETTI) -> tuple[int, int]:
    inv = _invariants(inv)
    lhs = inv[4][2] + 2 * (inv[1][1] + inv[3][1] + inv[0][2] + inv[2][2])
    rhs = points * 1 + k3[0] + k3[2] + k3[4]
    return lhs, rhs


def kprime_betti(inv: Optional[dict] = None, k3: Sequence[int] = K3_BETTI) -> tuple[int, int, int, int]:
    inv = _invariants(inv)
    b2 = inv[2][0] + inv[2][2] + 1
    b3 = inv[3][0] + inv[3][2]
    b4 = inv[4][0] + inv[4][2] + k3[2]
    chi = 1 + b2 - b3 + b4 - b3 + b2 + 1
    return b2, b3, b4, chi
