"""Symplectic geometry of F_q^4 and the group algebra k[V].

Vectors of V are encoded as integers ``sum c_i q^i``.  Linear algebra mod p
runs on float64 numpy arrays: entries stay below p and row reductions are
matrix products whose partial sums remain far below 2^53, so every value is
an exact integer before the final ``% p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

STANDARD_FORM = ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))
# hyperbolic pairs (e1, e2) and (e3, e4)
BLOCK_FORM = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))


class SympError(ValueError):
    pass


# ---------------------------------------------------------------- mod-p echelon forms

class ModPSpan:
    """A subspace of F_p^n kept as a fully reduced row echelon basis."""

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.rows = np.zeros((0, n))
        self.pivots: list[int] = []
        self._inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=float)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vecs: np.ndarray) -> np.ndarray:
        vecs = np.mod(np.asarray(vecs, dtype=float), self.p)
        if self.pivots:
            vecs = np.mod(vecs - vecs[:, self.pivots] @ self.rows, self.p)
        return vecs

    def contains(self, vec: Sequence) -> bool:
        return not self.reduce(np.atleast_2d(vec)).any()

    def add(self, vecs: np.ndarray, batch: int = 4096) -> int:
        """Insert vectors; returns the number of new dimensions."""
        vecs = np.atleast_2d(np.asarray(vecs, dtype=float))
        start = self.dim
        for s in range(0, len(vecs), batch):
            rem = self.reduce(vecs[s:s + batch])
            rem = rem[rem.any(axis=1)]
            if len(rem):
                self._merge(rem)
        return self.dim - start

    def _merge(self, rem: np.ndarray) -> None:
        new_rows, new_piv = _rref_mod(rem, self.p, self._inv)
        if not new_piv:
            return
        if self.pivots:
            self.rows = np.mod(self.rows - self.rows[:, new_piv] @ new_rows, self.p)
        rows = np.vstack([self.rows, new_rows])
        piv = self.pivots + new_piv
        order = np.argsort(piv, kind="stable")
        self.rows = rows[order]
        self.pivots = [piv[i] for i in order]

    def copy(self) -> "ModPSpan":
        out = ModPSpan(self.p, self.n)
        out.rows = self.rows.copy()
        out.pivots = list(self.pivots)
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModPSpan) and self.p == other.p and self.pivots == other.pivots
                and np.array_equal(self.rows, other.rows))


def _rref_mod(m: np.ndarray, p: int, inv: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.mod(m.copy(), p)
    rows, cols = a.shape
    piv: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if not len(nz):
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = np.mod(a[r] * inv[int(a[r, c])], p)
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if len(hit):
            a[hit] = np.mod(a[hit] - np.outer(col[hit], a[r]), p)
        piv.append(c)
        r += 1
    return a[:r], piv


def span_of(vecs: np.ndarray, p: int) -> ModPSpan:
    s = ModPSpan(p, np.asarray(vecs).shape[1])
    s.add(vecs)
    return s


def span_equal(a: ModPSpan, b: ModPSpan) -> bool:
    return a.dim == b.dim and all(b.contains(r) for r in a.rows)


# ---------------------------------------------------------------- the space V

class SympSpace:
    """F_q^4 with a nondegenerate alternating form."""

    def __init__(self, q: int, form: Sequence[Sequence[int]] = STANDARD_FORM):
        if q not in (2, 3, 5):
            raise SympError("q must be 2, 3 or 5")
        self.q = q
        self.form = np.array(form, dtype=np.int64) % q
        f = self.form
        if ((f + f.T) % q).any() or any(f[i, i] for i in range(4)):
            raise SympError("form is not alternating")
        if round(np.linalg.det(np.array(form, dtype=float))) % q == 0:
            raise SympError("form is degenerate")
        self.size = q ** 4
        self.vectors = np.array(list(product(range(q), repeat=4)))[:, ::-1]  # row k encodes k
        self.weights = q ** np.arange(4)

    def encode(self, v: Iterable[int]) -> int:
        return int(np.dot(np.mod(np.array(list(v)), self.q), self.weights))

    def vec(self, k: int) -> np.ndarray:
        return self.vectors[k]

    def omega(self, v, w) -> int:
        return int(np.array(v) @ self.form @ np.array(w)) % self.q

    def span(self, *vs) -> frozenset[int]:
        pts = {0}
        for v in vs:
            v = np.array(v)
            pts = {self.encode(self.vec(k) + c * v) for k in pts for c in range(self.q)}
        return frozenset(pts)

    def planes(self) -> list[frozenset[int]]:
        """All planes, by brute force over pairs of independent vectors."""
        q = self.q
        grid = np.array(list(product(range(q), repeat=2)))
        seen: set[frozenset[int]] = set()
        for i in range(1, self.size):
            done = np.zeros(self.size, dtype=bool)
            done[: i + 1] = True
            # multiples of v_i span a line, not a plane
            done[(np.outer(np.arange(q), self.vec(i)) % q) @ self.weights] = True
            for j in range(i + 1, self.size):
                if done[j]:
                    continue
                pts = (grid @ np.array([self.vec(i), self.vec(j)]) % q) @ self.weights
                done[pts] = True
                seen.add(frozenset(int(k) for k in pts))
        return sorted(seen, key=lambda s: sorted(s))

    def is_isotropic(self, plane: Iterable[int]) -> bool:
        pts = sorted(plane)
        if len(pts) == self.q ** 2:
            # a plane is isotropic iff two spanning vectors are orthogonal
            a = pts[1]
            line = self.span(self.vec(a))
            b = next(k for k in pts if k not in line)
            return self.omega(self.vec(a), self.vec(b)) == 0
        return all(self.omega(self.vec(a), self.vec(b)) == 0 for a in pts for b in pts)

    def transvection(self, v) -> np.ndarray:
        """Matrix T with T u = u + omega(u, v) v."""
        v = np.array(v) % self.q
        # column j is t_v(e_j) = e_j + omega(e_j, v) v
        t = np.array([(np.eye(4, dtype=np.int64)[j] + self.omega(np.eye(4, dtype=int)[j], v) * v) % self.q
                      for j in range(4)]).T
        if ((t.T @ self.form @ t - self.form) % self.q).any():
            raise SympError(f"transvection along {tuple(v)} does not preserve the form")
        return t

    def transvections(self) -> list[np.ndarray]:
        return [self.transvection(self.vec(k)) for k in range(1, self.size)]

    def permutation(self, g: np.ndarray) -> np.ndarray:
        """perm[k] = code of g applied to vector k."""
        imgs = (self.vectors @ g.T) % self.q
        return imgs @ self.weights

    def translation(self, v) -> np.ndarray:
        imgs = (self.vectors + np.array(v)) % self.q
        return imgs @ self.weights

    def hyperbolic_pairs(self) -> list[tuple[np.ndarray, np.ndarray]]:
        e = np.eye(4, dtype=np.int64)
        out = []
        for i in range(4):
            for j in range(4):
                if i < j and self.omega(e[i], e[j]) == 1:
                    out.append((e[i], e[j]))
        return out


# ---------------------------------------------------------------- counting

@dataclass(frozen=True)
class PlaneCounts:
    lines: int
    planes: int
    isotropic: int
    nonisotropic: int


def formula_counts(q: int, n: int = 4) -> PlaneCounts:
    lines = (q ** n - 1) // (q - 1)
    planes = (q ** n - 1) * (q ** (n - 1) - 1) // ((q ** 2 - 1) * (q - 1))
    iso = (q ** n - 1) * (q ** (n - 2) - 1) // ((q ** 2 - 1) * (q - 1))
    non = q ** (n - 2) * (q ** n - 1) // (q ** 2 - 1)
    return PlaneCounts(lines, planes, iso, non)


@lru_cache(maxsize=None)
def plane_counts(q: int) -> PlaneCounts:
    """Brute-force counts, checked against the closed formulas."""
    sp = SympSpace(q)
    lines = {sp.span(sp.vec(k)) for k in range(1, sp.size)}
    pls = sp.planes()
    iso = sum(1 for p in pls if sp.is_isotropic(p))
    got = PlaneCounts(len(lines), len(pls), iso, len(pls) - iso)
    want = formula_counts(q)
    if got != want:
        raise SympError(f"plane counts disagree for q={q}: brute {got}, formula {want}")
    return got


# ---------------------------------------------------------------- group algebra

def plane_sum(sp: SympSpace, plane: Iterable[int]) -> np.ndarray:
    v = np.zeros(sp.size)
    v[list(plane)] = 1
    return v


def permute_cols(rows: np.ndarray, perm: np.ndarray) -> np.ndarray:
    """Image of sum c_k X_k under X_k -> X_perm[k]."""
    out = np.empty_like(rows)
    out[:, perm] = rows
    return out


def close_span(span: ModPSpan, actions: Sequence[Callable[[np.ndarray], np.ndarray]]) -> ModPSpan:
    """Enlarge ``span`` until it is stable under every action."""
    changed = True
    while changed:
        changed = False
        for act in actions:
            if span.dim == 0:
                return span
            if span.add(act(span.rows)):
                changed = True
    return span


def sp_span_closure(seeds: np.ndarray, actions: Sequence[Callable[[np.ndarray], np.ndarray]], p: int) -> ModPSpan:
    seeds = np.atleast_2d(np.asarray(seeds, dtype=float))
    span = ModPSpan(p, seeds.shape[1])
    span.add(seeds)
    return close_span(span, actions)


def translation_actions(sp: SympSpace) -> list[Callable]:
    e = np.eye(4, dtype=np.int64)
    return [(lambda rows, pm=sp.translation(e[i]): permute_cols(rows, pm)) for i in range(4)]


def ideal_of(sp: SympSpace, gens: np.ndarray) -> ModPSpan:
    """Ideal of k[V] generated by ``gens``: closure under the translations X_{e_i}."""
    return sp_span_closure(gens, translation_actions(sp), sp.q)


def ideal_n(sp: SympSpace, planes=None) -> ModPSpan:
    pls = planes if planes is not None else sp.planes()
    gens = np.array([plane_sum(sp, p) for p in pls if not sp.is_isotropic(p)])
    return ideal_of(sp, gens)


def ideal_m(sp: SympSpace, planes=None) -> ModPSpan:
    pls = planes if planes is not None else sp.planes()
    return ideal_of(sp, np.array([plane_sum(sp, p) for p in pls]))


def d_space(sp: SympSpace, n_ideal: ModPSpan) -> ModPSpan:
    """D = m.(N), spanned by (X_{e_i} - 1) b for b in a basis of (N)."""
    span = ModPSpan(sp.q, sp.size)
    for act in translation_actions(sp):
        span.add(act(n_ideal.rows) - n_ideal.rows)
    return span


def d_space_differences(sp: SympSpace, n_ideal: ModPSpan) -> ModPSpan:
    """D as the span of X_v g - g over all v in V and g in a basis of (N)."""
    span = ModPSpan(sp.q, sp.size)
    for k in range(1, sp.size):
        pm = sp.translation(sp.vec(k))
        span.add(permute_cols(n_ideal.rows, pm) - n_ideal.rows)
    return span


@dataclass(frozen=True)
class IdealDims:
    dim_M: int
    dim_N: int
    dim_D: int
    m_equals_n: bool
    d_routes_agree: bool


@lru_cache(maxsize=None)
def ideal_dims(q: int, both_d_routes: Optional[bool] = None) -> IdealDims:
    sp = SympSpace(q)
    pls = sp.planes()
    n = ideal_n(sp, pls)
    m = ideal_m(sp, pls)
    d = d_space(sp, n)
    if both_d_routes is None:
        both_d_routes = True
    agree = span_equal(d, d_space_differences(sp, n)) if both_d_routes else True
    return IdealDims(m.dim, n.dim, d.dim, span_equal(m, n), agree)


def all_ones(sp: SympSpace) -> np.ndarray:
    return np.ones(sp.size)


def x_in_d_check(q: int) -> bool:
    sp = SympSpace(q)
    return d_space(sp, ideal_n(sp)).contains(all_ones(sp))


# ---------------------------------------------------------------- Sym^2(Lambda^2 V) + k[V]

PAIRS = [(i, j) for i in range(4) for j in range(i + 1, 4)]
SYM_PAIRS = [(a, b) for a in range(6) for b in range(a, 6)]
SYM_INDEX = {ab: k for k, ab in enumerate(SYM_PAIRS)}


def wedge2(v, w, q: int) -> np.ndarray:
    v, w = np.asarray(v), np.asarray(w)
    return np.array([(v[i] * w[j] - v[j] * w[i]) % q for i, j in PAIRS])


def sym2_square(u: np.ndarray, q: int) -> np.ndarray:
    """u^2 in Sym^2 over the monomial basis p_a p_b, a <= b."""
    out = np.zeros(21, dtype=np.int64)
    for (a, b), k in SYM_INDEX.items():
        out[k] = (u[a] * u[a]) % q if a == b else (2 * u[a] * u[b]) % q
    return out


def lambda2_matrix(g: np.ndarray, q: int) -> np.ndarray:
    e = np.eye(4, dtype=np.int64)
    cols = [wedge2(g @ e[i], g @ e[j], q) for i, j in PAIRS]
    return np.array(cols).T % q


def sym2_matrix(g: np.ndarray, q: int) -> np.ndarray:
    lam = lambda2_matrix(g, q)
    m = np.zeros((21, 21), dtype=np.int64)
    for (a, b), k in SYM_INDEX.items():
        for (c, d), r in SYM_INDEX.items():
            if c == d:
                m[r, k] = lam[c, a] * lam[c, b]
            else:
                m[r, k] = lam[c, a] * lam[d, b] + lam[d, a] * lam[c, b]
    return m % q


def combined_actions(sp: SympSpace, gens: Sequence[np.ndarray]) -> list[Callable]:
    out = []
    for g in gens:
        s = sym2_matrix(g, sp.q).astype(float)
        pm = sp.permutation(g)

        def act(rows, s=s, pm=pm):
            return np.hstack([rows[:, :21] @ s.T, permute_cols(rows[:, 21:], pm)])
        out.append(act)
    return out


def sym_actions(sp: SympSpace, gens: Sequence[np.ndarray]) -> list[Callable]:
    return [(lambda rows, s=sym2_matrix(g, sp.q).astype(float): rows @ s.T) for g in gens]


@dataclass(frozen=True)
class CombinedDims:
    dim_O: int
    dim_U: int
    ker_pr1: int
    ker_pr2: int
    pr1_is_U: bool
    pr2_is_N: bool


@lru_cache(maxsize=None)
def combined_dims(q: int, pair: int = 0) -> CombinedDims:
    """Dimensions of O and U built from the ``pair``-th standard hyperbolic pair."""
    sp = SympSpace(q)
    v, w = sp.hyperbolic_pairs()[pair]
    x = sym2_square(wedge2(v, w, q), q)
    y = plane_sum(sp, sp.span(v, w))
    gens = sp.transvections()
    seeds = np.array([np.concatenate([x, permute_cols(y[None], sp.translation(sp.vec(k)))[0]])
                      for k in range(sp.size)])
    o = sp_span_closure(seeds, combined_actions(sp, gens), q)
    u = sp_span_closure(x[None], sym_actions(sp, gens), q)
    pr1 = span_of(o.rows[:, :21], q)
    pr2 = span_of(o.rows[:, 21:], q)
    n = ideal_n(sp)
    return CombinedDims(o.dim, u.dim, o.dim - pr1.dim, o.dim - pr2.dim,
                        span_equal(pr1, u), span_equal(pr2, n))


@lru_cache(maxsize=None)
def transitivity_check(q: int) -> tuple[int, int]:
    """(orbit size of one non-isotropic plane under transvections, non-isotropic count)."""
    sp = SympSpace(q)
    perms = [sp.permutation(g) for g in sp.transvections()]
    e = np.eye(4, dtype=np.int64)
    start = sp.span(e[0], e[2])
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for pl in frontier:
            for pm in perms:
                img = frozenset(int(pm[k]) for k in pl)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen), formula_counts(q).nonisotropic


# ---------------------------------------------------------------- G_xi orbits on planes of F_2^4

def xi_matrix() -> np.ndarray:
    """Multiplication by xi on <1, xi> mod 2, using xi^2 = xi - 1; columns are images of 1, xi."""
    # coordinates (c0, c1) stand for c0 + c1*xi
    img_one = np.array([0, 1])
    sq = np.array([-1, 1])  # xi^2 = -1 + xi
    return np.array([img_one, sq]).T % 2


def gxi_generators() -> list[np.ndarray]:
    """g1 = (M_xi, Id), g2 = swap, g3 = (z1, z2) -> (z1 + z2, z2) on E[2] x E[2]."""
    m = xi_matrix()
    i2, z = np.eye(2, dtype=np.int64), np.zeros((2, 2), dtype=np.int64)
    g1 = np.block([[m, z], [z, i2]])
    g2 = np.block([[z, i2], [i2, z]])
    g3 = np.block([[i2, i2], [z, i2]])
    return [g1 % 2, g2, g3]


def plane_triples() -> list[frozenset[int]]:
    """Planes of F_2^4 as unordered triples {x, y, z} with x + y + z = 0."""
    out = set()
    for x in range(1, 16):
        for y in range(1, 16):
            if x != y:
                out.add(frozenset((x, y, x ^ y)))
    return sorted(out, key=sorted)


def _code2(v) -> int:
    return int(sum(int(c) % 2 << i for i, c in enumerate(v)))


def _vec2(k: int) -> np.ndarray:
    return np.array([(k >> i) & 1 for i in range(4)])


def gxi_orbits() -> list[frozenset[frozenset[int]]]:
    triples = plane_triples()
    if len(triples) != 35:
        raise SympError("expected 35 planes")
    perms = [{k: _code2(g @ _vec2(k)) for k in range(16)} for g in gxi_generators()]
    for pm in perms:
        imgs = {frozenset(pm[k] for k in t) for t in triples}
        if imgs != set(triples):
            raise SympError("generator does not permute the planes")
    left = set(triples)
    orbits = []
    while left:
        start = min(left, key=sorted)
        orb = {start}
        frontier = [start]
        while frontier:
            t = frontier.pop()
            for pm in perms:
                img = frozenset(pm[k] for k in t)
                if img not in orb:
                    orb.add(img)
                    frontier.append(img)
        orbits.append(frozenset(orb))
        left -= orb
    return sorted(orbits, key=len)


def e_xi_points() -> tuple[int, int, int]:
    """Codes (in the first factor) of the nonzero 2-torsion points 1, xi, xi^2 of E_xi."""
    m = xi_matrix()
    one = np.array([1, 0])
    return tuple(_code2(np.concatenate([np.linalg.matrix_power(m, k) @ one % 2, [0, 0]])) for k in range(3))


def listed_five_orbit() -> frozenset[frozenset[int]]:
    """The explicit five-element orbit, with x_k = xi^(k-1)."""
    pts = [_vec2(c)[:2] for c in e_xi_points()]
    zero = np.zeros(2, dtype=int)

    def pt(a, b):
        return _code2(np.concatenate([a, b]))

    x1, x2, x3 = pts
    trips = [
        (pt(zero, x1), pt(zero, x2), pt(zero, x3)),
        (pt(x1, zero), pt(x2, zero), pt(x3, zero)),
        (pt(x1, x1), pt(x2, x2), pt(x3, x3)),
        (pt(x1, x2), pt(x2, x3), pt(x3, x1)),
        (pt(x1, x3), pt(x2, x1), pt(x3, x2)),
    ]
    return frozenset(frozenset(t) for t in trips)


def triple_isotropy_check(form: Sequence[Sequence[int]] = STANDARD_FORM) -> bool:
    """For q = 2: omega(x,y) = omega(x,z) = omega(y,z) on every triple, and it decides isotropy."""
    sp = SympSpace(2, form)
    for t in plane_triples():
        x, y, z = (_vec2(k) for k in t)
        vals = {sp.omega(x, y), sp.omega(x, z), sp.omega(y, z)}
        if len(vals) != 1:
            return False
        plane = frozenset(sp.encode(_vec2(k)) for k in (0, *t))
        if sp.is_isotropic(plane) != (vals.pop() == 0):
            return False
    return True
