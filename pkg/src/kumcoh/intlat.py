"""Exact integer lattice algebra.

Matrices are lists of rows.  Integer work is done with gmpy2 ``mpz`` and
rational work with ``mpq``; public results come back as Python ``int`` or
``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence

import gmpy2
from gmpy2 import mpq, mpz

Matrix = list


class LatticeError(ValueError):
    pass


# ---------------------------------------------------------------- conversions

def _q(v) -> mpq:
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    return mpq(v)


def _frac(v) -> Fraction:
    v = mpq(v)
    return Fraction(int(v.numerator), int(v.denominator))


def as_fraction_matrix(m: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[_frac(x) for x in row] for row in m]


def as_int_matrix(m: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in m:
        r = []
        for x in row:
            x = mpq(x)
            if x.denominator != 1:
                raise LatticeError("matrix is not integral")
            r.append(int(x.numerator))
        out.append(r)
    return out


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), mpz(0) * 0) for col in bt] for row in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in zip(*a)]


# ---------------------------------------------------------------- Smith normal form

def snf(m: Sequence[Sequence[int]], check: bool = True) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form U*M*V = D with unimodular U, V and d_i | d_{i+1}."""
    rows, cols = len(m), (len(m[0]) if m else 0)
    a = [[mpz(x) for x in r] for r in m]
    u = [[mpz(int(i == j)) for j in range(rows)] for i in range(rows)]
    v = [[mpz(int(i == j)) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        if f:
            ra, rs = a[dst], a[src]
            for k in range(cols):
                if rs[k]:
                    ra[k] += f * rs[k]
            ua, us = u[dst], u[src]
            for k in range(rows):
                if us[k]:
                    ua[k] += f * us[k]

    def add_col(dst, src, f):  # col_dst += f * col_src
        if f:
            for r in a:
                if r[src]:
                    r[dst] += f * r[src]
            for r in v:
                if r[src]:
                    r[dst] += f * r[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            ri = a[i]
            for j in range(t, cols):
                x = ri[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, rows):
                    if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                        best = (abs(a[i][t]), i, "r")
                for j in range(t, cols):
                    if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                        best = (abs(a[t][j]), j, "c")
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    U = [[int(x) for x in r] for r in u]
    D = [[int(x) for x in r] for r in a]
    V = [[int(x) for x in r] for r in v]
    if check:
        _check_snf(m, U, D, V)
    return U, D, V


def _check_snf(m, U, D, V) -> None:
    prod = matmul(matmul(U, m), V)
    if [[int(x) for x in r] for r in prod] != D:
        raise LatticeError("SNF postcondition U*M*V = D failed")
    if abs(det_int(U)) != 1 or abs(det_int(V)) != 1:
        raise LatticeError("SNF transforms are not unimodular")
    diag = [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j and x:
                raise LatticeError("SNF result is not diagonal")
    nz = [d for d in diag if d]
    if any(nz[k + 1] % nz[k] for k in range(len(nz) - 1)) or (nz and len(nz) < len(diag) and any(diag[len(nz):])):
        raise LatticeError("SNF divisibility chain broken")


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form."""
    if not m or not m[0]:
        return []
    _, d, _ = snf(m, check=False)
    return [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]


# ---------------------------------------------------------------- determinants, elimination

def det_int(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [[mpz(x) for x in r] for r in m]
    sign, prev = 1, mpz(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return int(sign * a[n - 1][n - 1])


def common_denominator(m: Sequence[Sequence]) -> int:
    d = mpz(1)
    for r in m:
        for x in r:
            x = _q(x)
            d = gmpy2.lcm(d, x.denominator)
    return int(d)


def det_rational(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    d = common_denominator(m)
    mi = [[int(_q(x) * d) for x in r] for r in m]
    return Fraction(det_int(mi), d ** n)


def rref(m: Sequence[Sequence]) -> tuple[list[list[mpq]], list[int]]:
    a = [[_q(x) for x in r] for r in m]
    rows, cols = len(a), (len(a[0]) if a else 0)
    piv: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        rr = a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ai = a[i]
                for k in range(c, cols):
                    if rr[k]:
                        ai[k] -= f * rr[k]
        piv.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], piv


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1]) if m else 0


def solve_left(basis: Sequence[Sequence], vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Coordinates X with X * basis = vectors; raises if some vector is outside the span."""
    k = len(basis)
    n = len(basis[0])
    aug = [[_q(basis[i][j]) for i in range(k)] + [_q(v[j]) for v in vectors] for j in range(n)]
    red, piv = rref(aug)
    if any(p >= k for p in piv):
        raise LatticeError("vector outside the span of the basis")
    if len(piv) < k:
        raise LatticeError("basis is not linearly independent")
    out = [[Fraction(0)] * k for _ in vectors]
    for r, p in enumerate(piv):
        row = red[r]
        for t in range(len(vectors)):
            out[t][p] = _frac(row[k + t])
    return out


def nullspace(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Rational basis of {x : M x = 0}."""
    cols = len(m[0])
    red, piv = rref(m)
    free = [c for c in range(cols) if c not in piv]
    out = []
    for f in free:
        x = [mpq(0)] * cols
        x[f] = mpq(1)
        for r, p in enumerate(piv):
            x[p] = -red[r][f]
        out.append([_frac(v) for v in x])
    return out


def primitive_int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale rational rows to primitive integer vectors."""
    out = []
    for r in rows:
        d = common_denominator([r])
        v = [int(_q(x) * d) for x in r]
        g = 0
        for x in v:
            g = gcd(g, x)
        out.append([x // g for x in v] if g else v)
    return out


def hnf(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form basis of the row lattice (zero rows dropped)."""
    a = [[mpz(x) for x in r] for r in m if any(r)]
    if not a:
        return []
    cols = len(a[0])
    out_rows: list = []
    r = 0
    for c in range(cols):
        live = [i for i in range(r, len(a)) if a[i][c]]
        if not live:
            continue
        while True:
            live = [i for i in range(r, len(a)) if a[i][c]]
            p = min(live, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    ri, rr = a[i], a[r]
                    for k in range(c, cols):
                        if rr[k]:
                            ri[k] -= q * rr[k]
                    if ri[c]:
                        done = False
            if done:
                break
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        piv = a[r][c]
        for i in range(r):
            q = a[i][c] // piv
            if q:
                ai, rr = a[i], a[r]
                for k in range(c, cols):
                    if rr[k]:
                        ai[k] -= q * rr[k]
        r += 1
        a = a[:r] + [row for row in a[r:] if any(row)]
        if r == len(a):
            break
    return [[int(x) for x in row] for row in a[:r]]


def rational_hnf(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis (HNF after clearing denominators) of the Z-span of rational rows."""
    d = common_denominator(rows)
    ints = [[int(_q(x) * d) for x in r] for r in rows]
    return [[Fraction(x, d) for x in r] for r in hnf(ints)]


# ---------------------------------------------------------------- lattices

class IntLattice:
    """A lattice given by basis rows inside a rational quadratic space.

    ``ambient`` is the Gram matrix of the enclosing Q-space; ``basis`` holds
    coordinates of the lattice basis in that space.
    """

    def __init__(self, basis: Sequence[Sequence], ambient: Sequence[Sequence],
                 labels: Optional[Sequence[str]] = None, name: str = ""):
        self.basis = [[_frac(_q(x)) for x in r] for r in basis]
        self.ambient = [[_frac(_q(x)) for x in r] for r in ambient]
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(len(self.basis))]
        if len(self.labels) != len(self.basis):
            raise LatticeError("label count differs from rank")
        self.name = name
        self._gram: Optional[list[list[Fraction]]] = None

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence], labels: Optional[Sequence[str]] = None, name: str = "") -> "IntLattice":
        n = len(gram)
        return cls(identity(n), gram, labels, name)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.ambient)

    @property
    def gram(self) -> list[list[Fraction]]:
        if self._gram is None:
            self._gram = gram_of(self.basis, self.ambient)
        return self._gram

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.gram for x in r)

    def is_even(self) -> bool:
        return self.is_integral() and all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        return pair(x, y, self.ambient)

    def coords(self, vectors: Sequence[Sequence]) -> list[list[Fraction]]:
        return solve_left(self.basis, vectors)

    def contains(self, v: Sequence) -> bool:
        try:
            c = self.coords([v])[0]
        except LatticeError:
            return False
        return all(x.denominator == 1 for x in c)

    def __repr__(self) -> str:
        return f"IntLattice({self.name or 'unnamed'}, rank={self.rank})"


def pair(x: Sequence, y: Sequence, g: Sequence[Sequence]) -> Fraction:
    xq = [_q(v) for v in x]
    yq = [_q(v) for v in y]
    tot = mpq(0)
    for i, xi in enumerate(xq):
        if xi:
            gi = g[i]
            s = mpq(0)
            for j, yj in enumerate(yq):
                if yj:
                    s += _q(gi[j]) * yj
            tot += xi * s
    return _frac(tot)


def gram_of(basis: Sequence[Sequence], g: Sequence[Sequence]) -> list[list[Fraction]]:
    d = common_denominator(basis)
    dg = common_denominator(g)
    b = [[mpz(int(_q(x) * d)) for x in r] for r in basis]
    gm = [[mpz(int(_q(x) * dg)) for x in r] for r in g]
    bg = []
    for r in b:
        nz = [(i, x) for i, x in enumerate(r) if x]
        bg.append([sum((x * gm[i][j] for i, x in nz), mpz(0)) for j in range(len(g))])
    scale = d * d * dg
    out = []
    for r in bg:
        out.append([Fraction(int(sum((r[k] * c[k] for k in range(len(r)) if c[k]), mpz(0))), scale) for c in b])
    return out


def discr(lat: IntLattice) -> Fraction:
    """|det Gram|; an integer for integral lattices."""
    d = abs(det_rational(lat.gram))
    if d == 0:
        raise LatticeError(f"lattice {lat.name} is degenerate")
    return d


def inclusion_matrix(sub: IntLattice, sup: IntLattice) -> list[list[int]]:
    c = sup.coords(sub.basis)
    if any(x.denominator != 1 for r in c for x in r):
        raise LatticeError(f"{sub.name} is not contained in {sup.name}")
    return [[int(x) for x in r] for r in c]


def index(sub: IntLattice, sup: IntLattice) -> int:
    """|sup : sub| by the discriminant formula and by SNF; both must agree."""
    if sub.rank != sup.rank:
        raise LatticeError("index needs equal ranks")
    ratio = discr(sub) / discr(sup)
    if ratio.denominator != 1:
        raise LatticeError("discriminant ratio is not an integer")
    root = isqrt(ratio.numerator)
    if root * root != ratio.numerator:
        raise LatticeError("discriminant ratio is not a square")
    via_snf = 1
    for f in invariant_factors(inclusion_matrix(sub, sup)):
        via_snf *= f
    if via_snf != root:
        raise LatticeError(f"index mismatch: discriminants give {root}, SNF gives {via_snf}")
    return root


def add_glue(lat: IntLattice, glue: Sequence[Sequence], glue_names: Optional[Sequence[str]] = None,
             name: str = "", labels: Optional[Sequence[str]] = None) -> IntLattice:
    """Overlattice spanned by ``lat`` and the glue vectors, after integrality checks."""
    names = list(glue_names) if glue_names is not None else [f"g{i}" for i in range(len(glue))]
    for i, g in enumerate(glue):
        for k, b in enumerate(lat.basis):
            v = lat.pair(g, b)
            if v.denominator != 1:
                raise LatticeError(f"glue {names[i]} pairs non-integrally ({v}) with {lat.labels[k]}")
        for j in range(i + 1):
            v = lat.pair(g, glue[j])
            if v.denominator != 1:
                raise LatticeError(f"glue {names[i]} pairs non-integrally ({v}) with glue {names[j]}")
    rows = list(lat.basis) + [list(g) for g in glue]
    basis = rational_hnf(rows)
    if len(basis) != lat.rank:
        raise LatticeError("glue vectors leave the rational span")
    return IntLattice(basis, lat.ambient, labels, name)


def saturate(sub: IntLattice, ambient: IntLattice, name: str = "") -> IntLattice:
    """Primitive closure (sub tensor Q) intersected with ``ambient``, via SNF."""
    c = ambient.coords(sub.basis)
    ints = primitive_int_rows(c)
    _, d, v = snf(ints)
    r = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i])
    vinv = inverse_unimodular(v)
    prim = vinv[:r]
    basis = [[sum((Fraction(x) * ambient.basis[k][j] for k, x in enumerate(row) if x), Fraction(0))
              for j in range(ambient.dim)] for row in prim]
    return IntLattice(rational_hnf(basis), ambient.ambient, None, name)


def inverse_unimodular(m: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(m)
    aug = [list(m[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise LatticeError("matrix is singular")
    out = []
    for r in red:
        row = []
        for x in r[n:]:
            if x.denominator != 1:
                raise LatticeError("matrix is not unimodular")
            row.append(int(x.numerator))
        out.append(row)
    return out


def quotient_invariants(sub: IntLattice, sup: IntLattice) -> list[int]:
    """Invariant factors (> 1) of sup/sub."""
    return [f for f in invariant_factors(inclusion_matrix(sub, sup)) if f != 1]


def factor_counts(factors: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for f in factors:
        out[f] = out.get(f, 0) + 1
    return dict(sorted(out.items()))


def orthogonal_complement(sub: IntLattice, ambient: IntLattice, name: str = "") -> IntLattice:
    """Primitive sublattice of ``ambient`` orthogonal to ``sub``."""
    m = [[ambient.pair(s, b) for b in ambient.basis] for s in sub.basis]
    ker = nullspace(m)
    basis = [[sum((x * ambient.basis[k][j] for k, x in enumerate(row) if x), Fraction(0))
              for j in range(ambient.dim)] for row in ker]
    return saturate(IntLattice(basis, ambient.ambient), ambient, name)


# ---------------------------------------------------------------- involutions

class InvolutionModule:
    """Z^n with an integral involution acting on column vectors."""

    def __init__(self, action: Sequence[Sequence[int]], gram: Optional[Sequence[Sequence]] = None):
        self.action = [[int(x) for x in r] for r in action]
        n = len(self.action)
        sq = matmul(self.action, self.action)
        if [[int(x) for x in r] for r in sq] != identity(n):
            raise LatticeError("action does not square to the identity")
        if gram is not None:
            g = [[_q(x) for x in r] for r in gram]
            at = transpose(self.action)
            if matmul(matmul(at, g), self.action) != g:
                raise LatticeError("action is not an isometry")
        self.gram = gram


def equivariant_decompose(mod: InvolutionModule) -> tuple[int, int, int]:
    """Return (l2, l1-, l1+): Z[Z/2] summand counts of regular, sign and trivial type."""
    a = mod.action
    n = len(a)
    minus = [[a[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    plus = [[a[i][j] + int(i == j) for j in range(n)] for i in range(n)]
    inv = _saturated_kernel(minus, n)
    anti = _saturated_kernel(plus, n)
    if len(inv) + len(anti) != n:
        raise LatticeError("eigenspaces do not span")
    if not inv or not anti:
        r = 0
    else:
        facs = invariant_factors(inv + anti)
        if any(f not in (1, 2) for f in facs):
            raise LatticeError("unexpected quotient factor for an involution")
        r = sum(1 for f in facs if f == 2)
    return r, len(anti) - r, len(inv) - r


def _saturated_kernel(m: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    ker = nullspace(m)
    if not ker:
        return []
    ints = primitive_int_rows(ker)
    _, d, v = snf(ints, check=False)
    r = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i])
    return inverse_unimodular(v)[:r]


def primary_parts(factors: Iterable[int]) -> dict[int, int]:
    """Elementary divisors: {p^k: multiplicity} of the finite group with these invariant factors."""
    out: dict[int, int] = {}
    for f in factors:
        n, p = f, 2
        while n > 1:
            if p * p > n:
                p = n
            if n % p == 0:
                pk = 1
                while n % p == 0:
                    n //= p
                    pk *= p
                out[pk] = out.get(pk, 0) + 1
            p += 1
    return dict(sorted(out.items()))
