"""Nakajima operators on the cohomology of Hilbert schemes of points on a torus.

States live in creation form: a creation monomial is a sorted tuple of
factors ``(m, idx)`` standing for q_m(e_idx), with ``e_idx`` a monomial of
``torusring.MONOMIALS``.  Multiplication operators (d and G_k(a)) are
evaluated by rewriting a state through d and q_1 only, commuting the operator
to the vacuum, and evaluating back in creation form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from . import torusring as tr
from .torusring import TorusClass

Mono = tuple  # tuple[tuple[int, int], ...]
Atom = tuple
Word = tuple
Scalar = Union[int, Fraction]


def _par(idx: int) -> int:
    return tr.degree_of(idx) & 1


def _mono_par(mono: Mono) -> int:
    return sum(_par(c) for _, c in mono) & 1


def mono_degree(mono: Mono) -> int:
    return sum(tr.degree_of(c) + 2 * (m - 1) for m, c in mono)


def mono_weight(mono: Mono) -> int:
    return sum(m for m, _ in mono)


def _int_basis(i: int, j: int) -> int:
    s, k = tr.wedge_basis(i, j)
    return s if (s and k == tr.TOP) else 0


class FockState:
    """Finite Q-linear combination of creation monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, Scalar] | None = None):
        clean = {}
        for k, v in (terms or {}).items():
            if v:
                clean[k] = Fraction(v)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockState is immutable")

    @classmethod
    def vacuum(cls) -> "FockState":
        return cls({(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> set[int]:
        return {mono_weight(m) for m in self.terms}

    def degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def weight(self) -> int:
        w = self.weights()
        if len(w) != 1:
            raise ValueError("state has no single weight")
        return w.pop()

    def degree(self) -> int:
        d = self.degrees()
        if len(d) != 1:
            raise ValueError("state is not homogeneous")
        return d.pop()

    def __add__(self, other: "FockState") -> "FockState":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FockState(out)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + (-1) * other

    def __neg__(self) -> "FockState":
        return (-1) * self

    def __mul__(self, c: Scalar) -> "FockState":
        return FockState({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FockState) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            word = "".join(f"q{m}({_name(i)})" for m, i in mono)
            parts.append(f"{c}*{word}|0>")
        return " + ".join(parts)


def _name(idx: int) -> str:
    return "".join(f"a{g}" for g in tr.MONOMIALS[idx]) or "1"


# ---------------------------------------------------------------- atoms

@lru_cache(maxsize=None)
def _create(m: int, c: int, mono: Mono) -> tuple[int, Mono]:
    f = (m, c)
    if _par(c) and f in mono:
        return 0, ()
    pos = 0
    while pos < len(mono) and mono[pos] < f:
        pos += 1
    sign = -1 if (_par(c) and _mono_par(mono[:pos])) else 1
    return sign, mono[:pos] + (f,) + mono[pos:]


@lru_cache(maxsize=None)
def _annihilate(m: int, c: int, mono: Mono) -> tuple:
    """q_{-m}(e_c) on a creation monomial, m > 0; returns ((coeff, mono), ...)."""
    out = []
    passed = 0
    for j, (mj, cj) in enumerate(mono):
        if mj == m:
            val = _int_basis(c, cj)
            if val:
                sign = -1 if (_par(c) and passed) else 1
                out.append((sign * (-m) * val, mono[:j] + mono[j + 1:]))
        passed ^= _par(cj)
    return tuple(out)


def _apply_q(m: int, c: int, state: Mapping[Mono, Fraction]) -> dict:
    out: dict = {}
    if m > 0:
        for mono, v in state.items():
            s, new = _create(m, c, mono)
            if s:
                out[new] = out.get(new, 0) + s * v
    elif m < 0:
        for mono, v in state.items():
            for s, new in _annihilate(-m, c, mono):
                out[new] = out.get(new, 0) + s * v
    return {k: v for k, v in out.items() if v}


def _apply_q_class(m: int, a: TorusClass, state: Mapping[Mono, Fraction]) -> dict:
    out: dict = {}
    for c, coef in a.terms():
        for k, v in _apply_q(m, c, state).items():
            out[k] = out.get(k, 0) + coef * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _virasoro_mono(m: int, c: int, mono: Mono) -> tuple:
    """L_m(e_c) applied to one creation monomial, from its defining sum."""
    n = mono_weight(mono)
    span = n + abs(m) + 1
    half = Fraction(1, 2) if m != 0 else Fraction(1)
    out: dict = {}
    start = {mono: Fraction(1)}
    for eps, left, right in tr.diagonal_sweedler(TorusClass.basis(c)):
        for k in range(-span, span + 1):
            if k == 0 or k == m:
                continue
            if m == 0 and k < 0:
                continue
            mid = _apply_q_class(m - k, right, start)
            if not mid:
                continue
            res = _apply_q_class(k, left, mid)
            for key, v in res.items():
                out[key] = out.get(key, 0) + eps * half * v
    return tuple((k, v) for k, v in out.items() if v)


def _apply_L(m: int, c: int, state: Mapping[Mono, Fraction]) -> dict:
    out: dict = {}
    for mono, v in state.items():
        for key, w in _virasoro_mono(m, c, mono):
            out[key] = out.get(key, 0) + v * w
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _boundary_mono(mono: Mono) -> tuple:
    """d applied to a creation monomial via [d, q_m(a)] = m L_m(a)."""
    out: dict = {}
    for j, (mj, cj) in enumerate(mono):
        cur = _apply_L(mj, cj, {mono[j + 1:]: Fraction(mj)})
        for mp, cp in reversed(mono[:j]):
            if not cur:
                break
            cur = _apply_q(mp, cp, cur)
        for key, v in cur.items():
            out[key] = out.get(key, 0) + v
    return tuple((k, v) for k, v in out.items() if v)


def _apply_D(state: Mapping[Mono, Fraction]) -> dict:
    out: dict = {}
    for mono, v in state.items():
        for key, w in _boundary_mono(mono):
            out[key] = out.get(key, 0) + v * w
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------- operator words
# An operator polynomial is a dict {word: coeff}; a word is a tuple of atoms
# applied right to left.  Atoms: ("D",), ("Q", m, idx), ("L", m, idx), ("G", k, idx).

def _atom_par(atom: Atom) -> int:
    return 0 if atom[0] == "D" else _par(atom[2])


def _word_par(word: Word) -> int:
    return sum(_atom_par(a) for a in word) & 1


def op_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def op_add(x: dict, y: dict, s: Scalar = 1) -> dict:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v}


def op_scale(x: dict, s: Scalar) -> dict:
    return {k: v * s for k, v in x.items() if v * s}


def supercommutator(x: dict, y: dict) -> dict:
    """[X, Y] = XY - (-1)^{|X||Y|} YX, extended bilinearly over homogeneous words."""
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            sign = -1 if (_word_par(w1) and _word_par(w2)) else 1
            for w, c in ((w1 + w2, c1 * c2), (w2 + w1, -sign * c1 * c2)):
                out[w] = out.get(w, 0) + c
    return {k: v for k, v in out.items() if v}


def op_q(m: int, a: TorusClass) -> dict:
    return {(("Q", m, c),): Fraction(v) for c, v in a.terms()}


def op_L(m: int, a: TorusClass) -> dict:
    return {(("L", m, c),): Fraction(v) for c, v in a.terms()}


def op_G(k: int, a: TorusClass) -> dict:
    return {(("G", k, c),): Fraction(v) for c, v in a.terms()}


OP_D = {(("D",),): Fraction(1)}
OP_ID = {(): Fraction(1)}


def q_prime() -> dict:
    """The operator q' = [d, q_1(1)]."""
    return supercommutator(OP_D, op_q(1, tr.ONE))


def ad_power(x: dict, y: dict, k: int) -> dict:
    for _ in range(k):
        y = supercommutator(x, y)
    return y


@lru_cache(maxsize=None)
def _dq1_expansion(m: int, c: int) -> tuple:
    """q_m(e_c) written through d and q_1 only."""
    y = ad_power(q_prime(), op_q(1, TorusClass.basis(c)), m - 1)
    y = op_scale(y, Fraction((-1) ** (m - 1), factorial(m - 1)))
    return tuple(y.items())


def _g_q1_commutator(k: int, a: int, b: int) -> dict:
    """[G_k(e_a), q_1(e_b)] = 1/k! ad(d)^k q_1(e_a e_b)."""
    s, idx = tr.wedge_basis(a, b)
    if not s:
        return {}
    y = op_q(1, TorusClass.basis(idx, s))
    return op_scale(ad_power(OP_D, y, k), Fraction(1, factorial(k)))


@lru_cache(maxsize=None)
def _multiplication_mono(k: int, a: int, mono: Mono) -> tuple:
    """G_k(e_a) applied to a creation monomial."""
    words: dict = dict(OP_ID)
    for m, c in mono:
        words = op_mul(words, dict(_dq1_expansion(m, c)))
    gpar = _par(a)
    result: dict = {}
    for word, coef in words.items():
        passed = 0
        for j, atom in enumerate(word):
            if atom[0] == "Q":
                comm = _g_q1_commutator(k, a, atom[2])
                sign = -1 if (gpar and passed) else 1
                for cw, cc in comm.items():
                    full = word[:j] + cw + word[j + 1:]
                    result[full] = result.get(full, 0) + sign * coef * cc
            passed ^= _atom_par(atom)
    state = apply_op(result, {(): Fraction(1)})
    return tuple(state.items())


def _apply_G(k: int, a: int, state: Mapping[Mono, Fraction]) -> dict:
    out: dict = {}
    for mono, v in state.items():
        if not mono:
            continue
        for key, w in _multiplication_mono(k, a, mono):
            out[key] = out.get(key, 0) + v * w
    return {k_: v_ for k_, v_ in out.items() if v_}


def apply_atom(atom: Atom, state: Mapping[Mono, Fraction]) -> dict:
    kind = atom[0]
    if kind == "Q":
        return _apply_q(atom[1], atom[2], state)
    if kind == "D":
        return _apply_D(state)
    if kind == "L":
        return _apply_L(atom[1], atom[2], state)
    if kind == "G":
        return _apply_G(atom[1], atom[2], state)
    raise ValueError(f"unknown atom {atom!r}")


def apply_op(op: dict, state: Mapping[Mono, Fraction]) -> dict:
    """Apply an operator polynomial to a raw state dict."""
    out: dict = {}
    cache: dict = {}
    for word, coef in op.items():
        cur = state
        for i in range(len(word) - 1, -1, -1):
            key = word[i:]
            if key in cache:
                cur = cache[key]
            else:
                cur = apply_atom(word[i], cur) if cur else {}
                cache[key] = cur
            if not cur:
                break
        for key, v in cur.items():
            out[key] = out.get(key, 0) + coef * v
    return {k: v for k, v in out.items() if v}


def act(op: dict, s: FockState) -> FockState:
    return FockState(apply_op(op, s.terms))


# ---------------------------------------------------------------- constructors

def state(*factors: tuple[int, TorusClass], coeff: Scalar = 1) -> FockState:
    """coeff * q_{m1}(c1) ... q_{mk}(ck)|0>, factors listed left to right."""
    cur: dict = {(): Fraction(coeff)}
    for m, c in reversed(factors):
        if m <= 0:
            raise ValueError("creation factors need m >= 1")
        cur = _apply_q_class(m, c, cur)
    return FockState(cur)


def unit(n: int) -> FockState:
    """Fundamental class 1 of A^[n], equal to q_1(1)^n|0>/n!."""
    return state(*[(1, tr.ONE)] * n, coeff=Fraction(1, factorial(n)))


# ---------------------------------------------------------------- pairing

@lru_cache(maxsize=None)
def _pair_mono(mono: Mono, target: tuple) -> Fraction:
    if not mono:
        return Fraction(dict(target).get((), 0))
    (m, c), rest = mono[0], mono[1:]
    sign = -1 if (_par(c) and _mono_par(rest)) else 1
    moved = _apply_q(-m, c, dict(target))
    if not moved:
        return Fraction(0)
    scale = sign * (-1) ** m
    return scale * _pair_mono(rest, tuple(sorted(moved.items())))


def vacuum_pairing(x: FockState, y: FockState, n: int | None = None) -> Fraction:
    """Poincare pairing (x, y) on A^[n] via the adjoint rule q_m(a)^+ = (-1)^m q_{-m}(a)."""
    if x.is_zero() or y.is_zero():
        return Fraction(0)
    wx, wy = x.weights(), y.weights()
    if len(wx | wy) > 1 or (n is not None and (wx | wy) != {n}):
        raise ValueError("weight mismatch in pairing")
    total = Fraction(0)
    for mono, v in x.terms.items():
        sub = {k: w for k, w in y.terms.items() if mono_degree(k) + mono_degree(mono) == 4 * mono_weight(mono)}
        if sub:
            total += v * _pair_mono(mono, tuple(sorted(sub.items())))
    return total


def integral(s: FockState) -> Fraction:
    """Integral over A^[n] of a state of weight n."""
    if s.is_zero():
        return Fraction(0)
    n = s.weight()
    return vacuum_pairing(s, unit(n), n)


# ---------------------------------------------------------------- multiplication words

Token = tuple  # ("D",) or ("G", k, idx)


class MultWord:
    """Q-linear combination of products of multiplication operators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] | Iterable = ()):
        if not isinstance(terms, Mapping):
            terms = dict(terms)
        out: dict = {}
        for toks, c in terms.items():
            sign, canon = _canonical_tokens(tuple(toks))
            if sign and c:
                out[canon] = out.get(canon, 0) + sign * Fraction(c)
        object.__setattr__(self, "terms", {k: v for k, v in out.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("MultWord is immutable")

    @classmethod
    def one(cls) -> "MultWord":
        return cls({(): 1})

    @classmethod
    def D(cls) -> "MultWord":
        return cls({(("D",),): 1})

    @classmethod
    def G(cls, k: int, a: TorusClass) -> "MultWord":
        return cls({(("G", k, c),): v for c, v in a.terms()})

    def __mul__(self, other):
        if isinstance(other, MultWord):
            out: dict = {}
            for t1, c1 in self.terms.items():
                for t2, c2 in other.terms.items():
                    sign, canon = _canonical_tokens(t1 + t2)
                    if sign:
                        out[canon] = out.get(canon, 0) + sign * c1 * c2
            return MultWord(out)
        return MultWord({k: v * other for k, v in self.terms.items()})

    def __rmul__(self, c):
        return MultWord({k: v * c for k, v in self.terms.items()})

    def __add__(self, other: "MultWord") -> "MultWord":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MultWord(out)

    def __sub__(self, other: "MultWord") -> "MultWord":
        return self + (-1) * other

    def __neg__(self) -> "MultWord":
        return (-1) * self

    def __pow__(self, k: int) -> "MultWord":
        out = MultWord.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MultWord) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for toks, c in sorted(self.terms.items()):
            names = []
            for t in toks:
                names.append("d" if t[0] == "D" else f"G{t[1]}({_name(t[2])})")
            parts.append(f"{c}*" + ("*".join(names) or "1"))
        return " + ".join(parts)


def _token_key(t: Token) -> tuple:
    return (0, 0, 0) if t[0] == "D" else (1, t[1], t[2])


def _token_par(t: Token) -> int:
    return 0 if t[0] == "D" else _par(t[2])


def _canonical_tokens(toks: tuple) -> tuple[int, tuple]:
    """Sort supercommuting tokens, returning (sign, sorted) with sign 0 for odd squares."""
    seq = list(toks)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and _token_key(seq[j - 1]) > _token_key(seq[j]):
            if _token_par(seq[j - 1]) and _token_par(seq[j]):
                sign = -sign
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            j -= 1
    for i in range(1, len(seq)):
        if seq[i] == seq[i - 1] and _token_par(seq[i]):
            return 0, ()
    return sign, tuple(seq)


def apply_mult_word(w: MultWord, s: FockState) -> FockState:
    """Cup product of the class represented by ``w`` with ``s``."""
    out: dict = {}
    for toks, c in w.terms.items():
        cur = s.terms
        for t in reversed(toks):
            if not cur:
                break
            cur = _apply_D(cur) if t[0] == "D" else _apply_G(t[1], t[2], cur)
        for key, v in cur.items():
            out[key] = out.get(key, 0) + c * v
    return FockState(out)


def class_of(w: MultWord, n: int) -> FockState:
    return apply_mult_word(w, unit(n))


def cup(w: MultWord, s: FockState) -> FockState:
    return apply_mult_word(w, s)


# ---------------------------------------------------------------- Kummer restriction

def kummer_word() -> MultWord:
    """Class of K_2(A) in A^[3] as G_0(a1)G_0(a2)G_0(a3)G_0(a4)."""
    w = MultWord.one()
    for i in (1, 2, 3, 4):
        w = w * MultWord.G(0, tr.a(i))
    return w


def kummer_restrict(s: FockState) -> FockState:
    """[K] . s, which determines the pull-back of s to K_2(A)."""
    return apply_mult_word(kummer_word(), s)


def kummer_pairing(alpha: FockState, beta: FockState) -> Fraction:
    """Integral over K_2(A) of the pull-backs of alpha and beta."""
    if alpha.weights() - {3} or beta.weights() - {3}:
        raise ValueError("Kummer pairing needs weight-3 states")
    return vacuum_pairing(kummer_restrict(alpha), beta, 3)


def annihilator_test(alpha: FockState) -> bool:
    return kummer_restrict(alpha).is_zero()


# ---------------------------------------------------------------- identities

def creation_from_dq1(m: int, a: TorusClass, states: Sequence[FockState]) -> tuple[bool, FockState | None]:
    """Check (ad q')^m q_1(a) = (-1)^m m! q_{m+1}(a) on the given states."""
    lhs = ad_power(q_prime(), op_q(1, a), m)
    for s in states:
        left = act(lhs, s)
        right = act(op_q(m + 1, a), s) * ((-1) ** m * factorial(m))
        if left != right:
            return False, s
    return True, None


def enumerate_monomials(n: int, d: int | None = None) -> list[Mono]:
    """Canonical creation monomials of weight n (and degree d if given)."""
    factors = [(m, c) for m in range(1, n + 1) for c in range(16)]
    out: list = []

    def rec(start: int, rem: int, cur: list):
        if rem == 0:
            mono = tuple(cur)
            if d is None or mono_degree(mono) == d:
                out.append(mono)
            return
        for i in range(start, len(factors)):
            m, c = factors[i]
            if m > rem:
                continue
            if _par(c) and cur and cur[-1] == (m, c):
                continue
            cur.append((m, c))
            rec(i, rem - m, cur)
            cur.pop()

    rec(0, n, [])
    return out


def goettsche_betti(n: int) -> tuple[int, ...]:
    """Betti numbers of A^[n] by counting super-symmetric creation monomials."""
    counts = [0] * (4 * n + 1)
    for mono in enumerate_monomials(n):
        counts[mono_degree(mono)] += 1
    return tuple(counts)


# ---------------------------------------------------------------- tables

class BasisClass(NamedTuple):
    label: str
    degree: int
    state: FockState
    word: Optional[MultWord]


def _b(i: int) -> TorusClass:
    """The i-th degree-two monomial, 1 <= i <= 6, in monomial order."""
    return TorusClass.basis(tr.h2_monomials()[i - 1])


def _bstar(i: int) -> TorusClass:
    return tr.dual_for_tables(tr.h2_monomials()[i - 1])


def _bname(i: int) -> str:
    return _name(tr.h2_monomials()[i - 1])


def hilb_basis_a2() -> list[BasisClass]:
    """Integral basis of H*(A^[2], Z) with the multiplication word of each class.

    The published table lists 43 classes in degree 4; the class q_1(1)q_1(x)|0>
    (word G_0(x)) completes it to the 44 required there.
    """
    one, x, a, s = tr.ONE, tr.X, tr.a, tr.astar
    G, D = MultWord.G, MultWord.D
    h = Fraction(1, 2)
    rows: list[BasisClass] = [BasisClass("q1(1)^2/2", 0, state((1, one), (1, one), coeff=h), MultWord.one())]
    for i in range(1, 5):
        rows.append(BasisClass(f"q1(1)q1(a{i})", 1, state((1, one), (1, a(i))), G(0, a(i))))
    rows.append(BasisClass("q2(1)/2", 2, state((2, one), coeff=h), D()))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            rows.append(BasisClass(f"q1(a{i})q1(a{j})", 2, state((1, a(i)), (1, a(j))), G(0, a(i)) * G(0, a(j))))
    for i in range(1, 7):
        rows.append(BasisClass(f"q1(1)q1({_bname(i)})", 2, state((1, one), (1, _b(i))), G(0, _b(i))))
    for i in range(1, 5):
        rows.append(BasisClass(f"q2(a{i})/2", 3, state((2, a(i)), coeff=h), -1 * G(1, a(i))))
    for i in range(1, 5):
        for j in range(1, 7):
            rows.append(BasisClass(f"q1(a{i})q1({_bname(j)})", 3, state((1, a(i)), (1, _b(j))), G(0, a(i)) * G(0, _b(j))))
    for i in range(1, 5):
        rows.append(BasisClass(f"q1(1)q1(a{i}*)", 3, state((1, one), (1, s(i))), G(0, s(i))))
    for i in range(1, 7):
        st = state((1, _b(i)), (1, _b(i)), coeff=h) - state((2, _b(i)), coeff=h)
        rows.append(BasisClass(f"(q1({_bname(i)})^2-q2({_bname(i)}))/2", 4, st, h * G(0, _b(i)) ** 2 + G(1, _b(i))))
    for i in range(1, 5):
        for j in range(1, 5):
            rows.append(BasisClass(f"q1(a{i})q1(a{j}*)", 4, state((1, a(i)), (1, s(j))), G(0, a(i)) * G(0, s(j))))
    for i in range(1, 7):
        for j in range(i, 7):
            rows.append(BasisClass(f"q1({_bname(i)})q1({_bname(j)})", 4, state((1, _b(i)), (1, _b(j))), G(0, _b(i)) * G(0, _b(j))))
    rows.append(BasisClass("q1(1)q1(x)", 4, state((1, one), (1, x)), G(0, x)))
    for i in range(1, 5):
        rows.append(BasisClass(f"q2(a{i}*)", 5, state((2, s(i))), -2 * G(1, s(i))))
    for i in range(1, 5):
        for j in range(1, 7):
            rows.append(BasisClass(f"q1(a{i}*)q1({_bname(j)})", 5, state((1, s(i)), (1, _b(j))), G(0, s(i)) * G(0, _b(j))))
    for i in range(1, 5):
        rows.append(BasisClass(f"q1(a{i})q1(x)", 5, state((1, a(i)), (1, x)), G(0, a(i)) * G(0, x)))
    rows.append(BasisClass("q2(x)", 6, state((2, x)), -2 * G(1, x)))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            rows.append(BasisClass(f"q1(a{i}*)q1(a{j}*)", 6, state((1, s(i)), (1, s(j))), G(0, s(i)) * G(0, s(j))))
    for i in range(1, 7):
        rows.append(BasisClass(f"q1({_bname(i)})q1(x)", 6, state((1, _b(i)), (1, x)), G(0, _b(i)) * G(0, x)))
    for i in range(1, 5):
        rows.append(BasisClass(f"q1(a{i}*)q1(x)", 7, state((1, s(i)), (1, x)), G(0, s(i)) * G(0, x)))
    rows.append(BasisClass("q1(x)^2", 8, state((1, x), (1, x)), G(0, x) ** 2))
    return rows


def pairing_matrix(left: Sequence[BasisClass], right: Sequence[BasisClass], pair=None) -> list[list[Fraction]]:
    pair = pair or vacuum_pairing
    return [[pair(r.state, c.state) for c in right] for r in left]


def a2_block_report() -> dict[int, dict]:
    """Per degree d <= 4: determinant and shape of the (d, 8-d) pairing block."""
    rows = hilb_basis_a2()
    out = {}
    for d in range(5):
        left = [r for r in rows if r.degree == d]
        right = [r for r in rows if r.degree == 8 - d]
        m = pairing_matrix(left, right)
        out[d] = {
            "size": len(left),
            "det": det_q(m),
            "signed_permutation": _is_signed_permutation(m),
        }
    return out


def word_consistency_a2() -> list[tuple[str, int]]:
    """For each A^[2] table row, +1 if word.1 == class, -1 if word.1 == -class, 0 otherwise."""
    out = []
    u = unit(2)
    for r in hilb_basis_a2():
        got = apply_mult_word(r.word, u)
        out.append((r.label, 1 if got == r.state else (-1 if got == -r.state else 0)))
    return out


def word_basis_report() -> dict[int, dict]:
    """Compare the classes of the multiplication words with the listed classes.

    A word class can differ from its row by lower terms.  Per degree d, the
    pairing of word classes (degree d) against listed classes (degree 8-d) is
    integral with determinant +-1 exactly when both families span the same
    lattice, given that the listed classes are a unimodular basis.
    """
    rows = hilb_basis_a2()
    words = [BasisClass(r.label, r.degree, class_of(r.word, 2), r.word) for r in rows]
    out = {}
    for d in range(9):
        left = [r for r in words if r.degree == d]
        right = [r for r in rows if r.degree == 8 - d]
        m = pairing_matrix(left, right)
        out[d] = {
            "size": len(left),
            "integral": all(x.denominator == 1 for row in m for x in row),
            "det": det_q(m),
        }
    return out


def theta_image_table() -> list[BasisClass]:
    """Weight-3 preimages of an integral basis of the image of the pull-back to K_2(A).

    The top-degree entry is q_1(x)^2 q_1(1)|0>, of cohomological degree 8; the
    published entry q_1(x)^3|0> has degree 12 and restricts to zero.
    """
    one, x, a, s = tr.ONE, tr.X, tr.a, tr.astar
    h = Fraction(1, 2)
    rows = [BasisClass("1", 0, state((1, one), (1, one), (1, one), coeff=Fraction(1, 6)), None)]
    for i in range(1, 7):
        rows.append(BasisClass(f"j({_bname(i)})", 2, state((1, _b(i)), (1, one), (1, one), coeff=h), None))
    rows.append(BasisClass("e", 2, state((2, one), (1, one), coeff=h), None))
    for i in range(1, 5):
        rows.append(BasisClass(f"q1(a{i}*)q1(1)^2/2", 3, state((1, s(i)), (1, one), (1, one), coeff=h), None))
    for i in range(1, 5):
        rows.append(BasisClass(f"q2(a{i})q1(1)/2", 3, state((2, a(i)), (1, one), coeff=h), None))
    skip = (tr.INDEX[(1, 2)], tr.INDEX[(3, 4)])
    h2 = tr.h2_monomials()
    for i in range(1, 7):
        for j in range(i, 7):
            if (h2[i - 1], h2[j - 1]) == skip:
                continue
            rows.append(BasisClass(f"q1({_bname(i)})q1({_bname(j)})q1(1)", 4, state((1, _b(i)), (1, _b(j)), (1, one)), None))
    rows.append(BasisClass("Y_p", 4, state((1, x), (1, one), (1, one), coeff=h), None))
    for i in range(1, 7):
        st = (state((1, _b(i)), (1, _b(i)), (1, one)) - state((2, _b(i)), (1, one))) * h
        rows.append(BasisClass(f"(q1({_bname(i)})^2-q2({_bname(i)}))q1(1)/2", 4, st, None))
    rows.append(BasisClass("W", 4, state((3, one), coeff=Fraction(1, 3)), None))
    for i in range(1, 5):
        j = i % 4 + 1
        rows.append(BasisClass(f"q1(a{i}a{j})q1(a{j}*)q1(1)", 5, state((1, a(i) * a(j)), (1, s(j)), (1, one)), None))
    for i in range(1, 5):
        rows.append(BasisClass(f"q2(a{i}*)q1(1)", 5, state((2, s(i)), (1, one)), None))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            rows.append(BasisClass(f"q1(a{i}*)q1(a{j}*)q1(1)", 6, state((1, s(i)), (1, s(j)), (1, one)), None))
    rows.append(BasisClass("q2(x)q1(1)", 6, state((2, x), (1, one)), None))
    rows.append(BasisClass("q1(x)^2q1(1)", 8, state((1, x), (1, x), (1, one)), None))
    return rows


def theta_gram_report() -> dict[int, dict]:
    """Kummer pairing blocks between degrees d and 8-d of the theta table."""
    rows = theta_image_table()
    out = {}
    for d in (0, 2, 3, 4):
        left = [r for r in rows if r.degree == d]
        right = [r for r in rows if r.degree == 8 - d]
        m = pairing_matrix(left, right, kummer_pairing)
        out[d] = {"size": len(left), "det": det_q(m), "gram": m}
    return out


def imsym_generators() -> list[tuple[str, MultWord]]:
    """The 111 degree-4 multiplication words spanning H^4 of A^[n] for every n."""
    G, D = MultWord.G, MultWord.D
    a, s, x, one = tr.a, tr.astar, tr.X, tr.ONE
    out = [("G0(a1)G0(a2)G0(a3)G0(a4)", kummer_word())]
    for i in range(1, 5):
        for j in range(i + 1, 5):
            for k in range(1, 7):
                out.append((f"G0(a{i})G0(a{j})G0({_bname(k)})", G(0, a(i)) * G(0, a(j)) * G(0, _b(k))))
    for i in range(1, 5):
        for j in range(1, 5):
            out.append((f"G0(a{i})G0(a{j}*)", G(0, a(i)) * G(0, s(j))))
    for i in range(1, 7):
        for j in range(i, 7):
            out.append((f"G0({_bname(i)})G0({_bname(j)})", G(0, _b(i)) * G(0, _b(j))))
    out.append(("G0(x)", G(0, x)))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            out.append((f"G0(a{i})G0(a{j})G1(1)", G(0, a(i)) * G(0, a(j)) * G(1, one)))
    for i in range(1, 5):
        for j in range(1, 5):
            out.append((f"G0(a{i})G1(a{j})", G(0, a(i)) * G(1, a(j))))
    for i in range(1, 7):
        out.append((f"G0({_bname(i)})G1(1)", G(0, _b(i)) * G(1, one)))
    for i in range(1, 7):
        out.append((f"G1({_bname(i)})", G(1, _b(i))))
    out.append(("G1(1)^2", G(1, one) ** 2))
    out.append(("G2(1)", G(2, one)))
    return out


def imsym_report() -> dict:
    """Rank of the 111 generators on A^[3], the annihilated ones, and the image dimension."""
    gens = imsym_generators()
    u = unit(3)
    classes = [(lab, w, apply_mult_word(w, u)) for lab, w in gens]
    rank_all = rank_q([c.terms for _, _, c in classes])
    with_a = [(lab, c) for lab, w, c in classes if any(
        t[0] == "G" and t[1] == 0 and tr.degree_of(t[2]) == 1 for toks in w.terms for t in toks)]
    killed = sum(1 for _, c in with_a if annihilator_test(c))
    image_rank = rank_q([kummer_restrict(c).terms for _, _, c in classes])
    return {
        "generators": len(gens),
        "rank_on_A3": rank_all,
        "with_G0_a": len(with_a),
        "annihilated": killed,
        "image_dim": image_rank,
    }


def chern2_a3() -> FockState:
    """c_2(A^[3]) = 3 q_1(1) L_2(1)|0> - 1/3 q_3(1)|0>."""
    l2 = FockState(apply_op(op_L(2, tr.ONE), {(): Fraction(1)}))
    return 3 * act(op_q(1, tr.ONE), l2) - state((3, tr.ONE), coeff=Fraction(1, 3))


# ---------------------------------------------------------------- exact linear algebra helpers

def det_q(m: Sequence[Sequence[Scalar]]) -> Fraction:
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    if n == 0:
        return Fraction(1)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def rank_q(vectors: Iterable[Mapping]) -> int:
    """Rank over Q of sparse vectors given as dicts."""
    pivots: dict = {}
    rank = 0
    for v in vectors:
        v = {k: Fraction(c) for k, c in v.items() if c}
        while v:
            key = min(v)
            if key not in pivots:
                pivots[key] = v
                rank += 1
                break
            p = pivots[key]
            f = v[key] / p[key]
            for k, c in p.items():
                nv = v.get(k, 0) - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return rank


def _is_signed_permutation(m: Sequence[Sequence[Fraction]]) -> bool:
    n = len(m)
    if any(len(r) != n for r in m):
        return False
    for row in m:
        nz = [v for v in row if v]
        if len(nz) != 1 or abs(nz[0]) != 1:
            return False
    return all(sum(1 for r in m if r[c]) == 1 for c in range(n))
