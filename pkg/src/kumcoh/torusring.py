"""Cohomology ring of a complex 2-torus.

H*(A, Z) is the exterior algebra on four degree-one generators a1..a4.  A
class is stored as a 16-tuple of coefficients over the monomial basis
``MONOMIALS`` (ordered by degree, then lexicographically).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]

MONOMIALS: tuple[tuple[int, ...], ...] = tuple(
    c for d in range(5) for c in combinations((1, 2, 3, 4), d)
)
INDEX: dict[tuple[int, ...], int] = {m: i for i, m in enumerate(MONOMIALS)}
TOP = INDEX[(1, 2, 3, 4)]


def degree_of(idx: int) -> int:
    return len(MONOMIALS[idx])


def _sort_sign(seq: list[int]) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def wedge_basis(i: int, j: int) -> tuple[int, int]:
    """Return (sign, index) with m_i ^ m_j = sign * m_index (sign 0 if zero)."""
    a, b = MONOMIALS[i], MONOMIALS[j]
    if set(a) & set(b):
        return 0, 0
    seq = list(a) + list(b)
    return _sort_sign(seq), INDEX[tuple(sorted(seq))]


class TorusClass:
    """Element of H*(A, Q) with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        c = tuple(coeffs)
        if len(c) != 16:
            raise ValueError("a torus class needs 16 coefficients")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("TorusClass is immutable")

    @classmethod
    def basis(cls, idx: int, coeff: Scalar = 1) -> "TorusClass":
        c = [0] * 16
        c[idx] = coeff
        return cls(c)

    @classmethod
    def mono(cls, *gens: int) -> "TorusClass":
        """Wedge of generators in the given order, e.g. mono(2, 1) = -a1a2."""
        out = ONE
        for g in gens:
            out = out.wedge(cls.basis(INDEX[(g,)]))
        return out

    def terms(self) -> Iterator[tuple[int, Scalar]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield i, c

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def degrees(self) -> set[int]:
        return {degree_of(i) for i, _ in self.terms()}

    def degree(self) -> int:
        """Degree of a nonzero homogeneous class."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("class is not homogeneous")
        return ds.pop()

    def part(self, d: int) -> "TorusClass":
        return TorusClass(c if degree_of(i) == d else 0 for i, c in enumerate(self.coeffs))

    def wedge(self, other: "TorusClass") -> "TorusClass":
        out: list[Scalar] = [0] * 16
        for i, x in self.terms():
            for j, y in other.terms():
                s, k = wedge_basis(i, j)
                if s:
                    out[k] += s * x * y
        return TorusClass(out)

    def __add__(self, other: "TorusClass") -> "TorusClass":
        return TorusClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "TorusClass") -> "TorusClass":
        return TorusClass(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "TorusClass":
        return TorusClass(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TorusClass):
            return self.wedge(other)
        return TorusClass(a * other for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusClass) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in self.terms():
            name = "".join(f"a{g}" for g in MONOMIALS[i]) or "1"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


ONE = TorusClass.basis(0)
X = TorusClass.basis(TOP)


def wedge(x: TorusClass, y: TorusClass) -> TorusClass:
    return x.wedge(y)


def integrate(x: TorusClass) -> Scalar:
    """Evaluate against the fundamental class, with a1a2a3a4 integrating to 1."""
    return x.coeffs[TOP]


def pd_dual(idx: int) -> TorusClass:
    """Left dual: the signed complement m* with integrate(m ^ m*) = 1."""
    comp = tuple(g for g in (1, 2, 3, 4) if g not in MONOMIALS[idx])
    s, _ = wedge_basis(idx, INDEX[comp])
    return TorusClass.basis(INDEX[comp], s)


def right_dual(idx: int) -> TorusClass:
    """The signed complement m^ with integrate(m^ ^ m) = 1."""
    comp = tuple(g for g in (1, 2, 3, 4) if g not in MONOMIALS[idx])
    s, _ = wedge_basis(INDEX[comp], idx)
    return TorusClass.basis(INDEX[comp], s)


# Global sign of the diagonal push-forward.  Pinned by the fock identity tests.
SWEEDLER_SIGN = 1


def diagonal_sweedler(a: TorusClass) -> list[tuple[int, TorusClass, TorusClass]]:
    """Kuenneth components of the diagonal push-forward of ``a``.

    Returns triples (sign, a ^ e_i, e_i^) over the monomials e_i, where e_i^ is
    the right dual.  With this choice sum_i (a e_i) * integral(e_i^ b) = a b.
    """
    out = []
    for i in range(16):
        left = a.wedge(TorusClass.basis(i))
        if left.is_zero():
            continue
        out.append((SWEEDLER_SIGN, left, right_dual(i)))
    return out


def gram_matrix() -> list[list[Scalar]]:
    """Poincare pairing of the 16 monomials."""
    return [[integrate(TorusClass.basis(i).wedge(TorusClass.basis(j))) for j in range(16)]
            for i in range(16)]


def betti_numbers() -> tuple[int, ...]:
    return tuple(sum(1 for m in MONOMIALS if len(m) == d) for d in range(5))


def a(i: int) -> TorusClass:
    """Degree-one generator a_i."""
    return TorusClass.basis(INDEX[(i,)])


def astar(i: int) -> TorusClass:
    """Degree-three dual of a_i used in the basis tables (see ``STAR_CONVENTION``)."""
    return dual_for_tables(INDEX[(i,)])


# Which dual the table symbols a_i*, b_i* denote.  "right" means
# integral(m* ^ m) = 1; the quoted pairing values come out with their signs
# under this choice.
STAR_CONVENTION = "right"


def dual_for_tables(idx: int) -> TorusClass:
    return right_dual(idx) if STAR_CONVENTION == "right" else pd_dual(idx)


def h2_monomials() -> list[int]:
    return [i for i in range(16) if degree_of(i) == 2]
