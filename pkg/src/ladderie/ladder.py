"""The ladder insertion-elimination Lie algebra.

Generators Z[n,m] (n, m >= 0) insert a ladder of length n and eliminate one
of length m; Y is the grading derivation with [Y, Z[n,m]] = (n-m) Z[n,m].
The generator bracket is the six-term commutator

    [Z[n,m], Z[l,s]] = T(l-m) Z[l-m+n, s] - T(s-n) Z[l, s-n+m]
                     - T(n-s) Z[n-s+l, m] + T(m-l) Z[n, m-l+s]
                     - d(m,l) Z[n,s]      + d(n,s) Z[l,m]

with T the unit step (T(0) = 1) and d the Kronecker delta; everything else
is its bilinear antisymmetric extension.  deg Z[n,m] = n - m makes the
algebra Z-graded; Y has degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .linalg import canonical, kernel_rows

ZIndex = tuple  # (n, m), both non-negative

_ZERO = Fraction(0)


def theta(k: int) -> int:
    """Unit step: 1 for k >= 0 (in particular theta(0) = 1), else 0."""
    return 1 if k >= 0 else 0


def delta(a: int, b: int) -> int:
    """Kronecker delta."""
    return 1 if a == b else 0


def generator_bracket(n: int, m: int, l: int, s: int) -> dict:
    """[Z[n,m], Z[l,s]] as a sparse integer combination of Z indices."""
    acc: dict = {}
    for coeff, idx in (
        (theta(l - m), (l - m + n, s)),
        (-theta(s - n), (l, s - n + m)),
        (-theta(n - s), (n - s + l, m)),
        (theta(m - l), (n, m - l + s)),
        (-delta(m, l), (n, s)),
        (delta(n, s), (l, m)),
    ):
        if coeff:
            new = acc.get(idx, 0) + coeff
            if new:
                acc[idx] = new
            else:
                del acc[idx]
    return acc


class LieElement:
    """Immutable sparse combination of Z generators plus a Y coefficient.

    ``z`` maps (n, m) to a nonzero Fraction; ``y`` is the Y coefficient
    (zero for elements of the ladder algebra proper).
    """

    __slots__ = ("z", "y")

    def __init__(self, z=None, y=0):
        zc = canonical(z or {})
        for n, m in zc:
            if n < 0 or m < 0:
                raise ValueError("negative Z index (%s, %s)" % (n, m))
        self.z = zc
        self.y = Fraction(y)

    def is_zero(self) -> bool:
        return not self.z and not self.y

    def __add__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        acc = dict(self.z)
        for idx, c in other.z.items():
            new = acc.get(idx, _ZERO) + c
            if new:
                acc[idx] = new
            else:
                del acc[idx]
        return LieElement(acc, self.y + other.y)

    def __sub__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LieElement({idx: -c for idx, c in self.z.items()}, -self.y)

    def __mul__(self, scale):
        scale = Fraction(scale)
        if not scale:
            return LieElement()
        return LieElement({idx: scale * c for idx, c in self.z.items()}, scale * self.y)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, LieElement)
                and self.z == other.z and self.y == other.y)

    def __hash__(self):
        return hash((frozenset(self.z.items()), self.y))

    def __repr__(self):
        return "LieElement(%r, y=%r)" % (self.z, self.y)

    def __str__(self):
        from .parsing import format_lie_element

        return format_lie_element(self)


def Z(n: int, m: int, coeff=1) -> LieElement:
    return LieElement({(n, m): coeff})


#: The grading derivation as an element of the extended algebra.
Y = LieElement(y=1)


def _bracket_z(za: Mapping, zb: Mapping) -> dict:
    acc: dict = {}
    for (n, m), ca in za.items():
        for (l, s), cb in zb.items():
            c = ca * cb
            for idx, k in generator_bracket(n, m, l, s).items():
                new = acc.get(idx, _ZERO) + k * c
                if new:
                    acc[idx] = new
                else:
                    del acc[idx]
    return acc


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """Bilinear bracket on the extended algebra ([Y, Y] = 0)."""
    acc = _bracket_z(a.z, b.z)
    if a.y:
        for (n, m), c in b.z.items():
            w = n - m
            if w:
                new = acc.get((n, m), _ZERO) + a.y * c * w
                if new:
                    acc[(n, m)] = new
                else:
                    del acc[(n, m)]
    if b.y:
        for (n, m), c in a.z.items():
            w = n - m
            if w:
                new = acc.get((n, m), _ZERO) - b.y * c * w
                if new:
                    acc[(n, m)] = new
                else:
                    del acc[(n, m)]
    return LieElement(acc)


def degree(e: LieElement):
    """n - m when every term agrees (Y counts as degree 0), else None.

    The zero element reports degree 0.
    """
    degs = {n - m for (n, m) in e.z}
    if e.y:
        degs.add(0)
    if not degs:
        return 0
    if len(degs) == 1:
        return degs.pop()
    return None


@dataclass(frozen=True)
class TriangularSplit:
    plus: LieElement
    zero: LieElement
    minus: LieElement


def triangular_split(e: LieElement) -> TriangularSplit:
    """Split into the positive / zero / negative degree parts.

    Rejects elements with a Y component: the split is defined on the ladder
    algebra proper.
    """
    if e.y:
        raise ValueError("triangular_split requires a Y-free element")
    plus: dict = {}
    zero: dict = {}
    minus: dict = {}
    for (n, m), c in e.z.items():
        part = plus if n > m else (zero if n == m else minus)
        part[(n, m)] = c
    return TriangularSplit(LieElement(plus), LieElement(zero), LieElement(minus))


@dataclass(frozen=True)
class GeneratorDecomposition:
    """The canonical rewriting of Z[n,m] as [Z[n,0], Z[0,m]] plus a tail of
    one-sided generators (kept unevaluated so both sides can be compared)."""

    left: LieElement
    right: LieElement
    tail: LieElement

    def evaluate(self) -> LieElement:
        return bracket(self.left, self.right) + self.tail


def decompose_generator(n: int, m: int) -> GeneratorDecomposition:
    if n < 0 or m < 0:
        raise ValueError("negative Z index")
    tail: dict = {}
    for coeff, idx in (
        (theta(n - m), (n - m, 0)),
        (theta(m - n), (0, m - n)),
        (-delta(n - m, 0), (0, 0)),
    ):
        if coeff:
            new = tail.get(idx, 0) + coeff
            if new:
                tail[idx] = new
            else:
                del tail[idx]
    return GeneratorDecomposition(Z(n, 0), Z(0, m), LieElement(tail))


def centralizer_basis(test_set, bound: int, degree_filter=None) -> list:
    """Exact basis of the window centralizer.

    The ansatz space is every Z[n,m] with n, m <= bound (restricted to one
    degree class when ``degree_filter`` is given); the result is the basis of
    all ansatz combinations commuting with every element of ``test_set``.
    Bracket results are kept in full, wherever their indices land; this is a
    finite-window verification, not a statement about the whole algebra.
    """
    ansatz = [(n, m)
              for n in range(bound + 1)
              for m in range(bound + 1)
              if degree_filter is None or n - m == degree_filter]
    rows: dict = {}
    for ti, t in enumerate(test_set):
        for col, (n, m) in enumerate(ansatz):
            br = bracket(Z(n, m), t)
            for coord, c in br.z.items():
                row = rows.setdefault((ti, coord), {})
                row[col] = row.get(col, _ZERO) + c
    row_dicts = [canonical(r) for r in rows.values()]
    basis = []
    for vec in kernel_rows(row_dicts, len(ansatz)):
        basis.append(LieElement({ansatz[col]: c for col, c in vec.items()}))
    return basis
