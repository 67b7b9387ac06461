"""The ideal gl_+(infinity) inside the ladder algebra, in the E basis.

E[i,j] abbreviates Z[i,j] - Z[i+1,j+1]; on these the bracket is the matrix
unit rule [E[i,j], E[r,k]] = d(j,r) E[i,k] - d(k,i) E[r,j].  Within each
degree class d the differences of Z generators telescope into finite E
combinations; ``express_in_e`` inverts the embedding where possible and
reports non-membership otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from .ladder import LieElement, delta
from .linalg import canonical

EIndex = tuple  # (i, j), both non-negative

_ZERO = Fraction(0)


class GlElement:
    """Immutable sparse combination of matrix units E[i,j]."""

    __slots__ = ("e",)

    def __init__(self, e=None):
        ec = canonical(e or {})
        for i, j in ec:
            if i < 0 or j < 0:
                raise ValueError("negative E index (%s, %s)" % (i, j))
        self.e = ec

    def is_zero(self) -> bool:
        return not self.e

    def __add__(self, other):
        if not isinstance(other, GlElement):
            return NotImplemented
        acc = dict(self.e)
        for idx, c in other.e.items():
            new = acc.get(idx, _ZERO) + c
            if new:
                acc[idx] = new
            else:
                del acc[idx]
        return GlElement(acc)

    def __sub__(self, other):
        if not isinstance(other, GlElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GlElement({idx: -c for idx, c in self.e.items()})

    def __mul__(self, scale):
        scale = Fraction(scale)
        if not scale:
            return GlElement()
        return GlElement({idx: scale * c for idx, c in self.e.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GlElement) and self.e == other.e

    def __hash__(self):
        return hash(frozenset(self.e.items()))

    def __repr__(self):
        return "GlElement(%r)" % (self.e,)

    def __str__(self):
        from .parsing import format_gl_element

        return format_gl_element(self)


def E(i: int, j: int, coeff=1) -> GlElement:
    return GlElement({(i, j): coeff})


def generator_bracket_ee(i: int, j: int, r: int, k: int) -> dict:
    """[E[i,j], E[r,k]] as a sparse integer combination."""
    acc: dict = {}
    if delta(j, r):
        acc[(i, k)] = 1
    if delta(k, i):
        new = acc.get((r, j), 0) - 1
        if new:
            acc[(r, j)] = new
        else:
            del acc[(r, j)]
    return acc


def bracket_ee(a: GlElement, b: GlElement) -> GlElement:
    acc: dict = {}
    for (i, j), ca in a.e.items():
        for (r, k), cb in b.e.items():
            c = ca * cb
            for idx, w in generator_bracket_ee(i, j, r, k).items():
                new = acc.get(idx, _ZERO) + w * c
                if new:
                    acc[idx] = new
                else:
                    del acc[idx]
    return GlElement(acc)


def embed_to_z(g: GlElement) -> LieElement:
    """Linear embedding sending E[i,j] to Z[i,j] - Z[i+1,j+1]."""
    acc: dict = {}
    for (i, j), c in g.e.items():
        for idx, sgn in (((i, j), 1), ((i + 1, j + 1), -1)):
            new = acc.get(idx, _ZERO) + sgn * c
            if new:
                acc[idx] = new
            else:
                del acc[idx]
    return LieElement(acc)


def express_in_e(e: LieElement):
    """The unique finite E expansion of ``e``, or None if ``e`` is outside
    the ideal.

    Per degree class d the coefficients of Z[d+k,k] (resp. Z[k,k-d]) are
    scanned in increasing k; the running partial sum is the coefficient of
    the k-th telescoping unit, and membership requires each class to sum to
    zero overall.
    """
    if e.y:
        raise ValueError("element has a Y component")
    classes: dict = {}
    for (n, m), c in e.z.items():
        classes.setdefault(n - m, {})[min(n, m)] = c
    out: dict = {}
    for d, coeffs in classes.items():
        if sum(coeffs.values()):
            return None
        i0, j0 = (d, 0) if d >= 0 else (0, -d)
        running = _ZERO
        for k in range(max(coeffs)):
            running += coeffs.get(k, _ZERO)
            if running:
                out[(i0 + k, j0 + k)] = running
    return GlElement(out)


def trace_functional(g: GlElement) -> Fraction:
    """Sum of the diagonal coefficients; its kernel is the traceless part."""
    return sum((c for (i, j), c in g.e.items() if i == j), _ZERO)
