"""Polynomials in the ladder generators t[k] and the derivation action.

A monomial is the sorted tuple of its t indices (with multiplicity); the
empty tuple is the unit.  Generators act by Z[n,m] t[k] = t[k-m+n] when
m <= k and kill t[k] otherwise; Y acts on t[k] with eigenvalue k; both
extend to products by the Leibniz rule and annihilate the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ladder
from .ladder import LieElement
from .linalg import canonical

Monomial = tuple  # sorted t indices, e.g. (0, 1, 1) for t[0]*t[1]^2

_ZERO = Fraction(0)


class LadderPoly:
    """Immutable polynomial: zero-free dict monomial -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        items = terms.items() if hasattr(terms, "items") else (terms or [])
        self.terms = canonical((tuple(sorted(mono)), c) for mono, c in items)

    @classmethod
    def one(cls) -> "LadderPoly":
        return cls({(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, LadderPoly):
            return NotImplemented
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            new = acc.get(mono, _ZERO) + c
            if new:
                acc[mono] = new
            else:
                del acc[mono]
        return LadderPoly(acc)

    def __sub__(self, other):
        if not isinstance(other, LadderPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LadderPoly({mono: -c for mono, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LadderPoly):
            acc: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = tuple(sorted(m1 + m2))
                    new = acc.get(mono, _ZERO) + c1 * c2
                    if new:
                        acc[mono] = new
                    else:
                        del acc[mono]
            return LadderPoly(acc)
        scale = Fraction(other)
        if not scale:
            return LadderPoly()
        return LadderPoly({mono: scale * c for mono, c in self.terms.items()})

    def __rmul__(self, scale):
        return self * scale

    def __eq__(self, other):
        return isinstance(other, LadderPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "LadderPoly(%r)" % (self.terms,)

    def __str__(self):
        from .parsing import format_ladder_poly

        return format_ladder_poly(self)


def t(k: int, coeff=1) -> LadderPoly:
    if k < 0:
        raise ValueError("negative ladder index")
    return LadderPoly({(k,): coeff})


class TensorPoly:
    """Sparse combination of monomial tensor pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        items = terms.items() if hasattr(terms, "items") else (terms or [])
        self.terms = canonical(((tuple(sorted(a)), tuple(sorted(b))), c)
                               for (a, b), c in items)

    @classmethod
    def one(cls) -> "TensorPoly":
        return cls({((), ()): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        acc = dict(self.terms)
        for key, c in other.terms.items():
            new = acc.get(key, _ZERO) + c
            if new:
                acc[key] = new
            else:
                del acc[key]
        return TensorPoly(acc)

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            acc: dict = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    key = (tuple(sorted(a1 + a2)), tuple(sorted(b1 + b2)))
                    new = acc.get(key, _ZERO) + c1 * c2
                    if new:
                        acc[key] = new
                    else:
                        del acc[key]
            return TensorPoly(acc)
        scale = Fraction(other)
        if not scale:
            return TensorPoly()
        return TensorPoly({key: scale * c for key, c in self.terms.items()})

    __rmul__ = __mul__

    def swap(self) -> "TensorPoly":
        return TensorPoly({(b, a): c for (a, b), c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __repr__(self):
        return "TensorPoly(%r)" % (self.terms,)


def act_generator(n: int, m: int, k: int):
    """Index of Z[n,m] t[k], or None when the elimination does not fit."""
    if ladder.theta(k - m):
        return k - m + n
    return None


def act(e: LieElement, p: LadderPoly) -> LadderPoly:
    """Derivation action of an extended-algebra element on a polynomial."""
    acc: dict = {}
    for mono, cp in p.terms.items():
        for (n, m), cz in e.z.items():
            c = cp * cz
            for i, k in enumerate(mono):
                knew = act_generator(n, m, k)
                if knew is None:
                    continue
                new_mono = tuple(sorted(mono[:i] + (knew,) + mono[i + 1:]))
                new = acc.get(new_mono, _ZERO) + c
                if new:
                    acc[new_mono] = new
                else:
                    del acc[new_mono]
        if e.y:
            weight = sum(mono)
            if weight:
                new = acc.get(mono, _ZERO) + e.y * cp * weight
                if new:
                    acc[mono] = new
                else:
                    del acc[mono]
    return LadderPoly(acc)


def coproduct(p: LadderPoly) -> TensorPoly:
    """Deconcatenation-style coproduct: t[k] splits as the sum of
    t[j] (x) t[k-j], extended multiplicatively to monomials."""
    out = TensorPoly()
    for mono, c in p.terms.items():
        part = TensorPoly.one() * c
        for k in mono:
            part = part * TensorPoly({((j,), (k - j,)): 1 for j in range(k + 1)})
        out = out + part
    return out


@dataclass(frozen=True)
class ActionReport:
    passed: bool
    generator_bound: int
    ladder_bound: int
    checked: int
    counterexample: str | None = None


def _in_module(p: LadderPoly) -> bool:
    return all(k >= 0 for mono in p.terms for k in mono)


def verify_action_is_representation(generator_bound: int, ladder_bound=None) -> ActionReport:
    """Check that the action is a representation on the module: images of
    t[k] stay inside the span of non-negative ladder generators, and
    [x,y] t[k] = x(y t[k]) - y(x t[k]) for all generator pairs with indices
    <= generator_bound and k <= ladder_bound.

    The membership half matters: an action that ignores the elimination
    guard still satisfies the bare commutator identity (everything collapses
    to index shifts), but escapes the module through negative indices.
    """
    if generator_bound < 1:
        raise ValueError("generator_bound must be >= 1")
    if ladder_bound is None:
        ladder_bound = generator_bound
    gens = [(n, m) for n in range(generator_bound + 1) for m in range(generator_bound + 1)]
    checked = 0
    for n, m in gens:
        x = ladder.Z(n, m)
        for l, s in gens:
            y = ladder.Z(l, s)
            br = ladder.bracket(x, y)
            for k in range(ladder_bound + 1):
                checked += 1
                tk = t(k)
                imgs = (act(y, tk), act(x, tk))
                if not all(_in_module(img) for img in imgs):
                    return ActionReport(False, generator_bound, ladder_bound, checked,
                                        "image leaves the module at Z[%d,%d]/Z[%d,%d] on t[%d]"
                                        % (n, m, l, s, k))
                lhs = act(br, tk)
                rhs = act(x, imgs[0]) - act(y, imgs[1])
                if lhs != rhs:
                    return ActionReport(False, generator_bound, ladder_bound, checked,
                                        "fails at Z[%d,%d], Z[%d,%d], t[%d]" % (n, m, l, s, k))
    return ActionReport(True, generator_bound, ladder_bound, checked)
