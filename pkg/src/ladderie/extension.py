"""The ladder algebra as a non-abelian extension of its abelian quotient.

The quotient C collapses Z[n,m] to one generator per degree n-m; the section
s lifts degree d to Z[d,0] / Z[0,-d] / Z[0,0].  The pair (alpha, rho) is the
extension datum induced by s (alpha(x).xi = [s(x), xi], rho(x,y) the E form
of [s(x), s(y)]), ``ext_bracket`` rebuilds the full bracket on pairs
(xi, x) in gl_+(infinity) x C, and the two obstruction procedures make the
non-splitting of the sequence checkable at any finite size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import ladder
from .glinf import E, GlElement, bracket_ee, embed_to_z
from .ladder import LieElement, theta, delta
from .linalg import ExactMatrix, Infeasible, canonical, solve_or_refute

_ZERO = Fraction(0)


class CElement:
    """Immutable sparse combination of the quotient generators, one per
    integer degree d."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = canonical(terms or {})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, CElement):
            return NotImplemented
        acc = dict(self.terms)
        for d, c in other.terms.items():
            new = acc.get(d, _ZERO) + c
            if new:
                acc[d] = new
            else:
                del acc[d]
        return CElement(acc)

    def __sub__(self, other):
        if not isinstance(other, CElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CElement({d: -c for d, c in self.terms.items()})

    def __mul__(self, scale):
        scale = Fraction(scale)
        if not scale:
            return CElement()
        return CElement({d: scale * c for d, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "CElement(%r)" % (self.terms,)

    def __str__(self):
        from .parsing import format_c_element

        return format_c_element(self)


def Cgen(d: int, coeff=1) -> CElement:
    return CElement({d: coeff})


def project_to_c(e: LieElement) -> CElement:
    """Quotient projection: Z[n,m] goes to the degree class n-m."""
    if e.y:
        raise ValueError("element has a Y component")
    acc: dict = {}
    for (n, m), c in e.z.items():
        d = n - m
        new = acc.get(d, _ZERO) + c
        if new:
            acc[d] = new
        else:
            del acc[d]
    return CElement(acc)


def section_generator(d: int) -> dict:
    acc: dict = {}
    for coeff, idx in (
        (theta(d), (max(d, 0), 0)),
        (theta(-d), (0, max(-d, 0))),
        (-delta(d, 0), (0, 0)),
    ):
        if coeff:
            new = acc.get(idx, 0) + coeff
            if new:
                acc[idx] = new
            else:
                del acc[idx]
    return acc


def section_s(x: CElement) -> LieElement:
    """Linear section of the projection: degree d lifts to Z[d,0] for d > 0,
    Z[0,-d] for d < 0 and Z[0,0] for d = 0."""
    acc: dict = {}
    for d, c in x.terms.items():
        for idx, w in section_generator(d).items():
            new = acc.get(idx, _ZERO) + w * c
            if new:
                acc[idx] = new
            else:
                del acc[idx]
    return LieElement(acc)


def alpha_on_generator(d: int, i: int, j: int) -> dict:
    """Action of the degree-d quotient generator on E[i,j]; equals the E
    form of [s(Z_d), E[i,j]]."""
    if d == 0:
        return {}
    if d > 0:
        out = {(i + d, j): 1}
        if theta(j - d):
            out[(i, j - d)] = -1
        return out
    m = -d
    out = {(i, j + m): -1}
    if theta(i - m):
        out[(i - m, j)] = 1
    return out


def alpha(x: CElement, g: GlElement) -> GlElement:
    """Bilinear extension of ``alpha_on_generator``; a derivation of the
    ideal for each fixed x."""
    acc: dict = {}
    for d, cx in x.terms.items():
        for (i, j), cg in g.e.items():
            c = cx * cg
            for idx, w in alpha_on_generator(d, i, j).items():
                new = acc.get(idx, _ZERO) + w * c
                if new:
                    acc[idx] = new
                else:
                    del acc[idx]
    return GlElement(acc)


def rho_on_generators(a: int, b: int) -> dict:
    """rho on the degree-a and degree-b quotient generators: the E form of
    [s(Z_a), s(Z_b)].

    Zero unless a and b have strictly opposite signs; for a = n > 0 and
    b = -m < 0 the commutator [Z[n,0], Z[0,m]] telescopes to
    -sum_{k<min(n,m)} of the degree-(n-m) units.
    """
    if a == 0 or b == 0 or (a > 0) == (b > 0):
        return {}
    if a < 0:
        return {idx: -c for idx, c in rho_on_generators(b, a).items()}
    n, m = a, -b
    if n > m:
        return {(n - m + k, k): -1 for k in range(m)}
    if n < m:
        return {(k, m - n + k): -1 for k in range(n)}
    return {(k, k): -1 for k in range(n)}


def rho(x: CElement, y: CElement) -> GlElement:
    """Alternating bilinear extension of ``rho_on_generators``."""
    acc: dict = {}
    for a, cx in x.terms.items():
        for b, cy in y.terms.items():
            c = cx * cy
            for idx, w in rho_on_generators(a, b).items():
                new = acc.get(idx, _ZERO) + w * c
                if new:
                    acc[idx] = new
                else:
                    del acc[idx]
    return GlElement(acc)


def c_bracket(x: CElement, y: CElement) -> CElement:
    """The quotient is abelian."""
    return CElement()


@dataclass(frozen=True)
class ExtElement:
    """Pair (xi, x) in gl_+(infinity) x C carrying the rebuilt bracket."""

    xi: GlElement
    x: CElement


def ext_bracket(a: ExtElement, b: ExtElement) -> ExtElement:
    xi = (bracket_ee(a.xi, b.xi)
          + alpha(a.x, b.xi) - alpha(b.x, a.xi)
          + rho(a.x, b.x))
    return ExtElement(xi, c_bracket(a.x, b.x))


@dataclass(frozen=True)
class CocycleReport:
    passed: bool
    bound: int
    pairs_checked: int
    triples_checked: int
    counterexample: str | None = None


def verify_cocycle_conditions(bound: int) -> CocycleReport:
    """Exhaustively check, for all quotient generators with |degree| <= bound
    and units E[i,j] with i, j <= bound, that

        [alpha(x), alpha(y)].xi - alpha([x,y]).xi = [rho(x,y), xi]
        sum_cyclic (alpha(x).rho(y,z) - rho([x,y], z)) = 0.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens = [Cgen(d) for d in range(-bound, bound + 1)]
    units = [E(i, j) for i in range(bound + 1) for j in range(bound + 1)]
    pairs = 0
    for x, y in product(gens, repeat=2):
        r = rho(x, y)
        ab = c_bracket(x, y)
        for xi in units:
            pairs += 1
            lhs = (alpha(x, alpha(y, xi)) - alpha(y, alpha(x, xi))
                   - alpha(ab, xi))
            rhs = bracket_ee(r, xi)
            if lhs != rhs:
                return CocycleReport(False, bound, pairs, 0,
                                     "derivation condition fails at x=%s, y=%s, xi=%s"
                                     % (x, y, xi))
    triples = 0
    for x, y, z in product(gens, repeat=3):
        triples += 1
        total = GlElement()
        for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
            total = total + alpha(u, rho(v, w)) - rho(c_bracket(u, v), w)
        if not total.is_zero():
            return CocycleReport(False, bound, pairs, triples,
                                 "cyclic condition fails at x=%s, y=%s, z=%s"
                                 % (x, y, z))
    return CocycleReport(True, bound, pairs, triples)


def nonsplit_obstruction(b_plus: GlElement, b_minus: GlElement) -> LieElement:
    """Commutator [(s+b)(Z_1), (s+b)(Z_-1)] for a graded correction b.

    ``b_plus`` must be supported on degree +1 units E[h+1,h] and ``b_minus``
    on degree -1 units E[k,k+1]; a splitting morphism would need this
    commutator to vanish, and it never does.
    """
    for i, j in b_plus.e:
        if i != j + 1:
            raise ValueError("b_plus must be supported on E[h+1,h] units")
    for i, j in b_minus.e:
        if j != i + 1:
            raise ValueError("b_minus must be supported on E[k,k+1] units")
    lhs = section_s(Cgen(1)) + embed_to_z(b_plus)
    rhs = section_s(Cgen(-1)) + embed_to_z(b_minus)
    return ladder.bracket(lhs, rhs)


@dataclass(frozen=True)
class ObstructionGridReport:
    max_index: int
    coefficients: tuple
    cases: int
    all_nonzero: bool
    first_zero: tuple | None = None


def obstruction_grid(max_index: int, coefficients=(-2, -1, 0, 1, 2)) -> ObstructionGridReport:
    """Evaluate the splitting obstruction for every graded correction with
    E indices <= max_index and coefficients drawn from ``coefficients``.

    The commutator is expanded bilinearly over the section and correction
    basis vectors, whose pairwise brackets are computed once up front with
    the full bracket; per case only an exact linear combination remains.
    """
    ups = [section_s(Cgen(1))] + [embed_to_z(E(h + 1, h)) for h in range(max_index + 1)]
    downs = [section_s(Cgen(-1))] + [embed_to_z(E(k, k + 1)) for k in range(max_index + 1)]
    table = [[ladder.bracket(u, v).z for v in downs] for u in ups]
    coords = sorted({idx for row in table for cell in row for idx in cell})
    pos = {idx: t for t, idx in enumerate(coords)}
    nc = len(coords)
    vec_table = []
    for row in table:
        vec_row = []
        for cell in row:
            vec = [0] * nc
            for idx, c in cell.items():
                if c.denominator != 1:
                    raise ArithmeticError("non-integer basis bracket")
                vec[pos[idx]] = c.numerator
            vec_row.append(vec)
        vec_table.append(vec_row)
    width = max_index + 1
    cases = 0
    for a in product(coefficients, repeat=width):
        ups_coeffs = (1,) + a
        rows_for_a = [(cu, vec_table[u]) for u, cu in enumerate(ups_coeffs) if cu]
        for b in product(coefficients, repeat=width):
            cases += 1
            acc = [0] * nc
            for v, cv in enumerate((1,) + b):
                if not cv:
                    continue
                for cu, vrow in rows_for_a:
                    w = cu * cv
                    cell = vrow[v]
                    for t in range(nc):
                        if cell[t]:
                            acc[t] += w * cell[t]
            if not any(acc):
                return ObstructionGridReport(max_index, tuple(coefficients),
                                             cases, False, (a, b))
    return ObstructionGridReport(max_index, tuple(coefficients), cases, True)


def nonsplit_infeasibility(levels: int) -> Infeasible:
    """Certificate that E[0,0] is not a combination of the telescoped units
    E[j+1,j+1] - E[j,j] for j <= levels.

    The diagonal coordinates give the linear system -phi_0 = 1,
    phi_j = phi_{j-1} and phi_levels = 0, which is always inconsistent.
    """
    if levels < 0:
        raise ValueError("levels must be >= 0")
    entries = {}
    for j in range(levels + 1):
        entries[(j + 1, j)] = Fraction(1)
        entries[(j, j)] = Fraction(-1)
    matrix = ExactMatrix(levels + 2, levels + 1, entries)
    rhs = [Fraction(1)] + [_ZERO] * (levels + 1)
    result = solve_or_refute(matrix, rhs)
    if not isinstance(result, Infeasible):
        raise RuntimeError("splitting system unexpectedly solvable")
    return result
