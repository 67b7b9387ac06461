"""Chevalley-Eilenberg cohomology with trivial coefficients.

Finite Lie algebras are given by structure constants over a labeled basis
(Jacobi is verified at construction time).  Cochains live in the exterior
powers of the dual, with the basis of strictly increasing multi-indices in
lexicographic order; the differential is

    (d f)(x_0,...,x_k) = sum_{p<q} (-1)^(p+q) f([x_p,x_q], ...without p,q...)

and Betti numbers come from exact rank computations.  The degree-functional
procedure treats first cohomology of the (optionally Y-extended) ladder
algebra over a finite index window.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from . import glinf, ladder
from .linalg import ExactMatrix, canonical, kernel_rows, rank, _rref

_ZERO = Fraction(0)


class FiniteLieAlgebra:
    """Structure constants over basis indices 0..dim-1.

    ``structure`` maps (i, j) with i < j to the sparse bracket of the i-th
    and j-th basis vectors; antisymmetry is built in and the constructor
    rejects structures violating the Jacobi identity.
    """

    def __init__(self, basis_labels, structure, check=True):
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        table = {}
        for (i, j), vec in structure.items():
            if not (0 <= i < j < self.dim):
                raise ValueError("structure key (%s, %s) not increasing in range" % (i, j))
            vec = canonical(vec)
            for b in vec:
                if not 0 <= b < self.dim:
                    raise ValueError("structure value index %s out of range" % (b,))
            if vec:
                table[(i, j)] = vec
        self.structure = table
        if check:
            bad = self._jacobi_failure()
            if bad is not None:
                raise ValueError("Jacobi identity fails on basis triple %s" % (bad,))

    def bracket_basis(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {b: -c for b, c in self.structure.get((j, i), {}).items()}

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        acc: dict = {}
        for i, cu in u.items():
            for j, cv in v.items():
                c = cu * cv
                for b, w in self.bracket_basis(i, j).items():
                    new = acc.get(b, _ZERO) + w * c
                    if new:
                        acc[b] = new
                    else:
                        del acc[b]
        return acc

    def _jacobi_failure(self):
        for i, j, k in combinations(range(self.dim), 3):
            acc: dict = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket_basis(a, b)
                for x, cx in inner.items():
                    for y, cy in self.bracket_basis(x, c).items():
                        new = acc.get(y, _ZERO) + cx * cy
                        if new:
                            acc[y] = new
                        else:
                            del acc[y]
            if acc:
                return (i, j, k)
        return None


def truncate_gl(n: int) -> FiniteLieAlgebra:
    """gl(n) on the matrix units E[i,j], 0 <= i, j < n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    labels = ["E[%d,%d]" % (i, j) for i in range(n) for j in range(n)]
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    structure = {}
    units = sorted(idx, key=idx.get)
    for a in range(n * n):
        i, j = units[a]
        for b in range(a + 1, n * n):
            r, k = units[b]
            vec = {idx[key]: c for key, c in glinf.generator_bracket_ee(i, j, r, k).items()}
            if vec:
                structure[(a, b)] = vec
    return FiniteLieAlgebra(labels, structure)


def abelian_algebra(dim: int) -> FiniteLieAlgebra:
    """Trivial bracket; models a finite window of the abelian quotient."""
    return FiniteLieAlgebra(["x%d" % i for i in range(dim)], {})


def ce_differential(algebra: FiniteLieAlgebra, k: int) -> ExactMatrix:
    """Matrix of d from k-cochains to (k+1)-cochains in the increasing
    multi-index bases (rows: (k+1)-subsets, columns: k-subsets)."""
    n = algebra.dim
    if not 0 <= k <= n:
        raise ValueError("cochain degree %s out of range" % (k,))
    cols = {S: c for c, S in enumerate(combinations(range(n), k))}
    rows = list(combinations(range(n), k + 1))
    entries: dict = {}
    for r, S in enumerate(rows):
        for p in range(k + 1):
            for q in range(p + 1, k + 1):
                br = algebra.bracket_basis(S[p], S[q])
                if not br:
                    continue
                rest = S[:p] + S[p + 1:q] + S[q + 1:]
                sign_pq = -1 if (p + q) % 2 else 1
                for b, c in br.items():
                    pos = bisect_left(rest, b)
                    if pos < len(rest) and rest[pos] == b:
                        continue
                    T = rest[:pos] + (b,) + rest[pos:]
                    sgn = sign_pq * (-1 if pos % 2 else 1)
                    key = (r, cols[T])
                    new = entries.get(key, _ZERO) + sgn * c
                    if new:
                        entries[key] = new
                    else:
                        del entries[key]
    return ExactMatrix(len(rows), comb(n, k), entries)


@dataclass(frozen=True)
class BettiTable:
    betti: tuple
    cochain_dims: tuple
    ranks: tuple

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def betti_numbers(algebra: FiniteLieAlgebra) -> BettiTable:
    """Exact Betti numbers b_0..b_dim of the trivial-coefficient complex."""
    n = algebra.dim
    dims = tuple(comb(n, k) for k in range(n + 1))
    ranks = tuple(rank(ce_differential(algebra, k)) for k in range(n + 1))
    betti = tuple(dims[k] - ranks[k] - (ranks[k - 1] if k else 0)
                  for k in range(n + 1))
    return BettiTable(betti, dims, ranks)


@dataclass(frozen=True)
class StabilityReport:
    status: str  # "pass" | "fail" | "not-applicable"
    n: int
    p: int
    b_n: int | None = None
    b_smaller: int | None = None


def stability_check(n: int, p: int) -> StabilityReport:
    """Betti-level shadow of the restriction isomorphism: b_p agrees for
    gl(n) and gl(n-1) whenever p < n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if p >= n:
        return StabilityReport("not-applicable", n, p)
    big = betti_numbers(truncate_gl(n)).betti
    small = betti_numbers(truncate_gl(n - 1)).betti
    b_n = big[p]
    b_s = small[p] if p < len(small) else 0
    return StabilityReport("pass" if b_n == b_s else "fail", n, p, b_n, b_s)


@dataclass(frozen=True)
class H1Report:
    dimension: int
    bound: int
    with_y: bool
    basis: tuple  # dicts degree -> Fraction over the window


def h1_degree_functional(bound: int, with_y: bool = False) -> H1Report:
    """First-cohomology functionals that only see the degree class.

    Unknowns are one value per degree class in [-bound, bound]; constraints
    are vanishing on every bracket of generators with indices <= bound, plus
    vanishing on [Y, Z[n,m]] when ``with_y``.  Degree classes outside the
    window that a bracket happens to mention stay free extra columns, and
    the reported dimension is that of the kernel projected onto the window.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    window = list(range(-bound, bound + 1))
    col_of = {d: i for i, d in enumerate(window)}
    extra: dict = {}

    def column(d):
        if d in col_of:
            return col_of[d]
        if d not in extra:
            extra[d] = len(window) + len(extra)
        return extra[d]

    gens = [(n, m) for n in range(bound + 1) for m in range(bound + 1)]
    rows = []
    for n, m in gens:
        for l, s in gens:
            class_sum: dict = {}
            for (a, b), c in ladder.generator_bracket(n, m, l, s).items():
                d = a - b
                new = class_sum.get(d, 0) + c
                if new:
                    class_sum[d] = new
                else:
                    del class_sum[d]
            if class_sum:
                rows.append({column(d): Fraction(c) for d, c in class_sum.items()})
    if with_y:
        for n, m in gens:
            if n != m:
                rows.append({column(n - m): Fraction(n - m)})
    ncols = len(window) + len(extra)
    kernel = kernel_rows(rows, ncols)
    restricted = []
    for vec in kernel:
        row = {c: v for c, v in vec.items() if c < len(window)}
        if row:
            restricted.append(row)
    reduced, pivots, _ = _rref(restricted)
    basis = []
    for _, i in pivots:
        basis.append({window[c]: v for c, v in sorted(reduced[i].items())})
    return H1Report(len(pivots), bound, with_y, tuple(basis))
