from fractions import Fraction as F

import pytest

from ladderie.words import Alphabet, Letter, WordPoly, dse_expand


def compositions(total, parts):
    """Brute-force enumeration of compositions of ``total`` into the given
    parts; independent of the fixpoint iteration."""
    if total == 0:
        return [()]
    out = []
    for p in parts:
        if p <= total:
            out.extend((p,) + rest for rest in compositions(total - p, parts))
    return out


def test_single_letter_geometric():
    exp = dse_expand(Alphabet([Letter("a", 1)]), 8)
    for j in range(9):
        assert exp.c[j] == WordPoly({("a",) * j: 1})
        assert exp.d[j] == exp.c[j]


def test_fibonacci_composition_counts():
    alphabet = Alphabet([Letter("a", 1), Letter("b", 2)])
    exp = dse_expand(alphabet, 6)
    for j in range(1, 7):
        expected = compositions(j, (1, 2))
        assert len(exp.c[j].terms) == len(expected)
        got = sorted(tuple(2 if ch == "b" else 1 for ch in w)
                     for w in exp.c[j].terms)
        assert got == sorted(expected)
    assert [len(exp.c[j].terms) for j in range(1, 7)] == [1, 2, 3, 5, 8, 13]


def test_symmetry_factor_halves_coefficients():
    exp = dse_expand(Alphabet([Letter("a", 1, F(2))]), 3)
    for j in range(4):
        assert exp.c[j] == WordPoly({("a",) * j: F(1, 2 ** j)})


def test_gradings_partition_the_support():
    alphabet = Alphabet([Letter("a", 1, F(3)), Letter("b", 2)])
    exp = dse_expand(alphabet, 5)
    c_support = {w for poly in exp.c for w in poly.terms}
    d_support = {w for poly in exp.d for w in poly.terms}
    assert c_support == d_support
    for j, poly in enumerate(exp.c):
        for w, coeff in poly.terms.items():
            assert alphabet.alpha_degree(w) == j
            assert coeff == alphabet.sym_weight(w)
    for j, poly in enumerate(exp.d):
        for w in poly.terms:
            assert len(w) == j


def test_single_letter_gradings_coincide():
    exp = dse_expand(Alphabet([Letter("a", 1)]), 6)
    assert exp.c == exp.d


def test_order_zero_and_validation():
    exp = dse_expand(Alphabet([Letter("a", 2)]), 0)
    assert exp.c[0] == WordPoly({(): 1})
    with pytest.raises(ValueError):
        dse_expand(Alphabet([Letter("a", 1)]), -1)
