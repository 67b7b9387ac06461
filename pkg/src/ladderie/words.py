"""Word Hopf algebra over a finite graded alphabet, the word
insertion-elimination bracket, the ladder-to-word comparison maps, and
linear Dyson-Schwinger expansions.

Words are tuples of letter names; the empty tuple is the unit word.  Each
letter carries a loop degree (>= 1) and a symmetry weight; a word's alpha
order is the sum of its letter degrees, its augmentation degree is its
letter count.  Generators Z[w1,w2] replace the prefix w2 by w1 and kill
words not starting with w2; the bracket mirrors the six-term ladder
commutator, where an action-indexed term is dropped whenever the inner
action vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import ladder, ladder_module
from .linalg import canonical

Word = tuple  # of letter names

EMPTY_WORD: Word = ()

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Letter:
    name: str
    degree: int
    sym: Fraction = Fraction(1)

    def __post_init__(self):
        if not self.name:
            raise ValueError("letter needs a name")
        if self.degree < 1:
            raise ValueError("letter degree must be >= 1")
        object.__setattr__(self, "sym", Fraction(self.sym))
        if self.sym <= 0:
            raise ValueError("symmetry factor must be positive")


class Alphabet:
    """Ordered finite collection of letters with unique names."""

    def __init__(self, letters):
        self.letters = tuple(letters)
        self._by_name = {}
        for letter in self.letters:
            if letter.name in self._by_name:
                raise ValueError("duplicate letter %r" % letter.name)
            self._by_name[letter.name] = letter

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def names(self) -> tuple:
        return tuple(letter.name for letter in self.letters)

    def letter(self, name: str) -> Letter:
        return self._by_name[name]

    def __contains__(self, name) -> bool:
        return name in self._by_name

    def __iter__(self):
        return iter(self.letters)

    def words(self, aug_degree: int) -> list:
        """All words of the given augmentation degree, in letter order."""
        return [w for w in product(self.names, repeat=aug_degree)]

    def word_count(self, aug_degree: int) -> int:
        return self.size ** aug_degree

    def alpha_degree(self, word: Word) -> int:
        return sum(self._by_name[name].degree for name in word)

    def sym_weight(self, word: Word) -> Fraction:
        out = Fraction(1)
        for name in word:
            out /= self._by_name[name].sym
        return out


def alphabet_from_json(obj) -> Alphabet:
    """Load {"letters": [{"name", "degree", "sym"}, ...]}."""
    letters = []
    for item in obj["letters"]:
        sym = item.get("sym", "1")
        if isinstance(sym, str):
            from .linalg import scalar_from_str

            sym = scalar_from_str(sym)
        letters.append(Letter(item["name"], int(item["degree"]), Fraction(sym)))
    return Alphabet(letters)


def alphabet_to_json(alphabet: Alphabet) -> dict:
    from .linalg import scalar_to_str

    return {"letters": [{"name": l.name, "degree": l.degree, "sym": scalar_to_str(l.sym)}
                        for l in alphabet]}


class WordPoly:
    """Zero-free combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        items = terms.items() if hasattr(terms, "items") else (terms or [])
        self.terms = canonical((tuple(w), c) for w, c in items)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, WordPoly):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            new = acc.get(w, _ZERO) + c
            if new:
                acc[w] = new
            else:
                del acc[w]
        return WordPoly(acc)

    def __sub__(self, other):
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, scale):
        scale = Fraction(scale)
        if not scale:
            return WordPoly()
        return WordPoly({w: scale * c for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WordPoly) and self.terms == other.terms

    def __repr__(self):
        return "WordPoly(%r)" % (self.terms,)


class WordLieElement:
    """Zero-free combination of word generators Z[w1,w2]."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        items = terms.items() if hasattr(terms, "items") else (terms or [])
        self.terms = canonical(((tuple(w1), tuple(w2)), c) for (w1, w2), c in items)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, WordLieElement):
            return NotImplemented
        acc = dict(self.terms)
        for key, c in other.terms.items():
            new = acc.get(key, _ZERO) + c
            if new:
                acc[key] = new
            else:
                del acc[key]
        return WordLieElement(acc)

    def __sub__(self, other):
        if not isinstance(other, WordLieElement):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, scale):
        scale = Fraction(scale)
        if not scale:
            return WordLieElement()
        return WordLieElement({key: scale * c for key, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WordLieElement) and self.terms == other.terms

    def __repr__(self):
        return "WordLieElement(%r)" % (self.terms,)


def Zw(w1, w2, coeff=1) -> WordLieElement:
    return WordLieElement({(tuple(w1), tuple(w2)): coeff})


def act_on_word(w1: Word, w2: Word, w: Word):
    """Z[w1,w2] applied to the word w: prefix replacement, or None."""
    k = len(w2)
    if w[:k] == w2:
        return w1 + w[k:]
    return None


def act_word(g: WordLieElement, p: WordPoly) -> WordPoly:
    acc: dict = {}
    for (w1, w2), cg in g.terms.items():
        for w, cw in p.terms.items():
            out = act_on_word(w1, w2, w)
            if out is None:
                continue
            new = acc.get(out, _ZERO) + cg * cw
            if new:
                acc[out] = new
            else:
                del acc[out]
    return WordPoly(acc)


def generator_bracket_words(w1: Word, w2: Word, w3: Word, w4: Word) -> dict:
    """Six-term word bracket of Z[w1,w2] and Z[w3,w4].

    Action-indexed terms contribute only when the inner prefix replacement
    succeeds; the two Kronecker terms compare whole words.
    """
    acc: dict = {}

    def put(key, sgn):
        new = acc.get(key, 0) + sgn
        if new:
            acc[key] = new
        elif key in acc:
            del acc[key]

    out = act_on_word(w1, w2, w3)
    if out is not None:
        put((out, w4), 1)
    out = act_on_word(w2, w1, w4)
    if out is not None:
        put((w3, out), -1)
    out = act_on_word(w3, w4, w1)
    if out is not None:
        put((out, w2), -1)
    out = act_on_word(w4, w3, w2)
    if out is not None:
        put((w1, out), 1)
    if w2 == w3:
        put((w1, w4), -1)
    if w1 == w4:
        put((w3, w2), 1)
    return acc


def bracket_words(a: WordLieElement, b: WordLieElement) -> WordLieElement:
    acc: dict = {}
    for (w1, w2), ca in a.terms.items():
        for (w3, w4), cb in b.terms.items():
            c = ca * cb
            for key, sgn in generator_bracket_words(w1, w2, w3, w4).items():
                new = acc.get(key, _ZERO) + sgn * c
                if new:
                    acc[key] = new
                else:
                    del acc[key]
    return WordLieElement(acc)


def word_coproduct(w: Word) -> dict:
    """Deconcatenation: all prefix/suffix splits including the empty ends."""
    w = tuple(w)
    return {(w[:k], w[k:]): Fraction(1) for k in range(len(w) + 1)}


def word_poly_coproduct(p: WordPoly) -> dict:
    acc: dict = {}
    for w, c in p.terms.items():
        for key, one in word_coproduct(w).items():
            new = acc.get(key, _ZERO) + c
            if new:
                acc[key] = new
            else:
                del acc[key]
    return acc


def iota_h(k: int, alphabet: Alphabet) -> WordPoly:
    """Image of t[k]: the plain sum of all words of augmentation degree k
    (alpha orders are recomputed per word from the alphabet)."""
    if k < 0:
        raise ValueError("negative ladder index")
    return WordPoly({w: 1 for w in alphabet.words(k)})


def iota_l(n: int, m: int, alphabet: Alphabet) -> WordLieElement:
    """Image of Z[n,m]: the average over word generators of augmentation
    bidegree (n, m), normalized by the count of elimination words."""
    if n < 0 or m < 0:
        raise ValueError("negative augmentation degree")
    weight = Fraction(1, alphabet.word_count(m))
    return WordLieElement({(w1, w2): weight
                           for w1 in alphabet.words(n)
                           for w2 in alphabet.words(m)})


def ladder_action_image(n: int, m: int, k: int, alphabet: Alphabet) -> WordPoly:
    """Word image of Z[n,m] t[k]."""
    knew = ladder_module.act_generator(n, m, k)
    if knew is None:
        return WordPoly()
    return iota_h(knew, alphabet)


@dataclass(frozen=True)
class IotaReport:
    passed: bool
    description: str
    counterexample: str | None = None


def check_iota_action(n: int, m: int, k: int, alphabet: Alphabet) -> IotaReport:
    """Both routes of the comparison square for a single generator: word
    image of Z[n,m] t[k] versus the word action of the generator image."""
    lhs = ladder_action_image(n, m, k, alphabet)
    rhs = act_word(iota_l(n, m, alphabet), iota_h(k, alphabet))
    desc = "iota action (n=%d, m=%d, k=%d, %d letters)" % (n, m, k, alphabet.size)
    if lhs == rhs:
        return IotaReport(True, desc)
    return IotaReport(False, desc, "lhs=%r rhs=%r" % (lhs, rhs))


def check_iota_bracket(n1: int, m1: int, n2: int, m2: int, k: int,
                       alphabet: Alphabet) -> IotaReport:
    """Bracket form of the comparison: the word bracket of the two generator
    images, applied to the image of t[k], versus the image of the ladder
    bracket applied to t[k]."""
    br = ladder.generator_bracket(n1, m1, n2, m2)
    lhs = WordPoly()
    for (a, b), c in br.items():
        lhs = lhs + c * ladder_action_image(a, b, k, alphabet)
    wb = bracket_words(iota_l(n1, m1, alphabet), iota_l(n2, m2, alphabet))
    rhs = act_word(wb, iota_h(k, alphabet))
    desc = "iota bracket ((%d,%d),(%d,%d), k=%d, %d letters)" % (
        n1, m1, n2, m2, k, alphabet.size)
    if lhs == rhs:
        return IotaReport(True, desc)
    return IotaReport(False, desc, "lhs=%r rhs=%r" % (lhs, rhs))


def check_iota_compat(n: int, m: int, k: int, alphabet: Alphabet) -> IotaReport:
    """Action form for (n, m, k) plus the bracket form for the conjugate
    pair (n,m),(m,n)."""
    action = check_iota_action(n, m, k, alphabet)
    if not action.passed:
        return action
    return check_iota_bracket(n, m, m, n, k, alphabet)


@dataclass(frozen=True)
class DseExpansion:
    """Truncated solution of the linear fixpoint equation.

    ``c[j]`` collects the words of alpha order j, ``d[j]`` the words of
    augmentation degree j; both carry the product of inverse symmetry
    weights and index 0 is the unit."""

    order: int
    c: tuple
    d: tuple


def dse_expand(alphabet: Alphabet, order: int) -> DseExpansion:
    """Iterate the fixpoint G = 1 + sum over letters of (1/sym) prepend(G)
    truncated at alpha order ``order``, then regrade."""
    if order < 0:
        raise ValueError("order must be >= 0")
    gamma = {EMPTY_WORD: Fraction(1)}
    for _ in range(order):
        new = {EMPTY_WORD: Fraction(1)}
        for letter in alphabet:
            weight = 1 / letter.sym
            for word, c in gamma.items():
                grown = (letter.name,) + word
                if alphabet.alpha_degree(grown) <= order:
                    new[grown] = new.get(grown, _ZERO) + weight * c
        gamma = new
    c_parts = [dict() for _ in range(order + 1)]
    d_parts = [dict() for _ in range(order + 1)]
    for word, coeff in gamma.items():
        c_parts[alphabet.alpha_degree(word)][word] = coeff
        d_parts[len(word)][word] = coeff
    return DseExpansion(order,
                        tuple(WordPoly(p) for p in c_parts),
                        tuple(WordPoly(p) for p in d_parts))
