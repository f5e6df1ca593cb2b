"""Weighted alphabets, words and noncommutative polynomials.

This is the substrate for tensor algebras on a graded module: an ordered
alphabet of letters with positive integer degrees, finite words over it, and
finitely supported linear combinations of words with exact (integer or
Fraction) coefficients.  All values are immutable once built and safe to
share between threads.

Two total orders on words are provided:

* ``"lex"``     - plain lexicographic order on letter indices, with a proper
                  prefix smaller than the longer word.
* ``"graded"``  - length first; between words of equal length the
                  lexicographically *bigger* word is the *smaller* one.
                  (So among equal-length words the lex-smallest is the
                  largest element of the order.)
"""

from fractions import Fraction

from .errors import AlphabetMismatch


class Letter:
    """One alphabet symbol: 1-based position, homological degree, label."""

    __slots__ = ("index", "degree", "label")

    def __init__(self, index: int, degree: int, label: str):
        if index < 1:
            raise ValueError("letter index must be >= 1")
        if degree < 1:
            raise ValueError("letter degree must be >= 1")
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "label", label)

    def __setattr__(self, *a):
        raise AttributeError("Letter is immutable")

    def __repr__(self):
        return f"Letter({self.index}, deg={self.degree}, {self.label!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Letter)
            and (self.index, self.degree, self.label) == (other.index, other.degree, other.label)
        )

    def __hash__(self):
        return hash((self.index, self.degree, self.label))


class Alphabet:
    """A fixed totally ordered list of letters, indexed 1..size."""

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        for pos, letter in enumerate(letters, start=1):
            if letter.index != pos:
                raise ValueError("letter indices must be contiguous 1..size")
        self._letters = letters
        self._degrees = tuple(l.degree for l in letters)
        self._labels = tuple(l.label for l in letters)

    @classmethod
    def from_degrees(cls, degrees, labels=None):
        if labels is None:
            labels = [f"x{i}" for i in range(1, len(degrees) + 1)]
        return cls(Letter(i, d, s) for i, (d, s) in enumerate(zip(degrees, labels), start=1))

    @property
    def letters(self):
        return self._letters

    @property
    def degrees(self):
        return self._degrees

    @property
    def size(self):
        return len(self._letters)

    def letter(self, index: int) -> Letter:
        return self._letters[index - 1]

    def word(self, indices) -> "Word":
        return Word(self, indices)

    def one(self) -> "Word":
        return Word(self, ())

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._letters == other._letters

    def __hash__(self):
        return hash(self._letters)

    def __repr__(self):
        return f"Alphabet({', '.join(self._labels)})"


def _same_alphabet(a, b):
    if not (a is b or a == b):
        raise AlphabetMismatch(f"{a!r} vs {b!r}")


class Word:
    """An immutable word; stores letter indices, not letter objects."""

    __slots__ = ("alphabet", "indices", "degree")

    def __init__(self, alphabet: Alphabet, indices):
        indices = tuple(indices)
        degs = alphabet.degrees
        for i in indices:
            if not 1 <= i <= alphabet.size:
                raise ValueError(f"letter index {i} outside alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "degree", sum(degs[i - 1] for i in indices))

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.indices)

    def __mul__(self, other: "Word") -> "Word":
        _same_alphabet(self.alphabet, other.alphabet)
        return Word(self.alphabet, self.indices + other.indices)

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.indices == other.indices
            and self.alphabet == other.alphabet
        )

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return f"Word({self})"

    def __str__(self):
        if not self.indices:
            return "1"
        labels = self.alphabet._labels
        return "".join(labels[i - 1] for i in self.indices)

    def letters(self):
        return tuple(self.alphabet.letter(i) for i in self.indices)

    def find_bigram(self, a: int, b: int, rightmost=False):
        """Position of a contiguous occurrence of letters (a, b), else None."""
        idx = self.indices
        rng = range(len(idx) - 2, -1, -1) if rightmost else range(len(idx) - 1)
        for i in rng:
            if idx[i] == a and idx[i + 1] == b:
                return i
        return None

    def contains_bigram(self, a: int, b: int) -> bool:
        return self.find_bigram(a, b) is not None


ORDER_SCHEMES = ("lex", "graded")


def compare_words(a: Word, b: Word, scheme: str = "lex") -> int:
    """-1, 0 or 1 according to the chosen total order (see module docstring)."""
    _same_alphabet(a.alphabet, b.alphabet)
    if scheme == "lex":
        u, v = a.indices, b.indices
        return -1 if u < v else (0 if u == v else 1)
    if scheme == "graded":
        if len(a) != len(b):
            return -1 if len(a) < len(b) else 1
        u, v = a.indices, b.indices
        # equal length: lex-bigger word is graded-smaller
        return -1 if u > v else (0 if u == v else 1)
    raise ValueError(f"unknown order scheme {scheme!r}")


def rewrite_key(w: Word):
    """Sort key for the rewriting order: degree, then length, then reverse lex.

    Larger key = larger in the rewriting order, so the lex-*smallest* word of
    a given degree and length is the maximal one.
    """
    return (w.degree, len(w), tuple(-i for i in w.indices))


class NCPoly:
    """Exact-coefficient noncommutative polynomial: a finite map Word -> coeff.

    Coefficients are ints or Fractions; zero terms are never stored.
    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            if not isinstance(word, Word):
                raise TypeError("NCPoly keys must be Words")
            _same_alphabet(alphabet, word.alphabet)
            if coeff != 0:
                clean[word] = coeff
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("NCPoly is immutable")

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet, {})

    @classmethod
    def one(cls, alphabet):
        return cls(alphabet, {alphabet.one(): 1})

    @classmethod
    def monomial(cls, word: Word, coeff=1):
        return cls(word.alphabet, {word: coeff})

    @classmethod
    def letter(cls, alphabet, index: int):
        return cls.monomial(alphabet.word((index,)))

    # ---- inspection ----------------------------------------------------
    def terms(self):
        """Deterministic (word, coeff) pairs, sorted by (degree, length, lex)."""
        return sorted(
            self._terms.items(), key=lambda t: (t[0].degree, len(t[0]), t[0].indices)
        )

    def coeff(self, word: Word):
        return self._terms.get(word, 0)

    def words(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        return len(self._terms)

    def is_homogeneous(self) -> bool:
        degs = {w.degree for w in self._terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        degs = {w.degree for w in self._terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def max_word(self, key=rewrite_key) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no maximal word")
        return max(self._terms, key=key)

    def min_lex_word(self) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no minimal word")
        return min(self._terms, key=lambda w: w.indices)

    # ---- arithmetic ----------------------------------------------------
    def __add__(self, other: "NCPoly") -> "NCPoly":
        _same_alphabet(self.alphabet, other.alphabet)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly(self.alphabet, out)

    def __neg__(self):
        return NCPoly(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "NCPoly":
        if c == 0:
            return NCPoly.zero(self.alphabet)
        return NCPoly(self.alphabet, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        _same_alphabet(self.alphabet, other.alphabet)
        out = {}
        alphabet = self.alphabet
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = Word(alphabet, w1.indices + w2.indices)
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NCPoly(alphabet, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.terms():
            s = str(w)
            if c == 1:
                parts.append(s if parts == [] else f"+ {s}")
            elif c == -1:
                parts.append(f"- {s}")
            else:
                sign = "- " if c < 0 else ("+ " if parts else "")
                parts.append(f"{sign}{abs(c)}*{s}")
        return " ".join(parts)

    __repr__ = __str__


def bracket(p: NCPoly, q: NCPoly) -> NCPoly:
    """Commutator [p, q] = pq - qp in the tensor algebra (ungraded)."""
    return p * q - q * p
