"""Single-relation diamond-lemma rewriting in a tensor algebra.

A quadratic presentation fixes one homogeneous length-2 relation whose
maximal monomial (under a degree-then-length-then-reverse-lex order, or
optionally plain deg-lex) is a bigram x_a x_b with a != b.  Rewriting that
bigram away terminates and is confluent, so every element has a unique
normal form supported on the words avoiding the bigram; those irreducible
words are a basis of the quotient algebra.

On top of the rewriting engine this module counts irreducible words per
degree (transfer-matrix dynamic programming, cross-checkable against brute
enumeration), decides the single-relation Koszulness criterion, and computes
annihilator ("Koszul dual") relation spaces plus weight dimensions of
arbitrary quadratic algebras by exact rank.
"""

from fractions import Fraction

from . import linalg
from .errors import ComputationFailure, PresentationError
from .words import NCPoly, Word, rewrite_key

REWRITE_ORDERS = ("deglen_revlex", "deglen_lex")


def _order_key(scheme):
    if scheme == "deglen_revlex":
        return rewrite_key
    if scheme == "deglen_lex":
        return lambda w: (w.degree, len(w), w.indices)
    raise ValueError(f"unknown rewrite order {scheme!r}")


class QuadraticPresentation:
    """Alphabet plus (at most) one homogeneous length-2 relation.

    The relation is normalized so that its order-maximal word (the "leading"
    bigram) has coefficient 1; ``lower_terms`` is the polynomial it rewrites
    to, i.e. relation = leading - lower_terms.  A presentation with
    ``relation=None`` is the free tensor algebra.
    """

    def __init__(self, alphabet, relation: NCPoly | None = None, order: str = "deglen_revlex",
                 leading: Word | None = None):
        self.alphabet = alphabet
        self.order = order
        key = _order_key(order)
        if relation is not None and relation.is_zero():
            relation = None
        if relation is None:
            self.relation = None
            self.leading = None
            self.lower_terms = None
            return

        if any(len(w) != 2 for w in relation.words()):
            raise PresentationError("relation must be homogeneous of word-length 2")
        if leading is not None and relation.coeff(leading) == 0:
            raise PresentationError(f"chosen leading word {leading} does not occur in the relation")
        lead = leading if leading is not None else relation.max_word(key=key)
        if lead.indices[0] == lead.indices[1]:
            raise PresentationError("leading bigram must have two distinct letters")
        c = relation.coeff(lead)
        relation = relation.scale(Fraction(1, 1) / c if c != 1 else 1)
        lower = NCPoly.monomial(lead) - relation
        klead = key(lead)
        for w in lower.words():
            if key(w) >= klead:
                raise PresentationError(
                    f"lower term {w} is not strictly below the leading bigram {lead}"
                )
        self.relation = relation
        self.leading = lead
        self.lower_terms = lower

    @property
    def is_free(self) -> bool:
        return self.relation is None

    def leading_pair(self):
        """The (a, b) letter indices of the rewritten bigram, or None."""
        if self.is_free:
            return None
        return self.leading.indices

    def __repr__(self):
        if self.is_free:
            return f"QuadraticPresentation(free, {self.alphabet!r})"
        return f"QuadraticPresentation({self.relation} = 0, leading {self.leading})"


def is_irreducible(word: Word, pres: QuadraticPresentation) -> bool:
    """True iff the leading bigram does not occur contiguously in the word."""
    if pres.is_free:
        return True
    a, b = pres.leading_pair()
    return not word.contains_bigram(a, b)


def normal_form(p: NCPoly, pres: QuadraticPresentation, strategy: str = "leftmost") -> NCPoly:
    """Reduce p modulo the two-sided ideal of the relation.

    Each step replaces one occurrence of the leading bigram (the leftmost or
    rightmost one, per ``strategy``) by the lower terms; both strategies
    reach the same normal form.  The result contains only irreducible words.
    """
    if pres.is_free:
        return p
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rightmost = strategy == "rightmost"
    a, b = pres.leading_pair()
    lower = list(pres.lower_terms._terms.items())
    alphabet = pres.alphabet

    done = {}
    pending = dict(p._terms)
    while pending:
        word, coeff = pending.popitem()
        pos = word.find_bigram(a, b, rightmost=rightmost)
        if pos is None:
            s = done.get(word, 0) + coeff
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        prefix = word.indices[:pos]
        suffix = word.indices[pos + 2 :]
        for lw, lc in lower:
            w2 = Word(alphabet, prefix + lw.indices + suffix)
            s = pending.get(w2, 0) + coeff * lc
            if s:
                pending[w2] = s
            else:
                pending.pop(w2, None)
    return NCPoly(alphabet, done)


# ---------------------------------------------------------------------------
# counting irreducible words
# ---------------------------------------------------------------------------

def enumerate_irreducible_words(pres: QuadraticPresentation, cap: int):
    """All irreducible words of degree <= cap, grouped by degree.

    Exponential in cap; meant for low-degree cross-checks of the dynamic
    programming counts.
    """
    alphabet = pres.alphabet
    forbidden = pres.leading_pair()
    degrees = alphabet.degrees
    by_degree = {d: [] for d in range(cap + 1)}
    by_degree[0].append(alphabet.one())

    stack = [((i,), degrees[i - 1]) for i in range(1, alphabet.size + 1) if degrees[i - 1] <= cap]
    while stack:
        indices, deg = stack.pop()
        by_degree[deg].append(Word(alphabet, indices))
        last = indices[-1]
        for i in range(1, alphabet.size + 1):
            if forbidden and last == forbidden[0] and i == forbidden[1]:
                continue
            d2 = deg + degrees[i - 1]
            if d2 <= cap:
                stack.append((indices + (i,), d2))
    for d in by_degree:
        by_degree[d].sort(key=lambda w: (len(w), w.indices))
    return by_degree


def hilbert_dims(pres: QuadraticPresentation, cap: int, weights=None) -> list:
    """Number of irreducible words in each degree 0..cap.

    ``weights`` overrides the letter degrees (e.g. all-ones for the weight
    grading).  Linear-time transfer-matrix recursion on the last letter.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    alphabet = pres.alphabet
    q = alphabet.size
    wts = tuple(weights) if weights is not None else alphabet.degrees
    if len(wts) != q or any(w < 1 for w in wts):
        raise ValueError("weights must assign a positive weight to every letter")
    forbidden = pres.leading_pair()

    # counts[d][i] = number of irreducible words of degree d ending in letter i+1
    counts = [[0] * q for _ in range(cap + 1)]
    for i in range(q):
        if wts[i] <= cap:
            counts[wts[i]][i] += 1
    for d in range(cap + 1):
        row = counts[d]
        for last in range(q):
            c = row[last]
            if not c:
                continue
            for nxt in range(q):
                if forbidden and forbidden[0] == last + 1 and forbidden[1] == nxt + 1:
                    continue
                d2 = d + wts[nxt]
                if d2 <= cap:
                    counts[d2][nxt] += c
    dims = [sum(counts[d]) for d in range(cap + 1)]
    dims[0] += 1  # empty word
    return dims


def weight_dims(pres: QuadraticPresentation, cap: int) -> list:
    """Irreducible-word counts graded by word length instead of degree."""
    return hilbert_dims(pres, cap, weights=(1,) * pres.alphabet.size)


# ---------------------------------------------------------------------------
# Koszulness of a single relation
# ---------------------------------------------------------------------------

def is_koszul_single_relation(relation) -> bool:
    """Decide the one-relation Koszulness criterion.

    True iff some total reordering of the alphabet makes one bigram x_a x_b
    with a != b the strict lex-maximum of the relation's support.  Accepts a
    QuadraticPresentation or a bare length-2 NCPoly (the latter also covers
    relations, like a lone square x_a x_a, that admit no rewriting
    presentation at all).  Free presentations are Koszul.
    """
    if isinstance(relation, QuadraticPresentation):
        if relation.is_free:
            return True
        relation = relation.relation
    if relation.is_zero():
        return True
    if any(len(w) != 2 for w in relation.words()):
        raise PresentationError("relation must be homogeneous of word-length 2")
    support = [w.indices for w in relation.words()]
    for lead in support:
        a, b = lead
        if a == b:
            continue
        # constraints "x > y" needed to make `lead` the lex-max of `support`
        edges = set()
        for c, d in support:
            if (c, d) == (a, b):
                continue
            if c == a:
                edges.add((b, d))
            else:
                edges.add((a, c))
        if not _has_cycle(edges):
            return True
    return False


def _has_cycle(edges) -> bool:
    adj = {}
    for x, y in edges:
        adj.setdefault(x, set()).add(y)
    state = {}

    def visit(v):
        state[v] = 1
        for w in adj.get(v, ()):
            s = state.get(w)
            if s == 1:
                return True
            if s is None and visit(w):
                return True
        state[v] = 2
        return False

    return any(state.get(v) is None and visit(v) for v in list(adj))


# ---------------------------------------------------------------------------
# annihilator relations and generic quadratic weight dimensions
# ---------------------------------------------------------------------------

def relation_vector(relation: NCPoly, dim_v: int) -> list:
    """Flatten a length-2 relation into dim(V)^2 coordinates (row-major)."""
    vec = [0] * (dim_v * dim_v)
    for w, c in relation.terms():
        if len(w) != 2:
            raise ValueError("relation must be homogeneous of word-length 2")
        i, j = w.indices
        vec[(i - 1) * dim_v + (j - 1)] = c
    return vec


class KoszulDualData:
    """Dual generators with the annihilator relation space R-perp.

    ``vdims`` echoes the graded dimensions of the input generators (the dual
    generators have the same count); ``perp_basis`` is an exact basis of the
    annihilator of the input relation span inside the dim(V)^2 coordinate
    space, row i*dim(V)+j meaning (dual i) tensor (dual j).
    """

    def __init__(self, vdims, perp_basis):
        self.vdims = tuple(vdims)
        self.perp_basis = [tuple(v) for v in perp_basis]

    @property
    def dim_v(self):
        return sum(d for _deg, d in self.vdims)

    def __repr__(self):
        return f"KoszulDualData(dim V = {self.dim_v}, dim R-perp = {len(self.perp_basis)})"


def koszul_dual(vdims, relation_vectors, char: int = 0) -> KoszulDualData:
    """Annihilator of a relation subspace under the evaluation pairing.

    ``relation_vectors`` must be linearly independent vectors of length
    dim(V)^2 (coordinates of V tensor V).  The returned basis spans all
    functionals vanishing on them; its size is dim(V)^2 - #relations.
    """
    m = sum(d for _deg, d in vdims)
    n2 = m * m
    rows = [list(v) for v in relation_vectors]
    for v in rows:
        if len(v) != n2:
            raise ValueError(f"relation vector length {len(v)} != dim(V)^2 = {n2}")
    if rows and linalg.rank(rows, n2, char) != len(rows):
        raise ValueError("relation vectors are linearly dependent")
    perp = linalg.nullspace(rows, n2, char) if rows else linalg.nullspace([], n2, char)
    if len(perp) != n2 - len(rows):
        raise ComputationFailure("annihilator dimension mismatch")
    return KoszulDualData(vdims, perp)


def quadratic_weight_dims(dim_v: int, relation_vectors, cap: int, char: int = 0,
                          max_columns: int = 300_000) -> list:
    """Weight dimensions of T(V)/(R) for an arbitrary relation span R.

    dim A_w = dim V^(tensor w) minus the rank of the span of all
    V^i tensor R tensor V^j with i+j = w-2, computed by exact elimination.
    Once some weight hits zero all later weights are zero (the algebra is
    generated in weight one).  Raises if an intermediate matrix would be
    unreasonably wide.
    """
    rows0 = [tuple(v) for v in relation_vectors]
    for v in rows0:
        if len(v) != dim_v * dim_v:
            raise ValueError("relation vectors must live in dim(V)^2 coordinates")
    dims = [1]
    if cap >= 1:
        dims.append(dim_v)
    for w in range(2, cap + 1):
        ncols = dim_v**w
        if ncols > max_columns:
            raise ComputationFailure(
                f"weight {w} needs {ncols} columns; refusing dense elimination"
            )
        rows = []
        for split in range(w - 1):
            left = dim_v**split
            right = dim_v ** (w - 2 - split)
            for rel in rows0:
                for li in range(left):
                    for ri in range(right):
                        row = [0] * ncols
                        base = li * dim_v * dim_v * right
                        for pos, c in enumerate(rel):
                            if c:
                                row[base + pos * right + ri] = c
                        rows.append(row)
        dims.append(ncols - linalg.rank(rows, ncols, char))
        if dims[-1] == 0:
            dims.extend([0] * (cap - w))
            break
    return dims[: cap + 1]
