"""Cross-oracle consistency suites, runnable from the CLI.

Each suite recomputes a family of results along two independent routes and
compares exactly: word counting by dynamic programming against brute
enumeration, Moebius summand counts against direct standard-Lyndon
enumeration, the product identity against both, the symbolic decomposition
series against the generating series, rewriting confluence on seeded random
polynomials, and exact-rank independence certificates.
"""

import random
from dataclasses import dataclass

from .decomposition import loop_decomposition, rational_series
from .errors import ComputationFailure
from .lyndon import independence_certificate, lie_dims
from .manifold import ManifoldModel, loop_presentation
from .rewrite import enumerate_irreducible_words, hilbert_dims, normal_form
from .series import loop_generating_series, pbw_series_check, sphere_summand_counts
from .words import NCPoly, Word

GRID = ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 2))


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""


def _fail(name, n=None, r=None, degree=None, extra=""):
    parts = [name]
    if n is not None:
        parts.append(f"n={n}")
    if r is not None:
        parts.append(f"r={r}")
    if degree is not None:
        parts.append(f"degree={degree}")
    detail = "(" + ", ".join(str(p) for p in parts) + ")"
    if extra:
        detail += " " + extra
    return SuiteResult(name, False, detail)


def suite_dp_vs_enumeration(cap=7):
    name = "dp-vs-enumeration"
    for n, r in GRID:
        pres = loop_presentation(ManifoldModel(n, r))
        dims = hilbert_dims(pres, cap)
        words = enumerate_irreducible_words(pres, cap)
        for d in range(cap + 1):
            if dims[d] != len(words[d]):
                return _fail(name, n, r, d)
    return SuiteResult(name, True)


def suite_mobius_vs_lyndon(cap=12, fault=None):
    name = "mobius-vs-lyndon"
    for n, r in GRID:
        pres = loop_presentation(ManifoldModel(n, r))
        counted = lie_dims(pres, cap)
        try:
            mobius = sphere_summand_counts(n, r, cap)
        except ComputationFailure as e:
            return _fail(name, n, r, extra=str(e))
        if fault == "mobius-off-by-one":
            mobius = dict(mobius)
            mobius[1] += 1
        for d in range(1, cap + 1):
            if counted[d] != mobius[d]:
                return _fail(name, n, r, d)
    return SuiteResult(name, True)


def suite_pbw_identity(cap=12):
    name = "pbw-identity"
    for n, r in GRID:
        pres = loop_presentation(ManifoldModel(n, r))
        if not pbw_series_check(lie_dims(pres, cap), hilbert_dims(pres, cap), cap):
            return _fail(name, n, r)
    return SuiteResult(name, True)


def suite_master_series(cap=12):
    name = "master-series"
    for n, r in GRID:
        for torsion in ((), (2,)):
            m = ManifoldModel(n, r, torsion)
            lhs = rational_series(loop_decomposition(m), cap)
            rhs = loop_generating_series(n, r, cap).inverse()
            if lhs != rhs:
                return _fail(name, n, r, extra=f"G={list(torsion)}")
    return SuiteResult(name, True)


def random_poly(pres, rng, max_degree=8, max_terms=4):
    """Seeded random element of the tensor algebra, degree-capped."""
    alphabet = pres.alphabet
    degrees = alphabet.degrees
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        indices = []
        degree = 0
        while True:
            i = rng.randint(1, alphabet.size)
            if degree + degrees[i - 1] > max_degree or (indices and rng.random() < 0.2):
                break
            indices.append(i)
            degree += degrees[i - 1]
        coeff = rng.choice((-3, -2, -1, 1, 2, 3))
        word = Word(alphabet, indices)
        terms[word] = terms.get(word, 0) + coeff
    return NCPoly(alphabet, terms)


def suite_confluence_fuzz(count=500, seed=0, max_degree=8):
    name = "confluence-fuzz"
    rng = random.Random(seed)
    presentations = [loop_presentation(ManifoldModel(n, r)) for n, r in ((2, 1), (2, 2), (2, 3), (3, 2))]
    for i in range(count):
        pres = presentations[i % len(presentations)]
        p = random_poly(pres, rng, max_degree=max_degree)
        left = normal_form(p, pres, strategy="leftmost")
        right = normal_form(p, pres, strategy="rightmost")
        if left != right:
            return _fail(name, extra=f"strategies differ at iteration {i}")
        if normal_form(left, pres) != left:
            return _fail(name, extra=f"not idempotent at iteration {i}")
    return SuiteResult(name, True)


def suite_independence(cap=6):
    name = "independence"
    for n, r in ((2, 2), (3, 2)):
        pres = loop_presentation(ManifoldModel(n, r))
        try:
            independence_certificate(pres, cap)
        except ComputationFailure as e:
            return _fail(name, n, r, extra=str(e))
    return SuiteResult(name, True)


def run_selftest(seed=0, fuzz_count=500, fault=None, emit=print):
    """Run every suite; returns (all_passed, results)."""
    results = [
        suite_dp_vs_enumeration(),
        suite_mobius_vs_lyndon(fault=fault),
        suite_pbw_identity(),
        suite_master_series(),
        suite_confluence_fuzz(count=fuzz_count, seed=seed),
        suite_independence(),
    ]
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else f"FAIL {r.detail}"
        emit(f"{r.name.ljust(width)}  {status}")
    ok = all(r.passed for r in results)
    emit(f"selftest: {'all suites passed' if ok else 'FAILURES detected'}")
    return ok, results
