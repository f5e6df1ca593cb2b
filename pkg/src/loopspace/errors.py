"""Exception types shared across the package."""


class LoopspaceError(Exception):
    """Base class for all package-specific errors."""


class AlphabetMismatch(LoopspaceError):
    """Two words or polynomials over different alphabets were combined."""


class PresentationError(LoopspaceError):
    """A quadratic presentation violates the shape needed for rewriting."""


class SphereFallback(LoopspaceError):
    """Raised where a loop-algebra presentation is requested for r = 0.

    A manifold with no free middle homology is, after inverting its torsion
    primes, just an odd sphere; callers should use the sphere answer instead
    of a presentation.
    """

    def __init__(self, n, primes):
        self.n = n
        self.primes = frozenset(primes)
        dim = 2 * n + 1
        msg = f"r = 0: no loop presentation; the space is S^{dim} after inverting {set(primes) or '{}'}"
        super().__init__(msg)


class TableFormatError(LoopspaceError):
    """A sphere-table source line is malformed or violates an invariant."""


class TableRangeError(LoopspaceError):
    """A homotopy query needs sphere groups outside the loaded table range."""

    def __init__(self, missing):
        self.missing = tuple(sorted(missing))
        pairs = ", ".join(f"pi_{k}(S^{m})" for k, m in self.missing)
        super().__init__(f"sphere table has no entry for: {pairs}")


class ComputationFailure(LoopspaceError):
    """An internal cross-check failed; indicates a bug, not bad input."""
