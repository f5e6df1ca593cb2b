"""Truncated formal power series with exact rational coefficients.

Supports the generating-series side of the engine: the loop-homology
denominator polynomial of an (n, r) manifold, its log-coefficients, the
Moebius counts of sphere summands, and the product identity tying Lie-algebra
dimensions to the word counts of the quotient algebra.

>>> geom = PowerSeries.one(5) - PowerSeries.monomial(1, 5)
>>> geom.inverse().coefficients()
[Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)]
"""

from fractions import Fraction

from .errors import ComputationFailure
from .numtheory import divisors, mobius


class PowerSeries:
    """Coefficients 0..cap; operations truncate to the smaller cap."""

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs, cap: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if cap is None:
            cap = len(coeffs) - 1
        if cap < 0:
            raise ValueError("cap must be >= 0")
        if len(coeffs) < cap + 1:
            coeffs = coeffs + [Fraction(0)] * (cap + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs[: cap + 1]))
        object.__setattr__(self, "cap", cap)

    def __setattr__(self, *a):
        raise AttributeError("PowerSeries is immutable")

    # ---- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, cap: int):
        return cls([], cap)

    @classmethod
    def one(cls, cap: int):
        return cls([1], cap)

    @classmethod
    def monomial(cls, exponent: int, cap: int, coeff=1):
        c = [0] * (cap + 1)
        if exponent <= cap:
            c[exponent] = coeff
        return cls(c, cap)

    @classmethod
    def from_polynomial(cls, coeff_by_exponent: dict, cap: int):
        c = [0] * (cap + 1)
        for e, v in coeff_by_exponent.items():
            if e <= cap:
                c[e] = v
        return cls(c, cap)

    # ---- basics ----------------------------------------------------------
    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i <= self.cap:
            raise IndexError(f"coefficient {i} beyond cap {self.cap}")
        return self.coeffs[i]

    def coefficients(self) -> list:
        return list(self.coeffs)

    def truncate(self, cap: int) -> "PowerSeries":
        if cap > self.cap:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[: cap + 1], cap)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries)
            and self.cap == other.cap
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.cap, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*t^{i}" if i else f"{c}")
            if len(terms) == 8 and i < self.cap:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"PowerSeries({body}; cap={self.cap})"

    # ---- ring operations ---------------------------------------------------
    def _common_cap(self, other) -> int:
        return min(self.cap, other.cap)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        cap = self._common_cap(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)][: cap + 1], cap)

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs], self.cap)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs], self.cap)
        cap = self._common_cap(other)
        out = [Fraction(0)] * (cap + 1)
        for i, a in enumerate(self.coeffs[: cap + 1]):
            if not a:
                continue
            for j in range(cap + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, cap)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ValueError("inverse needs a nonzero constant term")
        cap = self.cap
        inv = [Fraction(0)] * (cap + 1)
        inv[0] = Fraction(1) / a0
        for n in range(1, cap + 1):
            s = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    s += self.coeffs[k] * inv[n - k]
            inv[n] = -s / a0
        return PowerSeries(inv, cap)

    def log(self) -> "PowerSeries":
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        cap = self.cap
        out = [Fraction(0)] * (cap + 1)
        for n in range(1, cap + 1):
            s = self.coeffs[n] * n
            for k in range(1, n):
                s -= out[k] * k * self.coeffs[n - k]
            out[n] = s / n
        return PowerSeries(out, cap)

    def exp(self) -> "PowerSeries":
        if self.coeffs[0] != 0:
            raise ValueError("exp needs constant term 0")
        cap = self.cap
        out = [Fraction(0)] * (cap + 1)
        out[0] = Fraction(1)
        for n in range(1, cap + 1):
            s = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    s += k * self.coeffs[k] * out[n - k]
            out[n] = s / n
        return PowerSeries(out, cap)

    def pow_int(self, e: int) -> "PowerSeries":
        """Integer power, allowing large exponents (via exp of log)."""
        if e == 0:
            return PowerSeries.one(self.cap)
        if e < 0:
            return self.inverse().pow_int(-e)
        if self.coeffs[0] == 1:
            return (self.log() * e).exp()
        out = PowerSeries.one(self.cap)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out


# ---------------------------------------------------------------------------
# manifold generating series
# ---------------------------------------------------------------------------

def loop_generating_series(n: int, r: int, cap: int = 20) -> PowerSeries:
    """Denominator polynomial of the loop-homology Hilbert series.

    The loop algebra of an (n, r) manifold has r generators in degree n-1,
    r in degree n and one relation in degree 2n-1, so its graded dimensions
    are the coefficients of 1 / (1 - r t^(n-1) - r t^n + t^(2n-1)).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1 for a loop presentation")
    return PowerSeries.from_polynomial({0: 1, n - 1: -r, n: -r, 2 * n - 1: 1}, cap)


def suspension_generating_series(n: int, r: int, cap: int = 20) -> PowerSeries:
    """Same polynomial in the grading where generators sit in degrees n, n+1.

    This is the shape 1 - r t^n - r t^(n+1) + t^(2n+1); it is recorded for
    reference and for tests, but the Moebius counting below always uses the
    loop grading.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1 for a loop presentation")
    return PowerSeries.from_polynomial({0: 1, n: -r, n + 1: -r, 2 * n + 1: 1}, cap)


def free_generating_series(n: int, r: int, cap: int = 20) -> PowerSeries:
    """Relation-free variant 1 - r t^(n-1) - r t^n (wedge of spheres case)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    return PowerSeries.from_polynomial({0: 1, n - 1: -r, n: -r}, cap)


def mobius_counts(denominator: PowerSeries) -> dict:
    """Moebius-inverted log-coefficients of a denominator polynomial.

    With eta_m the t^m coefficient of log(denominator), returns
    l[w] = -sum over j | w of mu(j) * eta_(w/j) / j for 1 <= w <= cap.
    Every l[w] must come out a non-negative integer; anything else means the
    series was not the denominator of a graded-algebra Hilbert series and is
    reported as a hard failure.
    """
    eta = denominator.log().coeffs
    counts = {}
    for w in range(1, denominator.cap + 1):
        total = Fraction(0)
        for j in divisors(w):
            mu = mobius(j)
            if mu:
                total -= Fraction(mu, j) * eta[w // j]
        if total.denominator != 1 or total < 0:
            raise ComputationFailure(f"summand count l[{w}] = {total} is not a non-negative integer")
        counts[w] = int(total)
    return counts


def sphere_summand_counts(n: int, r: int, cap: int = 20) -> dict:
    """Multiplicity l[w] of the sphere S^(w+1) among the homotopy summands.

    Keys run over loop degrees 1..cap; l[w] copies of the homotopy of
    S^(w+1) appear in the homotopy of the manifold once the torsion primes
    are inverted.
    """
    return mobius_counts(loop_generating_series(n, r, cap))


def pbw_series_check(lie_dims: dict, hilbert: list, cap: int) -> bool:
    """Does prod over w of (1 - t^w)^(-lie_dims[w]) match the word counts?

    ``hilbert`` lists dimensions by degree starting at 0.  The product is
    expanded through exp/log, exactly.
    """
    log_sum = [Fraction(0)] * (cap + 1)
    for w in range(1, cap + 1):
        d = lie_dims.get(w, 0)
        if not d:
            continue
        k = 1
        while w * k <= cap:
            log_sum[w * k] += Fraction(d, k)
            k += 1
    product = PowerSeries(log_sum, cap).exp()
    target = PowerSeries([Fraction(x) for x in hilbert[: cap + 1]], cap)
    return product == target
