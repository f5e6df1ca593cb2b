"""Small exact number-theory helpers: factorization, divisors, Moebius."""

from functools import lru_cache


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple:
    """Prime factorization of n >= 1 as a sorted tuple of (prime, exponent)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list:
    """All positive divisors of n, sorted ascending."""
    divs = [1]
    for p, e in factorint(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """Moebius function: (-1)^#primes on squarefree n, else 0."""
    mu = 1
    for _p, e in factorint(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def prime_divisors(n: int) -> set:
    return {p for p, _e in factorint(n)}
