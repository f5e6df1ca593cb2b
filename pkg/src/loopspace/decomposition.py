"""Symbolic loop-space decompositions and their rational Poincare series.

The loop space of an (n, r, G) manifold with r >= 1 splits as

    Loop(S^n) x Loop(S^(n+1)) x Loop(Z v (Z ^ Loop(S^n x S^(n+1))))

with Z a wedge of r-1 copies of S^n, r-1 copies of S^(n+1) and a Moore
space for G; after inverting the torsion primes it also splits as a weak
product of looped spheres with multiplicities given by the Moebius counts.
This module builds those expressions as symbolic trees, computes rational
Poincare series by structural rules, homology of the splitting fibre, and
the elliptic/hyperbolic classification.

Space expressions serialize to a stable text form ("L(S2) x L(S3) x ...")
and to a JSON tree; both are meant for golden tests and reports.
"""

from dataclasses import dataclass

from .abelian import FgAbelianGroup, FiniteAbelianGroup, GradedAbelianGroup
from .errors import SphereFallback
from .manifold import ManifoldModel, sigma_primes
from .series import PowerSeries, sphere_summand_counts


class SpaceExpr:
    """Base of the symbolic homotopy-type expression tree."""

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return serialize(self)

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class Point(SpaceExpr):
    pass


class Sphere(SpaceExpr):
    def __init__(self, m: int):
        if m < 1:
            raise ValueError("sphere dimension must be >= 1")
        self.m = m

    def _key(self):
        return (self.m,)


class Moore(SpaceExpr):
    """M(G, n): reduced homology G concentrated in degree n >= 2."""

    def __init__(self, group: FiniteAbelianGroup, degree: int):
        if degree < 2:
            raise ValueError("Moore space degree must be >= 2")
        if group.is_trivial():
            raise ValueError("Moore space needs a nontrivial group (use Point)")
        self.group = group
        self.degree = degree

    def _key(self):
        return (self.group, self.degree)


class Wedge(SpaceExpr):
    def __init__(self, children):
        self.children = tuple(children)

    def _key(self):
        return self.children


class Product(SpaceExpr):
    def __init__(self, children):
        self.children = tuple(children)

    def _key(self):
        return self.children


class Smash(SpaceExpr):
    def __init__(self, children):
        self.children = tuple(children)

    def _key(self):
        return self.children


class HalfSmash(SpaceExpr):
    """X |x Y = (X_+) ^ Y; splits as Y v (X ^ Y) once Y is a suspension."""

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _key(self):
        return (self.left, self.right)


class Loop(SpaceExpr):
    def __init__(self, child):
        self.child = child

    def _key(self):
        return (self.child,)


class LocalizedAt(SpaceExpr):
    """Child with the listed primes inverted."""

    def __init__(self, primes, child):
        self.primes = tuple(sorted(primes))
        self.child = child

    def _key(self):
        return (self.primes, self.child)


class WeakProduct(SpaceExpr):
    """Homotopy colimit of finite sub-products of (expr, multiplicity) pairs."""

    def __init__(self, factors):
        self.factors = tuple((e, int(m)) for e, m in factors)

    def _key(self):
        return self.factors


# ---- smart constructors (unit laws only) -----------------------------------

def wedge(children) -> SpaceExpr:
    flat = []
    for c in children:
        if isinstance(c, Point):
            continue
        if isinstance(c, Wedge):
            flat.extend(c.children)
        else:
            flat.append(c)
    if not flat:
        return Point()
    if len(flat) == 1:
        return flat[0]
    return Wedge(flat)


def product(children) -> SpaceExpr:
    flat = []
    for c in children:
        if isinstance(c, Point):
            continue
        if isinstance(c, Product):
            flat.extend(c.children)
        else:
            flat.append(c)
    if not flat:
        return Point()
    if len(flat) == 1:
        return flat[0]
    return Product(flat)


def smash(children) -> SpaceExpr:
    flat = []
    for c in children:
        if isinstance(c, Point):
            return Point()  # smashing with a point collapses everything
        if isinstance(c, Smash):
            flat.extend(c.children)
        else:
            flat.append(c)
    if not flat:
        return Point()
    if len(flat) == 1:
        return flat[0]
    return Smash(flat)


def loop(child) -> SpaceExpr:
    if isinstance(child, Point):
        return Point()
    return Loop(child)


def localized(primes, child) -> SpaceExpr:
    primes = sorted(set(primes))
    if not primes:
        return child
    return LocalizedAt(primes, child)


def is_suspension(expr: SpaceExpr) -> bool:
    """Syntactic sufficient condition for being a suspension."""
    if isinstance(expr, Sphere):
        return True
    if isinstance(expr, Moore):
        return expr.degree >= 2
    if isinstance(expr, Wedge):
        return all(is_suspension(c) for c in expr.children)
    if isinstance(expr, Smash):
        return any(is_suspension(c) for c in expr.children)
    if isinstance(expr, LocalizedAt):
        return is_suspension(expr.child)
    return False


def expand_half_smash(expr: SpaceExpr) -> SpaceExpr:
    """Rewrite X |x Y -> Y v (X ^ Y) throughout, where Y is a suspension."""
    if isinstance(expr, HalfSmash):
        left = expand_half_smash(expr.left)
        right = expand_half_smash(expr.right)
        if is_suspension(right):
            return wedge([right, smash([left, right])])
        return HalfSmash(left, right)
    if isinstance(expr, (Wedge, Product, Smash)):
        return type(expr)(tuple(expand_half_smash(c) for c in expr.children))
    if isinstance(expr, Loop):
        return Loop(expand_half_smash(expr.child))
    if isinstance(expr, LocalizedAt):
        return LocalizedAt(expr.primes, expand_half_smash(expr.child))
    if isinstance(expr, WeakProduct):
        return WeakProduct(tuple((expand_half_smash(e), m) for e, m in expr.factors))
    return expr


# ---- serialization ----------------------------------------------------------

def serialize(expr: SpaceExpr) -> str:
    """Deterministic text form: L(S2) x L(S3) x L(W(S2, Sm(S2, L(S2 x S3))))."""
    if isinstance(expr, Point):
        return "pt"
    if isinstance(expr, Sphere):
        return f"S{expr.m}"
    if isinstance(expr, Moore):
        return f"M({expr.group},{expr.degree})"
    if isinstance(expr, Wedge):
        return "W(" + ", ".join(serialize(c) for c in expr.children) + ")"
    if isinstance(expr, Product):
        return " x ".join(serialize(c) for c in expr.children)
    if isinstance(expr, Smash):
        return "Sm(" + ", ".join(serialize(c) for c in expr.children) + ")"
    if isinstance(expr, HalfSmash):
        return f"HSm({serialize(expr.left)}, {serialize(expr.right)})"
    if isinstance(expr, Loop):
        return f"L({serialize(expr.child)})"
    if isinstance(expr, LocalizedAt):
        inner = serialize(expr.child)
        if isinstance(expr.child, Product):
            inner = f"({inner})"
        return inner + "[" + ",".join(f"1/{p}" for p in expr.primes) + "]"
    if isinstance(expr, WeakProduct):
        return "PI[" + ", ".join(f"{serialize(e)}^{m}" for e, m in expr.factors) + "]"
    raise TypeError(f"cannot serialize {expr!r}")


def to_dict(expr: SpaceExpr) -> dict:
    if isinstance(expr, Point):
        return {"kind": "point"}
    if isinstance(expr, Sphere):
        return {"kind": "sphere", "dim": expr.m}
    if isinstance(expr, Moore):
        return {
            "kind": "moore",
            "group": list(expr.group.invariant_factors),
            "degree": expr.degree,
        }
    if isinstance(expr, (Wedge, Product, Smash)):
        kind = {"Wedge": "wedge", "Product": "product", "Smash": "smash"}[type(expr).__name__]
        return {"kind": kind, "children": [to_dict(c) for c in expr.children]}
    if isinstance(expr, HalfSmash):
        return {"kind": "half_smash", "left": to_dict(expr.left), "right": to_dict(expr.right)}
    if isinstance(expr, Loop):
        return {"kind": "loop", "child": to_dict(expr.child)}
    if isinstance(expr, LocalizedAt):
        return {"kind": "localized", "invert": list(expr.primes), "child": to_dict(expr.child)}
    if isinstance(expr, WeakProduct):
        return {
            "kind": "weak_product",
            "factors": [{"space": to_dict(e), "mult": m} for e, m in expr.factors],
        }
    raise TypeError(f"cannot serialize {expr!r}")


def from_dict(doc: dict) -> SpaceExpr:
    kind = doc["kind"]
    if kind == "point":
        return Point()
    if kind == "sphere":
        return Sphere(doc["dim"])
    if kind == "moore":
        return Moore(FiniteAbelianGroup(tuple(doc["group"])), doc["degree"])
    if kind == "wedge":
        return Wedge(tuple(from_dict(c) for c in doc["children"]))
    if kind == "product":
        return Product(tuple(from_dict(c) for c in doc["children"]))
    if kind == "smash":
        return Smash(tuple(from_dict(c) for c in doc["children"]))
    if kind == "half_smash":
        return HalfSmash(from_dict(doc["left"]), from_dict(doc["right"]))
    if kind == "loop":
        return Loop(from_dict(doc["child"]))
    if kind == "localized":
        return LocalizedAt(doc["invert"], from_dict(doc["child"]))
    if kind == "weak_product":
        return WeakProduct(tuple((from_dict(f["space"]), f["mult"]) for f in doc["factors"]))
    raise ValueError(f"unknown node kind {kind!r}")


# ---------------------------------------------------------------------------
# the decomposition of Loop(M)
# ---------------------------------------------------------------------------

def torsion_wedge(m: ManifoldModel) -> SpaceExpr:
    """Z: r-1 copies of S^n and S^(n+1) plus the Moore part of G."""
    parts = [Sphere(m.n)] * (m.r - 1) + [Sphere(m.n + 1)] * (m.r - 1)
    if not m.torsion.is_trivial():
        parts.append(Moore(m.torsion, m.n))
    return wedge(parts)


def loop_decomposition(m: ManifoldModel) -> SpaceExpr:
    """The integral splitting of Loop(M) for r >= 1.

    For r = 0 there is no splitting to do: the manifold is an odd sphere
    after inverting its torsion primes, and that localized sphere is
    returned instead.
    """
    if m.r < 1:
        return localized(sigma_primes(m), Sphere(m.dim))
    z = torsion_wedge(m)
    inner = loop(product([Sphere(m.n), Sphere(m.n + 1)]))
    return product(
        [
            loop(Sphere(m.n)),
            loop(Sphere(m.n + 1)),
            loop(wedge([z, smash([z, inner])])),
        ]
    )


def weak_product_decomposition(m: ManifoldModel, cap: int) -> WeakProduct:
    """Looped spheres with Moebius multiplicities, localized off the torsion.

    Factor w is Loop(S^(w+1)) with multiplicity l[w], for loop degrees
    w <= cap.  For r = 0 the single factor is the looped top sphere.
    """
    primes = sigma_primes(m)
    if m.r < 1:
        return WeakProduct([(localized(primes, loop(Sphere(m.dim))), 1)])
    counts = sphere_summand_counts(m.n, m.r, cap)
    factors = []
    for w in range(1, cap + 1):
        if counts[w]:
            factors.append((localized(primes, loop(Sphere(w + 1))), counts[w]))
    return WeakProduct(factors)


def polynomial_ring_dims(n: int, cap: int) -> list:
    """Graded dimensions of Z[u, v] with |u| = n-1, |v| = n."""
    dims = [0] * (cap + 1)
    for a in range(cap // (n - 1) + 1):
        base = a * (n - 1)
        if base > cap:
            break
        for b in range((cap - base) // n + 1):
            dims[base + b * n] += 1
    return dims


def fiber_homology(m: ManifoldModel, cap: int) -> GradedAbelianGroup:
    """Reduced homology of the splitting fibre through degree cap.

    The fibre is (a half-smash over) Z[u,v] tensor the reduced homology of
    Z, so its homology is the graded convolution of the polynomial-ring
    dimensions with (Z^(r-1) + G in degree n, Z^(r-1) in degree n+1).
    """
    if m.r < 1:
        raise SphereFallback(m.n, sigma_primes(m))
    poly = polynomial_ring_dims(m.n, cap)
    z_parts = {
        m.n: FgAbelianGroup(m.r - 1, m.torsion),
        m.n + 1: FgAbelianGroup(m.r - 1),
    }
    acc = {}
    for d, c in enumerate(poly):
        if not c:
            continue
        for e, g in z_parts.items():
            if d + e > cap or g.is_zero():
                continue
            chunk = g.power(c)
            acc[d + e] = acc[d + e].direct_sum(chunk) if d + e in acc else chunk
    return GradedAbelianGroup(acc)


# ---------------------------------------------------------------------------
# rational Poincare series
# ---------------------------------------------------------------------------

def rational_series(expr: SpaceExpr, cap: int) -> PowerSeries:
    """Poincare series of the rational homology, exactly, through t^cap."""
    if isinstance(expr, Point):
        return PowerSeries.one(cap)
    if isinstance(expr, Sphere):
        return PowerSeries.from_polynomial({0: 1, expr.m: 1}, cap)
    if isinstance(expr, Moore):
        return PowerSeries.one(cap)  # rationally trivial
    if isinstance(expr, Wedge):
        out = PowerSeries.one(cap)
        for c in expr.children:
            out = out + (rational_series(c, cap) - PowerSeries.one(cap))
        return out
    if isinstance(expr, Product):
        out = PowerSeries.one(cap)
        for c in expr.children:
            out = out * rational_series(c, cap)
        return out
    if isinstance(expr, Smash):
        out = PowerSeries.one(cap)
        for c in expr.children:
            out = out * (rational_series(c, cap) - PowerSeries.one(cap))
        return out + PowerSeries.one(cap)
    if isinstance(expr, HalfSmash):
        full = rational_series(expr.left, cap)
        reduced = rational_series(expr.right, cap) - PowerSeries.one(cap)
        return full * reduced + PowerSeries.one(cap)
    if isinstance(expr, LocalizedAt):
        return rational_series(expr.child, cap)
    if isinstance(expr, WeakProduct):
        out = PowerSeries.one(cap)
        for e, mult in expr.factors:
            out = out * rational_series(e, cap).pow_int(mult)
        return out
    if isinstance(expr, Loop):
        return _loop_series(expr.child, cap)
    raise TypeError(f"no series rule for {expr!r}")


def _loop_series(space: SpaceExpr, cap: int) -> PowerSeries:
    if isinstance(space, Point):
        return PowerSeries.one(cap)
    if isinstance(space, Sphere):
        m = space.m
        if m < 2:
            raise ValueError("loop space rules need a simply connected sphere (dim >= 2)")
        if m % 2:  # odd sphere: free graded-commutative on one even class
            return PowerSeries.from_polynomial({0: 1, m - 1: -1}, cap).inverse()
        numer = PowerSeries.from_polynomial({0: 1, m - 1: 1}, cap)
        denom = PowerSeries.from_polynomial({0: 1, 2 * m - 2: -1}, cap)
        return numer * denom.inverse()
    if isinstance(space, Product):
        out = PowerSeries.one(cap)
        for c in space.children:
            out = out * _loop_series(c, cap)
        return out
    if isinstance(space, LocalizedAt):
        return _loop_series(space.child, cap)
    if isinstance(space, (Wedge, Smash, Moore)):
        # suspension-like: tensor algebra on the desuspended reduced homology
        reduced = rational_series(space, cap + 1) - PowerSeries.one(cap + 1)
        coeffs = reduced.coefficients()
        if coeffs[0] != 0 or coeffs[1] != 0:
            raise ValueError(f"loop of a non-simply-connected space {space}")
        shifted = PowerSeries(coeffs[1:], cap)
        return (PowerSeries.one(cap) - shifted).inverse()
    raise ValueError(f"unsupported loop argument {space}")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationFlags:
    rational_type: str            # "elliptic" or "hyperbolic"
    reason: str
    no_exponent: bool
    no_exponent_note: str
    retract: str | None

    def to_dict(self) -> dict:
        return {
            "rational_type": self.rational_type,
            "reason": self.reason,
            "no_exponent": self.no_exponent,
            "no_exponent_note": self.no_exponent_note,
            "retract": self.retract,
        }


def classify(m: ManifoldModel) -> ClassificationFlags:
    """Elliptic iff r <= 1; for r >= 2 no homotopy exponent at any prime."""
    n = m.n
    if m.r == 0:
        return ClassificationFlags(
            rational_type="elliptic",
            reason=f"rational cohomology of S^{m.dim}",
            no_exponent=False,
            no_exponent_note="rationally elliptic; exponent question deferred to sphere literature",
            retract=None,
        )
    if m.r == 1:
        return ClassificationFlags(
            rational_type="elliptic",
            reason=f"rational cohomology of S^{n} x S^{n + 1}",
            no_exponent=False,
            no_exponent_note="rationally elliptic; no non-exponent claim",
            retract=None,
        )
    witness = serialize(loop(wedge([Sphere(n), Sphere(n + 1)])))
    primes = sorted(sigma_primes(m))
    note = (
        "no homotopy exponent at any prime: "
        f"{witness} is a retract of the loop space, and away from {primes or '{}'} "
        "sphere summands of unbounded dimension already appear"
    )
    return ClassificationFlags(
        rational_type="hyperbolic",
        reason="middle rank r >= 2 forces exponential homotopy growth",
        no_exponent=True,
        no_exponent_note=note,
        retract=witness,
    )


@dataclass(frozen=True)
class DecompositionReport:
    main: SpaceExpr
    weak_product: WeakProduct
    fiber: GradedAbelianGroup | None
    flags: ClassificationFlags


def decomposition_report(m: ManifoldModel, cap: int) -> DecompositionReport:
    return DecompositionReport(
        main=loop_decomposition(m),
        weak_product=weak_product_decomposition(m, cap),
        fiber=fiber_homology(m, cap) if m.r >= 1 else None,
        flags=classify(m),
    )
