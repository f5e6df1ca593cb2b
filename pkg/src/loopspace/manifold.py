"""The (n, r, G) manifold model and its cohomology form algebras.

A closed (n-1)-connected manifold of dimension 2n+1 is determined, for
every computation done here, by n >= 2, the middle free rank r and the
finite torsion group G.  Homology follows the Poincare-duality pattern
(Z, Z^r + G, Z^r, Z in degrees 0, n, n+1, 2n+1); with field coefficients the
cohomology is a "form algebra": an identity, a vector space V, a top class z
and a bilinear pairing V x V -> k picking out the products that land on z.

The loop-space homology is the tensor algebra on generators u_1, u_1', ...,
u_r, u_r' (degrees n-1 and n) modulo the single commutator relation
sum_i (u_i u_i' - u_i' u_i); this module builds that presentation in the
canonical alphabet order u_1 < u_1' < ... < u_r < u_r'.
"""

from fractions import Fraction

from .abelian import FgAbelianGroup, FiniteAbelianGroup, GradedAbelianGroup
from .errors import SphereFallback
from .linalg import nullspace
from .rewrite import QuadraticPresentation, quadratic_weight_dims
from .words import Alphabet, Letter, NCPoly, Word


def parse_torsion(spec: str) -> FiniteAbelianGroup:
    """Parse the CLI torsion grammar: "-" for trivial, else "2,4,3"."""
    spec = spec.strip()
    if spec in ("-", ""):
        return FiniteAbelianGroup.trivial()
    orders = []
    for piece in spec.split(","):
        try:
            d = int(piece)
        except ValueError:
            raise ValueError(f"torsion order {piece!r} is not an integer") from None
        if d < 2:
            raise ValueError(f"torsion order {d} must be >= 2")
        orders.append(d)
    return FiniteAbelianGroup.from_cyclic_orders(orders)


class ManifoldModel:
    """n >= 2, middle rank r >= 0, and the middle torsion group."""

    __slots__ = ("n", "r", "torsion")

    def __init__(self, n: int, r: int, torsion=None):
        if n < 2:
            raise ValueError("n must be >= 2")
        if r < 0:
            raise ValueError("r must be >= 0")
        if torsion is None:
            torsion = FiniteAbelianGroup.trivial()
        elif not isinstance(torsion, FiniteAbelianGroup):
            torsion = FiniteAbelianGroup.from_cyclic_orders(torsion)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "torsion", torsion)

    def __setattr__(self, *a):
        raise AttributeError("ManifoldModel is immutable")

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def __repr__(self):
        return f"ManifoldModel(n={self.n}, r={self.r}, G={self.torsion})"


def homology(m: ManifoldModel) -> GradedAbelianGroup:
    n, r = m.n, m.r
    return GradedAbelianGroup(
        {
            0: FgAbelianGroup(1),
            n: FgAbelianGroup(r, m.torsion),
            n + 1: FgAbelianGroup(r),
            2 * n + 1: FgAbelianGroup(1),
        }
    )


def cohomology(m: ManifoldModel) -> GradedAbelianGroup:
    """Universal coefficients: torsion climbs one degree above homology."""
    n, r = m.n, m.r
    return GradedAbelianGroup(
        {
            0: FgAbelianGroup(1),
            n: FgAbelianGroup(r),
            n + 1: FgAbelianGroup(r, m.torsion),
            2 * n + 1: FgAbelianGroup(1),
        }
    )


def sigma_primes(m: ManifoldModel) -> set:
    """Primes p with G tensor Z/p nonzero; these get inverted downstream."""
    return m.torsion.primes()


def coefficient_ring_label(m: ManifoldModel) -> str:
    primes = sorted(sigma_primes(m))
    if not primes:
        return "Z"
    return "Z[" + ",".join(f"1/{p}" for p in primes) + "]"


# ---------------------------------------------------------------------------
# loop-homology presentation
# ---------------------------------------------------------------------------

def loop_alphabet(n: int, r: int) -> Alphabet:
    """u_1 < u_1' < u_2 < u_2' < ... with degrees n-1 and n."""
    letters = []
    for i in range(1, r + 1):
        letters.append(Letter(2 * i - 1, n - 1, f"u{i}"))
        letters.append(Letter(2 * i, n, f"u{i}'"))
    return Alphabet(letters)


def loop_relation(alphabet: Alphabet) -> NCPoly:
    """sum_i (u_i u_i' - u_i' u_i) over the canonical alphabet."""
    terms = {}
    for i in range(1, alphabet.size // 2 + 1):
        a, b = 2 * i - 1, 2 * i
        terms[Word(alphabet, (a, b))] = 1
        terms[Word(alphabet, (b, a))] = -1
    return NCPoly(alphabet, terms)


def loop_presentation(m: ManifoldModel, order: str = "deglen_revlex") -> QuadraticPresentation:
    """The canonical single-relation presentation of the loop homology.

    Fails over to the sphere answer for r = 0: such a manifold is S^(2n+1)
    once the torsion primes are inverted, and has no loop presentation.
    """
    if m.r < 1:
        raise SphereFallback(m.n, sigma_primes(m))
    alphabet = loop_alphabet(m.n, m.r)
    return QuadraticPresentation(alphabet, loop_relation(alphabet), order=order)


# ---------------------------------------------------------------------------
# form algebras
# ---------------------------------------------------------------------------

class FormAlgebra:
    """k + V + k z with products of V landing on z through a bilinear form.

    ``vdims`` lists (degree, dim) blocks of V in basis order; ``matrix`` is
    the full Gram matrix of the pairing on that basis; ``char`` is 0 for the
    rationals or a prime p.  The pairing must be graded-symmetric.
    """

    def __init__(self, vdims, matrix, char: int = 0):
        self.vdims = tuple((int(d), int(k)) for d, k in vdims)
        self.char = char
        dim = sum(k for _d, k in self.vdims)
        matrix = [list(row) for row in matrix]
        if len(matrix) != dim or any(len(row) != dim for row in matrix):
            raise ValueError(f"form matrix must be {dim}x{dim}")
        if char:
            matrix = [[x % char for x in row] for row in matrix]
        else:
            matrix = [[Fraction(x) for x in row] for row in matrix]
        degrees = []
        for d, k in self.vdims:
            degrees.extend([d] * k)
        for i in range(dim):
            for j in range(dim):
                sign = -1 if (degrees[i] * degrees[j]) % 2 else 1
                lhs = matrix[i][j]
                rhs = sign * matrix[j][i]
                if char:
                    rhs %= char
                if lhs != rhs:
                    raise ValueError("pairing is not graded-symmetric")
        self.matrix = tuple(tuple(row) for row in matrix)
        self.degrees = tuple(degrees)

    @property
    def dim_v(self) -> int:
        return len(self.matrix)

    def pairing(self, v, w):
        """Evaluate the form on two coordinate vectors."""
        total = 0
        for i, a in enumerate(v):
            if not a:
                continue
            row = self.matrix[i]
            for j, b in enumerate(w):
                if b:
                    total += a * row[j] * b
        return total % self.char if self.char else total

    def __repr__(self):
        return f"FormAlgebra(dim V = {self.dim_v}, char {self.char})"


def form_algebra_of(m: ManifoldModel, p: int = 0) -> FormAlgebra:
    """Cohomology form algebra of the manifold with Z/p (or Q) coefficients.

    V has dimension s in degrees n and n+1, where s = r + dim(G tensor Z/p);
    the pairing is the hyperbolic one between the two blocks.
    """
    s = m.r + (m.torsion.tensor_dim_mod(p) if p else 0)
    dim = 2 * s
    matrix = [[0] * dim for _ in range(dim)]
    for i in range(s):
        matrix[i][s + i] = 1
        matrix[s + i][i] = 1
    return FormAlgebra(((m.n, s), (m.n + 1, s)), matrix, char=p)


def _candidate_vectors(form: FormAlgebra):
    dim = form.dim_v
    one = 1 if form.char else Fraction(1)
    for i in range(dim):
        v = [0] * dim
        v[i] = one
        yield tuple(v)
    for i in range(dim):
        for j in range(i + 1, dim):
            for sign in (one, -one):
                v = [0] * dim
                v[i] = one
                v[j] = sign % form.char if form.char else sign
                yield tuple(v)


def is_quadratic(form: FormAlgebra) -> bool:
    """Search for a hyperbolic pair v1, v2 (isotropic with pairing 1).

    The search runs over the basis and two-term basis combinations; that is
    enough for every pairing coming from the manifolds handled here.  A form
    algebra that admits such a pair is the quadratic algebra on V with
    relations the kernel of the pairing; without one, products of length 3
    can survive and the algebra is not quadratic.  An empty V is vacuously
    quadratic.
    """
    if form.dim_v == 0:
        return True
    candidates = list(_candidate_vectors(form))
    isotropic = [v for v in candidates if form.pairing(v, v) == 0]
    for v in isotropic:
        for w in isotropic:
            if form.pairing(v, w) != 0:
                return True
    return False


def kernel_relations(form: FormAlgebra):
    """Exact basis of Ker(V tensor V -> k), in dim(V)^2 coordinates."""
    dim = form.dim_v
    row = [form.matrix[i][j] for i in range(dim) for j in range(dim)]
    rows = [row] if any(x != 0 for x in row) else []
    return nullspace(rows, dim * dim, form.char)


def weight3_dim(dim_v: int, relation_vectors, char: int = 0) -> int:
    """Dimension of weight-3 survivors of the quadratic algebra on V, R.

    Zero certifies that nothing lives above the form-algebra range; the
    all-but-one-square kernel example keeps its cube and returns >= 1.
    """
    return quadratic_weight_dims(dim_v, relation_vectors, 3, char)[3]
