"""Sphere homotopy-group table and assembly of manifold homotopy groups.

The bundled TSV ships pi_k(S^m) for 2 <= m <= 8 over the classical Toda
range; below the diagonal the groups are zero and on it they are Z, so those
never need table rows.  Queries outside the loaded range raise instead of
guessing.  Homotopy groups of an (n, r, G) manifold are assembled, away from
the primes dividing |G|, as the direct sum over sphere summands S^(w+1) with
the Moebius multiplicities l[w].
"""

import os
from dataclasses import dataclass
from importlib import resources

from .abelian import FgAbelianGroup, FiniteAbelianGroup
from .errors import TableFormatError, TableRangeError
from .manifold import ManifoldModel, sigma_primes
from .series import sphere_summand_counts

ENV_TABLE_PATH = "LOOPSPACE_SPHERE_TABLE"


class SphereTable:
    """Validated map (k, m) -> pi_k(S^m), with per-sphere coverage bounds."""

    def __init__(self, entries, provenance):
        self.entries = dict(entries)
        self.provenance = dict(provenance)
        ranges = {}
        for k, m in self.entries:
            lo, hi = ranges.get(m, (k, k))
            ranges[m] = (min(lo, k), max(hi, k))
        for m, (lo, hi) in ranges.items():
            for k in range(lo, hi + 1):
                if (k, m) not in self.entries:
                    raise TableFormatError(f"gap in table: pi_{k}(S^{m}) missing below pi_{hi}(S^{m})")
        self.ranges = ranges

    def covers(self, k: int, m: int) -> bool:
        if k <= m:
            return True
        lo, hi = self.ranges.get(m, (m, m))
        return lo <= k <= hi

    def pi(self, k: int, m: int) -> FgAbelianGroup:
        """pi_k(S^m); zero below the diagonal, Z on it, table above."""
        if m < 1 or k < 0:
            raise ValueError("need m >= 1 and k >= 0")
        if k < m:
            return FgAbelianGroup.zero()
        if k == m:
            return FgAbelianGroup(1)
        entry = self.entries.get((k, m))
        if entry is None:
            raise TableRangeError([(k, m)])
        return entry


def load_table(text: str) -> SphereTable:
    """Parse TSV lines "k m free_rank torsion [source]"; '#' starts a comment.

    Rejects, with the offending line number: malformed fields, duplicate
    entries, nonzero groups below the diagonal and non-Z diagonal entries.
    """
    entries = {}
    provenance = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (4, 5):
            raise TableFormatError(f"line {lineno}: expected 4 or 5 fields, got {len(fields)}")
        try:
            k, m, rank = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise TableFormatError(f"line {lineno}: k, m, free_rank must be integers") from None
        if m < 1 or k < 0 or rank < 0:
            raise TableFormatError(f"line {lineno}: need m >= 1, k >= 0, free_rank >= 0")
        if fields[3] == "-":
            torsion = FiniteAbelianGroup.trivial()
        else:
            try:
                orders = [int(x) for x in fields[3].split(",")]
            except ValueError:
                raise TableFormatError(f"line {lineno}: bad torsion list {fields[3]!r}") from None
            if any(o < 2 for o in orders):
                raise TableFormatError(f"line {lineno}: torsion orders must be >= 2")
            torsion = FiniteAbelianGroup.from_cyclic_orders(orders)
        group = FgAbelianGroup(rank, torsion)
        if k < m and not group.is_zero():
            raise TableFormatError(f"line {lineno}: pi_{k}(S^{m}) must be zero below the diagonal")
        if k == m and group != FgAbelianGroup(1):
            raise TableFormatError(f"line {lineno}: pi_{m}(S^{m}) must be Z")
        if k < m:
            continue  # implied zero; do not store
        if (k, m) in entries:
            raise TableFormatError(f"line {lineno}: duplicate entry for pi_{k}(S^{m})")
        entries[(k, m)] = group
        provenance[(k, m)] = fields[4] if len(fields) == 5 else ""
    return SphereTable(entries, provenance)


def bundled_table_text() -> str:
    return resources.files("loopspace.data").joinpath("sphere_table.tsv").read_text()


def load_table_file(path: str | None = None) -> SphereTable:
    """Table from an explicit path, the environment override, or the bundle."""
    path = path or os.environ.get(ENV_TABLE_PATH)
    if path:
        with open(path, encoding="utf-8") as fh:
            return load_table(fh.read())
    return load_table(bundled_table_text())


def localize(group: FgAbelianGroup, invert) -> FgAbelianGroup:
    """Invert a set of primes: p-torsion dies for p in the set, rank survives."""
    return group.localize(invert)


@dataclass(frozen=True)
class HomotopyAnswer:
    k: int
    inverted_primes: tuple
    summands: tuple   # (sphere dim m, multiplicity, localized pi_k(S^m))
    total: FgAbelianGroup

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "inverted_primes": list(self.inverted_primes),
            "summands": [
                {"m": m, "mult": mult, "group": str(g)} for m, mult, g in self.summands
            ],
            "total": str(self.total),
        }

    def summand_text(self) -> str:
        """Human form, one term per sphere summand: "Z + Z", "Z^2", "0"."""
        if not self.summands:
            return "0"
        return " + ".join(str(g.power(mult)) for _m, mult, g in self.summands)


def homotopy_of_manifold(m: ManifoldModel, k: int, table: SphereTable) -> HomotopyAnswer:
    """pi_k of the manifold, away from its torsion primes.

    Sums localize(pi_k(S^(w+1))) with multiplicity l[w]; only spheres of
    dimension <= k can contribute, so the sum is finite.  If any needed
    group is outside the table range the query fails listing every missing
    (k, m) pair; nothing is silently dropped.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    primes = sigma_primes(m)
    if m.r == 0:
        needed = [(m.dim, 1)]
    else:
        counts = sphere_summand_counts(m.n, m.r, max(k - 1, 1)) if k >= 2 else {}
        needed = [(w + 1, counts[w]) for w in sorted(counts) if counts[w] and w + 1 <= k]
    missing = [(k, sphere) for sphere, _mult in needed if not table.covers(k, sphere)]
    if missing:
        raise TableRangeError(missing)
    summands = []
    total = FgAbelianGroup.zero()
    for sphere, mult in needed:
        g = localize(table.pi(k, sphere), primes)
        if m.r == 0 and g.is_zero():
            continue
        summands.append((sphere, mult, g))
        total = total.direct_sum(g.power(mult))
    return HomotopyAnswer(
        k=k,
        inverted_primes=tuple(sorted(primes)),
        summands=tuple(summands),
        total=total,
    )


def exponent_report(m: ManifoldModel) -> dict:
    """Homotopy-exponent verdict; depends only on (n, r) away from torsion."""
    from .decomposition import classify  # local import to avoid a cycle

    flags = classify(m)
    return {
        "n": m.n,
        "r": m.r,
        "rational_type": flags.rational_type,
        "verdict": flags.no_exponent_note,
        "retract": flags.retract,
        "note": (
            "away from the inverted primes the homotopy groups are a function of "
            "(n, r) only"
        ),
    }
