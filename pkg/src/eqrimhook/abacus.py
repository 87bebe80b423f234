"""
Abacus diagrams on n runners.

Position p sits on runner ``p mod n`` in row ``p // n``.  A valid abacus has
every position below some floor beaded and finitely many beads above it.
Reading it back: the i-th largest of the k active beads has lam_i gaps below
it.
"""

from dataclasses import dataclass

from .partitions import Partition, beta_numbers, in_box


@dataclass(frozen=True)
class Abacus:
    """
    Every position < ``floor`` is beaded, ``floor`` itself is empty, and
    ``upper`` holds the beads above it.  ``k`` is the number of active beads.
    """

    n: int
    k: int
    floor: int
    upper: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one runner")
        if self.floor in self.upper or any(p < self.floor for p in self.upper):
            raise ValueError("beads in upper must lie strictly above the floor")
        if len(self.upper) > self.k:
            raise ValueError(
                "%d beads above the first gap but only %d active beads" % (len(self.upper), self.k)
            )

    @classmethod
    def from_beads(cls, n, k, beads, below):
        """Abacus with every position < ``below`` beaded plus ``beads``."""
        beads = {p for p in beads if p >= below}
        floor = below
        while floor in beads:
            beads.remove(floor)
            floor += 1
        return cls(n, k, floor, frozenset(beads))

    def is_beaded(self, p):
        return p < self.floor or p in self.upper

    def active_beads(self):
        """The k highest beads, largest first."""
        top = sorted(self.upper, reverse=True)
        top.extend(range(self.floor - 1, self.floor - 1 - (self.k - len(top)), -1))
        return top

    def runners(self):
        return [p % self.n for p in self.active_beads()]

    def translate(self, s):
        return Abacus(self.n, self.k, self.floor + s, frozenset(p + s for p in self.upper))

    def render(self, rows=None):
        """
        Rows of n positions, runner 0 on the left; beads in parentheses.
        By default shows one fully beaded row, then up to the highest bead.
        """
        if rows is None:
            lo = (self.floor // self.n) - 1
            hi = max(self.active_beads()) // self.n
            rows = range(lo, hi + 1)
        width = max(len(str(r * self.n + c)) for r in rows for c in range(self.n)) + 2
        lines = []
        for r in rows:
            cells = []
            for c in range(self.n):
                p = r * self.n + c
                cells.append(("(%d)" if self.is_beaded(p) else " %d ") % p)
            lines.append(" ".join(cell.rjust(width) for cell in cells))
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def abacus_from_partition(lam, k, n):
    """Beads on the beta-numbers lam_i + k - i and on every negative position."""
    return Abacus.from_beads(n, k, beta_numbers(lam, k), 0)


def abacus_to_partition(a):
    parts = []
    for b in a.active_beads():
        below = sum(1 for p in a.upper if p < b)
        gaps = b - a.floor - below if b >= a.floor else 0
        parts.append(gaps)
    return Partition(parts)


def is_flush(a):
    return all(a.is_beaded(p - a.n) for p in a.upper)


def make_flush(a):
    """Slide beads up their runners until flush; returns (abacus, moves)."""
    beads = set(a.upper)
    moves = 0
    moved = True
    while moved:
        moved = False
        for p in sorted(beads):
            target = p - a.n
            if target >= a.floor and target not in beads:
                beads.remove(p)
                beads.add(target)
                moves += 1
                moved = True
                break
    return Abacus.from_beads(a.n, a.k, beads, a.floor), moves


def canonical_abacus(nu, k, n):
    """
    The abacus of nu in P_kn with its active beads in row 0 and the last one
    at position n - 1.
    """
    nu = Partition(nu)
    if not in_box(nu, k, n):
        raise ValueError("%s is not in P_%d,%d" % (nu, k, n))
    shift = n - k - nu.part(1)
    return abacus_from_partition(nu, k, n).translate(shift)
