"""
Partitions, the k x (n-k) box, covers, upward steps and n-rim hook stripping.

A cover ``mu -> lam`` always means that ``mu`` is ``lam`` with one box added.
"""

import itertools
from dataclasses import dataclass

from .polyring import TPoly


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed)."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be nonnegative: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def length(self):
        return len(self)

    def part(self, i):
        """1-based part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, k):
        if len(self) > k:
            raise ValueError("%s has more than %d parts" % (self, k))
        return tuple(self) + (0,) * (k - len(self))

    def contains(self, other):
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self):
        return "Partition(%s)" % (tuple(self),)

    def latex(self):
        return "(%s)" % ",".join(map(str, self)) if self else r"\emptyset"


EMPTY = Partition()


def parse_partition(text):
    """Parse ``2,1`` style input; ``0`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return EMPTY
    try:
        parts = [int(p) for p in text.strip("()[]").split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError("cannot parse partition %r" % text) from None
    return Partition(parts)


def in_box(lam, k, n):
    """True iff lam has at most k parts, each at most n - k."""
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def partitions_in_box(k, n):
    """All partitions in P_kn, ordered by size then reverse-lex."""
    out = []
    for parts in itertools.combinations_with_replacement(range(n - k, -1, -1), k):
        out.append(Partition(parts))
    return sorted(out, key=lambda p: (p.size, tuple(-x for x in p)))


def partitions_with_rows(k, max_size, max_part=None):
    """All partitions with at most k rows and at most max_size boxes."""
    out = []

    def rec(prefix, remaining, cap):
        out.append(Partition(prefix))
        if len(prefix) == k:
            return
        for p in range(min(cap, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], max_size, max_size if max_part is None else max_part)
    return sorted(out, key=lambda p: (p.size, tuple(-x for x in p)))


def partitions_of(m, k):
    """Partitions of m with at most k rows, largest first."""
    out = []

    def rec(prefix, remaining, cap):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == k:
            return
        for p in range(min(cap, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], m, m)
    return out


def covers(lam, k, N):
    """All mu in P_kN obtained from lam by adding one box."""
    lam = Partition(lam)
    parts = list(lam.padded(k)) if len(lam) <= k else None
    if parts is None:
        return []
    out = []
    for i in range(k):
        if (i == 0 or parts[i - 1] > parts[i]) and parts[i] + 1 <= N - k:
            new = list(parts)
            new[i] += 1
            out.append(Partition(new))
    return out


def removals(lam):
    """All partitions obtained from lam by removing one box."""
    lam = Partition(lam)
    out = []
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            new = list(lam)
            new[i] -= 1
            out.append(Partition(new))
    return out


def upward_steps(lam, k, n):
    """
    Indices of the k upward steps of lam's boundary path in the k x (n-k)
    box, southwest first.  The j-th one is lam_{k-j+1} + j.
    """
    parts = Partition(lam).padded(k)
    return [parts[k - j] + j for j in range(1, k + 1)]


def equiv_weight(lam, k, n):
    """Diagonal Pieri coefficient: sum of t_i over upward steps minus t_1..t_k."""
    coeffs = {}
    for i in upward_steps(lam, k, n):
        coeffs[i] = coeffs.get(i, 0) + 1
    for j in range(1, k + 1):
        coeffs[j] = coeffs.get(j, 0) - 1
    return TPoly.linear(coeffs)


@dataclass(frozen=True)
class RimHookReduction:
    core: Partition
    d: int
    heights: tuple
    sign: int


def beta_numbers(lam, k):
    parts = Partition(lam).padded(k)
    return [parts[i] + k - 1 - i for i in range(k)]


def from_beta_numbers(betas):
    betas = sorted(betas, reverse=True)
    k = len(betas)
    return Partition(b - (k - 1 - i) for i, b in enumerate(betas))


def strip_rim_hooks(gamma, n, k, rng=None):
    """
    Remove n-rim hooks from gamma until an n-core remains.

    Works on the k beta-numbers of gamma: removing a hook lowers one of them
    by n onto a free nonnegative slot, and the hook height is one more than
    the number of beta-numbers jumped over.  By default the largest movable
    beta-number goes first; pass ``rng`` to pick at random instead.
    """
    gamma = Partition(gamma)
    if len(gamma) > k:
        raise ValueError("%s has more than %d rows" % (gamma, k))
    betas = set(beta_numbers(gamma, k))
    heights = []
    while True:
        movable = [b for b in betas if b - n >= 0 and b - n not in betas]
        if not movable:
            break
        b = rng.choice(sorted(movable)) if rng is not None else max(movable)
        jumped = sum(1 for c in betas if b - n < c < b)
        heights.append(1 + jumped)
        betas.remove(b)
        betas.add(b - n)
    sign = 1
    for h in heights:
        if (h - k) % 2:
            sign = -sign
    return RimHookReduction(from_beta_numbers(betas), len(heights), tuple(heights), sign)


def rim_hook_reduce(gamma, n, k):
    """
    n-core reduction of gamma, or None when the n-core does not fit in the
    k x (n-k) box (the class then maps to zero).
    """
    red = strip_rim_hooks(gamma, n, k)
    if not in_box(red.core, k, n):
        return None
    return red


def is_core(lam, n, k=None):
    k = len(lam) if k is None else k
    return strip_rim_hooks(lam, n, max(k, len(lam))).d == 0


def bar(lam, k, n):
    """lam with its first row n-k stretched to n-k+1."""
    lam = Partition(lam)
    if not in_box(lam, k, n) or lam.part(1) != n - k:
        raise ValueError("bar needs lam in P_%d,%d with first row %d, got %s" % (k, n, n - k, lam))
    return Partition((n - k + 1,) + tuple(lam[1:]))


def lambda_minus(lam, k, n):
    """lam with an (n-1)-rim hook removed: (lam_2-1, ..., lam_k-1), or None."""
    lam = Partition(lam)
    parts = lam.padded(k)
    if k == 0 or parts[0] != n - k or parts[-1] < 1:
        return None
    return Partition(p - 1 for p in parts[1:])


def nu_plus(nu, k, n):
    """The partition whose lambda_minus is nu, or None."""
    nu = Partition(nu)
    parts = nu.padded(k)
    if k == 0 or parts[-1] != 0 or n - k < 1:
        return None
    if k > 1 and parts[0] + 1 > n - k:
        return None
    return Partition((n - k,) + tuple(p + 1 for p in parts[:-1]))
