"""Integer partitions, compositions, and related predicates.

Partitions are plain tuples of weakly decreasing positive integers;
trailing zeros are stripped on construction and every indexing formula
reads absent parts as 0.  The dominance order used here is size-graded:
a strictly smaller partition dominates a strictly larger one, and equal
sizes are compared by partial sums.
"""

from __future__ import annotations


class NotAPartition(ValueError):
    """Raised when a sequence fails to be a valid partition."""


class Undefined(ValueError):
    """Raised when minmax is requested for two partitions of length <= 1."""


def partition(parts) -> tuple[int, ...]:
    """Normalize `parts` to a partition tuple (strip trailing zeros)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise NotAPartition(f"{parts!r} has a non-positive part")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise NotAPartition(f"{parts!r} is not weakly decreasing")
    return p


def composition(parts) -> tuple[int, ...]:
    """Normalize `parts` to a composition tuple (strip trailing zeros only)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p):
        raise NotAPartition(f"{parts!r} has a negative part")
    return p


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse the textual syntax: `6,2` or `[6,2]`; empty is `0` or `[]`."""
    t = text.strip()
    if t.startswith("[") and t.endswith("]"):
        t = t[1:-1].strip()
    if t in ("", "0"):
        return ()
    try:
        parts = [int(x) for x in t.split(",")]
    except ValueError:
        raise NotAPartition(f"cannot parse partition from {text!r}")
    return partition(parts)


def format_partition(lam) -> str:
    return "0" if not lam else ",".join(str(x) for x in lam)


def part(lam, i: int) -> int:
    """The i-th part (1-indexed); 0 outside the stored range."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam) -> int:
    return sum(lam)


def partial_sum(lam, a: int) -> int:
    """Sum of the first a parts; 0 at a = 0, saturating at |lam|."""
    if a < 0:
        raise ValueError("index must be non-negative")
    return sum(lam[: min(a, len(lam))])


def dominates(lam, mu) -> bool:
    """Size-graded dominance: |lam| < |mu|, or equal sizes and all
    partial sums of lam are >= those of mu."""
    if size(lam) != size(mu):
        return size(lam) < size(mu)
    return all(
        partial_sum(lam, a) >= partial_sum(mu, a)
        for a in range(1, max(len(lam), len(mu)) + 1)
    )


def pad(lam, n: int) -> tuple[int, ...]:
    """Prepend a first row of n - |lam| boxes; must yield a partition."""
    first = n - size(lam)
    if lam and first < lam[0]:
        raise NotAPartition(f"cannot pad {lam} to size {n}")
    if first < 0:
        raise NotAPartition(f"cannot pad {lam} to size {n}")
    return (first,) + tuple(lam) if first > 0 else partition(lam)


def intersect(lam, nu) -> tuple[int, ...]:
    """Pointwise minimum."""
    return partition(min(part(lam, i), part(nu, i))
                     for i in range(1, min(len(lam), len(nu)) + 1))


def contains(inner, outer) -> bool:
    """Row-wise containment inner ⊆ outer."""
    return all(part(inner, i) <= part(outer, i)
               for i in range(1, len(inner) + 1))


def skew_diff_sizes(lam, nu) -> tuple[int, int]:
    """Sizes of lam minus (lam ∩ nu) and nu minus (lam ∩ nu)."""
    inter = size(intersect(lam, nu))
    return (size(lam) - inter, size(nu) - inter)


def is_horizontal(outer, inner) -> bool:
    """True iff no column of the skew shape outer/inner has two boxes."""
    outer = partition(outer)
    inner = partition(inner)
    if not contains(inner, outer):
        raise NotAPartition(f"{inner} is not contained in {outer}")
    for i in range(2, len(outer) + 1):
        if part(outer, i) > part(inner, i) and part(outer, i) > part(inner, i - 1):
            return False
    return True


def minmax(lam, nu) -> int:
    """min over rows i >= 2 of min(lam_{i-1}, nu_{i-1}) - max(lam_i, nu_i)."""
    top = max(len(lam), len(nu))
    if top < 2:
        raise Undefined("minmax needs a partition of length >= 2")
    return min(
        min(part(lam, i - 1), part(nu, i - 1)) - max(part(lam, i), part(nu, i))
        for i in range(2, top + 1)
    )


def is_copieri(lam, nu, s: int) -> bool:
    """The co-Pieri condition on the triple (lam, nu, s)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if s == 1:
        return True
    if s <= 0:
        return False
    if max(len(lam), len(nu)) < 2:
        return True
    a, b = skew_diff_sizes(lam, nu)
    return s <= max(a, b) + minmax(lam, nu)


def is_maximal_depth(lam, nu, s: int) -> bool:
    """True iff lam ⊆ nu and |nu| = |lam| + s."""
    return contains(lam, nu) and size(nu) == size(lam) + s


def partitions_of(k: int, max_len=None) -> list[tuple[int, ...]]:
    """All partitions of k (optionally length-bounded), reverse lexicographic."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out: list[tuple[int, ...]] = []

    def rec(rem, largest, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for p in range(min(rem, largest), 0, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    rec(k, k, [])
    return out


def partitions_up_to(k: int) -> list[tuple[int, ...]]:
    """All partitions of 0, 1, ..., k, smaller sizes first."""
    out = []
    for m in range(k + 1):
        out.extend(partitions_of(m))
    return out
