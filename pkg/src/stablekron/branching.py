"""The branching graph of the partition algebras.

A path alternates integral and half-integer levels: going down to a half
level removes a box (or nothing, index 0), coming back up adds a box (or
nothing).  An integral step is the pair (remove-row, add-row); a tableau
is a start partition plus a sequence of integral steps all of whose
intermediate shapes are partitions.
"""

from __future__ import annotations

from .partitions import NotAPartition, part, partition, size, intersect

Step = tuple[int, int]


class NotAPath(ValueError):
    """Raised when a step sequence leaves the set of partitions."""


def step_kind(step: Step) -> str:
    i, j = step
    if i > j:
        return "up"
    if i == j:
        return "dummy"
    return "down"


def step_key(step: Step):
    """Sort key realizing the total order on integral steps:
    move-ups (by add-row, then remove-row descending), then dummies
    (row descending), then move-downs (remove-row descending, add-row
    ascending)."""
    i, j = step
    if i > j:
        return (0, j, -i)
    if i == j:
        return (1, -i)
    return (2, -i, j)


def step_str(step: Step) -> str:
    return f"-{step[0]}+{step[1]}"


def parse_step(text: str) -> Step:
    t = text.strip()
    if not t.startswith("-") or "+" not in t:
        raise ValueError(f"cannot parse step from {text!r}")
    i_txt, j_txt = t[1:].split("+", 1)
    return (int(i_txt), int(j_txt))


def remove_box(shape, i: int):
    """shape - eps_i, or None if not a partition; i = 0 removes nothing."""
    if i == 0:
        return tuple(shape)
    if not 1 <= i <= len(shape):
        return None
    new = list(shape)
    new[i - 1] -= 1
    if new[i - 1] < part(shape, i + 1):
        return None
    if new[i - 1] == 0:
        new.pop()
    return tuple(new)


def add_box(shape, j: int):
    """shape + eps_j, or None if not a partition; j = 0 adds nothing."""
    if j == 0:
        return tuple(shape)
    if not 1 <= j <= len(shape) + 1:
        return None
    new = list(shape) + [0] * (j - len(shape))
    new[j - 1] += 1
    if j >= 2 and new[j - 1] > new[j - 2]:
        return None
    return tuple(new)


def successors(shape, level_parity: str):
    """Neighbours one half-step down the graph: the shape itself plus all
    single-box removals (from an integral level) or additions (from a
    half level)."""
    shape = partition(shape)
    out = [shape]
    if level_parity == "integral":
        for i in range(1, len(shape) + 1):
            nxt = remove_box(shape, i)
            if nxt is not None:
                out.append(nxt)
    elif level_parity == "half":
        for j in range(1, len(shape) + 2):
            nxt = add_box(shape, j)
            if nxt is not None:
                out.append(nxt)
    else:
        raise ValueError("level_parity must be 'integral' or 'half'")
    return out


class Tableau:
    """A path in the branching graph: start shape plus integral steps.

    Construction validates every intermediate shape (both the half-level
    shape after the removal and the integral shape after the addition).
    """

    __slots__ = ("start", "steps", "shapes")

    def __init__(self, start, steps):
        self.start = partition(start)
        self.steps = tuple((int(i), int(j)) for i, j in steps)
        shapes = [self.start]
        cur = self.start
        for i, j in self.steps:
            half = remove_box(cur, i)
            if half is None:
                raise NotAPath(f"cannot remove a box in row {i} of {cur}")
            cur = add_box(half, j)
            if cur is None:
                raise NotAPath(f"cannot add a box in row {j} of {half}")
            shapes.append(cur)
        self.shapes = tuple(shapes)

    @property
    def end(self):
        return self.shapes[-1]

    def __len__(self):
        return len(self.steps)

    def half_shapes(self):
        """The shapes at half levels t(1/2), t(3/2), ..."""
        return tuple(remove_box(self.shapes[k], self.steps[k][0])
                     for k in range(len(self.steps)))

    def serialize(self) -> str:
        return " ".join(step_str(st) for st in self.steps)

    def __eq__(self, other):
        return (isinstance(other, Tableau)
                and self.start == other.start and self.steps == other.steps)

    def __hash__(self):
        return hash((self.start, self.steps))

    def __repr__(self):
        return f"Tableau({self.start}, [{self.serialize()}])"


def enumerate_std(lam, nu, s: int) -> list[Tableau]:
    """All standard tableaux (paths) from lam to nu in s integral steps,
    in lexicographic order of step sequences under the step order.

    Depth-first with a reachability prune: a prefix at shape t needs at
    least max(|t| - |t ∩ nu|, |nu| - |t ∩ nu|) further steps, since one
    integral step removes at most one box and adds at most one box.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    lam = partition(lam)
    nu = partition(nu)
    out: list[Tableau] = []

    def feasible(shape, remaining):
        inter = size(intersect(shape, nu))
        return max(size(shape) - inter, size(nu) - inter) <= remaining

    def rec(shape, steps):
        remaining = s - len(steps)
        if remaining == 0:
            if shape == nu:
                out.append(Tableau(lam, steps))
            return
        if not feasible(shape, remaining):
            return
        cands = []
        for i in range(0, len(shape) + 1):
            half = remove_box(shape, i)
            if half is None:
                continue
            for j in range(0, len(half) + 2):
                nxt = add_box(half, j)
                if nxt is not None:
                    cands.append(((i, j), nxt))
        cands.sort(key=lambda c: step_key(c[0]))
        for st, nxt in cands:
            rec(nxt, steps + [st])

    rec(lam, [])
    return out


def is_dvir(t: Tableau):
    """Least witness i of Dvir-radical membership, or None.

    i = 0: the path contains a (−eps_0, +eps_0) step; i >= 1: the path
    removes more than start_i boxes from row i.
    """
    witnesses = []
    if any(st == (0, 0) for st in t.steps):
        witnesses.append(0)
    removals: dict[int, int] = {}
    for i, _ in t.steps:
        if i > 0:
            removals[i] = removals.get(i, 0) + 1
    for i, cnt in removals.items():
        if cnt > part(t.start, i):
            witnesses.append(i)
    return min(witnesses) if witnesses else None


def dvir_removal_witness(t: Tableau):
    """Least row i >= 1 from which t removes more than start_i boxes,
    or None.  Paths without such a row (even those with a (0, 0) step)
    make up the larger set excluded only from the positive radicals."""
    removals: dict[int, int] = {}
    for i, _ in t.steps:
        if i > 0:
            removals[i] = removals.get(i, 0) + 1
    witnesses = [i for i, cnt in removals.items() if cnt > part(t.start, i)]
    return min(witnesses) if witnesses else None


def enumerate_std0(lam, nu, s: int) -> list[Tableau]:
    """enumerate_std filtered to paths outside the Dvir radical."""
    return [t for t in enumerate_std(lam, nu, s) if is_dvir(t) is None]


def swap_adjacent(t: Tableau, k: int):
    """Exchange integral steps k and k+1 (1-indexed); None if the
    exchanged sequence is not a valid path."""
    if not 1 <= k <= len(t.steps) - 1:
        raise IndexError(f"k={k} out of range for a path of length {len(t.steps)}")
    steps = list(t.steps)
    steps[k - 1], steps[k] = steps[k], steps[k - 1]
    try:
        return Tableau(t.start, steps)
    except NotAPath:
        return None


def error_path(t: Tableau, k: int):
    """The path replacing an add-then-remove round trip in row u > 0
    spanning levels k and k+1 by the same round trip in the fresh row
    L = len(t(k - 1/2)) + 1; None when the pattern is absent."""
    if not 1 <= k <= len(t.steps):
        raise IndexError(f"k={k} out of range for a path of length {len(t.steps)}")
    if k == len(t.steps):
        return None
    i1, j1 = t.steps[k - 1]
    i2, j2 = t.steps[k]
    if j1 == 0 or j1 != i2:
        return None
    half = remove_box(t.shapes[k - 1], i1)
    new_row = len(half) + 1
    steps = list(t.steps)
    steps[k - 1] = (i1, new_row)
    steps[k] = (new_row, j2)
    try:
        return Tableau(t.start, steps)
    except NotAPath:
        return None
