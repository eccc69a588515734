"""Exact arithmetic in the partition algebra on r strands.

A diagram is a set-partition of 2r points (southern row coded 1..r,
northern row r+1..2r, printed with a trailing apostrophe).  The product
stacks the left factor over the right, identifies the middle row, and
multiplies by n for every component left entirely in the middle.
Algebra elements carry integer-polynomial-in-n coefficients, so every
identity checked here holds for all n simultaneously.
"""

from __future__ import annotations

from itertools import permutations, product as iproduct

from .branching import Tableau, error_path, is_dvir, remove_box, swap_adjacent
from .partitions import part, partial_sum, partition, size


class RankMismatch(ValueError):
    pass


class SwapUndefined(ValueError):
    pass


class NotDvir(ValueError):
    pass


# -- integer polynomials in n: tuples of coefficients, ascending degree ------

POLY_ZERO: tuple[int, ...] = ()
POLY_ONE: tuple[int, ...] = (1,)


def poly(c: int) -> tuple[int, ...]:
    return (c,) if c else ()


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                       for i in range(n)))


def poly_mul(a, b):
    if not a or not b:
        return POLY_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_shift(a, t: int):
    """Multiply by n**t."""
    return (0,) * t + tuple(a) if a else POLY_ZERO


def poly_eval(a, n: int) -> int:
    return sum(c * n ** i for i, c in enumerate(a))


def poly_str(a) -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "n" if i == 1 else f"n^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


# -- diagrams ----------------------------------------------------------------


class Diagram:
    """A set-partition of {1..r} (southern) and {r+1..2r} (northern)."""

    __slots__ = ("r", "blocks", "_hash")

    def __init__(self, r: int, blocks):
        self.r = r
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        seen = [c for b in canon for c in b]
        if sorted(seen) != list(range(1, 2 * r + 1)):
            raise ValueError(f"blocks {blocks!r} do not partition 2r={2*r} points")
        self.blocks = canon
        self._hash = hash((r, canon))

    @classmethod
    def identity(cls, r: int) -> "Diagram":
        return cls(r, [(k, r + k) for k in range(1, r + 1)])

    def star(self) -> "Diagram":
        """Flip top and bottom rows."""
        flip = lambda c: c + self.r if c <= self.r else c - self.r
        return Diagram(self.r, [tuple(flip(c) for c in b) for b in self.blocks])

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.r == other.r and self.blocks == other.blocks)

    def __hash__(self):
        return self._hash

    def __str__(self):
        parts = []
        for b in self.blocks:
            pts = [str(c) if c <= self.r else f"{c - self.r}'" for c in b]
            parts.append("{" + ",".join(pts) + "}")
        return "".join(parts)

    def __repr__(self):
        return f"Diagram({self.r}, {self})"


def multiply(x: Diagram, y: Diagram) -> tuple[Diagram, int]:
    """Concatenate x over y; return the reduced diagram and the number
    of components removed from the middle row."""
    if x.r != y.r:
        raise RankMismatch(f"ranks {x.r} and {y.r} differ")
    r = x.r
    # union-find over 3r points: 1..r bottom, r+1..2r middle, 2r+1..3r top
    parent = list(range(3 * r + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for block in y.blocks:
        head = block[0]
        for c in block[1:]:
            union(head, c)  # y codes already match bottom/middle ids
    for block in x.blocks:
        mapped = [c + r for c in block]  # southern -> middle, northern -> top
        for c in mapped[1:]:
            union(mapped[0], c)

    comps: dict[int, list[int]] = {}
    for pt in range(1, 3 * r + 1):
        comps.setdefault(find(pt), []).append(pt)

    loops = 0
    blocks = []
    for members in comps.values():
        outer = [m if m <= r else m - r for m in members if m <= r or m > 2 * r]
        if outer:
            blocks.append(outer)
        elif all(r < m <= 2 * r for m in members):
            loops += 1
    return Diagram(r, blocks), loops


class Element:
    """A finite integer-polynomial combination of diagrams of one rank."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms=None):
        self.r = r
        self.terms = {d: c for d, c in (terms or {}).items() if c}

    @classmethod
    def from_diagram(cls, d: Diagram, coeff=POLY_ONE) -> "Element":
        return cls(d.r, {d: tuple(coeff)})

    @classmethod
    def one(cls, r: int) -> "Element":
        return cls.from_diagram(Diagram.identity(r))

    @classmethod
    def zero(cls, r: int) -> "Element":
        return cls(r)

    def _check(self, other):
        if self.r != other.r:
            raise RankMismatch(f"ranks {self.r} and {other.r} differ")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = poly_add(terms.get(d, POLY_ZERO), c)
        return Element(self.r, terms)

    def __neg__(self):
        return Element(self.r, {d: tuple(-x for x in c)
                                for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.r, {d: poly_mul(c, poly(other))
                                    for d, c in self.terms.items()})
        self._check(other)
        terms: dict[Diagram, tuple[int, ...]] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                prod, loops = multiply(d1, d2)
                coeff = poly_shift(poly_mul(c1, c2), loops)
                terms[prod] = poly_add(terms.get(prod, POLY_ZERO), coeff)
        return Element(self.r, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def star(self) -> "Element":
        return Element(self.r, {d.star(): c for d, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Element)
                and self.r == other.r and self.terms == other.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        lines = [f"({poly_str(c)}) * {d}" for d, c in
                 sorted(self.terms.items(), key=lambda kv: kv[0].blocks)]
        return "\n".join(lines)

    def __repr__(self):
        return f"Element({self.r}, {len(self.terms)} terms)"


# -- generators --------------------------------------------------------------


def gen_s(k: int, r: int) -> Diagram:
    """The transposition of strands k and k+1."""
    if not 1 <= k <= r - 1:
        raise IndexError(f"s_{k} needs 1 <= k <= r-1={r - 1}")
    blocks = [(j, r + j) for j in range(1, r + 1) if j not in (k, k + 1)]
    blocks += [(k, r + k + 1), (k + 1, r + k)]
    return Diagram(r, blocks)


def gen_p(k: int, r: int) -> Diagram:
    """The diagram isolating strand k into two singletons."""
    if not 1 <= k <= r:
        raise IndexError(f"p_{k} needs 1 <= k <= r={r}")
    blocks = [(j, r + j) for j in range(1, r + 1) if j != k]
    blocks += [(k,), (r + k,)]
    return Diagram(r, blocks)


def gen_p_half(k: int, r: int) -> Diagram:
    """The diagram merging strands k and k+1 into one 4-point block."""
    if not 1 <= k <= r - 1:
        raise IndexError(f"p_{k}+1/2 needs 1 <= k <= r-1={r - 1}")
    blocks = [(j, r + j) for j in range(1, r + 1) if j not in (k, k + 1)]
    blocks += [(k, k + 1, r + k, r + k + 1)]
    return Diagram(r, blocks)


# -- Murphy-basis building blocks -------------------------------------------


def e_int(k: int, l: int, r: int) -> Element:
    """Product of l integral idempotent-like factors ending at p_k."""
    if k == 0 or l == 0:
        return Element.one(r)
    if l < 0 or k - l + 1 < 1:
        raise ValueError(f"e_{k}^({l}) is not defined")
    out = Element.one(r)
    for j in range(k - l + 1, k + 1):
        out = out * Element.from_diagram(gen_p(j, r))
    return out


def e_half(k: int, l: int, r: int) -> Element:
    """Product of l half-level merge factors ending at p_{k+1/2}."""
    if k == 0 or l == 0:
        return Element.one(r)
    if l < 0 or k - l + 1 < 1:
        raise ValueError(f"e_(k+1/2)^({l}) is not defined for k={k}")
    out = Element.one(r)
    for j in range(k - l + 1, k + 1):
        out = out * Element.from_diagram(gen_p_half(j, r))
    return out


def s_range(l: int, k: int, r: int) -> Element:
    """The chain s_l s_{l+1} ... s_{k-1} (inverted when k < l); the
    conventions: 1 if l or k is 0, 0 if either is negative."""
    if l < 0 or k < 0:
        return Element.zero(r)
    if l == 0 or k == 0 or l == k:
        return Element.one(r)
    out = Element.one(r)
    rng = range(l, k) if l < k else range(l - 1, k - 1, -1)
    for j in rng:
        out = out * Element.from_diagram(gen_s(j, r))
    return out


def m_sum(shape, b: int, r: int) -> Element:
    """Sum over i of the chains ending at the partial sum through row b:
    the row-insertion sum in the branching coefficients."""
    if b == 0:
        return Element.one(r)
    top = partial_sum(shape, b)
    out = Element.zero(r)
    for i in range(part(shape, b)):
        out = out + s_range(top - i, top, r)
    return out


def branching_coeff(t: Tableau, k: int, direction: str, half: str,
                    r: int) -> Element:
    """One of the four branching coefficients at level k (0-based) of a
    path t starting at the empty partition."""
    lam = t.shapes[k]
    a, b = t.steps[k]
    mid = remove_box(lam, a)
    nu = t.shapes[k + 1]
    if direction == "up" and half == "first":
        return (e_half(k, k - size(mid), r)
                * s_range(size(lam), partial_sum(lam, a), r))
    if direction == "up" and half == "second":
        out = e_int(k + 1, k + 1 - size(nu), r)
        if b:
            out = out * m_sum(nu, b, r) * s_range(partial_sum(nu, b), size(nu), r)
        return out
    if direction == "down" and half == "first":
        out = e_int(k, k - size(lam), r)
        if a:
            out = out * m_sum(lam, a, r) * s_range(partial_sum(lam, a), size(lam), r)
        return out
    if direction == "down" and half == "second":
        return (e_half(k, k - size(mid), r)
                * s_range(size(nu), partial_sum(nu, b), r))
    raise ValueError(f"unknown branching coefficient {direction}/{half}")


def murphy_u(t: Tableau, r=None) -> Element:
    """The ascending Murphy element of a path from the empty partition:
    the product of up coefficients, top level first."""
    if t.start != ():
        raise ValueError("Murphy elements require paths from the empty partition")
    if r is None:
        r = len(t.steps)
    out = Element.one(r)
    for k in range(len(t.steps) - 1, -1, -1):
        out = (out * branching_coeff(t, k, "up", "second", r)
               * branching_coeff(t, k, "up", "first", r))
    return out


def murphy_d(t: Tableau, r=None) -> Element:
    """The descending Murphy element: down coefficients, bottom level first."""
    if t.start != ():
        raise ValueError("Murphy elements require paths from the empty partition")
    if r is None:
        r = len(t.steps)
    out = Element.one(r)
    for k in range(len(t.steps)):
        out = (out * branching_coeff(t, k, "down", "first", r)
               * branching_coeff(t, k, "down", "second", r))
    return out


def young_sum(nu, r: int) -> Element:
    """Sum of all permutation diagrams of the Young subgroup acting on
    the consecutive strand blocks cut out by nu (identity beyond |nu|)."""
    nu = partition(nu)
    blocks = []
    pos = 1
    for row in nu:
        blocks.append(list(range(pos, pos + row)))
        pos += row
    total = Element.zero(r)
    for choice in iproduct(*[list(permutations(b)) for b in blocks]):
        image = {j: j for j in range(1, r + 1)}
        for block, images in zip(blocks, choice):
            image.update(zip(block, images))
        d = Diagram(r, [(j, r + image[j]) for j in range(1, r + 1)])
        total = total + Element.from_diagram(d)
    return total


def x_element(nu, r: int) -> Element:
    """The idempotent-times-symmetrizer appearing in the round-trip
    identity for Murphy elements."""
    nu = partition(nu)
    return e_int(r, r - size(nu), r) * young_sum(nu, r)


def verify_thm33(t: Tableau, k: int, r=None) -> bool:
    """Check (u_t) s_k = u_swap + u_err(t) - u_err(swap) exactly, with
    missing error paths contributing 0."""
    if r is None:
        r = len(t.steps)
    swapped = swap_adjacent(t, k)
    if swapped is None:
        raise SwapUndefined(f"swap at k={k} undefined for {t}")
    lhs = murphy_u(t, r) * Element.from_diagram(gen_s(k, r))
    rhs = murphy_u(swapped, r)
    err = error_path(t, k)
    if err is not None:
        rhs = rhs + murphy_u(err, r)
    err_swap = error_path(swapped, k)
    if err_swap is not None:
        rhs = rhs - murphy_u(err_swap, r)
    return lhs == rhs


def maximal_path(nu, r: int) -> Tableau:
    """The path from the empty partition staying empty for r - |nu|
    steps and then filling nu row by row."""
    nu = partition(nu)
    steps = [(0, 0)] * (r - size(nu))
    for row, count in enumerate(nu, start=1):
        steps += [(0, row)] * count
    return Tableau((), steps)


def dvir_diagram_check(lam, nu, s: int, t: Tableau) -> bool:
    """For a radical path t from lam to nu in s steps, expand the Murphy
    element of the maximal path to lam composed with t and verify every
    diagram has at most s - 1 blocks joining a southern point above
    r - s to a northern point or a southern point at most r - s."""
    lam = partition(lam)
    if t.start != lam:
        raise ValueError(f"path starts at {t.start}, not {lam}")
    if is_dvir(t) is None:
        raise NotDvir(f"{t} is not in the radical")
    r = size(lam) + s
    prefix = maximal_path(lam, r - s)
    full = Tableau((), prefix.steps + t.steps)
    u = murphy_u(full, r)
    south_hi = range(r - s + 1, r + 1)
    for d in u.terms:
        crossing = 0
        for block in d.blocks:
            has_hi = any(c in south_hi for c in block if c <= r)
            has_other = any(c > r or c <= r - s for c in block)
            if has_hi and has_other:
                crossing += 1
        if crossing > s - 1:
            return False
    return True
