"""Character-theoretic ground truth for Kronecker coefficients.

Irreducible symmetric-group characters are evaluated by the
Murnaghan-Nakayama border-strip recursion (via first-column hook
lengths), Kronecker coefficients by the class-weighted triple product,
and the stable coefficient by computing at growing n until the value
repeats past the triangle-bound threshold.  A one-step recursion
expressing the padded coefficient through skew terms and
horizontal-strip additions provides an independent identity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .partitions import (
    contains, pad, part, partition, partitions_of, size,
)
from .tableaux import classical_lr


class SizeMismatch(ValueError):
    pass


class NonIntegral(ArithmeticError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def z_order(rho) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    z = 1
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        z *= p ** m * factorial(m)
    return z


def class_size(rho, n: int) -> int:
    if size(rho) != n:
        raise SizeMismatch(f"{rho} is not a cycle type of degree {n}")
    return factorial(n) // z_order(rho)


_char_memo: dict[tuple, int] = {}


def clear_character_memo():
    _char_memo.clear()


def mn_character(lam, rho) -> int:
    """The irreducible character value at cycle type rho, by repeatedly
    stripping a border strip of the largest remaining cycle length."""
    lam = partition(lam)
    rho = tuple(sorted((int(x) for x in rho if int(x) != 0), reverse=True))
    if size(lam) != sum(rho):
        raise SizeMismatch(f"|{lam}| != |{rho}|")
    return _mn(lam, rho)


def _mn(lam, rho) -> int:
    if not rho:
        return 1
    key = (lam, rho)
    cached = _char_memo.get(key)
    if cached is not None:
        return cached
    strip = rho[0]
    rest = rho[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    total = 0
    for pos, b in enumerate(beta):
        new = b - strip
        if new < 0 or new in beta_set:
            continue
        sign = -1 if sum(1 for x in beta if new < x < b) % 2 else 1
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(new)
        new_beta.sort(reverse=True)
        new_lam = tuple(x - (len(new_beta) - 1 - i)
                        for i, x in enumerate(new_beta))
        while new_lam and new_lam[-1] == 0:
            new_lam = new_lam[:-1]
        total += sign * _mn(new_lam, rest)
    _char_memo[key] = total
    return total


_kron_memo: dict[tuple, int] = {}


def kronecker(lam, nu, mu) -> int:
    """The Kronecker coefficient of three partitions of equal size n."""
    lam = partition(lam)
    nu = partition(nu)
    mu = partition(mu)
    n = size(lam)
    if size(nu) != n or size(mu) != n:
        raise SizeMismatch(f"sizes of {lam}, {nu}, {mu} differ")
    key = tuple(sorted((lam, nu, mu)))
    cached = _kron_memo.get(key)
    if cached is not None:
        return cached
    total = 0
    for rho in partitions_of(n):
        a = _mn(lam, rho)
        if a == 0:
            continue
        b = _mn(nu, rho)
        if b == 0:
            continue
        c = _mn(mu, rho)
        if c == 0:
            continue
        total += class_size(rho, n) * a * b * c
    value, rem = divmod(total, factorial(n))
    if rem:
        raise NonIntegral(f"non-integral Kronecker sum for {lam}, {nu}, {mu}")
    _kron_memo[key] = value
    return value


@dataclass(frozen=True)
class StableResult:
    value: int
    onset: int


_stable_memo: dict[tuple, StableResult] = {}


def stable_kronecker_oracle(lam, nu, mu, n_cap=None) -> StableResult:
    """Compute the padded coefficient at growing n and return the first
    value repeated at two consecutive n past the triangle threshold
    |lam| + |nu| + |mu|, together with the onset n."""
    lam = partition(lam)
    nu = partition(nu)
    mu = partition(mu)
    threshold = size(lam) + size(nu) + size(mu)
    n0 = max(size(lam) + part(lam, 1),
             size(nu) + part(nu, 1),
             size(mu) + part(mu, 1))
    cap = n_cap if n_cap is not None else n0 + threshold + 8
    key = tuple(sorted((lam, nu, mu)))
    cached = _stable_memo.get(key)
    if cached is not None:
        return cached
    prev = None
    for n in range(n0, cap + 1):
        val = kronecker(pad(lam, n), pad(nu, n), pad(mu, n))
        if prev is not None and val == prev and n - 1 >= threshold:
            result = StableResult(val, n - 1)
            _stable_memo[key] = result
            return result
        prev = val
    raise BudgetExceeded(f"no stabilization for ({lam}, {nu}, {mu}) "
                         f"with n up to {cap}")


def p_set(n: int, mu):
    """All partitions of n obtained from mu by adding a horizontal strip
    (n - |mu| boxes, no two in one column): beta with
    beta_1 >= mu_1 >= beta_2 >= mu_2 >= ..."""
    mu = partition(mu)
    if n < size(mu):
        raise ValueError(f"n={n} below |mu|={size(mu)}")
    out = []

    def rec(i, chosen):
        if i > len(mu) + 1:
            first = n - sum(chosen)
            if first >= max(part(mu, 1), chosen[0] if chosen else 0):
                out.append(partition([first] + chosen))
            return
        for b in range(part(mu, i - 1), part(mu, i) - 1, -1):
            rec(i + 1, chosen + [b])

    rec(2, [])
    return out


def dvir_step(lam_n, nu_n, mu_n) -> int:
    """One step of the recursion for the padded coefficient: skew terms
    over common subshapes of size n - s minus the horizontal-strip
    correction terms, where s is the size below the first row of mu_n."""
    lam_n = partition(lam_n)
    nu_n = partition(nu_n)
    mu_n = partition(mu_n)
    n = size(lam_n)
    if size(nu_n) != n or size(mu_n) != n:
        raise SizeMismatch("arguments must have equal sizes")
    mu = partition(mu_n[1:])
    s = size(mu)
    inter = tuple(min(part(lam_n, i), part(nu_n, i))
                  for i in range(1, max(len(lam_n), len(nu_n)) + 1))
    inter = partition(x for x in inter if x)

    total = 0
    small = partitions_of(s)
    for alpha in partitions_of(n - s):
        if not contains(alpha, inter):
            continue
        # expand both skews into straight shapes of size s
        lam_terms = {tau: classical_lr(alpha, lam_n, tau) for tau in small}
        nu_terms = {sig: classical_lr(alpha, nu_n, sig) for sig in small}
        for tau, c1 in lam_terms.items():
            if c1 == 0:
                continue
            for sig, c2 in nu_terms.items():
                if c2 == 0:
                    continue
                g = kronecker(tau, sig, mu)
                if g:
                    total += c1 * c2 * g
    for beta in p_set(n, mu):
        if beta != mu_n:
            total -= kronecker(lam_n, nu_n, beta)
    return total
