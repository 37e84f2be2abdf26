"""Pure-Python kernel: hot primitives over the Calkin-Wilf value table.

This module and the compiled `ckernel` expose the same API; one of them is
selected at import time by `gruff._kernel`.  Everything here is exact
integer arithmetic — no floats in any decision path.

The table is a process-global, append-only cache of the enumeration
prefix.  Under CPython's GIL the grow-then-read pattern is as-if pure.
"""

from __future__ import annotations

import math
from bisect import bisect_left

NAME = "pure-python"

# Entries are capped so that every comparison stays within the integer
# ranges the compiled kernel can certify (depth <= 21, see ckernel).
MAX_ENTRIES = (1 << 22) - 1

_num = [1]
_den = [1]

# value-sorted views, one per requested prefix length: {W: list of indices}
_sorted_cache: dict[int, list[int]] = {}


class KernelCapacityError(RuntimeError):
    pass


def backend_name() -> str:
    return NAME


def size() -> int:
    return len(_num)


def ensure(n: int) -> None:
    """Grow the value table to at least n entries."""
    if n > MAX_ENTRIES:
        raise KernelCapacityError(f"table request {n} exceeds kernel cap {MAX_ENTRIES}")
    num, den = _num, _den
    a, b = num[-1], den[-1]
    while len(num) < n:
        # Calkin-Wilf successor: q' = 1 / (2*floor(q) - q + 1)
        na = b
        nb = (2 * (a // b) + 1) * b - a
        num.append(na)
        den.append(nb)
        a, b = na, nb


def value(i: int) -> tuple[int, int]:
    return _num[i], _den[i]


def values(lo: int, hi: int) -> list[tuple[int, int]]:
    return list(zip(_num[lo:hi], _den[lo:hi]))


def sorted_positions(w: int) -> list[int]:
    """Indices < w sorted by value (ascending, exact order)."""
    cached = _sorted_cache.get(w)
    if cached is not None:
        return cached
    ensure(w)
    num, den = _num, _den
    # integer keys are order-faithful at this resolution (min gap between
    # distinct table values far exceeds 2^-48); assert just in case
    order = sorted(range(w), key=lambda i: (num[i] << 48) // den[i])
    for j in range(1, w):
        a, b = order[j - 1], order[j]
        assert num[a] * den[b] < num[b] * den[a]
    if len(_sorted_cache) > 8:
        _sorted_cache.clear()
    _sorted_cache[w] = order
    return order


def _cmp_pos_quad(pos: int, an: int, ad: int, bn: int, bd: int) -> int:
    """Exact sign of q_pos - (an/ad + (bn/bd)*sqrt(2))."""
    n, d = _num[pos], _den[pos]
    lhs = (n * ad - an * d) * bd  # rational part * bd*d*ad / (d*ad)
    rhs_coeff = bn * d * ad  # multiplies sqrt(2)
    if rhs_coeff == 0:
        return (lhs > 0) - (lhs < 0)
    sl = (lhs > 0) - (lhs < 0)
    sr = (rhs_coeff > 0) - (rhs_coeff < 0)
    if sl != sr:
        if sl == 0:
            return -sr
        if sr == 0:
            return sl
        return sl
    # same nonzero sign: compare lhs^2 vs 2*rhs^2
    l2 = lhs * lhs
    r2 = 2 * rhs_coeff * rhs_coeff
    if l2 == r2:
        raise AssertionError("rational equal to nonzero multiple of sqrt(2)")
    return sl if l2 > r2 else -sl


def range_slice(w: int, lo, hi) -> tuple[int, int]:
    """Slice (start, stop) of sorted_positions(w) with values strictly
    between lo and hi; bounds are quadrat 4-tuples (an, ad, bn, bd) or None
    for unbounded."""
    order = sorted_positions(w)
    n = len(order)
    if lo is None:
        start = 0
    else:
        an, ad, bn, bd = lo
        a, b = 0, n
        while a < b:
            m = (a + b) // 2
            if _cmp_pos_quad(order[m], an, ad, bn, bd) <= 0:
                a = m + 1
            else:
                b = m
        start = a
    if hi is None:
        stop = n
    else:
        an, ad, bn, bd = hi
        a, b = start, n
        while a < b:
            m = (a + b) // 2
            if _cmp_pos_quad(order[m], an, ad, bn, bd) < 0:
                a = m + 1
            else:
                b = m
        stop = a
    return start, stop


def least_k(dn: int, dd: int) -> int:
    """Least k >= 1 with k^2 dn^2 > 2 dd^2 (i.e. sqrt(2)/k < dn/dd)."""
    k = math.isqrt(2 * dd * dd // (dn * dn)) + 1
    while k > 1 and (k - 1) * (k - 1) * dn * dn > 2 * dd * dd:
        k -= 1
    return k


def radius_one(n: int, fval: int) -> int:
    """Brute-force radius index of the interval centred at q_n that
    excludes q_m for all m <= fval, m != n.  Oracle-grade: linear scan."""
    ensure(max(n, fval) + 1)
    qn, qd = _num[n], _den[n]
    best = None  # (dn, dd)
    for m in range(fval + 1):
        if m == n:
            continue
        dn = abs(_num[m] * qd - qn * _den[m])
        dd = _den[m] * qd
        if best is None or dn * best[1] < best[0] * dd:
            best = (dn, dd)
    if best is None:
        return 1
    return least_k(best[0], best[1])


def bulk_radii(fvals, count: int) -> list[int]:
    """Radius indices for J_n at n < count, f-values given per n.

    Requires fvals nondecreasing with fvals[n] >= n (strictly increasing
    growth functions satisfy this).  Sweepline over the value-sorted
    prefix with reverse deletions: O((count + maxM) log maxM).
    """
    if count == 0:
        return []
    max_m = fvals[count - 1]
    for i in range(1, count):
        if fvals[i] < fvals[i - 1]:
            raise ValueError("bulk_radii requires nondecreasing f-values")
    for i in range(count):
        if fvals[i] < i:
            raise ValueError("bulk_radii requires fvals[n] >= n")
    ensure(max_m + 1)
    num, den = _num, _den
    order = sorted_positions(max_m + 1)
    m = len(order)
    rank = [0] * m
    for slot, pos in enumerate(order):
        rank[pos] = slot
    nxt = list(range(1, m + 1))
    prv = list(range(-1, m))
    active_limit = max_m

    radii = [0] * count
    for n in range(count - 1, -1, -1):
        fv = fvals[n]
        while active_limit > fv:
            s = rank[active_limit]
            p, x = prv[s], nxt[s]
            if p >= 0:
                nxt[p] = x
            if x < m:
                prv[x] = p
            active_limit -= 1
        s = rank[n]
        qn, qd = num[n], den[n]
        best_dn = best_dd = 0
        p = prv[s]
        if p >= 0:
            pos = order[p]
            best_dn = qn * den[pos] - num[pos] * qd
            best_dd = qd * den[pos]
        x = nxt[s]
        if x < m:
            pos = order[x]
            dn = num[pos] * qd - qn * den[pos]
            dd = qd * den[pos]
            if best_dd == 0 or dn * best_dd < best_dn * dd:
                best_dn, best_dd = dn, dd
        radii[n] = 1 if best_dd == 0 else least_k(best_dn, best_dd)
    return radii


def _in_interval(pos: int, cn: int, cd: int, k: int) -> bool:
    """Exact |q_pos - cn/cd| < sqrt(2)/k."""
    t = (_num[pos] * cd - cn * _den[pos]) * k
    dd = _den[pos] * cd
    return t * t < 2 * dd * dd


def prune_mask(base: bytes, radii, w: int) -> bytes:
    """Membership bitmask of the pruned set over indices < w.

    base[n] bit = membership of q_n in the base set; radii[n] = radius
    index of J_n (used only where the base bit is 0).  Exactness of the
    n <= m locality cut is the increasing-f index bound.
    """
    ensure(w)
    num, den = _num, _den
    order = sorted_positions(w)
    out = bytearray(base)
    n_sorted = len(order)
    for n in range(w):
        if base[n >> 3] & (1 << (n & 7)):
            continue
        k = radii[n]
        cn, cd = num[n], den[n]
        # find sorted slice inside (q_n - sqrt2/k, q_n + sqrt2/k)
        a, b = 0, n_sorted
        while a < b:
            mid = (a + b) // 2
            pos = order[mid]
            t = (num[pos] * cd - cn * den[pos]) * k
            dd = den[pos] * cd
            if t < 0 and t * t >= 2 * dd * dd:  # q_pos <= q_n - sqrt2/k
                a = mid + 1
            else:
                b = mid
        start = a
        b = n_sorted
        while a < b:
            mid = (a + b) // 2
            pos = order[mid]
            t = (num[pos] * cd - cn * den[pos]) * k
            dd = den[pos] * cd
            if t < 0 or t * t < 2 * dd * dd:  # q_pos < q_n + sqrt2/k
                a = mid + 1
            else:
                b = mid
        for slot in range(start, a):
            pos = order[slot]
            out[pos >> 3] &= ~(1 << (pos & 7)) & 0xFF
    return bytes(out)


def isolation_removals(mask: bytes, w: int, budget: int, eps_n: int, eps_d: int) -> list[int]:
    """Indices of members (among the first `budget` members by index, all
    with index < w) with no other such member within eps on either side."""
    ensure(w)
    members = []
    for i in range(w):
        if mask[i >> 3] & (1 << (i & 7)):
            members.append(i)
            if len(members) >= budget:
                break
    num, den = _num, _den
    members.sort(key=lambda i: (num[i] << 48) // den[i])
    out = []
    for j, pos in enumerate(members):
        isolated = True
        if j > 0:
            p = members[j - 1]
            if (num[pos] * den[p] - num[p] * den[pos]) * eps_d < eps_n * den[p] * den[pos]:
                isolated = False
        if isolated and j + 1 < len(members):
            p = members[j + 1]
            if (num[p] * den[pos] - num[pos] * den[p]) * eps_d < eps_n * den[p] * den[pos]:
                isolated = False
        if isolated:
            out.append(pos)
    return out


def _reset_for_tests() -> None:
    global _num, _den
    _num = [1]
    _den = [1]
    _sorted_cache.clear()
