"""Colex ranking of k-subsets stored as integer bitmasks.

A subset of ``0..n-1`` is an ``int`` whose bit ``v`` is set iff ``v`` is in
the subset.  For a fixed popcount, numeric order of the masks *is* colex
order, so enumeration is just Gosper's next-combination trick.
"""
from __future__ import annotations

from typing import Iterable, Iterator

MAX_N = 60


def _pascal(limit: int) -> tuple[tuple[int, ...], ...]:
    rows = [[1]]
    for n in range(1, limit + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return tuple(tuple(r) for r in rows)


_PASCAL = _pascal(MAX_N)


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    if n <= MAX_N:
        return _PASCAL[n][k]
    raise ValueError(f"binomial table only covers n <= {MAX_N}")


def to_mask(elems: Iterable[int]) -> int:
    m = 0
    for v in elems:
        if v < 0:
            raise ValueError(f"negative element {v}")
        m |= 1 << v
    return m


def elements(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def fmt_subset(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def rank_colex(mask: int) -> int:
    r = 0
    for i, s in enumerate(elements(mask), start=1):
        r += binom(s, i)
    return r


def unrank_colex(r: int, n: int, k: int) -> int:
    if not 0 <= k <= n <= MAX_N:
        raise ValueError(f"need 0 <= k <= n <= {MAX_N}, got n={n}, k={k}")
    total = binom(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} outside [0, {total})")
    mask = 0
    top = n - 1
    for i in range(k, 0, -1):
        # largest s with C(s, i) <= r
        while binom(top, i) > r:
            top -= 1
        mask |= 1 << top
        r -= binom(top, i)
        top -= 1
    return mask


def enumerate_ksubsets(n: int, k: int) -> Iterator[int]:
    """All k-subsets of ``0..n-1`` in increasing colex rank."""
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got n={n}, k={k}")
    if n > MAX_N:
        raise ValueError(f"subsets limited to n <= {MAX_N}")
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = ripple | (((x ^ ripple) >> 2) // low)
