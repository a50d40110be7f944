"""Adjacent-transposition Gray code for k-subsets of a path, n even and k odd.

Strings of length ``n`` with ``k`` ones are listed so that consecutive strings
differ by swapping two neighbouring positions; equivalently, a Hamiltonian
path of the token graph of the path ``0-1-...-(n-1)``.  Position ``i`` of a
string is vertex ``i``.

``_walk(n, k)`` runs from ``1^k 0^(n-k)`` to ``0^(n-k) 1^k``.  It splits on the
first two positions: the ``11`` block and the ``00`` block recurse directly,
and the ``10``/``01`` middle is a Hamiltonian path of a prism (two copies of a
smaller token graph joined by a perfect matching), threaded by ``_prism``.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import InvariantError


@lru_cache(maxsize=None)
def _walk(n: int, k: int) -> tuple[str, ...]:
    if k == 1:
        return tuple("0" * i + "1" + "0" * (n - i - 1) for i in range(n))
    if k == n - 1:
        return tuple("1" * (n - 1 - i) + "0" + "1" * i for i in range(n))
    head = ["11" + s for s in _walk(n - 2, k - 2)]
    middle = [("10" if side == 0 else "01") + s for side, s in _prism(n - 2, k - 1, "I")]
    tail = ["00" + s for s in _walk(n - 2, k)]
    return tuple(head + middle + tail)


@lru_cache(maxsize=None)
def _prism(m: int, j: int, shape: str) -> tuple[tuple[int, str], ...]:
    """Hamiltonian path of ``K2 x (token graph of a length-m path with j tokens)``, j even.

    Entries are ``(side, string)``.  Shape ``I`` runs from ``(0, 10 w_last)``
    to ``(1, 01 w_first)`` style corners; shapes ``u`` and ``v`` start and end on
    the same side and serve as detours inside larger prisms.
    """
    if j == 0 or j == m:
        x = "1" * j + "0" * (m - j)
        return ((0, x), (1, x))
    cols = _walk(m - 2, j - 1)
    N = len(cols)
    rows = [(0, "10"), (0, "01"), (1, "01"), (1, "10")]
    left = [(c, "11" + y) for c, y in _prism(m - 2, j - 2, "v")]
    right = [(c, "00" + y) for c, y in _prism(m - 2, j, "u")]
    out: list[tuple[int, str]] = []

    def visit(r, col):
        side, pre = rows[r]
        out.append((side, pre + cols[col]))

    def step(a, b, col):
        # the 0<->3 rung at the first column and the 1<->2 rung at the last
        # column pass through the 11 and 00 blocks respectively
        if {a, b} == {0, 3} and col == 0:
            out.extend(left if a == 0 else left[::-1])
        elif {a, b} == {1, 2} and col == N - 1:
            out.extend(right if a == 1 else right[::-1])
        visit(b, col)

    if shape == "I":
        visit(0, N - 1)
        cur = 0
        for r in (1, 2, 3):
            step(cur, r, N - 1)
            cur = r
        d = 1
        for col in range(N - 2, 0, -1):
            visit(cur, col)
            for _ in range(3):
                nr = (cur + d) % 4
                step(cur, nr, col)
                cur = nr
            d = -d
        visit(3, 0)
        cur = 3
        for r in (0, 1, 2):
            step(cur, r, 0)
            cur = r
    elif shape == "u":
        for col in range(N - 1, -1, -1):
            visit(0, col)
        step(0, 3, 0)
        for col in range(N):
            order = (3, 2, 1) if col % 2 == 0 else (1, 2, 3)
            if col > 0:
                visit(order[0], col)
            for a, b in zip(order, order[1:]):
                step(a, b, col)
    else:
        for col in range(N):
            visit(1, col)
        step(1, 2, N - 1)
        for i, col in enumerate(range(N - 1, -1, -1)):
            order = (2, 3, 0) if i % 2 == 0 else (0, 3, 2)
            if i > 0:
                visit(order[0], col)
            for a, b in zip(order, order[1:]):
                step(a, b, col)
    return tuple(out)


def _mask(s: str) -> int:
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def gray_code_strings(n: int, k: int) -> list[str]:
    if n % 2 or not k % 2 or not 1 <= k < n:
        raise ValueError(
            f"an adjacent-transposition Gray code needs n even and k odd with 1 <= k < n; got n={n}, k={k}"
        )
    return list(_walk(n, k))


def gray_code_masks(n: int, k: int) -> list[int]:
    seq = [_mask(s) for s in gray_code_strings(n, k)]
    if len(set(seq)) != len(seq):
        raise InvariantError("Gray code repeated a configuration")
    return seq
