"""Unit-capacity max flow with vertex splitting.

Vertex ``v`` becomes ``2v`` (in) and ``2v + 1`` (out) joined by a unit arc, so
an integral flow decomposes into internally vertex-disjoint paths.  Arcs are
stored in pairs, so ``a ^ 1`` is the residual partner of arc ``a``.
"""
from __future__ import annotations

import random
from collections import deque

from .graph import Graph


class SplitNetwork:
    def __init__(self, G: Graph, direct: tuple[int, int] | None = None):
        """``direct=(s, t)`` adds the edge ``st`` as a one-arc path ``s_out -> t_in``."""
        self.n = G.n
        self.adj: list[list[int]] = [[] for _ in range(2 * G.n)]
        self.to: list[int] = []
        self.base: list[int] = []
        for v in range(G.n):
            self._arc(2 * v, 2 * v + 1)
        for u, v in G.edges():
            if direct and {u, v} == set(direct):
                s, t = direct
                self._arc(2 * s + 1, 2 * t)
                continue
            self._arc(2 * u + 1, 2 * v)
            self._arc(2 * v + 1, 2 * u)

    def _arc(self, x: int, y: int) -> None:
        self.adj[x].append(len(self.to))
        self.to.append(y)
        self.base.append(1)
        self.adj[y].append(len(self.to))
        self.to.append(x)
        self.base.append(0)

    def max_flow(self, s: int, t: int, cutoff: int | None = None, rng: random.Random | None = None):
        """Augment from ``s_out`` to ``t_in``; returns ``(value, residual capacities)``."""
        src, dst = 2 * s + 1, 2 * t
        cap = list(self.base)
        to, adj = self.to, self.adj
        order = adj
        if rng is not None:
            order = [list(a) for a in adj]
            for a in order:
                rng.shuffle(a)
        flow = 0
        size = len(adj)
        while cutoff is None or flow < cutoff:
            via = [-1] * size
            via[src] = -2
            queue = deque([src])
            reached = False
            while queue and not reached:
                x = queue.popleft()
                for a in order[x]:
                    y = to[a]
                    if cap[a] and via[y] == -1:
                        via[y] = a
                        if y == dst:
                            reached = True
                            break
                        queue.append(y)
            if not reached:
                break
            y = dst
            while y != src:
                a = via[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = to[a ^ 1]
            flow += 1
        return flow, cap


def local_connectivity(G: Graph, s: int, t: int, cutoff: int | None = None,
                       network: SplitNetwork | None = None) -> int:
    """Maximum number of internally disjoint s-t paths, ignoring a direct s-t edge.

    For non-adjacent ``s`` and ``t`` this is the size of a minimum s-t vertex
    separator.  Stops early once ``cutoff`` paths are found.
    """
    if G.adjacent(s, t):
        net = SplitNetwork(G, direct=(s, t))
        value, cap = net.max_flow(s, t, None if cutoff is None else cutoff + 1)
        direct_used = any(net.to[a] == 2 * t and cap[a] == 0 for a in net.adj[2 * s + 1] if a % 2 == 0)
        return value - direct_used
    net = network or SplitNetwork(G)
    return net.max_flow(s, t, cutoff)[0]


def disjoint_paths(G: Graph, s: int, t: int, seed: int | None = None) -> list[list[int]]:
    """A maximum system of internally disjoint s-t paths (the edge ``st`` counts as one).

    ``seed`` randomises the augmenting order so retries see other decompositions.
    """
    if s == t:
        raise ValueError("endpoints must differ")
    net = SplitNetwork(G, direct=(s, t) if G.adjacent(s, t) else None)
    rng = random.Random(seed) if seed is not None else None
    _, cap = net.max_flow(s, t, rng=rng)

    def carried(x):
        return [net.to[a] for a in net.adj[x] if a % 2 == 0 and cap[a] == 0]

    paths = []
    for first in sorted(carried(2 * s + 1)):
        path = [s]
        node = first
        while True:
            v = node // 2
            path.append(v)
            if v == t:
                break
            node = carried(2 * v + 1)[0]
        paths.append(path)
    return paths


def vertex_connectivity(G: Graph) -> int:
    """Minimum vertex cut size; ``n - 1`` for complete graphs.

    Scans ``v_0, v_1, ...`` while the index is at most the current bound and
    pairs each with every later non-neighbour.  Some vertex among the first
    ``kappa + 1`` lies outside a minimum cut, and the far side of that cut
    holds only later vertices, so the minimum is reached.
    """
    n = G.n
    if n <= 1:
        return 0
    best = min(G.degree(v) for v in range(n))
    net = SplitNetwork(G)
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if best == 0:
                return 0
            if not G.adjacent(i, j):
                best = min(best, net.max_flow(i, j, cutoff=best)[0])
        i += 1
    return best
