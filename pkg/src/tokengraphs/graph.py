"""Small undirected simple graphs on dense integer vertices.

Vertices are ``0..n-1``.  Neighbourhoods are stored as sorted tuples; a
bitmask view (bit ``v`` set in ``masks[u]`` iff ``u ~ v``) is built lazily for
the search routines that want O(1) set algebra.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InvariantError

ISO_LIMIT = 16
CANON_LIMIT = 8


@dataclass(frozen=True)
class Graph:
    n: int
    nbrs: tuple[tuple[int, ...], ...]
    edge_count: int = field(compare=False)

    @classmethod
    def _from_sets(cls, n: int, adj: Sequence[Iterable[int]]) -> "Graph":
        nbrs = tuple(tuple(sorted(a)) for a in adj)
        return cls(n, nbrs, sum(len(a) for a in nbrs) // 2)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for a in self.nbrs:
            m = 0
            for v in a:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    @cached_property
    def _sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.nbrs)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, a in enumerate(self.nbrs):
            for v in a:
                if u < v:
                    yield u, v

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.nbrs), reverse=True))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class IsoWitness:
    """Vertex bijection from a source graph onto a target graph."""

    mapping: tuple[int, ...]

    def check(self, G: Graph, H: Graph) -> bool:
        """Independent edge-preservation recheck (both directions)."""
        f = self.mapping
        if G.n != H.n or len(f) != G.n or sorted(f) != list(range(H.n)):
            return False
        if G.edge_count != H.edge_count:
            return False
        return all(H.adjacent(f[u], f[v]) for u, v in G.edges())

    def inverse(self) -> "IsoWitness":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return IsoWitness(tuple(inv))


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {e} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph._from_sets(n, adj)


def family(kind: str, *params: int) -> Graph:
    """Named graph families.

    ``path(n)``, ``cycle(n)``, ``complete(n)``, ``complete_bipartite(m1, m2)``,
    ``star(leaves)`` (centre is vertex 0) and ``diameter_tree(delta, k)``: a
    path on ``delta-1`` vertices (indices ``0..delta-2``) with ``k`` extra
    leaves on each end, so diameter ``delta``.
    """
    def need(count):
        if len(params) != count:
            raise ValueError(f"{kind} takes {count} parameter(s), got {len(params)}")

    if kind == "path":
        need(1)
        (n,) = params
        if n < 1:
            raise ValueError("path needs n >= 1")
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return make_graph(n, itertools.combinations(range(n), 2))
    if kind == "complete_bipartite":
        need(2)
        m1, m2 = params
        if m1 < 1 or m2 < 1:
            raise ValueError("complete_bipartite needs both sides >= 1")
        return make_graph(m1 + m2, [(i, m1 + j) for i in range(m1) for j in range(m2)])
    if kind == "star":
        need(1)
        (leaves,) = params
        if leaves < 1:
            raise ValueError("star needs at least one leaf")
        return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    if kind == "diameter_tree":
        need(2)
        delta, k = params
        if delta < 2 or k < 1:
            raise ValueError("diameter_tree needs delta >= 2 and k >= 1")
        spine = delta - 1
        edges = [(i, i + 1) for i in range(spine - 1)]
        nxt = spine
        for end in (0, spine - 1):
            for _ in range(k):
                edges.append((end, nxt))
                nxt += 1
        return make_graph(nxt, edges)
    raise ValueError(f"unknown graph family {kind!r}")


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[S], verts)`` where new vertex ``i`` is old vertex ``verts[i]``."""
    verts = tuple(sorted(set(S)))
    for v in verts:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} outside 0..{G.n - 1}")
    index = {v: i for i, v in enumerate(verts)}
    adj = [[index[w] for w in G.nbrs[v] if w in index] for v in verts]
    return Graph._from_sets(len(verts), adj), verts


def cartesian_product(G: Graph, H: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """``G □ H`` with vertex ``g * H.n + h`` standing for the pair ``(g, h)``."""
    m = H.n
    adj = [[] for _ in range(G.n * m)]
    for g in range(G.n):
        for h in range(m):
            i = g * m + h
            adj[i].extend(g * m + h2 for h2 in H.nbrs[h])
            adj[i].extend(g2 * m + h for g2 in G.nbrs[g])
    pairs = tuple((g, h) for g in range(G.n) for h in range(m))
    return Graph._from_sets(G.n * m, adj), pairs


def permute(G: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    return make_graph(G.n, ((perm[u], perm[v]) for u, v in G.edges()))


def complement(G: Graph) -> Graph:
    return make_graph(G.n, (e for e in itertools.combinations(range(G.n), 2) if not G.adjacent(*e)))


def subdivide(G: Graph) -> Graph:
    """Replace every edge by a path of length two (new vertices appended in edge order)."""
    edges = []
    nxt = G.n
    for u, v in G.edges():
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return make_graph(nxt, edges)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in G.nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


# -- colour refinement -------------------------------------------------------

def refine_colours(G: Graph, initial: Sequence | None = None) -> list[int]:
    """Stable 1-dimensional Weisfeiler-Leman colouring.

    Colour ids are ranks of sorted signatures, so they are isomorphism
    invariant and can be compared across graphs refined the same way.
    """
    cur = list(initial) if initial is not None else [len(a) for a in G.nbrs]
    ids = {c: i for i, c in enumerate(sorted(set(cur)))}
    cur = [ids[c] for c in cur]
    while True:
        sigs = [(cur[v], tuple(sorted(cur[w] for w in G.nbrs[v]))) for v in range(G.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [ids[s] for s in sigs]
        if len(ids) == len(set(cur)):
            return nxt
        cur = nxt


def _joint_colours(G: Graph, H: Graph) -> tuple[list[int], list[int]]:
    union = Graph._from_sets(
        G.n + H.n, [a for a in G.nbrs] + [[w + G.n for w in a] for a in H.nbrs]
    )
    cols = refine_colours(union)
    return cols[: G.n], cols[G.n:]


def are_isomorphic(G: Graph, H: Graph, limit: int = ISO_LIMIT) -> IsoWitness | None:
    """Backtracking isomorphism test with colour-refinement pruning.

    Returns a checked witness, or ``None`` if the graphs are not isomorphic.
    """
    if max(G.n, H.n) > limit:
        raise CapacityError(f"isomorphism test limited to {limit} vertices, got {max(G.n, H.n)}")
    if G.n != H.n or G.edge_count != H.edge_count or G.degree_sequence() != H.degree_sequence():
        return None
    n = G.n
    cg, ch = _joint_colours(G, H)
    if sorted(cg) != sorted(ch):
        return None

    # Map G's vertices rarest colour first, preferring neighbours of mapped ones.
    freq = {c: cg.count(c) for c in cg}
    order: list[int] = []
    placed = set()
    while len(order) < n:
        frontier = [v for v in range(n) if v not in placed and any(w in placed for w in G.nbrs[v])]
        pool = frontier or [v for v in range(n) if v not in placed]
        v = min(pool, key=lambda x: (freq[cg[x]], x))
        order.append(v)
        placed.add(v)

    gm, hm = G.masks, H.masks
    f = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for h in range(n):
            if used[h] or ch[h] != cg[v]:
                continue
            ok = True
            for u in order[:i]:
                if ((gm[v] >> u) & 1) != ((hm[h] >> f[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            f[v] = h
            used[h] = True
            if extend(i + 1):
                return True
            used[h] = False
        f[v] = -1
        return False

    if not extend(0):
        return None
    w = IsoWitness(tuple(f))
    if not w.check(G, H):
        raise InvariantError("isomorphism witness failed its recheck")
    return w


def canonical_form(G: Graph, limit: int = CANON_LIMIT) -> str:
    """Certificate string, equal for two graphs iff they are isomorphic.

    Maximises the upper-triangle adjacency bits (read column by column) over
    all vertex orders that list refinement colours in increasing order.
    """
    if G.n > limit:
        raise CapacityError(f"canonical_form limited to {limit} vertices, got {G.n}")
    n = G.n
    if n == 0:
        return "0:"
    cols = refine_colours(G)
    slots = sorted(cols)
    masks = G.masks
    best: list[int] | None = None
    chosen: list[int] = []
    bits: list[int] = []

    def search(pos: int, better: bool) -> None:
        nonlocal best
        if pos == n:
            if best is None or bits > best:
                best = list(bits)
            return
        tried: list[int] = []
        for v in range(n):
            if cols[v] != slots[pos] or v in chosen:
                continue
            # swapping twins is an automorphism fixing the prefix: same subtree
            if any(masks[v] & ~(1 << u) == masks[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            col = [(masks[v] >> u) & 1 for u in chosen]
            start = len(bits)
            bits.extend(col)
            now_better = better
            if best is not None and not better:
                prefix = best[start:len(bits)]
                if col < prefix:
                    del bits[start:]
                    continue
                now_better = col > prefix
            chosen.append(v)
            search(pos + 1, now_better)
            chosen.pop()
            del bits[start:]

    search(0, False)
    return f"{n}:" + "".join(map(str, best))
