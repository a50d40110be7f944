"""Structural invariants of graphs and token graphs.

Exact solvers (clique, chromatic number, Hamiltonian path) double as oracles
for the closed-form results implemented alongside them.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceeded, CapacityError, InvariantError
from .flow import vertex_connectivity  # noqa: F401  re-exported
from .graph import Graph, cartesian_product, induced_subgraph, make_graph
from .gray import gray_code_masks
from .paths import ConfigPath, is_token_step
from .subsets import binom, elements, enumerate_ksubsets, popcount, to_mask
from .token import build_token_graph

INFINITE = math.inf


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- distances ----------------------------------------------------------------

def eccentricities(G: Graph) -> list[float]:
    out = []
    for s in range(G.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        out.append(max(dist.values()) if len(dist) == G.n else INFINITE)
    return out


def diameter(G: Graph) -> float:
    """Largest eccentricity; ``math.inf`` when the graph is disconnected."""
    if G.n == 0:
        return 0
    return max(eccentricities(G))


# -- cliques ------------------------------------------------------------------

def clique_number_exact(G: Graph) -> tuple[int, list[int]]:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    masks = G.masks
    best: list[int] = [0] if G.n else []

    def colour_bound(P: int):
        # greedy colour classes; vertices come out with their class index
        order, bounds = [], []
        colour = 0
        rest = P
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~masks[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(R: list[int], P: int):
        nonlocal best
        order, bounds = colour_bound(P)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + bounds[idx] <= len(best):
                return
            v = order[idx]
            R.append(v)
            nxt = P & masks[v]
            if nxt:
                expand(R, nxt)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    if G.n:
        expand([], (1 << G.n) - 1)
    return len(best), sorted(best)


def clique_number_formula(G: Graph, k: int, omega: int | None = None) -> int:
    n = G.n
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if omega is None:
        omega = clique_number_exact(G)[0]
    value = min(omega, max(n - k + 1, k + 1))
    if 2 * k <= n and value != min(omega, n - k + 1):
        raise InvariantError("clique formula disagrees with its k <= n/2 simplification")
    return value


@dataclass(frozen=True)
class CliqueWitness:
    """A clique of the token graph described by a base clique and a fixed set.

    Form ``a``: ``{S + v : v in K}`` with ``|S| = k - 1``.
    Form ``b``: ``{(S + K) - v : v in K}`` with ``|S| + |K| = k + 1``.
    """

    S: int
    K: tuple[int, ...]
    form: str

    def expand(self) -> list[int]:
        if self.form == "a":
            return [self.S | 1 << v for v in self.K]
        union = self.S | to_mask(self.K)
        return [union & ~(1 << v) for v in self.K]


def is_clique_in_token_graph(G: Graph, configs: Sequence[int]) -> bool:
    return all(is_token_step(G, a, b) for i, a in enumerate(configs) for b in configs[i + 1:])


def triangle_dichotomy(A: int, B: int, C: int) -> tuple[bool, bool]:
    """``(B & C inside A, A inside B | C)`` for a triangle of configurations."""
    return (B & C) & ~A == 0, A & ~(B | C) == 0


def clique_witnesses(G: Graph, k: int) -> list[CliqueWitness]:
    n = G.n
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    omega, K = clique_number_exact(G)
    out = []
    for form, size in (("a", min(omega, n - k + 1)), ("b", min(omega, k + 1))):
        Kp = tuple(K[:size])
        need = k - 1 if form == "a" else k + 1 - size
        outside = [v for v in range(n) if v not in Kp][:need]
        w = CliqueWitness(to_mask(outside), Kp, form)
        configs = w.expand()
        if any(popcount(c) != k for c in configs) or not is_clique_in_token_graph(G, configs):
            raise InvariantError(f"form-{form} witness does not expand to a clique")
        out.append(w)
    return out


# -- colourings ---------------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    class_count: int

    def is_proper(self, G: Graph) -> bool:
        if len(self.colors) != G.n:
            return False
        if any(not 0 <= c < self.class_count for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges())

    @property
    def used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring
    exact: bool
    nodes: int

    @property
    def value(self) -> int:
        if not self.exact:
            raise BudgetExceeded(
                f"chromatic number only bracketed in [{self.lower}, {self.upper}]", (self.lower, self.upper)
            )
        return self.upper


def _dsatur_greedy(G: Graph) -> list[int]:
    colour = [-1] * G.n
    sat = [set() for _ in range(G.n)]
    for _ in range(G.n):
        v = max((u for u in range(G.n) if colour[u] < 0), key=lambda u: (len(sat[u]), G.degree(u), -u))
        c = 0
        while c in sat[v]:
            c += 1
        colour[v] = c
        for w in G.nbrs[v]:
            sat[w].add(c)
    return colour


def chromatic_number_exact(G: Graph, budget: int = 10**7, max_vertices: int = 2000) -> ChromaticResult:
    """DSATUR branch and bound.

    Past ``budget`` search nodes the result is returned with ``exact=False``
    and the best bracket found.
    """
    if G.n > max_vertices:
        raise CapacityError(f"exact colouring limited to {max_vertices} vertices, got {G.n}")
    if G.n == 0:
        return ChromaticResult(0, 0, Coloring((), 0), True, 0)
    greedy = _dsatur_greedy(G)
    best = list(greedy)
    upper = max(greedy) + 1
    omega, K = clique_number_exact(G)
    lower = omega
    nodes = 0
    exhausted = False
    if lower < upper:
        n = G.n
        colour = [-1] * n
        # neighbour colour counts per vertex, to maintain saturation incrementally
        seen = [[0] * upper for _ in range(n)]
        sat = [0] * n
        for i, v in enumerate(K):
            colour[v] = i
            for w in G.nbrs[v]:
                if seen[w][i] == 0:
                    sat[w] += 1
                seen[w][i] += 1

        def assign(v, c, sign):
            for w in G.nbrs[v]:
                if sign > 0:
                    if seen[w][c] == 0:
                        sat[w] += 1
                    seen[w][c] += 1
                else:
                    seen[w][c] -= 1
                    if seen[w][c] == 0:
                        sat[w] -= 1

        def search(done, used):
            nonlocal upper, best, nodes, exhausted
            nodes += 1
            if nodes > budget:
                exhausted = True
                return
            if done == n:
                if used < upper:
                    upper = used
                    best = list(colour)
                return
            v = -1
            key = None
            for u in range(n):
                if colour[u] < 0:
                    kk = (sat[u], G.degree(u))
                    if key is None or kk > key:
                        key, v = kk, u
            for c in range(min(used + 1, upper - 1)):
                if seen[v][c]:
                    continue
                colour[v] = c
                assign(v, c, 1)
                search(done + 1, max(used, c + 1))
                assign(v, c, -1)
                colour[v] = -1
                if upper == lower or exhausted:
                    return

        search(len(K), len(K))
    col = Coloring(tuple(best), upper)
    if not col.is_proper(G):
        raise InvariantError("colouring search returned an improper colouring")
    exact = lower == upper or not exhausted
    return ChromaticResult(upper if exact else lower, upper, col, exact, nodes)


def token_coloring(G: Graph, k: int, c: Coloring) -> Coloring:
    """Colour a configuration by the sum of its vertices' colours modulo the class count."""
    if not c.is_proper(G):
        raise ValueError("input colouring is not proper")
    q = c.class_count
    tg = build_token_graph(G, k)
    out = Coloring(tuple(sum(c.colors[v] for v in _bits(m)) % q for m in tg.configs), q)
    if not out.is_proper(tg.derived):
        raise InvariantError("summed colouring is not proper on the token graph")
    return out


def chromatic_lower_bounds(G: Graph, k: int, chi: int | None = None) -> tuple[Fraction, Fraction]:
    """Two lower bounds on the token graph's chromatic number, as exact rationals."""
    n = G.n
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if chi is None:
        chi = chromatic_number_exact(G).value
    return Fraction(n - k + 2, n) * chi - 1, (Fraction(1, 2) + Fraction(2, n)) * chi - 1


# -- bipartiteness and odd cycles ---------------------------------------------

def is_bipartite(G: Graph) -> tuple[bool, list[int] | None]:
    """BFS two-colouring; on failure returns an odd cycle as a vertex list."""
    side = [-1] * G.n
    parent = [-1] * G.n
    depth = [0] * G.n
    for root in range(G.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.nbrs[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    x, y = u, w
                    left, right = [x], [y]
                    while depth[x] > depth[y]:
                        x = parent[x]
                        left.append(x)
                    while depth[y] > depth[x]:
                        y = parent[y]
                        right.append(y)
                    while x != y:
                        x, y = parent[x], parent[y]
                        left.append(x)
                        right.append(y)
                    return False, left + right[-2::-1]
    return True, None


def bipartition(G: Graph) -> list[int] | None:
    ok, _ = is_bipartite(G)
    if not ok:
        return None
    side = [-1] * G.n
    for root in range(G.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in G.nbrs[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
    return side


def _check_cycle(G: Graph, C: Sequence[int]) -> None:
    p = len(C)
    if p < 3 or len(set(C)) != p:
        raise ValueError("a cycle needs at least three distinct vertices")
    for i in range(p):
        if not G.adjacent(C[i], C[(i + 1) % p]):
            raise ValueError(f"{C[i]}-{C[(i + 1) % p]} is not an edge")


def odd_cycle_lift(G: Graph, C: Sequence[int], k: int) -> ConfigPath:
    """An odd cycle of the k-token graph built from an odd cycle of the base graph.

    Returned as a closed walk (first configuration repeated at the end).  When
    the cycle is too short for ``k`` tokens, the lowest-numbered vertices off
    the cycle hold the surplus tokens still.
    """
    C = list(C)
    _check_cycle(G, C)
    p = len(C)
    if p % 2 == 0:
        raise ValueError(f"cycle length {p} is even")
    if not 1 <= k < G.n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={G.n}")
    anchor = 0
    tokens = k
    if p <= k:
        off = [v for v in range(G.n) if v not in C]
        need = k - p + 1
        if len(off) < need:
            raise ValueError(f"need {need} vertices off the cycle to park tokens, only {len(off)} exist")
        anchor = to_mask(off[:need])
        tokens = p - 1
    base = C[: tokens - 1]
    cycle = [to_mask(base + [C[j]]) for j in range(tokens - 1, p)]
    # walk the remaining tokens forward one slot each, back to front
    cur = cycle[-1]
    for i in range(tokens - 2, -1, -1):
        cur = cur & ~(1 << C[i]) | 1 << C[i + 1]
        cycle.append(cur)
    cycle = [m | anchor for m in cycle]
    walk = ConfigPath(tuple(cycle + [cycle[0]]))
    if len(set(cycle)) != p or walk.length % 2 == 0 or not walk.is_valid(G):
        raise InvariantError("lifted cycle failed its validity check")
    if any(popcount(m) != k for m in cycle):
        raise InvariantError("lifted cycle has the wrong token count")
    return walk


# -- Hamiltonian paths --------------------------------------------------------

@dataclass(frozen=True)
class HamiltonResult:
    status: str  # "found" | "none" | "unknown"
    path: tuple[int, ...] | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def hamiltonian_path(G: Graph, budget: int = 2_000_000) -> HamiltonResult:
    """Depth-first search for a Hamiltonian path with pruning.

    Prunes on connectivity of the unvisited part, on vertices that can only be
    the final vertex, and, for bipartite graphs, on colour-class counts.
    Running out of ``budget`` nodes yields status ``unknown``.
    """
    n = G.n
    if n == 0:
        return HamiltonResult("none", None, 0)
    if n == 1:
        return HamiltonResult("found", (0,), 0)
    from .graph import is_connected

    if not is_connected(G):
        return HamiltonResult("none", None, 0)
    masks = G.masks
    full = (1 << n) - 1
    leaves = [v for v in range(n) if G.degree(v) == 1]
    if len(leaves) > 2:
        return HamiltonResult("none", None, 0)
    side = bipartition(G)
    side_mask = [0, 0]
    if side is not None:
        for v in range(n):
            side_mask[side[v]] |= 1 << v
        diff = popcount(side_mask[0]) - popcount(side_mask[1])
        if abs(diff) > 1:
            return HamiltonResult("none", None, 0)

    starts = list(range(n))
    if leaves:
        starts = leaves[:1] if len(leaves) == 2 else leaves
    elif side is not None:
        if diff == 0:
            starts = [v for v in starts if side[v] == 0]
        else:
            big = 0 if diff > 0 else 1
            starts = [v for v in starts if side[v] == big]

    nodes = 0
    path: list[int] = []

    def feasible(cur: int, unvisited: int) -> bool:
        if not unvisited:
            return True
        if side is not None:
            r = popcount(unvisited)
            other = popcount(unvisited & side_mask[1 - side[cur]])
            if other != (r + 1) // 2:
                return False
        avail = unvisited | 1 << cur
        ends = 0
        for u in _bits(unvisited):
            d = popcount(masks[u] & avail)
            if d == 0:
                return False
            if d == 1:
                ends += 1
                if ends > 1:
                    return False
        if not masks[cur] & unvisited:
            return False
        # the unvisited vertices must form one connected piece
        start = (unvisited & -unvisited)
        seen = start
        frontier = start
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= masks[u]
            frontier = grow & unvisited & ~seen
            seen |= frontier
        return seen == unvisited

    def dfs(cur: int, unvisited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("hamiltonian search budget exhausted")
        if not unvisited:
            return True
        if not feasible(cur, unvisited):
            return False
        nxt = sorted(_bits(masks[cur] & unvisited), key=lambda u: (popcount(masks[u] & unvisited), u))
        for u in nxt:
            path.append(u)
            if dfs(u, unvisited & ~(1 << u)):
                return True
            path.pop()
        return False

    try:
        for s in starts:
            path[:] = [s]
            if dfs(s, full & ~(1 << s)):
                found = tuple(path)
                if sorted(found) != list(range(n)) or not all(G.adjacent(a, b) for a, b in zip(found, found[1:])):
                    raise InvariantError("hamiltonian search returned an invalid path")
                return HamiltonResult("found", found, nodes)
    except BudgetExceeded:
        return HamiltonResult("unknown", None, nodes)
    return HamiltonResult("none", None, nodes)


def gray_code_ham_path(n: int, k: int) -> ConfigPath:
    """Hamiltonian path of the k-token graph of the n-vertex path (n even, k odd)."""
    seq = gray_code_masks(n, k)
    path = ConfigPath(tuple(seq))
    path_graph = make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if len(seq) != binom(n, k) or not path.is_valid(path_graph):
        raise InvariantError("Gray code failed coverage or step validation")
    return path


def bipartite_imbalance(m: int, k: int) -> int:
    """Even-side minus odd-side count of k-subsets of K_{m,m}, split by parity of the left share.

    Computed from the closed form and by enumeration; the two must agree.
    """
    if not 1 <= k <= 2 * m:
        raise ValueError(f"need 1 <= k <= 2m, got m={m}, k={k}")
    closed = (-1) ** (k // 2) * binom(m, k // 2) if k % 2 == 0 else 0
    left = (1 << m) - 1
    counted = sum(1 if popcount(A & left) % 2 == 0 else -1 for A in enumerate_ksubsets(2 * m, k))
    if closed != counted:
        raise InvariantError(f"imbalance formula {closed} disagrees with enumeration {counted}")
    return closed


# -- product embeddings -------------------------------------------------------

@dataclass(frozen=True)
class ProductEmbedding:
    """Union map from a product of smaller token graphs into the k-token graph.

    Product vertex ``i`` is sent to configuration ``images[i]``.
    """

    product: Graph
    images: tuple[int, ...]
    k: int


def product_embedding(G: Graph, parts: Sequence[tuple[Sequence[int], int]]) -> ProductEmbedding:
    if not parts:
        raise ValueError("need at least one part")
    seen = 0
    factors = []
    for verts, s in parts:
        vm = to_mask(verts)
        if vm >> G.n:
            raise ValueError(f"part {sorted(verts)} leaves 0..{G.n - 1}")
        if vm & seen:
            raise ValueError("parts overlap")
        seen |= vm
        size = popcount(vm)
        if not 1 <= s <= size:
            raise ValueError(f"part of size {size} cannot carry {s} tokens")
        sub, kept = induced_subgraph(G, verts)
        if s == size:
            # every vertex occupied: the token graph is a single configuration
            fg, confs = make_graph(1, []), ((1 << size) - 1,)
        else:
            tg = build_token_graph(sub, s)
            fg, confs = tg.derived, tg.configs
        lifted = tuple(to_mask(kept[i] for i in _bits(c)) for c in confs)
        factors.append((fg, lifted))
    product, images = factors[0][0], list(factors[0][1])
    for fg, lifted in factors[1:]:
        product, pairs = cartesian_product(product, fg)
        images = [images[g] | lifted[h] for g, h in pairs]
    k = sum(s for _, s in parts)
    if len(set(images)) != len(images):
        raise InvariantError("union map is not injective")
    for i in range(product.n):
        for j in range(i + 1, product.n):
            if product.adjacent(i, j) != is_token_step(G, images[i], images[j]):
                raise InvariantError(f"union map breaks induced adjacency at {elements(images[i])}, {elements(images[j])}")
    return ProductEmbedding(product, tuple(images), k)
