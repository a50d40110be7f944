"""Construction of token graphs and their move-order generalisations.

Derived vertices are indexed by colex rank, so ``configs[i]`` is the bitmask
of the configuration with rank ``i``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapacityError, InvariantError
from .graph import Graph, IsoWitness, induced_subgraph, make_graph
from .subsets import binom, elements, enumerate_ksubsets, popcount, to_mask

MAX_DERIVED = 5_000_000
MODES = ("standard", "matching", "complete")


@dataclass(frozen=True)
class VariantSpec:
    """How many tokens move at once (``r``) and which pairing rule applies.

    ``matching``: the vacated and newly occupied vertices admit a perfect
    matching in the base graph.  ``complete``: every vacated vertex is
    adjacent to every newly occupied one.  Both collapse to ``standard`` at
    ``r == 1``.
    """

    r: int = 1
    mode: str = "standard"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.mode == "standard" and self.r != 1:
            raise ValueError("standard mode moves exactly one token (r = 1)")


STANDARD = VariantSpec()


@dataclass(frozen=True)
class TokenGraph:
    base: Graph
    k: int
    variant: VariantSpec
    derived: Graph
    configs: tuple[int, ...] = field(repr=False)

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.configs)}

    def rank(self, A) -> int:
        mask = A if isinstance(A, int) else to_mask(A)
        try:
            return self.index[mask]
        except KeyError:
            raise ValueError(f"{sorted(elements(mask))} is not a {self.k}-subset of 0..{self.base.n - 1}") from None

    @property
    def is_standard(self) -> bool:
        return self.variant.r == 1


def _check_k(G: Graph, k: int) -> None:
    if not 1 <= k < G.n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={G.n}")
    if binom(G.n, k) > MAX_DERIVED:
        raise CapacityError(f"C({G.n},{k}) = {binom(G.n, k)} exceeds the cap of {MAX_DERIVED} derived vertices")


def _deposit(compact: int, slots: list[int]) -> int:
    """Spread the bits of ``compact`` onto the vertex positions in ``slots``."""
    out = 0
    i = 0
    while compact:
        if compact & 1:
            out |= 1 << slots[i]
        compact >>= 1
        i += 1
    return out


def expected_counts(G: Graph, k: int) -> tuple[int, int]:
    if not 1 <= k < G.n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={G.n}")
    return binom(G.n, k), binom(G.n - 2, k - 1) * G.edge_count


def build_token_graph(G: Graph, k: int) -> TokenGraph:
    """One token slides along one edge.

    Each edge ``ab`` of the base graph is paired with every choice of the
    ``k-1`` tokens that stay put, which emits each derived edge exactly once.
    """
    _check_k(G, k)
    n = G.n
    configs = tuple(enumerate_ksubsets(n, k))
    index = {m: i for i, m in enumerate(configs)}
    adj = [[] for _ in configs]
    for a, b in G.edges():
        rest = [v for v in range(n) if v != a and v != b]
        shared = enumerate_ksubsets(n - 2, k - 1) if k > 1 else (0,)
        for s in shared:
            S = _deposit(s, rest)
            i, j = index[S | 1 << a], index[S | 1 << b]
            adj[i].append(j)
            adj[j].append(i)
    derived = Graph._from_sets(len(configs), adj)
    tg = TokenGraph(G, k, STANDARD, derived, configs)
    tg.__dict__["index"] = index
    return tg


def _has_perfect_matching(G: Graph, left: list[int], right: list[int]) -> bool:
    match_r: dict[int, int] = {}

    def augment(u, seen):
        for w in right:
            if w in seen or not G.adjacent(u, w):
                continue
            seen.add(w)
            if w not in match_r or augment(match_r[w], seen):
                match_r[w] = u
                return True
        return False

    return all(augment(u, set()) for u in left)


def variant_adjacent(G: Graph, A: int, B: int, spec: VariantSpec) -> bool:
    """Adjacency rule for two configurations of equal size under ``spec``."""
    gone, new = A & ~B, B & ~A
    if popcount(gone) != spec.r or popcount(new) != spec.r:
        return False
    left, right = elements(gone), elements(new)
    if spec.mode == "complete":
        return all(G.adjacent(u, w) for u in left for w in right)
    return _has_perfect_matching(G, left, right)


def build_variant_token_graph(G: Graph, k: int, spec: VariantSpec) -> TokenGraph:
    """Token graph where ``spec.r`` tokens move simultaneously.

    Generated by swapping every ``r``-subset of a configuration with every
    ``r``-subset of its complement, then filtering by the mode's rule.
    """
    _check_k(G, k)
    if spec.r > k or spec.r > G.n - k:
        raise ValueError(f"r={spec.r} needs r <= k={k} and r <= n-k={G.n - k}")
    if spec.mode == "standard":
        return build_token_graph(G, k)
    n = G.n
    configs = tuple(enumerate_ksubsets(n, k))
    index = {m: i for i, m in enumerate(configs)}
    adj = [[] for _ in configs]
    for i, A in enumerate(configs):
        inside = elements(A)
        outside = [v for v in range(n) if not A >> v & 1]
        for R in itertools.combinations(inside, spec.r):
            base = A & ~to_mask(R)
            for T in itertools.combinations(outside, spec.r):
                B = base | to_mask(T)
                j = index[B]
                if i < j and variant_adjacent(G, A, B, spec):
                    adj[i].append(j)
                    adj[j].append(i)
    derived = Graph._from_sets(len(configs), adj)
    tg = TokenGraph(G, k, spec, derived, configs)
    tg.__dict__["index"] = index
    return tg


def token_degree(TG: TokenGraph, A) -> int:
    """Degree of ``A``, cross-checked against the number of cut edges."""
    if not TG.is_standard:
        raise ValueError("token_degree applies to the standard token graph only")
    i = TG.rank(A)
    mask = TG.configs[i]
    listed = TG.derived.degree(i)
    cut = sum(1 for a, b in TG.base.edges() if (mask >> a & 1) != (mask >> b & 1))
    if listed != cut:
        raise InvariantError(f"degree {listed} of {elements(mask)} disagrees with cut size {cut}")
    return listed


def complement_bijection(TG: TokenGraph) -> IsoWitness:
    """Verified isomorphism ``A -> V \\ A`` onto the token graph with ``n-k`` tokens."""
    if not TG.is_standard:
        raise ValueError("complement_bijection applies to the standard token graph only")
    n = TG.base.n
    full = (1 << n) - 1
    other = build_token_graph(TG.base, n - TG.k)
    w = IsoWitness(tuple(other.index[full ^ m] for m in TG.configs))
    if not w.check(TG.derived, other.derived):
        raise InvariantError("complement map is not an isomorphism")
    return w


@dataclass(frozen=True)
class FixedTokenView:
    """Configurations that contain a fixed set ``X``.

    ``subgraph`` is the induced subgraph on those configurations (vertex ``i``
    is configuration ``configs[i]``); ``witness`` maps it onto ``reduced``, the
    token graph of the base graph with ``X`` deleted, carrying ``k - |X|``
    tokens.  ``kept`` lists the base vertices of the reduced graph in order.
    """

    subgraph: Graph
    configs: tuple[int, ...]
    reduced: Graph
    kept: tuple[int, ...]
    witness: IsoWitness


def fixed_token_subgraph(TG: TokenGraph, X) -> FixedTokenView:
    if not TG.is_standard:
        raise ValueError("fixed_token_subgraph applies to the standard token graph only")
    xmask = X if isinstance(X, int) else to_mask(X)
    if xmask >> TG.base.n:
        raise ValueError(f"X has vertices outside 0..{TG.base.n - 1}")
    r = popcount(xmask)
    if r > TG.k:
        raise ValueError(f"|X| = {r} exceeds k = {TG.k}")
    chosen = [i for i, m in enumerate(TG.configs) if m & xmask == xmask]
    sub, _ = induced_subgraph(TG.derived, chosen)
    configs = tuple(TG.configs[i] for i in chosen)
    rest_graph, kept = induced_subgraph(TG.base, [v for v in range(TG.base.n) if not xmask >> v & 1])
    slot = {v: i for i, v in enumerate(kept)}

    def compress(m):
        return to_mask(slot[v] for v in elements(m & ~xmask))

    if r == TG.k:
        # every token is fixed: a single configuration, the graph K_1
        reduced = make_graph(1, [])
        w = IsoWitness((0,))
    else:
        small = build_token_graph(rest_graph, TG.k - r)
        reduced = small.derived
        w = IsoWitness(tuple(small.index[compress(m)] for m in configs))
    if not w.check(sub, reduced):
        raise InvariantError("fixed-token map is not an isomorphism")
    return FixedTokenView(sub, configs, reduced, kept, w)
