"""Exhaustive theorem checks over small-graph corpora.

Each suite turns its parameters into a list of picklable tasks (graphs travel
as graph6 strings), checks every task independently, and merges results in
task order so a run is reproducible whatever the worker count.
"""
from __future__ import annotations

import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import CapacityError, InvariantError, TokenGraphError
from .flow import disjoint_paths, vertex_connectivity
from .formats import from_graph6, read_graph6_file, to_graph6
from .graph import (
    Graph,
    IsoWitness,
    are_isomorphic,
    canonical_form,
    cartesian_product,
    family,
    is_connected,
    make_graph,
    subdivide,
)
from .invariants import (
    bipartite_imbalance,
    chromatic_lower_bounds,
    chromatic_number_exact,
    clique_number_exact,
    clique_number_formula,
    clique_witnesses,
    diameter,
    gray_code_ham_path,
    hamiltonian_path,
    is_bipartite,
    odd_cycle_lift,
    product_embedding,
    token_coloring,
    triangle_dichotomy,
)
from .paths import (
    ConfigPath,
    RedBlueInstance,
    check_internally_disjoint,
    disjoint_path_family,
    red_blue_matching,
)
from .subsets import binom, elements, popcount, to_mask
from .token import (
    VariantSpec,
    build_token_graph,
    build_variant_token_graph,
    complement_bijection,
    expected_counts,
    fixed_token_subgraph,
    token_degree,
)

BUILTIN_MAX_N = 7
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
SCAN_LIMIT = 40
CONJECTURE_FLAG = "CONJECTURE COUNTEREXAMPLE?"


# -- corpora ------------------------------------------------------------------

@dataclass(frozen=True)
class GraphCorpus:
    n: int
    members: tuple[Graph, ...]
    source: str  # "generated" | "ingested"

    def __len__(self):
        return len(self.members)


@lru_cache(maxsize=None)
def enumerate_nonisomorphic_graphs(n: int) -> GraphCorpus:
    """One graph per isomorphism class on ``n`` vertices.

    Grows the classes on ``n - 1`` vertices by one vertex attached to every
    possible neighbour set, keeping the first graph seen per canonical form.
    Every graph arises this way since deleting its last vertex lands in some
    smaller class.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > BUILTIN_MAX_N:
        raise CapacityError(f"built-in corpus stops at n={BUILTIN_MAX_N}; supply a graph6 corpus file for n={n}")
    if n == 1:
        return GraphCorpus(1, (make_graph(1, []),), "generated")
    seen: dict[str, Graph] = {}
    for G in enumerate_nonisomorphic_graphs(n - 1).members:
        base = list(G.edges())
        for nb in range(1 << (n - 1)):
            H = make_graph(n, base + [(v, n - 1) for v in range(n - 1) if nb >> v & 1])
            seen.setdefault(canonical_form(H), H)
    members = tuple(seen[c] for c in sorted(seen))
    if len(members) != KNOWN_COUNTS[n]:
        raise InvariantError(f"corpus for n={n} has {len(members)} classes, expected {KNOWN_COUNTS[n]}")
    return GraphCorpus(n, members, "generated")


def load_corpus(path: str) -> dict[int, GraphCorpus]:
    """Ingest a graph6 file, grouped by vertex count, dropping duplicates where canonical forms are cheap."""
    groups: dict[int, list[Graph]] = {}
    for G in read_graph6_file(path):
        groups.setdefault(G.n, []).append(G)
    out = {}
    for n, graphs in sorted(groups.items()):
        if n <= 8:
            uniq: dict[str, Graph] = {}
            for G in graphs:
                uniq.setdefault(canonical_form(G), G)
            graphs = list(uniq.values())
        out[n] = GraphCorpus(n, tuple(graphs), "ingested")
    return out


def corpus_for(n: int, ingested: dict[int, GraphCorpus] | None = None) -> GraphCorpus:
    if ingested and n in ingested:
        return ingested[n]
    return enumerate_nonisomorphic_graphs(n)


# -- reports ------------------------------------------------------------------

@dataclass
class Violation:
    instance: dict
    expected: object
    observed: object


@dataclass
class SuiteParams:
    min_n: int = 2
    max_n: int | None = None
    k_min: int = 1
    k_max: int | None = None
    seed: int = 0
    budget: int = 1_000_000
    samples: int = 10
    max_derived: int = 60
    threads: int = 1
    corpus_file: str | None = None


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    skipped: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        # runtime stays out so identical runs serialise identically
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "checked": self.checked,
            "violations": [asdict(v) for v in self.violations],
            "skipped": dict(sorted(self.skipped.items())),
            "data": self.data,
        }


@dataclass
class _Result:
    checked: int = 0
    violations: list = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)
    data: dict = field(default_factory=dict)

    def expect(self, instance: dict, expected, observed, ok: bool | None = None) -> None:
        self.checked += 1
        if not (expected == observed if ok is None else ok):
            self.violations.append(Violation(instance, expected, observed))

    def guard(self, instance: dict, fn: Callable[[], object]):
        """Run ``fn``; an internal self-check failure becomes a violation."""
        try:
            return fn()
        except InvariantError as exc:
            self.checked += 1
            self.violations.append(Violation(instance, "self-check passes", str(exc)))
            return None


def _desc(G: Graph, k: int | None = None, **extra) -> dict:
    d = {"graph6": to_graph6(G)}
    if k is not None:
        d["k"] = k
    d.update(extra)
    return d


def _corpus_tasks(p: SuiteParams, default_max_n: int, default_k_max: int | None, connected_only=False,
                  derived_cap: int | None = None, extra=()):
    ingested = load_corpus(p.corpus_file) if p.corpus_file else None
    max_n = p.max_n if p.max_n is not None else default_max_n
    k_max = p.k_max if p.k_max is not None else default_k_max
    tasks = []
    for n in range(max(p.min_n, 2), max_n + 1):
        for G in corpus_for(n, ingested).members:
            g6 = to_graph6(G)
            for k in range(p.k_min, n):
                if k_max is not None and k > k_max:
                    break
                tasks.append((g6, k, derived_cap) + tuple(extra))
    return tasks


# -- suites -------------------------------------------------------------------

def _counts_task(task) -> _Result:
    g6, k, _ = task
    G = from_graph6(g6)
    out = _Result()
    d = _desc(G, k)
    tg = build_token_graph(G, k)
    out.expect(d, list(expected_counts(G, k)), [tg.derived.n, tg.derived.edge_count])
    for A in tg.configs:
        out.guard({**d, "A": elements(A)}, lambda: token_degree(tg, A))
    out.checked += 1
    return out


def _diameter_task(task) -> _Result:
    g6, k, _ = task
    G = from_graph6(g6)
    out = _Result()
    if not is_connected(G):
        out.skipped["base graph disconnected"] += 1
        return out
    delta = diameter(G)
    observed = diameter(build_token_graph(G, k).derived)
    lo, hi = k * (delta - k + 1), k * delta
    out.expect(_desc(G, k), f"{lo} <= diam <= {hi}", observed, lo <= observed <= hi)
    return out


def _diameter_fixed(p: SuiteParams) -> _Result:
    out = _Result()
    for G, k, want in [
        (family("path", 4), 2, 4),
        (family("path", 5), 2, 6),
        (family("diameter_tree", 4, 2), 2, 8),
    ]:
        out.expect(_desc(G, k), want, diameter(build_token_graph(G, k).derived))
    # paths attain the lower bound and the extremal trees the upper bound
    for n in range(2, (p.max_n or 7) + 2):
        for k in range(1, n):
            out.expect(_desc(family("path", n), k), k * (n - k), diameter(build_token_graph(family("path", n), k).derived))
    for delta in range(2, 6):
        for k in range(1, 4):
            T = family("diameter_tree", delta, k)
            if binom(T.n, k) <= 5000:
                out.expect(_desc(T, k), delta * k, diameter(build_token_graph(T, k).derived))
    return out


@lru_cache(maxsize=4096)
def _kappa(g6: str) -> int:
    return vertex_connectivity(from_graph6(g6))


@lru_cache(maxsize=4096)
def _token_kappa_cached(g6: str, k: int) -> int:
    return vertex_connectivity(build_token_graph(from_graph6(g6), k).derived)


def _token_kappa(g6: str, k: int) -> int:
    # the k and n-k token graphs are isomorphic, so one computation serves both
    n = from_graph6(g6).n
    return _token_kappa_cached(g6, min(k, n - k))


def _connectivity_task(task) -> _Result:
    g6, k, cap = task
    G = from_graph6(g6)
    out = _Result()
    n = G.n
    if not is_connected(G):
        out.skipped["base graph disconnected"] += 1
        return out
    if binom(n, k) > cap:
        out.skipped[f"C(n,k) > {cap}"] += 1
        return out
    t = _kappa(g6)
    kf = _token_kappa(g6, k)
    d = _desc(G, k, t=t)
    out.expect(d, f">= {t}", kf, kf >= t)
    evidence = out.data.setdefault("conjecture", {"instances": 0, "holds": 0, "fails": []})
    if t >= k:
        bound = k * (t - k + 1)
        if 2 * n >= k * t:
            out.expect({**d, "claim": "large connectivity"}, f">= {bound}", kf, kf >= bound)
        else:
            out.skipped["n < kt/2 (large-connectivity hypothesis)"] += 1
        evidence["instances"] += 1
        if kf >= bound:
            evidence["holds"] += 1
        else:
            evidence["fails"].append({**d, "kappa": kf, "bound": bound})
    else:
        out.skipped["t < k (large-connectivity hypothesis)"] += 1
    return out


def _connectivity_fixed(p: SuiteParams) -> _Result:
    out = _Result()
    for n, want, fam_min in [(5, 6, 6), (6, 8, 8)]:
        K = family("complete", n)
        tg = build_token_graph(K, 2)
        out.expect(_desc(K, 2), want, vertex_connectivity(tg.derived))
        fam = disjoint_path_family(K, [0, 1], [0, 2], n - 1)
        ok, _ = check_internally_disjoint(fam.paths)
        valid = all(path.is_valid(K) for path in fam.paths)
        out.expect(_desc(K, 2, A=[0, 1], B=[0, 2]), f">= {fam_min} disjoint paths",
                   fam.achieved, ok and valid and fam.achieved >= fam_min)
    return out


def _clique_task(task) -> _Result:
    g6, k, _ = task
    G = from_graph6(g6)
    out = _Result()
    d = _desc(G, k)
    tg = build_token_graph(G, k)
    omega_g = clique_number_exact(G)[0]
    exact, _ = clique_number_exact(tg.derived)
    formula = out.guard(d, lambda: clique_number_formula(G, k, omega_g))
    out.expect(d, formula, exact)
    ws = out.guard(d, lambda: clique_witnesses(G, k))
    for w in ws or []:
        ranks = [tg.index[c] for c in w.expand()]
        is_clique = all(tg.derived.adjacent(a, b) for i, a in enumerate(ranks) for b in ranks[i + 1:])
        want = min(omega_g, G.n - k + 1) if w.form == "a" else min(omega_g, k + 1)
        out.expect({**d, "form": w.form}, f"clique of size {want}", len(ranks), is_clique and len(ranks) == want)
    return out


def _triangle_task(task) -> _Result:
    seed, count, max_n = task
    rng = random.Random(f"triangles:{seed}")
    out = _Result()
    got = 0
    attempts = 0
    while got < count and attempts < 50 * count:
        attempts += 1
        n = rng.randint(3, max_n)
        G = rng.choice(enumerate_nonisomorphic_graphs(n).members)
        k = rng.randint(1, n - 1)
        tg = build_token_graph(G, k)
        D = tg.derived
        edges = [(a, b) for a in range(D.n) for b in D.nbrs[a] if a < b]
        if not edges:
            continue
        for _ in range(5):
            a, b = rng.choice(edges)
            common = sorted(set(D.nbrs[a]) & set(D.nbrs[b]))
            if not common:
                continue
            c = rng.choice(common)
            A, B, C = tg.configs[a], tg.configs[b], tg.configs[c]
            first, second = triangle_dichotomy(A, B, C)
            out.expect(_desc(G, k, triangle=[elements(A), elements(B), elements(C)]),
                       "exactly one inclusion", [first, second], first != second)
            got += 1
    out.data["triangles"] = got
    return out


def _chromatic_task(task) -> _Result:
    g6, k, cap, budget = task
    G = from_graph6(g6)
    out = _Result()
    d = _desc(G, k)
    tg = build_token_graph(G, k)
    bip_g, cycle = is_bipartite(G)
    bip_f, _ = is_bipartite(tg.derived)
    out.expect({**d, "claim": "bipartite iff"}, bip_g, bip_f)
    if not bip_g:
        walk = out.guard(d, lambda: odd_cycle_lift(G, cycle, k))
        if walk is not None:
            out.expect({**d, "claim": "odd lift"}, "odd closed walk", walk.length,
                       walk.length % 2 == 1 and walk.is_valid(G))
    if binom(G.n, k) > cap:
        out.skipped[f"C(n,k) > {cap}"] += 1
        return out
    cg = chromatic_number_exact(G, budget=budget)
    chi_g = cg.value
    col = out.guard(d, lambda: token_coloring(G, k, cg.coloring))
    if col is not None:
        out.expect({**d, "claim": "summed colouring"}, f"<= {chi_g} colours", col.used,
                   col.is_proper(tg.derived) and col.used <= chi_g)
    cf = chromatic_number_exact(tg.derived, budget=budget)
    b53, b54 = chromatic_lower_bounds(G, k, chi_g)
    lo = max(math.ceil(b53), math.ceil(b54))
    if cf.exact:
        chi_f = cf.value
        out.expect({**d, "claim": "chromatic sandwich"}, f"{lo} <= chi <= {chi_g}", chi_f, lo <= chi_f <= chi_g)
        out.data.setdefault("gap", Counter())[chi_g - chi_f] += 1
    else:
        out.skipped["exact chromatic number over budget"] += 1
        out.expect({**d, "claim": "bracket"}, f"{lo} <= upper", cf.upper, lo <= cf.upper)
    return out


def _chromatic_fixed(p: SuiteParams) -> _Result:
    out = _Result()
    K4 = family("complete", 4)
    out.expect(_desc(K4, 2), 3, chromatic_number_exact(build_token_graph(K4, 2).derived).value)
    return out


def _hamilton_task(task) -> _Result:
    n, k, budget = task
    out = _Result()
    P = family("path", n)
    res = hamiltonian_path(build_token_graph(P, k).derived, budget=budget)
    d = {"family": f"path:{n}", "k": k}
    want = n % 2 == 0 and k % 2 == 1
    if res.status == "unknown":
        out.skipped["hamiltonian search over budget"] += 1
        return out
    if n % 2 == 1 and k in (1, n - 1):
        # the token graph is a path itself here, whatever the parity
        out.data.setdefault("exception_cells", []).append({**d, "hamiltonian_path": res.found, "parity_rule": want})
        out.expect({**d, "claim": "single-token cell"}, True, res.found)
        return out
    out.expect(d, want, res.found)
    if want:
        walk = gray_code_ham_path(n, k)
        out.expect({**d, "claim": "gray code"}, binom(n, k), len(set(walk.steps)),
                   len(set(walk.steps)) == binom(n, k) and walk.is_valid(P))
    return out


def lift_ham_path(G: Graph, order, k: int) -> ConfigPath:
    """Carry the Gray code of the path ``order`` over to ``G``."""
    n = len(order)
    steps = tuple(to_mask(order[i] for i in elements(m)) for m in gray_code_ham_path(n, k).steps)
    return ConfigPath(steps)


def _hamilton_fixed(p: SuiteParams) -> _Result:
    out = _Result()
    max_n = p.max_n or 8
    for n in range(2, max_n + 1, 2):
        for k in range(1, n, 2):
            walk = out.guard({"n": n, "k": k}, lambda: gray_code_ham_path(n, k))
            if walk is not None:
                out.expect({"family": f"path:{n}", "k": k, "claim": "gray code"}, binom(n, k), len(set(walk.steps)),
                           len(set(walk.steps)) == binom(n, k) and walk.is_valid(family("path", n)))
    for G, k in [(family("complete_bipartite", 3, 3), 2), (family("cycle", 4), 2)]:
        out.expect(_desc(G, k), "none", hamiltonian_path(build_token_graph(G, k).derived, p.budget).status)
    for m in range(1, 7):
        for k in range(1, 2 * m + 1):
            value = out.guard({"m": m, "k": k}, lambda: bipartite_imbalance(m, k))
            if value is None:
                continue
            out.checked += 1
            if k % 2 == 0 and abs(value) > 2 and k < 2 * m and binom(2 * m, k) <= 2000:
                B = family("complete_bipartite", m, m)
                out.expect(_desc(B, k, imbalance=value), "none",
                           hamiltonian_path(build_token_graph(B, k).derived, p.budget).status)
    # a Hamiltonian path of the base graph carries the Gray code over
    for n in range(2, min(max_n, 6) + 1, 2):
        for G in enumerate_nonisomorphic_graphs(n).members:
            res = hamiltonian_path(G, p.budget)
            if not res.found:
                continue
            for k in range(1, n, 2):
                walk = lift_ham_path(G, res.path, k)
                ok = len(set(walk.steps)) == binom(n, k) and walk.is_valid(G)
                out.expect(_desc(G, k, claim="lifted gray code"), "hamiltonian path", ok, ok)
    return out


def _product_fixed(p: SuiteParams) -> _Result:
    out = _Result()
    P7 = family("path", 7)
    emb = out.guard({"family": "path:7"}, lambda: product_embedding(P7, [(range(3), 1), (range(3, 7), 1)]))
    if emb is not None:
        grid, _ = cartesian_product(family("path", 3), family("path", 4))
        out.expect(_desc(P7, 2, claim="grid"), "3x4 grid", emb.product.edge_count,
                   are_isomorphic(emb.product, grid) is not None)
    rng = random.Random(f"product:{p.seed}")
    for i in range(50):
        n = rng.randint(2, p.max_n or 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        G = make_graph(n, edges)
        verts = list(range(n))
        rng.shuffle(verts)
        m = rng.randint(1, min(3, n))
        cuts = sorted(rng.sample(range(1, n), m - 1)) if m > 1 else []
        parts, prev = [], 0
        for c in cuts + [n]:
            H = sorted(verts[prev:c])
            parts.append((H, rng.randint(1, len(H))))
            prev = c
        k = sum(s for _, s in parts)
        d = _desc(G, k, parts=[[H, s] for H, s in parts])
        emb = out.guard(d, lambda: product_embedding(G, parts))
        if emb is not None:
            expected_size = math.prod(binom(len(H), s) for H, s in parts)
            out.expect(d, expected_size, emb.product.n)
    for n in range(2, 6):
        star = family("star", n)
        w = are_isomorphic(build_token_graph(star, 2).derived, subdivide(family("complete", n)))
        out.expect(_desc(star, 2, claim="subdivided complete graph"), True, w is not None)
    return out


def _paths_task(task) -> _Result:
    g6, k, _, seed, samples = task
    G = from_graph6(g6)
    out = _Result()
    if not is_connected(G) or G.n < 2:
        out.skipped["base graph disconnected"] += 1
        return out
    t = _kappa(g6)
    rng = random.Random(f"paths:{seed}:{g6}:{k}")
    tg = build_token_graph(G, k)
    edges = [(a, b) for a in range(tg.derived.n) for b in tg.derived.nbrs[a] if a < b]
    stats = out.data.setdefault("families", {"count": 0, "shortfalls": 0, "extended": 0})
    for _ in range(min(samples, len(edges))):
        a, b = rng.choice(edges)
        A, B = tg.configs[a], tg.configs[b]
        d = _desc(G, k, t=t, A=elements(A), B=elements(B))
        fam = out.guard(d, lambda: disjoint_path_family(G, A, B, t))
        if fam is None:
            continue
        stats["count"] += 1
        stats["extended"] += t >= k + 1
        ok, clash = check_internally_disjoint(fam.paths)
        valid = all(path.is_valid(G) and path.start == A and path.end == B for path in fam.paths)
        out.expect({**d, "claim": "disjoint"}, True, ok and valid)
        if fam.shortfall:
            stats["shortfalls"] += 1
        out.expect({**d, "claim": "count"}, f">= {fam.target}", fam.achieved, not fam.shortfall)
        # Menger in the token graph caps what any family can reach
        flow = len(disjoint_paths(tg.derived, a, b))
        out.expect({**d, "claim": "flow cap"}, f"<= {flow}", fam.achieved, fam.achieved <= flow)
    return out


def union_find_acyclic(edges) -> bool:
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def random_red_blue(rng: random.Random) -> RedBlueInstance:
    ny = rng.randint(1, 6)
    nz = rng.randint(ny + 1, 9)
    red = set()
    for y in range(ny):
        if rng.random() < 0.7:
            red.add((y, rng.randrange(nz)))
    return RedBlueInstance(range(ny), range(nz), red)


def _redblue_task(task) -> _Result:
    seed, count = task
    rng = random.Random(f"redblue:{seed}")
    out = _Result()
    for _ in range(count):
        inst = random_red_blue(rng)
        M = red_blue_matching(inst)
        covered = sorted(y for y, _ in M)
        saturating = covered == sorted(inst.Y) and len({z for _, z in M}) == len(M)
        blue = not (M & inst.red)
        acyclic = union_find_acyclic([(("y", y), ("z", z)) for y, z in M | inst.red])
        out.expect({"Y": len(inst.Y), "Z": len(inst.Z), "red": sorted(inst.red)},
                   "saturating, blue, acyclic", [saturating, blue, acyclic], saturating and blue and acyclic)
    return out


def random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.uniform(0.2, 0.9)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _isomorphism_task(task) -> _Result:
    seed, count, max_n = task
    rng = random.Random(f"iso:{seed}")
    out = _Result()
    for _ in range(count):
        n = rng.randint(2, max_n)
        G = random_graph(rng, n)
        k = rng.randint(1, n - 1)
        X = rng.sample(range(n), rng.randint(0, k))
        d = _desc(G, k, X=sorted(X))
        f1 = build_token_graph(G, 1)
        ident = IsoWitness(tuple(f1.index[1 << v] for v in range(n)))
        out.expect({**d, "claim": "one token"}, True, ident.check(G, f1.derived))
        tg = build_token_graph(G, k)
        w = out.guard(d, lambda: complement_bijection(tg))
        if w is not None:
            other = build_token_graph(G, n - k).derived
            out.expect({**d, "claim": "complement"}, True, w.check(tg.derived, other))
        view = out.guard(d, lambda: fixed_token_subgraph(tg, X))
        if view is not None:
            out.expect({**d, "claim": "fixed tokens"}, True, view.witness.check(view.subgraph, view.reduced))
    return out


def _variants_task(task) -> _Result:
    seed, count, max_n = task
    rng = random.Random(f"variants:{seed}")
    out = _Result()
    for _ in range(count):
        n = rng.randint(2, max_n)
        G = random_graph(rng, n)
        k = rng.randint(1, n - 1)
        d = _desc(G, k)
        plain = build_token_graph(G, k).derived
        for mode in ("matching", "complete"):
            v = build_variant_token_graph(G, k, VariantSpec(1, mode)).derived
            out.expect({**d, "mode": mode}, "equal to single-token graph", v == plain, v == plain)
        r = min(k, n - k)
        if r >= 2:
            r = rng.randint(2, r)
            tm = build_variant_token_graph(G, k, VariantSpec(r, "matching")).derived
            tc = build_variant_token_graph(G, k, VariantSpec(r, "complete")).derived
            inside = all(tm.adjacent(a, b) for a, b in tc.edges())
            out.expect({**d, "r": r}, "complete-mode edges within matching-mode edges", inside, inside)
    return out


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def _variants_fixed(p: SuiteParams) -> _Result:
    out = _Result()
    K5 = family("complete", 5)
    for mode in ("matching", "complete"):
        D = build_variant_token_graph(K5, 2, VariantSpec(2, mode)).derived
        out.expect(_desc(K5, 2, r=2, mode=mode), "Petersen graph", D.edge_count, are_isomorphic(D, petersen()) is not None)
    P4 = family("path", 4)
    D = build_variant_token_graph(P4, 2, VariantSpec(2, "matching"))
    out.expect(_desc(P4, 2, r=2, A=[0, 1], B=[2, 3]), False, D.derived.adjacent(D.rank([0, 1]), D.rank([2, 3])))
    return out


def _clique_dispatch(task) -> _Result:
    if task[0] == "tri":
        return _triangle_task(task[1])
    return _clique_task(task)


@dataclass(frozen=True)
class _Suite:
    tasks: Callable[[SuiteParams], list]
    check: Callable | None
    fixed: Callable[[SuiteParams], _Result] | None = None
    description: str = ""


def _chunks(p: SuiteParams, total: int, size: int, *extra):
    return [(f"{p.seed}:{i}", min(size, total - i * size)) + extra for i in range((total + size - 1) // size)]


SUITES: dict[str, _Suite] = {
    "counts": _Suite(lambda p: _corpus_tasks(p, 6, None), _counts_task,
                     description="vertex/edge counts and cut-size degrees"),
    "diameter": _Suite(lambda p: _corpus_tasks(p, 7, 3), _diameter_task, _diameter_fixed,
                       "diameter sandwich between k(d-k+1) and kd"),
    "connectivity": _Suite(lambda p: _corpus_tasks(p, 7, None, derived_cap=p.max_derived), _connectivity_task,
                           _connectivity_fixed, "token graph at least as connected as the base graph"),
    "clique": _Suite(lambda p: _corpus_tasks(p, 7, 4) + [("tri", t) for t in _chunks(p, 10_000, 500, p.max_n or 7)],
                     _clique_dispatch, None, "clique number formula and witnesses; triangle dichotomy"),
    "chromatic": _Suite(lambda p: _corpus_tasks(p, 7, None, derived_cap=p.max_derived, extra=(p.budget,)),
                        _chromatic_task, _chromatic_fixed, "summed colouring, lower bounds, bipartiteness"),
    "hamilton": _Suite(lambda p: [(n, k, p.budget) for n in range(2, (p.max_n or 8) + 1)
                                  for k in range(1, min(p.k_max or 3, n - 1) + 1)],
                       _hamilton_task, _hamilton_fixed, "Hamiltonian paths of path token graphs"),
    "product": _Suite(lambda p: [], None, _product_fixed, "Cartesian products as induced subgraphs"),
    "paths": _Suite(lambda p: _corpus_tasks(p, 6, 3, extra=(p.seed, p.samples)), _paths_task, None,
                    "disjoint path families between adjacent configurations"),
    "redblue": _Suite(lambda p: _chunks(p, 1000, 100), _redblue_task, None, "red-blue matching"),
    "isomorphism": _Suite(lambda p: _chunks(p, 100, 10, p.max_n or 7), _isomorphism_task, None,
                          "one-token, complement and fixed-token isomorphisms"),
    "variants": _Suite(lambda p: _chunks(p, 50, 10, p.max_n or 7), _variants_task, _variants_fixed,
                       "multi-token move variants"),
}


def _run_task(item) -> _Result:
    name, task = item
    return SUITES[name].check(task)


def _pmap(fn, items, threads: int):
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


def _merge_data(into: dict, new: dict) -> None:
    for key, val in new.items():
        if key not in into:
            into[key] = val
        elif isinstance(val, Counter):
            into[key].update(val)
        elif isinstance(val, dict):
            for kk, vv in val.items():
                if isinstance(vv, list):
                    into[key].setdefault(kk, []).extend(vv)
                else:
                    into[key][kk] = into[key].get(kk, 0) + vv
        elif isinstance(val, list):
            into[key].extend(val)
        else:
            into[key] += val


def _jsonable(obj):
    if isinstance(obj, Counter):
        return {str(k): v for k, v in sorted(obj.items())}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_jsonable(v) for v in obj]
    return obj


def run_suite(suite: str, params: SuiteParams | None = None) -> SuiteReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    p = params or SuiteParams()
    start = time.perf_counter()
    suite_def = SUITES[suite]
    tasks = suite_def.tasks(p)
    results = _pmap(_run_task, [(suite, t) for t in tasks], p.threads)
    if suite_def.fixed is not None:
        results.append(suite_def.fixed(p))
    report = SuiteReport(suite, asdict(p))
    skipped: Counter = Counter()
    data: dict = {}
    for r in results:
        report.checked += r.checked
        report.violations.extend(r.violations)
        skipped.update(r.skipped)
        _merge_data(data, r.data)
    report.skipped = dict(skipped)
    report.data = _jsonable(data)
    report.runtime = time.perf_counter() - start
    return report


# -- reconstruction scan ------------------------------------------------------

def _triangles(G: Graph) -> int:
    masks = G.masks
    return sum(popcount(masks[u] & masks[v]) for u, v in G.edges()) // 3


def fingerprint(G: Graph) -> tuple:
    return (G.n, G.edge_count, G.degree_sequence(), _triangles(G))


def reconstruction_scan(n: int, k: int = 2, corpus: GraphCorpus | None = None, threads: int = 1) -> SuiteReport:
    """Look for non-isomorphic graphs whose k-token graphs are isomorphic.

    Groups token graphs by a cheap fingerprint and runs full isomorphism
    tests inside each group.  Any hit is listed under ``collisions`` and
    flagged for review; it is data, not a failed check.
    """
    start = time.perf_counter()
    if corpus is None:
        if n > BUILTIN_MAX_N:
            raise CapacityError(f"no built-in corpus for n={n}; pass a graph6 corpus file")
        corpus = enumerate_nonisomorphic_graphs(n)
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if binom(n, k) > SCAN_LIMIT:
        raise CapacityError(f"token graphs would have C({n},{k}) = {binom(n, k)} vertices; scan limit is {SCAN_LIMIT}")
    derived = [build_token_graph(G, k).derived for G in corpus.members]
    groups: dict[tuple, list[int]] = {}
    for i, D in enumerate(derived):
        groups.setdefault(fingerprint(D), []).append(i)
    collisions = []
    pairs = 0
    for idx in groups.values():
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                pairs += 1
                i, j = idx[x], idx[y]
                if are_isomorphic(derived[i], derived[j], limit=SCAN_LIMIT) is not None:
                    collisions.append({"G": to_graph6(corpus.members[i]), "H": to_graph6(corpus.members[j]), "k": k})
    report = SuiteReport("reconstruction", {"n": n, "k": k, "source": corpus.source, "graphs": len(corpus)})
    report.checked = pairs
    report.data = {
        "graphs": len(corpus),
        "fingerprint_groups": len(groups),
        "largest_group": max((len(v) for v in groups.values()), default=0),
        "pairs_tested": pairs,
        "collisions": collisions,
        "flag": CONJECTURE_FLAG if collisions else None,
    }
    report.runtime = time.perf_counter() - start
    return report


__all__ = [
    "GraphCorpus",
    "SuiteParams",
    "SuiteReport",
    "Violation",
    "SUITES",
    "CONJECTURE_FLAG",
    "enumerate_nonisomorphic_graphs",
    "load_corpus",
    "run_suite",
    "reconstruction_scan",
    "lift_ham_path",
    "union_find_acyclic",
    "petersen",
]
