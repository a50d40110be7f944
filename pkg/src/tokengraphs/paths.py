"""Reconfiguration paths built from vertex paths of the base graph.

Configurations are bitmasks (see ``subsets``).  A vertex path is a list of
base-graph vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvariantError
from .flow import disjoint_paths
from .graph import Graph
from .subsets import elements, popcount, to_mask


def _mask(A) -> int:
    return A if isinstance(A, int) else to_mask(A)


def is_token_step(G: Graph, A: int, B: int) -> bool:
    d = A ^ B
    if popcount(d) != 2 or popcount(A) != popcount(B):
        return False
    u, v = elements(d)
    return G.adjacent(u, v)


@dataclass(frozen=True)
class ConfigPath:
    steps: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def start(self) -> int:
        return self.steps[0]

    @property
    def end(self) -> int:
        return self.steps[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.steps[1:-1]

    def is_valid(self, G: Graph) -> bool:
        return all(is_token_step(G, a, b) for a, b in zip(self.steps, self.steps[1:]))

    def as_lists(self) -> list[list[int]]:
        return [elements(m) for m in self.steps]


def check_vertex_path(G: Graph, P: Sequence[int]) -> None:
    if len(P) < 2:
        raise ValueError("a path needs at least two vertices")
    if len(set(P)) != len(P):
        raise ValueError(f"path {list(P)} repeats a vertex")
    for u, v in zip(P, P[1:]):
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.adjacent(u, v):
            raise ValueError(f"{u}-{v} is not an edge of the graph")


def shift_path(G: Graph, A, P: Sequence[int]) -> ConfigPath:
    """Slide the tokens on ``P`` forward so the token at ``P[0]`` ends up at ``P[-1]``.

    The front-most token on ``P`` goes first, all the way to the end; then each
    remaining token steps into the spot just vacated ahead of it.
    """
    A = _mask(A)
    P = list(P)
    check_vertex_path(G, P)
    if not A >> P[0] & 1:
        raise ValueError(f"path start {P[0]} carries no token")
    if A >> P[-1] & 1:
        raise ValueError(f"path end {P[-1]} is occupied")
    on_path = [i for i, v in enumerate(P) if A >> v & 1]
    cur = A
    steps = [cur]
    target = len(P) - 1
    for pos in reversed(on_path):
        for i in range(pos, target):
            cur = cur & ~(1 << P[i]) | 1 << P[i + 1]
            steps.append(cur)
        target = pos
    expected = A & ~(1 << P[0]) | 1 << P[-1]
    if cur != expected:
        raise InvariantError("shift path did not end at the expected configuration")
    path = ConfigPath(tuple(steps))
    if path.length != len(P) - 1 or not path.is_valid(G):
        raise InvariantError("shift path broke its step or length contract")
    return path


def check_internally_disjoint(paths: Sequence[ConfigPath]) -> tuple[bool, tuple | None]:
    """``(True, None)`` or ``(False, (config, i, j))`` for the first shared inner configuration."""
    if not paths:
        return True, None
    s, t = paths[0].start, paths[0].end
    for p in paths:
        if p.start != s or p.end != t:
            raise ValueError("paths do not share endpoints")
    owner: dict[int, int] = {}
    for j, p in enumerate(paths):
        inner = p.internal
        if len(set(inner)) != len(inner) or s in inner or t in inner:
            return False, (next(c for c in inner if inner.count(c) > 1 or c in (s, t)), j, j)
        for c in inner:
            if c in owner:
                return False, (c, owner[c], j)
            owner[c] = j
    if sum(1 for p in paths if p.length == 1) > 1:
        return False, (None, 0, 0)
    return True, None


def lift_disjoint_paths(G: Graph, A, P: Sequence[int], Q: Sequence[int]) -> tuple[ConfigPath, ConfigPath]:
    P, Q = list(P), list(Q)
    if P[0] != Q[0] or P[-1] != Q[-1]:
        raise ValueError("paths must share both endpoints")
    if set(P[1:-1]) & set(Q[1:-1]) or P == Q:
        raise ValueError("paths are not internally disjoint")
    lp, lq = shift_path(G, A, P), shift_path(G, A, Q)
    ok, clash = check_internally_disjoint([lp, lq])
    if not ok:
        raise InvariantError(f"lifted paths collide at {clash}")
    return lp, lq


@dataclass(frozen=True)
class RedBlueInstance:
    """Complete bipartite graph ``Y x Z`` whose ``red`` pairs are forbidden.

    Every ``y`` is in at most one red pair and ``|Y| < |Z|``.
    """

    Y: tuple
    Z: tuple
    red: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "Y", tuple(self.Y))
        object.__setattr__(self, "Z", tuple(self.Z))
        object.__setattr__(self, "red", frozenset(self.red))
        if len(self.Y) >= len(self.Z):
            raise ValueError(f"need |Y| < |Z|, got {len(self.Y)} and {len(self.Z)}")
        seen = set()
        for y, z in self.red:
            if y not in self.Y or z not in self.Z:
                raise ValueError(f"red pair {(y, z)} leaves the bipartite graph")
            if y in seen:
                raise ValueError(f"{y!r} has more than one red pair")
            seen.add(y)


def red_blue_matching(inst: RedBlueInstance) -> set:
    """Blue pairs covering each ``y`` once, acyclic together with the red pairs.

    Repeatedly match the lowest remaining ``y`` to the lowest remaining ``z``
    that has no red pair with any remaining ``y``.  Such a ``z`` exists since
    red pairs number at most ``|Y|`` while ``|Z| > |Y|``; it then stays a leaf
    of the union, which keeps it acyclic.
    """
    ys = sorted(inst.Y)
    zs = sorted(inst.Z)
    M = set()
    while ys:
        v = ys.pop(0)
        live = set(ys) | {v}
        x = next(z for z in zs if not any((y, z) in inst.red for y in live))
        zs.remove(x)
        M.add((v, x))
    return M


def _shortcut(G: Graph, path: list[int]) -> list[int]:
    """Remove chords (except an edge joining the two ends) by jumping ahead."""
    p = list(path)
    changed = True
    while changed:
        changed = False
        for i in range(len(p)):
            far = max((j for j in range(i + 2, len(p)) if G.adjacent(p[i], p[j])
                       and not (i == 0 and j == len(p) - 1)), default=None)
            if far is not None:
                p = p[: i + 1] + p[far:]
                changed = True
                break
    return p


@dataclass
class PathFamily:
    A: int
    B: int
    paths: list[ConfigPath]
    types: list[str]
    target: int
    diagnostics: dict = field(default_factory=dict)

    @property
    def achieved(self) -> int:
        return len(self.paths)

    @property
    def shortfall(self) -> bool:
        return self.achieved < self.target


def _type_r(G: Graph, A: int, v: int, y: int, P: list[int]) -> ConfigPath:
    cur = A & ~(1 << v) | 1 << y
    steps = [A, cur]
    for u, w in zip(P, P[1:]):
        cur = cur & ~(1 << u) | 1 << w
        steps.append(cur)
    cur = cur & ~(1 << y) | 1 << v
    steps.append(cur)
    path = ConfigPath(tuple(steps))
    if not path.is_valid(G):
        raise InvariantError(f"type-R path through {v}->{y} has an invalid step")
    return path


def _build_family(G, A, B, a, b, t, k, system):
    common = A & B
    paths, types = [], []
    for P in system:
        paths.append(shift_path(G, A, P))
        types.append("Q" if any(common >> x & 1 for x in P) else "P")
    if t < k + 1:
        return paths, types, {}
    plain = [P for P in system if not any(common >> x & 1 for x in P)]
    host = {}
    for P in system:
        for x in P:
            if common >> x & 1:
                host[x] = P
    s = len(plain)
    notes = {"s": s, "l": len(system) - s, "C": [], "D": []}
    for v in elements(common):
        nb = set(G.nbrs[v])
        if v in host:
            Yv = sorted(nb - set(elements(common)) - set(host[v]))[: t - k]
            notes["C"].append(v)
        else:
            Yv = sorted(nb - set(elements(A | B)))[: t - k + 1]
            notes["D"].append(v)
        if not Yv:
            continue
        if len(Yv) >= s:
            notes.setdefault("skipped", []).append(v)
            continue
        red = {(y, i) for y in Yv for i in range(s) if y in plain[i]}
        for y, i in sorted(red_blue_matching(RedBlueInstance(Yv, range(s), red))):
            paths.append(_type_r(G, A, v, y, plain[i]))
            types.append("R")
    return paths, types, notes


def disjoint_path_family(G: Graph, A, B, t: int, extended: bool = True, retries: int = 20) -> PathFamily:
    """Internally disjoint A-B paths for configurations one move apart.

    ``t`` is the caller's lower bound on the base graph's connectivity.  With
    ``t >= k + 1`` (and ``extended``) the family adds, for each shared token, a
    batch of detour paths that park it on a neighbour while the moving token
    travels; otherwise it returns ``t`` lifted Menger paths.  The result is
    checked for disjointness; a count below the target is reported in
    ``shortfall`` and never hidden.
    """
    A, B = _mask(A), _mask(B)
    if popcount(A ^ B) != 2 or popcount(A) != popcount(B):
        raise ValueError("A and B must differ by exactly one token")
    k = popcount(A)
    (a,), (b,) = elements(A & ~B), elements(B & ~A)
    want_ext = extended and t >= k + 1
    target = k * (t - k + 1) if want_ext else t
    best = None
    for attempt in range(retries + 1):
        system = disjoint_paths(G, a, b, seed=None if attempt == 0 else attempt)
        if len(system) < t:
            raise ValueError(f"only {len(system)} disjoint {a}-{b} paths; the graph is not {t}-connected")
        system = sorted((_shortcut(G, P) for P in system), key=lambda P: (len(P), P))
        if not want_ext:
            system = system[:t]
        paths, types, notes = _build_family(G, A, B, a, b, t if want_ext else 0, k, system)
        ok, clash = check_internally_disjoint(paths)
        if not ok:
            raise InvariantError(f"path family collides at {clash}")
        fam = PathFamily(A, B, paths, types, target, {"attempt": attempt, **notes})
        if best is None or fam.achieved > best.achieved:
            best = fam
        if not fam.shortfall:
            break
    return best
