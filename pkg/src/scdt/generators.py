"""Instance generators: planted-modulator graphs and the hitting-set gadgets."""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from .chordal import is_chordal
from .errors import InputError
from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class PlantedInstance:
    graph: Graph
    modulator: frozenset[int]
    k: int
    seed: int
    meta: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class HittingSetInstance:
    """Universe ``0..universe_size-1`` and a family of subsets of it."""

    universe_size: int
    family: tuple[frozenset[int], ...]
    target: int = 0

    def __post_init__(self):
        fam = tuple(frozenset(s) for s in self.family)
        object.__setattr__(self, "family", fam)
        for s in fam:
            if not s:
                raise InputError("hitting-set family contains an empty set")
            if any(not (0 <= u < self.universe_size) for u in s):
                raise InputError(f"set {sorted(s)} leaves the universe")


def _random_chordal_edges(n: int, density: float, rng: random.Random) -> list[tuple[int, int]]:
    # each new vertex is made simplicial: its earlier neighbors are a clique
    nbrs: list[set[int]] = []
    edges = []
    for v in range(n):
        chosen: set[int] = set()
        if v:
            anchor = rng.randrange(v)
            chosen.add(anchor)
            cands = sorted(nbrs[anchor])
            rng.shuffle(cands)
            for c in cands:
                if rng.random() < density and all(c in nbrs[x] for x in chosen):
                    chosen.add(c)
        nbrs.append(set(chosen))
        for c in chosen:
            nbrs[c].add(v)
            edges.append((c, v))
    return edges


def gen_planted(n: int, k: int, density: float | Fraction = 0.5, seed: int = 0,
                apex_density: float = 0.5) -> PlantedInstance:
    """Random chordal graph on ``n - k`` vertices plus ``k`` apex vertices.

    The chordal part grows by simplicial vertices, each joined to a random
    anchor and (with probability ``density``) to further members of a clique
    around it.  Apex vertices get random adjacencies; ids are shuffled.  The
    same seed always yields the same instance.
    """
    if not (0 <= k <= n):
        raise InputError(f"need 0 <= k <= n, got n={n}, k={k}")
    density = float(density)
    if not (0.0 <= density <= 1.0):
        raise InputError("density must lie in [0, 1]")
    rng = random.Random(seed)
    base = n - k
    edges = _random_chordal_edges(base, density, rng)
    apex = list(range(base, n))
    for a in apex:
        for v in range(a):
            if rng.random() < apex_density:
                edges.append((v, a))
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph(n, ((perm[u], perm[v]) for u, v in edges))
    modulator = frozenset(perm[a] for a in apex)
    sub, _ = induced_subgraph(g, [v for v in range(n) if v not in modulator])
    if not is_chordal(sub)[0]:
        raise AssertionError("planted chordal part is not chordal")
    meta = {"n": n, "k": k, "density": density, "apex_density": apex_density, "seed": seed}
    return PlantedInstance(g, modulator, k, seed, meta)


def hitting_set_vc_instance(hs: HittingSetInstance) -> tuple[Graph, frozenset[int], int]:
    """Vertex-cover gadget for a hitting-set instance.

    Element vertices ``0..|U|-1``; each set contributes a clique of copy
    vertices, one per element, and each copy is joined to its element vertex.
    Returns ``(graph, modulator, offset)`` where the modulator is the element
    vertices and ``min VC = min hitting set + offset``.
    """
    n_elem = hs.universe_size
    edges = []
    nxt = n_elem
    for s in hs.family:
        copies = []
        for u in sorted(s):
            copies.append(nxt)
            edges.append((u, nxt))
            nxt += 1
        edges += [(a, b) for i, a in enumerate(copies) for b in copies[i + 1:]]
    offset = sum(len(s) - 1 for s in hs.family)
    return Graph(nxt, edges), frozenset(range(n_elem)), offset


def triangulate_for_fvs_oct(g: Graph) -> Graph:
    """Add a fresh vertex on every edge, turning each edge into a triangle."""
    edges = g.edges()
    extra = []
    for i, (u, v) in enumerate(edges):
        w = g.n + i
        extra += [(u, w), (v, w)]
    return Graph(g.n + len(edges), edges + extra)


def random_hitting_set(universe_size: int, n_sets: int, seed: int,
                       max_set: int | None = None) -> HittingSetInstance:
    rng = random.Random(seed)
    max_set = universe_size if max_set is None else max_set
    fam = []
    for _ in range(n_sets):
        size = rng.randint(1, max(1, min(max_set, universe_size)))
        fam.append(frozenset(rng.sample(range(universe_size), size)))
    return HittingSetInstance(universe_size, tuple(fam))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    perm = list(perm)
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
