"""Immutable undirected simple graphs on dense integer ids.

Vertices are ``0..n-1``.  Besides the adjacency sets every graph carries a
per-vertex neighbor bitmask; most hot loops in the package work on those
masks rather than on Python sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InputError

VertexSet = frozenset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph; immutable once built."""

    __slots__ = ("n", "adj", "masks", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(mask_of(s) for s in nbrs)
        self.m = sum(len(s) for s in nbrs) // 2

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        g = cls.__new__(cls)
        g.n = len(masks)
        g.masks = tuple(masks)
        g.adj = tuple(frozenset(iter_bits(mk)) for mk in masks)
        g.m = sum(mk.bit_count() for mk in masks) // 2
        return g

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = mask_of(vertices)
        return all((vs & ~self.masks[v]) == 1 << v for v in iter_bits(vs))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> Graph:
        """Return a copy with one extra vertex (id ``n``) joined to ``neighbors``."""
        nb = mask_of(neighbors)
        masks = [mk | ((nb >> v) & 1) << self.n for v, mk in enumerate(self.masks)]
        masks.append(nb)
        return Graph.from_masks(masks)

    def check_range(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise InputError(f"vertex {v!r} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[V']`` and the mapping ``new id -> old id`` (sorted old ids)."""
    vs = sorted(set(vertices))
    g.check_range(vs)
    index = {v: i for i, v in enumerate(vs)}
    keep = mask_of(vs)
    masks = []
    for v in vs:
        masks.append(mask_of(index[u] for u in iter_bits(g.masks[v] & keep)))
    return Graph.from_masks(masks), tuple(vs)


def open_neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    xs = mask_of(vertices)
    g.check_range(iter_bits(xs))
    return frozenset(iter_bits(neighborhood_mask(g, xs)))


def neighborhood_mask(g: Graph, xs: int) -> int:
    nb = 0
    for v in iter_bits(xs):
        nb |= g.masks[v]
    return nb & ~xs


def component_masks(g: Graph, within: int) -> list[int]:
    """Components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= g.masks[v]
            frontier = nb & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    if within is None:
        wm = g.full_mask
    else:
        within = list(within)
        g.check_range(within)
        wm = mask_of(within)
    return [frozenset(iter_bits(c)) for c in component_masks(g, wm)]


def is_connected(g: Graph, within: int | None = None) -> bool:
    wm = g.full_mask if within is None else within
    return len(component_masks(g, wm)) <= 1


def reachable_mask(g: Graph, sources: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``sources & within`` inside ``G[within]``."""
    seen = sources & within
    frontier = seen
    while frontier:
        nb = 0
        for v in iter_bits(frontier):
            nb |= g.masks[v]
        frontier = nb & within & ~seen
        seen |= frontier
    return seen
