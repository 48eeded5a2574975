"""Finite simple graphs and the forest machinery used by the Betti recursion.

Vertices are nonnegative integers kept in ascending order; all iteration in
this module follows that order so results are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    GraphFormatError,
    LoopEdge,
    NotAForest,
    UnknownVertex,
)

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``. Optional text
    ``labels`` ride along for display and never affect equality.
    """

    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    labels: Mapping[int, str] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices) or verts != tuple(self.vertices):
            object.__setattr__(self, "vertices", verts)
        vset = set(verts)
        for v in verts:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex ids must be nonnegative integers, got {v!r}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop edge at vertex {u}")
            if u not in vset or v not in vset:
                raise UnknownVertex(f"edge {{{u}, {v}}} uses an undeclared vertex")
            norm.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], vertices: Iterable[int] = ()) -> Graph:
        """Build a graph; endpoints of ``edges`` are declared implicitly."""
        edges = [tuple(e) for e in edges]
        verts = set(vertices)
        for e in edges:
            verts.update(e)
        return cls(tuple(sorted(verts)), frozenset(edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def index(self) -> dict[int, int]:
        """Dense re-indexing ``vertex -> 0..n-1`` used for subset bitmasks."""
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        idx = self.index
        return tuple(
            sum(1 << idx[w] for w in self.adjacency[v]) for v in self.vertices
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adjacency.values()), default=0)

    def induced(self, w: Iterable[int]) -> Graph:
        w = set(w)
        missing = w.difference(self.vertices)
        if missing:
            raise UnknownVertex(f"unknown vertices {sorted(missing)}")
        edges = frozenset(e for e in self.edges if e[0] in w and e[1] in w)
        labels = {v: s for v, s in self.labels.items() if v in w}
        return Graph(tuple(sorted(w)), edges, labels)

    def __str__(self) -> str:
        es = ", ".join(f"{u}-{v}" for u, v in self.edge_list)
        return f"Graph(V={list(self.vertices)}, E=[{es}])"


# -- construction helpers ---------------------------------------------------

def path_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(zip(vs, vs[1:]), vs)


def cycle_graph(n: int, start: int = 1) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    return Graph.from_edges(zip(vs, vs[1:] + vs[:1]), vs)


def complete_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(itertools.combinations(vs, 2), vs)


def star_graph(n: int, start: int = 1) -> Graph:
    """K_{1,n} with center ``start`` and leaves ``start+1..start+n``."""
    return Graph.from_edges(((start, start + k) for k in range(1, n + 1)), [start])


def empty_graph(vertices: Iterable[int]) -> Graph:
    return Graph(tuple(sorted(set(vertices))), frozenset())


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union of two graphs; ``g2`` is shifted past ``g1`` when ids collide."""
    if set(g1.vertices) & set(g2.vertices):
        off = (max(g1.vertices) + 1) - min(g2.vertices)
        g2 = relabel(g2, {v: v + off for v in g2.vertices})
    return Graph(g1.vertices + g2.vertices, g1.edges | g2.edges)


def relabel(g: Graph, mapping: Mapping[int, int]) -> Graph:
    return Graph(
        tuple(mapping[v] for v in g.vertices),
        frozenset(_edge(mapping[u], mapping[v]) for u, v in g.edges),
        {mapping[v]: s for v, s in g.labels.items()},
    )


# -- file format ------------------------------------------------------------

def _parse_id(tok: str, line_no: int) -> int:
    if not tok.isdigit():
        raise GraphFormatError(f"vertex id must be a nonnegative decimal integer, got {tok!r}", line_no)
    return int(tok)


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format (``v <id>``, ``e <id> <id>``, ``#`` comments)."""
    verts: set[int] = set()
    edges: set[Edge] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "v" and len(toks) == 2:
            verts.add(_parse_id(toks[1], line_no))
        elif toks[0] == "e" and len(toks) == 3:
            u, v = _parse_id(toks[1], line_no), _parse_id(toks[2], line_no)
            if u == v:
                raise LoopEdge(f"loop edge at vertex {u}", line_no)
            e = _edge(u, v)
            if e in edges:
                raise DuplicateEdge(f"duplicate edge {u} {v}", line_no)
            edges.add(e)
            verts.update(e)
        else:
            raise GraphFormatError(f"malformed record {raw.strip()!r}", line_no)
    return Graph(tuple(sorted(verts)), frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"v {v}" for v in g.vertices if not g.adjacency[v]]
    lines += [f"e {u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


# -- structure --------------------------------------------------------------

def _components(adj: Mapping[int, Iterable[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph) -> list[Graph]:
    """Connected components as induced subgraphs, ordered by least vertex id."""
    return [g.induced(c) for c in _components(g.adjacency)]


def is_connected(g: Graph) -> bool:
    return len(_components(g.adjacency)) <= 1


def is_forest(g: Graph) -> bool:
    return len(g.edges) == len(g.vertices) - len(_components(g.adjacency))


def _require_forest(g: Graph) -> None:
    if not is_forest(g):
        raise NotAForest(f"graph with {len(g.vertices)} vertices and {len(g.edges)} edges has a cycle")


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    s = set(s)
    missing = s.difference(g.vertices)
    if missing:
        raise UnknownVertex(f"cannot delete unknown vertices {sorted(missing)}")
    return g.induced(v for v in g.vertices if v not in s)


# -- pivots -----------------------------------------------------------------

@dataclass(frozen=True)
class Pivot:
    """A vertex ``center`` of degree ``n >= 2`` whose first ``n-1`` neighbors are leaves."""

    center: int
    neighbors: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.neighbors)


def _pivot_at(adj: Mapping[int, frozenset[int]], v: int) -> Pivot | None:
    nbrs = adj[v]
    if len(nbrs) < 2:
        return None
    leaves = sorted(w for w in nbrs if len(adj[w]) == 1)
    if len(leaves) < len(nbrs) - 1:
        return None
    rest = sorted(nbrs.difference(leaves))
    return Pivot(v, tuple(leaves + rest))


def _first_pivot(adj: Mapping[int, frozenset[int]]) -> Pivot | None:
    for v in sorted(adj):
        p = _pivot_at(adj, v)
        if p is not None:
            return p
    return None


def find_pivot(t: Graph) -> Pivot | None:
    """Least-id pivot of a forest, or ``None`` when every degree is at most one.

    Leaf neighbors come first in ascending order, the non-leaf neighbor (if
    any) last.
    """
    _require_forest(t)
    return _first_pivot(t.adjacency)


def valid_pivots(t: Graph) -> list[Pivot]:
    """Every vertex of ``t`` that can serve as a pivot, one entry per center."""
    _require_forest(t)
    adj = t.adjacency
    return [p for p in (_pivot_at(adj, v) for v in t.vertices) if p is not None]


# -- spanning trees ---------------------------------------------------------

class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def copy(self):
        d = _DSU(())
        d.parent = dict(self.parent)
        return d


def _spans(vertices: Sequence[int], edges: Iterable[Edge]) -> bool:
    dsu = _DSU(vertices)
    parts = len(vertices)
    for u, v in edges:
        a, b = dsu.find(u), dsu.find(v)
        if a != b:
            dsu.parent[a] = b
            parts -= 1
    return parts <= 1


def iter_spanning_trees(g: Graph) -> Iterator[frozenset[Edge]]:
    """Yield each spanning tree of a connected graph once, as an edge set.

    Edges are decided in sorted order: take the edge (contraction) when it
    joins two current components, skip it (deletion) when it is not a bridge
    of what remains.
    """
    if not is_connected(g):
        raise Disconnected("spanning trees require a connected graph")
    n = len(g.vertices)
    edges = g.edge_list
    if n <= 1:
        yield frozenset()
        return
    # stack entries: (next edge index, chosen edges, union-find of chosen)
    stack = [(0, (), _DSU(g.vertices))]
    while stack:
        k, chosen, dsu = stack.pop()
        if len(chosen) == n - 1:
            yield frozenset(chosen)
            continue
        if k == len(edges):
            continue
        u, v = edges[k]
        # deletion branch pushed first so the contraction branch is explored first
        if _spans(g.vertices, itertools.chain(chosen, edges[k + 1:])):
            stack.append((k + 1, chosen, dsu))
        a, b = dsu.find(u), dsu.find(v)
        if a != b:
            d2 = dsu.copy()
            d2.parent[d2.find(u)] = d2.find(v)
            stack.append((k + 1, chosen + (edges[k],), d2))


def spanning_trees(g: Graph) -> list[frozenset[Edge]]:
    return list(iter_spanning_trees(g))


def tree_graph(g: Graph, tree_edges: Iterable[Edge]) -> Graph:
    """The spanning subgraph of ``g`` with the given edge set."""
    return Graph(g.vertices, frozenset(tree_edges))


# -- canonical codes --------------------------------------------------------

def _tree_centers(adj: Mapping[int, Iterable[int]], comp: Sequence[int]) -> list[int]:
    if len(comp) <= 2:
        return list(comp)
    deg = {v: len(adj[v]) for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in adj[u]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[u] = 0
        layer = nxt
    return sorted(layer)


def _rooted_code(adj: Mapping[int, Iterable[int]], root: int, block: int | None = None) -> str:
    # iterative post-order AHU encoding; ``block`` is a vertex not to cross into
    order, parent = [], {root: block}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
                stack.append(w)
    codes: dict[int, list[str]] = {u: [] for u in order}
    out = ""
    for u in reversed(order):
        out = "(" + "".join(sorted(codes[u])) + ")"
        p = parent[u]
        if p is not None and p != block:
            codes[p].append(out)
    return out


def tree_code(adj: Mapping[int, Iterable[int]], comp: Sequence[int]) -> str:
    """AHU code of the tree spanned by ``comp`` (a connected component of ``adj``)."""
    centers = _tree_centers(adj, comp)
    if len(centers) == 1:
        return _rooted_code(adj, centers[0])
    a, b = centers
    # bicentral: root at the central edge, cut it, and pair the two halves
    ca, cb = _rooted_code(adj, a, block=b), _rooted_code(adj, b, block=a)
    return "[" + "".join(sorted((ca, cb))) + "]"


def forest_code(adj: Mapping[int, Iterable[int]]) -> str:
    return "".join(sorted(tree_code(adj, c) for c in _components(adj)))


def canonical_code(t: Graph) -> bytes:
    """Isomorphism-invariant byte code of a forest."""
    _require_forest(t)
    return forest_code(t.adjacency).encode("ascii")


# -- induced pattern counts -------------------------------------------------

PATTERNS = ("P3", "K3", "2K2")


def count_induced(g: Graph, pattern: str) -> int:
    """Number of vertex subsets of ``g`` inducing ``pattern`` (one of P3, K3, 2K2)."""
    adj, edges = g.adjacency, g.edge_list
    if pattern in ("P3", "K3"):
        want = 2 if pattern == "P3" else 3
        return sum(
            1
            for a, b, c in itertools.combinations(g.vertices, 3)
            if (b in adj[a]) + (c in adj[a]) + (c in adj[b]) == want
        )
    if pattern == "2K2":
        count = 0
        for (a, b), (c, d) in itertools.combinations(edges, 2):
            if len({a, b, c, d}) == 4 and not (
                {c, d} & adj[a] or {c, d} & adj[b]
            ):
                count += 1
        return count
    raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")


# -- seeded random instances ------------------------------------------------

def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p) on vertices ``0..n-1``."""
    return Graph.from_edges(
        ((a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p),
        range(n),
    )


def random_forest(n: int, rng: random.Random, attach: float = 0.9) -> Graph:
    """Random recursive forest on ``0..n-1`` with shuffled labels.

    Each new vertex joins a uniformly chosen earlier vertex with probability
    ``attach`` and starts a new tree otherwise.
    """
    edges = [(rng.randrange(k), k) for k in range(1, n) if rng.random() < attach]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(((perm[a], perm[b]) for a, b in edges), range(n))
