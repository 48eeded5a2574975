"""Seeded corpora and independent oracles shared by the test modules.

Nothing in the oracles below goes through edgebetti's homology or Betti code:
they rebuild everything from the definitions with itertools and sympy.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import sympy

from edgebetti.graph import Graph, random_forest, random_graph


def from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edges(h.edges(), h.nodes())


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


# -- corpora ----------------------------------------------------------------

def all_graphs(max_n: int) -> list[Graph]:
    """Every graph with at most ``max_n`` vertices up to isomorphism (max_n <= 7)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= max_n]


def random_graphs(count: int, n_lo: int, n_hi: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        out.append(random_graph(n, rng.uniform(0.15, 0.75), rng))
    return out


def random_forests(count: int, max_n: int, seed: int, min_n: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    return [random_forest(rng.randint(min_n, max_n), rng, attach=rng.uniform(0.6, 1.0)) for _ in range(count)]


def all_forests(max_n: int) -> list[Graph]:
    """Every forest with at most ``max_n`` vertices up to isomorphism."""
    trees = {1: [nx.empty_graph(1)]}
    for n in range(2, max_n + 1):
        trees[n] = list(nx.nonisomorphic_trees(n))
    out = []

    # forests = multisets of trees; enumerate partitions of n into tree sizes
    def build(remaining, max_part, max_idx, parts):
        if remaining == 0:
            out.append(list(parts))
            return
        for size in range(min(remaining, max_part), 0, -1):
            top = max_idx if size == max_part else len(trees[size]) - 1
            for idx in range(top, -1, -1):
                build(remaining - size, size, idx, parts + [(size, idx)])

    for n in range(1, max_n + 1):
        build(n, n, len(trees[n]) - 1, [])
    forests = []
    for parts in out:
        h = nx.disjoint_union_all([trees[s][i] for s, i in parts])
        forests.append(from_nx(h))
    return forests


# -- oracles ----------------------------------------------------------------

def _rank_q(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def oracle_reduced_homology(faces: set[frozenset]) -> dict[int, int]:
    """dim H̃_k over Q of the complex with the given (downward closed) face set."""
    if not faces:
        return {}
    by_dim: dict[int, list[tuple]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim)

    def bd_rank(k):
        # rank of the map from k-faces to (k-1)-faces
        src, dst = by_dim.get(k, []), by_dim.get(k - 1, [])
        if not src or not dst:
            return 0
        where = {f: r for r, f in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for j, f in enumerate(src):
            for pos in range(len(f)):
                rows[where[f[:pos] + f[pos + 1:]]][j] = (-1) ** pos
        return _rank_q(rows)

    out = {}
    for k in range(-1, top + 1):
        dim = len(by_dim.get(k, [])) - bd_rank(k) - bd_rank(k + 1)
        if dim:
            out[k] = dim
    return out


def oracle_betti(g: Graph) -> dict[tuple[int, int], int]:
    """Hochster's sum by enumeration of all subsets W, homology via sympy ranks."""
    verts = list(g.vertices)
    edges = {frozenset(e) for e in g.edges}
    table = {(0, 0): 1}
    for d in range(1, len(verts) + 1):
        for w in itertools.combinations(verts, d):
            faces = set()
            for k in range(d + 1):
                for f in itertools.combinations(w, k):
                    if not any(frozenset(p) in edges for p in itertools.combinations(f, 2)):
                        faces.add(frozenset(f))
            for k, dim in oracle_reduced_homology(faces).items():
                i = d - k - 1
                if i >= 1:
                    table[(i, d)] = table.get((i, d), 0) + dim
    return table


def kirchhoff(g: Graph) -> int:
    """Spanning-tree count as a determinant of the reduced Laplacian."""
    verts = list(g.vertices)
    if len(verts) <= 1:
        return 1
    idx = {v: k for k, v in enumerate(verts)}
    lap = sympy.zeros(len(verts))
    for u, v in g.edges:
        a, b = idx[u], idx[v]
        lap[a, a] += 1
        lap[b, b] += 1
        lap[a, b] -= 1
        lap[b, a] -= 1
    return int(lap[1:, 1:].det())


def isomorphic_bruteforce(g1: Graph, g2: Graph) -> bool:
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    v1, v2 = list(g1.vertices), list(g2.vertices)
    target = g2.edges
    for perm in itertools.permutations(v2):
        m = dict(zip(v1, perm))
        if all(tuple(sorted((m[a], m[b]))) in target for a, b in g1.edges):
            return True
    return False


def alexander_dual_bruteforce(g: Graph) -> set[frozenset]:
    """All faces of Δ*(g), listed from the definition."""
    verts = frozenset(g.vertices)
    edges = [frozenset(e) for e in g.edges]
    faces = set()
    for k in range(len(verts) + 1):
        for f in itertools.combinations(sorted(verts), k):
            comp = verts - frozenset(f)
            if any(e <= comp for e in edges):
                faces.add(frozenset(f))
    return faces


def link_bruteforce(faces: set[frozenset], f: frozenset) -> set[frozenset]:
    return {h for h in faces if not (h & f) and (h | f) in faces}
