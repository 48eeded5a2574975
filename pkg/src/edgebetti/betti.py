"""Graded Betti numbers of edge ideals.

Three independent routes produce a :class:`BettiTable`:

* :func:`hochster` sums reduced homology of induced subcomplexes of the
  independence complex,
* :func:`eagon_reiner` sums homology of links in the Alexander dual,
* :func:`forest_betti` runs the pivot recursion on forests
  ``T -> (T', T'')`` with memoization on canonical codes.

The brute-force routes are exponential in the vertex count and guarded by a
cap; the forest recursion is the fast path.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .complex import alexander_dual_faces, dual_link_epsilon, f_vector, independence_complex
from .errors import NotAForest, TooLarge
from .graph import (
    Graph,
    Pivot,
    _components,
    _first_pivot,
    _pivot_at,
    count_induced,
    is_forest,
    tree_code,
)
from .homology import FieldSpec, homology_from_faces, reduced_homology_dims
from .polynomial import IntPolynomial

DEFAULT_VERTEX_CAP = 20

Entries = dict[tuple[int, int], int]


@dataclass(frozen=True)
class BettiTable:
    """Sparse map ``(i, d) -> β_{i,d}`` over ``n_vertices`` variables.

    ``(0, 0) -> 1`` is always present; zero entries are dropped. ``field`` is a
    display tag only ("GF(2)", "Q", "independent", ...) and takes no part in
    equality.
    """

    entries: Mapping[tuple[int, int], int]
    n_vertices: int
    field: str = field(default="", compare=False)

    def __post_init__(self):
        ent = {(int(i), int(d)): int(v) for (i, d), v in self.entries.items() if v}
        ent.setdefault((0, 0), 1)
        for (i, d), v in ent.items():
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, d)}")
            if i == 0:
                if d != 0 or v != 1:
                    raise ValueError(f"β_0 must be concentrated at (0, 0) with value 1, got {(i, d)}: {v}")
            elif i < 0 or not (2 <= d <= self.n_vertices and i <= d - 1):
                raise ValueError(f"entry {(i, d)} out of range for {self.n_vertices} vertices")
        object.__setattr__(self, "entries", dict(sorted(ent.items())))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def top_betti(self) -> int:
        return self.total(self.pd)

    def nonzero(self) -> dict[tuple[int, int], int]:
        """Entries with ``i >= 1`` (everything but the ``(0, 0)`` unit)."""
        return {k: v for k, v in self.entries.items() if k != (0, 0)}

    def with_field(self, tag: str) -> BettiTable:
        return BettiTable(self.entries, self.n_vertices, tag)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": self.n_vertices,
            "field": self.field or "independent",
            "entries": [{"i": i, "d": d, "value": str(v)} for (i, d), v in self.entries.items()],
            "pd": self.pd,
            "top_betti": str(self.top_betti),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, obj: dict | str) -> BettiTable:
        if isinstance(obj, str):
            obj = json.loads(obj)
        entries = {(e["i"], e["d"]): int(e["value"]) for e in obj["entries"]}
        table = cls(entries, int(obj["vertices"]), obj.get("field", ""))
        if "pd" in obj and int(obj["pd"]) != table.pd:
            raise ValueError("serialized pd disagrees with entries")
        return table

    def diagram(self) -> str:
        """Macaulay2-style Betti diagram: column ``i``, row ``j = d - i``, dots for zeros."""
        pd = self.pd
        reg = max(d - i for i, d in self.entries)
        cols = list(range(pd + 1))
        grid = [[self[(i, i + j)] for i in cols] for j in range(reg + 1)]
        totals = [self.total(i) for i in cols]
        width = [
            max(len(str(i)), len(str(totals[i])), *(len(str(row[i]) if row[i] else ".") for row in grid))
            for i in cols
        ]
        label = max(len("total:"), *(len(f"{j}:") for j in range(reg + 1)))

        def line(head: str, cells) -> str:
            return head.rjust(label) + " " + " ".join(c.rjust(w) for c, w in zip(cells, width))

        out = [line("", [str(i) for i in cols]), line("total:", [str(t) for t in totals])]
        for j, row in enumerate(grid):
            out.append(line(f"{j}:", [str(v) if v else "." for v in row]))
        return "\n".join(out)

    def __str__(self) -> str:
        return self.diagram()


def unit_table(n_vertices: int = 0) -> BettiTable:
    """Table of the zero ideal (a graph without edges)."""
    return BettiTable({(0, 0): 1}, n_vertices)


# -- brute-force oracles ----------------------------------------------------

def _check_cap(g: Graph, cap: int) -> None:
    if len(g.vertices) > cap:
        raise TooLarge(f"{len(g.vertices)} vertices exceeds the brute-force cap of {cap}")


def _independent_subsets_by_size(w: int, nb: tuple[int, ...]) -> list[list[int]]:
    bits = [k for k in range(len(nb)) if (w >> k) & 1]
    sizes: list[list[int]] = [[0]]
    stack = [(0, 0, 0, 0)]  # (face, forbidden, next bit position, size)
    while stack:
        s, forb, start, size = stack.pop()
        for pos in range(start, len(bits)):
            k = bits[pos]
            if not (forb >> k) & 1:
                t = s | (1 << k)
                if len(sizes) <= size + 1:
                    sizes.append([])
                sizes[size + 1].append(t)
                stack.append((t, forb | nb[k], pos + 1, size + 1))
    return sizes


def hochster(g: Graph, field: FieldSpec, *, cap: int = DEFAULT_VERTEX_CAP, skip_cones: bool = True) -> BettiTable:
    """β_{i,d} as the sum over ``|W| = d`` of dim H̃_{d-i-1}(Δ(g)_W).

    With ``skip_cones`` the subsets ``W`` whose induced subgraph has an
    isolated vertex are skipped: that vertex is a cone point of Δ(g)_W.
    """
    _check_cap(g, cap)
    nb = g.neighbor_masks
    n = len(nb)
    acc: Entries = defaultdict(int)
    for w in range(1, 1 << n):
        if skip_cones and any((w >> k) & 1 and not nb[k] & w for k in range(n)):
            continue
        d = w.bit_count()
        h = homology_from_faces(_independent_subsets_by_size(w, nb), field)
        for k, val in h.dims.items():
            i = d - 1 - k
            if i >= 1:
                acc[(i, d)] += val
    return BettiTable(acc, n, str(field))


def eagon_reiner(g: Graph, field: FieldSpec, *, cap: int = DEFAULT_VERTEX_CAP) -> BettiTable:
    """β_{i,d} as the sum over dual faces ``F`` with ``|F| = n - d`` of dim H̃_{i-2}(Link F)."""
    _check_cap(g, cap)
    n = len(g.vertices)
    acc: Entries = defaultdict(int)
    for d in range(2, n + 1):
        for f in alexander_dual_faces(g, d):
            h = reduced_homology_dims(dual_link_epsilon(g, f), field)
            for k, val in h.dims.items():
                if k + 2 >= 1:
                    acc[(k + 2, d)] += val
    return BettiTable(acc, n, str(field))


def beta2_count(g: Graph) -> int:
    """Total β_2 from induced-subgraph counts: n(P3) + 2 n(K3) + n(2K2)."""
    return count_induced(g, "P3") + 2 * count_induced(g, "K3") + count_induced(g, "2K2")


# -- table algebra ----------------------------------------------------------

def _convolve(a: Mapping[tuple[int, int], int], b: Mapping[tuple[int, int], int]) -> Entries:
    if len(a) == 1:
        return dict(b)
    if len(b) == 1:
        return dict(a)
    out: Entries = defaultdict(int)
    for (p, r), x in a.items():
        for (q, s), y in b.items():
            out[(p + q, r + s)] += x * y
    return out


def join_convolution(b1: BettiTable, b2: BettiTable) -> BettiTable:
    """Betti table of a disjoint union (join of the complexes)."""
    tag = b1.field if b1.field == b2.field else ""
    return BettiTable(_convolve(b1.entries, b2.entries), b1.n_vertices + b2.n_vertices, tag)


def pd_from_table(b: BettiTable) -> int:
    return b.pd


def graded_euler_polynomial(b: BettiTable) -> IntPolynomial:
    """Σ (-1)^i β_{i,d} t^d."""
    return IntPolynomial.from_terms((d, (-1) ** i * v) for (i, d), v in b.entries.items())


def hilbert_numerator_from_fvector(g: Graph, *, cap: int = DEFAULT_VERTEX_CAP) -> IntPolynomial:
    """Numerator of the Hilbert series of K[Δ(g)] over (1 - t)^n, from the f-vector."""
    _check_cap(g, cap)
    n = len(g.vertices)
    one_minus_t = IntPolynomial((1, -1))
    acc = IntPolynomial(())
    for j, f in enumerate(f_vector(independence_complex(g))):
        acc = acc + IntPolynomial.monomial(j, f) * one_minus_t ** (n - j)
    return acc


# -- forest recursion -------------------------------------------------------

Adj = dict[int, frozenset[int]]


def _delete(adj: Adj, gone: set[int]) -> Adj:
    return {u: nbrs - gone for u, nbrs in adj.items() if u not in gone}


def _restrict(adj: Adj, comp: list[int]) -> Adj:
    return {u: adj[u] for u in comp}


class _Rooting:
    """A fixed rooting of the input forest.

    Every state the recursion visits is an induced subtree of the input, so a
    single rooting (each tree hangs from its least vertex, children visited
    largest subtree first) orders pivots consistently across all states.
    """

    def __init__(self, adj: Adj):
        self.depth: dict[int, int] = {}
        self.post: dict[int, int] = {}
        size: dict[int, int] = {}
        for comp in _components(adj):
            root = comp[0]
            self.depth[root] = 0
            order, parent = [root], {root: None}
            for u in order:
                for w in sorted(adj[u]):
                    if w != parent[u]:
                        parent[w] = u
                        self.depth[w] = self.depth[u] + 1
                        order.append(w)
            for u in reversed(order):
                size[u] = 1 + sum(size[w] for w in adj[u] if w != parent[u])
            stack = [root]
            # larger subtrees finish first, so the small remainders get memo hits
            visit: list[int] = []
            while stack:
                u = stack.pop()
                visit.append(u)
                kids = sorted((w for w in adj[u] if w != parent[u]), key=lambda w: (-size[w], w))
                stack.extend(kids)
            # ``visit`` is a pre-order with children reversed; reversing it gives a post-order
            for rank, u in enumerate(reversed(visit), start=len(self.post)):
                self.post[u] = rank

    def pivot(self, adj: Adj) -> Pivot:
        """Valid pivot of least post-order rank: every deeper neighbor is a leaf."""
        depth, best = self.depth, None
        for v, nbrs in adj.items():
            if len(nbrs) < 2 or (best is not None and self.post[v] > self.post[best]):
                continue
            dv = depth[v]
            if all(len(adj[w]) == 1 for w in nbrs if depth[w] > dv):
                best = v
        return _pivot_at(adj, best)


PIVOT_RULES = ("postorder", "least-id")


class _ForestRecursion:
    """Pivot recursion skeleton shared by the table and pd computations.

    Subclasses supply the value of a vertex, an edge, a disjoint union and the
    pivot step ``value(T) = step(value(T'), value(T''), n)``. Values of trees
    and of whole forests are memoized by canonical code for the lifetime of
    the instance.
    """

    def __init__(self, adj: Adj, rule: str = "postorder"):
        if rule not in PIVOT_RULES:
            raise ValueError(f"unknown pivot rule {rule!r}; expected one of {PIVOT_RULES}")
        self.choose = _Rooting(adj).pivot if rule == "postorder" else _first_pivot
        self.memo: dict[str, object] = {}
        self.forest_memo: dict[str, object] = {}

    def vertex(self):
        raise NotImplementedError

    def edge(self):
        raise NotImplementedError

    def union(self, values: list):
        raise NotImplementedError

    def step(self, t1, t2, n: int):
        raise NotImplementedError

    def peel(self, t1, t2, k: int):
        """Value before deleting all ``k`` leaves of a pivot with one non-leaf neighbor.

        Deleting the leaves one at a time leaves T'' unchanged while the pivot
        degree runs from ``k + 1`` down to 2.
        """
        value = t1
        for n in range(2, k + 2):
            value = self.step(value, t2, n)
        return value

    def forest(self, adj: Adj):
        comps = _components(adj)
        codes = [tree_code(adj, c) for c in comps]
        key = "".join(sorted(codes))
        if key in self.forest_memo:
            return self.forest_memo[key]
        value = self.union([self.tree(_restrict(adj, c), code) for c, code in zip(comps, codes)])
        self.forest_memo[key] = value
        return value

    def tree(self, adj: Adj, code: str | None = None, forced: Pivot | None = None):
        # walk the T -> T' chain iteratively; only T'' recurses
        if code is None:
            code = tree_code(adj, sorted(adj))
        if forced is None and code in self.memo:
            return self.memo[code]
        chain = []
        cur = adj
        while True:
            if len(cur) == 1:
                base = self.vertex()
                break
            if len(cur) == 2:
                base = self.edge()
                break
            piv = forced or self.choose(cur)
            forced = None
            leaves = [w for w in piv.neighbors if len(cur[w]) == 1]
            t2 = self.forest(_delete(cur, {piv.center, *piv.neighbors}))
            if len(leaves) == piv.n:
                # a star: drop one leaf, T'' is empty
                chain.append((code, piv.n, t2, False))
                cur = _delete(cur, {leaves[0]})
            else:
                chain.append((code, len(leaves), t2, True))
                cur = _delete(cur, set(leaves))
            code = tree_code(cur, sorted(cur))
            if code in self.memo:
                base = self.memo[code]
                break
        value = base
        self.memo.setdefault(code, base)
        for code, n, t2, peeled in reversed(chain):
            value = self.peel(value, t2, n) if peeled else self.step(value, t2, n)
            self.memo[code] = value
        return value


class _TableRecursion(_ForestRecursion):
    def vertex(self):
        return {(0, 0): 1}

    def edge(self):
        return {(0, 0): 1, (1, 2): 1}

    def union(self, values):
        out = {(0, 0): 1}
        for v in values:
            out = _convolve(out, v)
        return out

    def _add_shifts(self, t1, t2, coeffs):
        out = dict(t1)
        for j, c in enumerate(coeffs):
            for (i, d), x in t2.items():
                key = (i + j + 1, d + j + 2)
                out[key] = out.get(key, 0) + c * x
        return out

    def step(self, t1, t2, n):
        return self._add_shifts(t1, t2, [comb(n - 1, j) for j in range(n)])

    def peel(self, t1, t2, k):
        # sum of C(m, j) over m = 1..k is C(k+1, j+1) minus the missing m = 0 term
        return self._add_shifts(t1, t2, [comb(k + 1, j + 1) - (j == 0) for j in range(k + 1)])


class _PdRecursion(_ForestRecursion):
    """Values are ``(pd, top Betti number)`` pairs."""

    def vertex(self):
        return (0, 1)

    def edge(self):
        return (1, 1)

    def union(self, values):
        pd, top = 0, 1
        for p, b in values:
            pd, top = pd + p, top * b
        return (pd, top)

    def step(self, t1, t2, n):
        (p1, b1), (p2, b2) = t1, t2
        if p1 > p2 + n:
            return (p1, b1)
        if p1 < p2 + n:
            return (p2 + n, b2)
        return (p1, b1 + b2)


def _forest_adj(t: Graph) -> Adj:
    if not is_forest(t):
        raise NotAForest(f"graph with {len(t.vertices)} vertices and {len(t.edges)} edges has a cycle")
    return dict(t.adjacency)


def _run(kind: type[_ForestRecursion], t: Graph, pivot: int | None, rule: str):
    adj = _forest_adj(t)
    rec = kind(adj, rule)
    if pivot is None:
        return rec.forest(adj)
    piv = _pivot_at(adj, pivot)
    if piv is None:
        raise ValueError(f"vertex {pivot} is not a valid pivot")
    values = []
    for comp in _components(adj):
        sub = _restrict(adj, comp)
        values.append(rec.tree(sub, forced=piv if pivot in sub else None))
    return rec.union(values)


def forest_betti(t: Graph, *, pivot: int | None = None, rule: str = "postorder") -> BettiTable:
    """Betti table of a forest by the pivot recursion (valid over every field).

    ``rule`` picks pivots inside the recursion: ``"postorder"`` (default)
    takes the lowest pivot of a fixed DFS rooting, which keeps the number of
    distinct subforests small; ``"least-id"`` is the :func:`find_pivot`
    rule. ``pivot`` forces the center used at the first step of its tree.
    The table never depends on these choices.
    """
    entries = _run(_TableRecursion, t, pivot, rule)
    return BettiTable(entries, len(t.vertices), "independent")


def forest_pd(t: Graph, *, pivot: int | None = None, rule: str = "postorder") -> int:
    return _run(_PdRecursion, t, pivot, rule)[0]


def forest_top_betti(t: Graph, *, pivot: int | None = None, rule: str = "postorder") -> int:
    """β_pd of a forest; per tree the three-case rule, across trees the product."""
    return _run(_PdRecursion, t, pivot, rule)[1]


def betti_table(g: Graph, field: FieldSpec, method: str = "auto", *, cap: int = DEFAULT_VERTEX_CAP) -> BettiTable:
    """Dispatch on ``method`` (auto | hochster | dual | forest)."""
    if method == "auto":
        method = "forest" if is_forest(g) else "dual"
    if method == "forest":
        return forest_betti(g)
    if method == "hochster":
        return hochster(g, field, cap=cap)
    if method == "dual":
        return eagon_reiner(g, field, cap=cap)
    raise ValueError(f"unknown method {method!r}")


__all__ = [
    "BettiTable",
    "DEFAULT_VERTEX_CAP",
    "beta2_count",
    "betti_table",
    "eagon_reiner",
    "forest_betti",
    "forest_pd",
    "forest_top_betti",
    "graded_euler_polynomial",
    "hilbert_numerator_from_fvector",
    "hochster",
    "join_convolution",
    "pd_from_table",
    "unit_table",
]
