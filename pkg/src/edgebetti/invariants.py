"""Derived invariants and cross-checking harnesses on top of :mod:`edgebetti.betti`."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .betti import (
    DEFAULT_VERTEX_CAP,
    BettiTable,
    eagon_reiner,
    forest_betti,
    forest_pd,
    hochster,
)
from .graph import Graph, forest_code, is_forest, iter_spanning_trees, tree_graph, valid_pivots
from .homology import FieldSpec
from .polynomial import IntPolynomial

__all__ = [
    "CheckReport",
    "IntPolynomial",
    "compare_tables",
    "cross_validate",
    "field_independence_check",
    "pg_polynomial",
    "pivot_independence_check",
]


def pg_polynomial(g: Graph) -> IntPolynomial:
    """Σ_i #{spanning trees T of g with pd(T) = i} x^i, for connected ``g``.

    Projective dimensions are cached by canonical code, since most spanning
    trees repeat a handful of isomorphism types.
    """
    counts: dict[int, int] = {}
    pd_by_code: dict[str, int] = {}
    for edges in iter_spanning_trees(g):
        t = tree_graph(g, edges)
        adj = t.adjacency
        code = forest_code(adj)
        pd = pd_by_code.get(code)
        if pd is None:
            pd = pd_by_code[code] = forest_pd(t)
        counts[pd] = counts.get(pd, 0) + 1
    return IntPolynomial.from_terms(counts.items())


@dataclass
class Mismatch:
    i: int
    d: int
    values: dict[str, int]

    def __str__(self) -> str:
        vals = ", ".join(f"{m}={v}" for m, v in self.values.items())
        return f"β[{self.i},{self.d}]: {vals}"


@dataclass
class CheckReport:
    instance: str
    methods: list[str]
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def format(self, timings: bool = False) -> str:
        """One summary line plus one line per mismatch; timings only on request."""
        status = "PASS" if self.passed else "FAIL"
        methods = ", ".join(self.methods) if self.methods else "none"
        line = f"{status} {self.instance} [{len(self.methods)} methods: {methods}]"
        if timings and self.elapsed:
            line += " " + " ".join(f"{m}={t:.3f}s" for m, t in self.elapsed.items())
        return "\n".join([line] + [f"  {m}" for m in self.mismatches])

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "instance": self.instance,
            "methods": list(self.methods),
            "passed": self.passed,
            "mismatches": [{"i": m.i, "d": m.d, "values": {k: str(v) for k, v in m.values.items()}} for m in self.mismatches],
        }
        if timings:
            out["elapsed"] = dict(self.elapsed)
        return out


def compare_tables(tables: Mapping[str, BettiTable]) -> list[Mismatch]:
    keys = sorted(set().union(*(t.entries for t in tables.values()))) if tables else []
    out = []
    for i, d in keys:
        vals = {m: t[(i, d)] for m, t in tables.items()}
        if len(set(vals.values())) > 1:
            out.append(Mismatch(i, d, vals))
    return out


def _run_methods(instance: str, runs: Sequence[tuple[str, Callable[[], BettiTable]]]) -> CheckReport:
    tables, elapsed = {}, {}
    for name, fn in runs:
        start = time.perf_counter()
        tables[name] = fn()
        elapsed[name] = time.perf_counter() - start
    return CheckReport(instance, [n for n, _ in runs], compare_tables(tables), elapsed)


def _describe(kind: str, g: Graph) -> str:
    edges = ",".join(f"{u}-{v}" for u, v in g.edge_list)
    return f"{kind} n={len(g.vertices)} E=[{edges}]"


def field_independence_check(
    g: Graph, fields: Sequence[FieldSpec], *, cap: int = DEFAULT_VERTEX_CAP
) -> CheckReport:
    """Hochster tables of ``g`` over each field, compared entrywise."""
    return _run_methods(
        _describe("fields", g),
        [(f"hochster/{f}", lambda f=f: hochster(g, f, cap=cap)) for f in fields],
    )


def pivot_independence_check(t: Graph) -> CheckReport:
    """Force every valid first pivot in turn and compare the resulting tables."""
    pivots = valid_pivots(t)
    return _run_methods(
        _describe("pivots", t),
        [(f"pivot={p.center}", lambda p=p: forest_betti(t, pivot=p.center)) for p in pivots],
    )


def cross_validate(g: Graph, field: FieldSpec, *, cap: int = DEFAULT_VERTEX_CAP) -> CheckReport:
    """Hochster vs Eagon-Reiner (and the forest recursion when ``g`` is a forest)."""
    runs = [
        (f"hochster/{field}", lambda: hochster(g, field, cap=cap)),
        (f"dual/{field}", lambda: eagon_reiner(g, field, cap=cap)),
    ]
    if is_forest(g):
        runs.append(("forest", lambda: forest_betti(g)))
    return _run_methods(_describe("oracles", g), runs)
