"""Acceptance criteria 1-11, each at its stated tolerance and time bound.

Exact integer equality everywhere: every criterion has zero tolerance. The
terminal summary prints one PASS/FAIL line per criterion.
"""

import random
from functools import lru_cache

import pytest

from corpora import all_forests, all_graphs, kirchhoff, oracle_betti, random_forests, random_graphs
from edgebetti.betti import (
    BettiTable,
    eagon_reiner,
    forest_betti,
    forest_pd,
    forest_top_betti,
    graded_euler_polynomial,
    hilbert_numerator_from_fvector,
    hochster,
    pd_from_table,
)
from edgebetti.complex import epsilon_complex, intersection
from edgebetti.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    path_graph,
    random_forest,
    spanning_trees,
    star_graph,
    valid_pivots,
)
from edgebetti.homology import GF2, GF3, QQ, reduced_homology_dims
from edgebetti.invariants import pg_polynomial
from edgebetti.polynomial import IntPolynomial

criterion = pytest.mark.criterion


@lru_cache(maxsize=None)
def corpus2() -> tuple[Graph, ...]:
    """All graphs on at most 6 vertices plus 50 seeded random graphs on 7-8 vertices."""
    return tuple(all_graphs(6) + random_graphs(50, 7, 8, seed=2))


@lru_cache(maxsize=None)
def corpus3() -> tuple[Graph, ...]:
    """100 seeded random forests on at most 12 vertices."""
    return tuple(random_forests(100, 12, seed=3))


def _table(entries: dict, n: int) -> BettiTable:
    return BettiTable({(0, 0): 1, **entries}, n)


@criterion(1, "fixture tables")
def test_criterion_01_fixtures(stopwatch):
    fixtures = [
        (complete_graph(2), {(1, 2): 1}),
        (path_graph(3), {(1, 2): 2, (2, 3): 1}),
        (path_graph(4), {(1, 2): 3, (2, 3): 2}),
        (complete_graph(3), {(1, 2): 3, (2, 3): 2}),
        (star_graph(3), {(1, 2): 3, (2, 3): 3, (3, 4): 1}),
        (Graph.from_edges([(1, 2), (3, 4)]), {(1, 2): 2, (2, 4): 1}),
    ]
    for g, want in fixtures:
        expect = _table(want, len(g.vertices))
        assert hochster(g, GF2) == expect
        assert hochster(g, QQ) == expect
        assert eagon_reiner(g, GF2) == expect
    assert stopwatch() < 1.0
    # the hand-written fixtures themselves, against the definition-level oracle
    for g, want in fixtures:
        assert oracle_betti(g) == _table(want, len(g.vertices)).entries


@criterion(2, "hochster = eagon_reiner over GF(2)")
def test_criterion_02_oracle_equivalence(stopwatch):
    graphs = corpus2()
    assert len(graphs) == 209 + 50
    bad = [g for g in graphs if hochster(g, GF2) != eagon_reiner(g, GF2)]
    assert bad == []
    assert stopwatch() < 120


@criterion(3, "forest recursion = hochster over GF(2) and Q")
def test_criterion_03_forest_recursion(stopwatch):
    forests = corpus3()
    assert len(forests) == 100 and max(len(t.vertices) for t in forests) <= 12
    for t in forests:
        b = forest_betti(t)
        assert b == hochster(t, GF2), t
        assert b == hochster(t, QQ), t
    assert stopwatch() < 300


@criterion(4, "pivot invariance")
def test_criterion_04_pivot_invariance():
    eligible = [t for t in all_forests(9) if len(valid_pivots(t)) >= 2]
    sample = random.Random(4).sample(eligible, 100)
    mismatches = 0
    for t in sample:
        tables = [forest_betti(t, pivot=p.center) for p in valid_pivots(t)]
        mismatches += sum(b != tables[0] for b in tables)
    assert mismatches == 0


@criterion(5, "pd recursion and additivity")
def test_criterion_05_pd():
    for t in corpus3():
        assert forest_pd(t) == pd_from_table(hochster(t, GF2))
    pool = random_graphs(100, 1, 6, seed=5)
    for g1, g2 in zip(pool[::2], pool[1::2]):
        u = disjoint_union(g1, g2)
        assert pd_from_table(hochster(u, GF2)) == pd_from_table(hochster(g1, GF2)) + pd_from_table(hochster(g2, GF2))
    fpool = random_forests(100, 12, seed=55)
    for t1, t2 in zip(fpool[::2], fpool[1::2]):
        assert forest_pd(disjoint_union(t1, t2)) == forest_pd(t1) + forest_pd(t2)
    for n in range(1, 9):
        assert forest_pd(star_graph(n)) == n


@criterion(6, "field independence")
def test_criterion_06_field_independence():
    graphs = list(corpus3())
    graphs += [path_graph(n) for n in range(1, 11)]
    graphs += [cycle_graph(n) for n in range(3, 11)]
    for g in graphs:
        tables = [hochster(g, f) for f in (GF2, GF3, QQ)]
        assert tables[0] == tables[1] == tables[2], g


@criterion(7, "K-polynomial consistency")
def test_criterion_07_k_polynomial():
    for g in corpus2():
        assert graded_euler_polynomial(hochster(g, QQ)) == hilbert_numerator_from_fvector(g), g


def _eps_instance(rng: random.Random, n_singletons: int):
    v = list(range(rng.randint(n_singletons + 1, 9)))
    rng.shuffle(v)
    shifts, rest = v[:n_singletons], v[n_singletons:]
    es = [set(rng.sample(rest, rng.randint(1, len(rest)))) for _ in range(rng.randint(1, 6))]
    return set(v), shifts, es


@criterion(8, "homology lemma suite")
def test_criterion_08_lemmas():
    rng = random.Random(8)
    # intersection identity: f misses every a_i
    for _ in range(50):
        v = set(range(rng.randint(2, 9)))
        f = set(rng.sample(sorted(v), rng.randint(1, len(v) - 1)))
        pool = sorted(v - f)
        a = [set(rng.sample(pool, rng.randint(1, len(pool)))) for _ in range(rng.randint(1, 5))]
        assert intersection(epsilon_complex(a, v), epsilon_complex([f], v)) == epsilon_complex(a, v - f)
    # single shift
    for _ in range(50):
        v, (a,), es = _eps_instance(rng, 1)
        for fld in (GF2, QQ):
            top = reduced_homology_dims(epsilon_complex([{a}, *es], v), fld)
            assert top == reduced_homology_dims(epsilon_complex(es, v - {a}), fld).shifted(1)
    # iterated shift by s distinct singletons
    for _ in range(50):
        s = rng.randint(1, 5)
        v, shifts, es = _eps_instance(rng, s)
        for fld in (GF2, QQ):
            top = reduced_homology_dims(epsilon_complex([{x} for x in shifts] + es, v), fld)
            assert top == reduced_homology_dims(epsilon_complex(es, v - set(shifts)), fld).shifted(s)
    # sphere case
    for _ in range(50):
        j = rng.randint(1, 5)
        labels = rng.sample(range(100), j + 2)
        c = epsilon_complex([{labels[0], w} for w in labels[1:]], labels)
        for fld in (GF2, GF3, QQ):
            assert reduced_homology_dims(c, fld).dims == {j - 1: 1}


@criterion(9, "top Betti number")
def test_criterion_09_top_betti():
    for t in corpus3():
        b = hochster(t, GF2)
        assert forest_top_betti(t) == b.total(b.pd)
    assert forest_top_betti(path_graph(4)) == 2


@criterion(10, "P_G fixtures and matrix-tree count")
def test_criterion_10_pg():
    for t in [path_graph(1), path_graph(5), star_graph(4)] + [t for t in all_forests(8) if is_connected(t)]:
        assert pg_polynomial(t) == IntPolynomial.monomial(forest_pd(t))
    assert pg_polynomial(complete_graph(3)) == IntPolynomial.monomial(2, 3)
    assert pg_polynomial(cycle_graph(4)) == IntPolynomial.monomial(2, 4)
    connected = [g for g in all_graphs(7) if g.vertices and is_connected(g)]
    assert len(connected) == 996
    for g in connected:
        assert pg_polynomial(g)(1) == kirchhoff(g), g
    assert len(spanning_trees(complete_graph(5))) == 125


@criterion(11, "300-vertex forest under 5 s")
def test_criterion_11_performance(stopwatch):
    t = random_forest(300, random.Random(11))
    assert len(t.vertices) == 300
    b = forest_betti(t)
    assert stopwatch() < 5.0
    assert b[(1, 2)] == len(t.edges)
    # K-polynomial vanishes at t = 1 whenever the ideal is nonzero
    assert graded_euler_polynomial(b)(1) == 0
    assert b.pd == forest_pd(t) and b.top_betti == forest_top_betti(t)
    assert max(b.entries.values()) > 2**63
