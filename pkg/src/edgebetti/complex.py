"""Simplicial complexes stored by their maximal faces.

Two degenerate complexes matter throughout and are kept distinct:
``VOID`` has no faces at all, ``EMPTY`` is ``{∅}`` (just the empty face).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphFormatError, NotADualFace, NotAFace, UnknownVertex
from .graph import Graph

Face = frozenset[int]


def _maximalize(faces: Iterable[Iterable[int]]) -> frozenset[Face]:
    # larger faces first, so a face only needs checking against kept ones
    uniq = sorted({frozenset(f) for f in faces}, key=lambda f: (-len(f), sorted(f)))
    kept: list[Face] = []
    for f in uniq:
        if not any(f <= k for k in kept):
            kept.append(f)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    maximal_faces: frozenset[Face]

    def __post_init__(self):
        object.__setattr__(self, "maximal_faces", _maximalize(self.maximal_faces))

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Complex generated by ``faces`` (any generating set, not necessarily maximal)."""
        return cls(frozenset(frozenset(f) for f in faces))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.maximal_faces)))

    @property
    def is_void(self) -> bool:
        return not self.maximal_faces

    @property
    def is_empty_set(self) -> bool:
        return self.maximal_faces == frozenset([frozenset()])

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for ``{∅}`` and, by convention here, ``-2`` for VOID."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.maximal_faces) - 1

    def facets(self) -> list[tuple[int, ...]]:
        """Maximal faces as sorted tuples, in lexicographic order."""
        return sorted(tuple(sorted(f)) for f in self.maximal_faces)

    def __contains__(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= m for m in self.maximal_faces)

    def faces(self, size: int) -> list[tuple[int, ...]]:
        """All faces with ``size`` vertices, lexicographically sorted."""
        out: set[tuple[int, ...]] = set()
        for m in self.maximal_faces:
            if len(m) >= size:
                out.update(itertools.combinations(sorted(m), size))
        return sorted(out)

    def is_cone(self) -> bool:
        """True when some vertex lies in every maximal face (such complexes are acyclic)."""
        if self.is_void or self.is_empty_set:
            return False
        return bool(frozenset.intersection(*self.maximal_faces))

    def __str__(self) -> str:
        if self.is_void:
            return "VOID"
        if self.is_empty_set:
            return "{∅}"
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets()) + ">"


VOID = SimplicialComplex(frozenset())
EMPTY = SimplicialComplex(frozenset([frozenset()]))


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex(frozenset([frozenset(vertices)]))


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """Face counts ``(f_-1, f_0, f_1, ...)``; empty for VOID."""
    if c.is_void:
        return ()
    return tuple(len(c.faces(k)) for k in range(c.dim + 2))


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    # f_vector index k holds faces of dimension k-1
    return sum((-1) ** (k - 1) * f for k, f in enumerate(f_vector(c)))


def independent_sets(g: Graph) -> list[int]:
    """All independent sets of ``g`` as bitmasks over ``g.index``."""
    nb = g.neighbor_masks
    n = len(nb)
    out = [0]
    # extend each set only by vertices above its highest member
    frontier = [(0, 0, 0)]  # (set mask, forbidden mask, next index)
    while frontier:
        s, forb, start = frontier.pop()
        for k in range(start, n):
            if not (forb >> k) & 1:
                t = s | (1 << k)
                out.append(t)
                frontier.append((t, forb | nb[k], k + 1))
    return out


def _mask_to_set(mask: int, verts: Sequence[int]) -> Face:
    return frozenset(verts[k] for k in range(len(verts)) if (mask >> k) & 1)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Δ(g): faces are the independent vertex sets of ``g``."""
    nb = g.neighbor_masks
    n = len(g.vertices)
    maximal = []
    for s in independent_sets(g):
        # maximal iff every outside vertex has a neighbor inside
        if all((s >> k) & 1 or nb[k] & s for k in range(n)):
            maximal.append(_mask_to_set(s, g.vertices))
    return SimplicialComplex(frozenset(maximal))


def induced_subcomplex(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    """Δ_W: faces of ``c`` using only vertices of ``w``; ``{∅}`` when ``w`` is empty."""
    w = frozenset(w)
    missing = w.difference(c.vertices)
    if missing:
        raise UnknownVertex(f"unknown vertices {sorted(missing)}")
    if c.is_void:
        return VOID
    return SimplicialComplex(frozenset(m & w for m in c.maximal_faces))


def link(c: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    f = frozenset(f)
    if f not in c:
        raise NotAFace(f"{sorted(f)} is not a face")
    return SimplicialComplex(frozenset(m - f for m in c.maximal_faces if f <= m))


def is_dual_face(g: Graph, f: Iterable[int]) -> bool:
    """Whether ``f`` is a face of Δ*(g), i.e. its complement spans an edge."""
    f = set(f)
    return any(u not in f and v not in f for u, v in g.edges)


def alexander_dual_faces(g: Graph, d: int) -> list[Face]:
    """Faces of Δ*(g) whose complement has exactly ``d`` vertices."""
    verts = g.vertices
    out = []
    for comp in itertools.combinations(verts, d):
        cs = set(comp)
        if any(u in cs and v in cs for u, v in g.edges):
            out.append(frozenset(verts).difference(comp))
    return sorted(out, key=lambda f: sorted(f))


def alexander_dual(c: SimplicialComplex, ground: Iterable[int] | None = None) -> SimplicialComplex:
    """Materialize Δ* by brute force over the ground set. Small inputs only."""
    ground = sorted(c.vertices if ground is None else ground)
    full = frozenset(ground)
    faces = [
        frozenset(f)
        for k in range(len(ground) + 1)
        for f in itertools.combinations(ground, k)
        if (full - frozenset(f)) not in c
    ]
    return SimplicialComplex(frozenset(faces))


def epsilon_complex(a: Sequence[Iterable[int]], v: Iterable[int]) -> SimplicialComplex:
    """ε(a_1, ..., a_s; V): the complex generated by the complements ``V \\ a_i``."""
    v = frozenset(v)
    a = [frozenset(x) for x in a]
    if not a:
        raise ValueError("epsilon_complex needs at least one subset")
    for x in a:
        if not x <= v:
            raise ValueError(f"{sorted(x)} is not a subset of {sorted(v)}")
    return SimplicialComplex(frozenset(v - x for x in a))


def dual_link_epsilon(g: Graph, f: Iterable[int]) -> SimplicialComplex:
    """Link of ``f`` in Δ*(g), built from the edges of ``g`` avoiding ``f``."""
    f = frozenset(f)
    missing = f.difference(g.vertices)
    if missing:
        raise UnknownVertex(f"unknown vertices {sorted(missing)}")
    rest = frozenset(g.vertices) - f
    edges = [frozenset(e) for e in g.edge_list if not (f & set(e))]
    if not edges:
        raise NotADualFace(f"{sorted(f)} is not a face of the Alexander dual")
    return epsilon_complex(edges, rest)


def intersection(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(frozenset(a & b for a in c1.maximal_faces for b in c2.maximal_faces))


# -- complex file format ----------------------------------------------------

def parse_complex(text: str) -> SimplicialComplex:
    """One maximal face per line; ``empty`` means {∅}; no faces means VOID."""
    faces = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "empty":
            faces.append(frozenset())
            continue
        toks = line.split()
        if not all(t.isdigit() for t in toks):
            raise GraphFormatError(f"malformed face {raw.strip()!r}", line_no)
        faces.append(frozenset(int(t) for t in toks))
    return SimplicialComplex(frozenset(faces))


def format_complex(c: SimplicialComplex) -> str:
    if c.is_void:
        return ""
    if c.is_empty_set:
        return "empty\n"
    return "".join(" ".join(map(str, f)) + "\n" for f in c.facets())
