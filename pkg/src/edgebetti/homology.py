"""Reduced simplicial homology over Q or GF(p) via exact boundary-matrix ranks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .complex import SimplicialComplex
from .errors import TooLarge, VoidComplex

DEFAULT_FACE_CAP = 2**20


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (is_prime(self.p) and self.p < 2**31):
            raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``q``, ``gf2`` and ``gf:<p>`` (plus the display forms ``Q``/``GF(p)``)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(None)
        for prefix in ("gf:", "gf(", "gf"):
            if t.startswith(prefix):
                digits = t[len(prefix):].rstrip(")")
                if digits.isdigit():
                    return cls(int(digits))
        raise ValueError(f"unrecognized field {text!r}; use q, gf2 or gf:<prime>")

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldSpec(None)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[i] = dim H̃_i``; missing degrees are zero."""

    dims: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "dims", {k: v for k, v in sorted(self.dims.items()) if v})

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def is_zero(self) -> bool:
        return not self.dims

    def euler(self) -> int:
        return sum((-1) ** i * v for i, v in self.dims.items())

    def shifted(self, s: int) -> HomologyProfile:
        return HomologyProfile({i + s: v for i, v in self.dims.items()})

    def to_json(self, top: int | None = None) -> dict:
        hi = max(self.dims, default=-1) if top is None else top
        return {"dims": {str(i): self[i] for i in range(-1, hi + 1)}}


# -- ranks ------------------------------------------------------------------

def _rank_gf2(vectors: Iterable[int]) -> int:
    """Rank of bit-packed vectors over GF(2)."""
    pivots: dict[int, int] = {}
    for x in vectors:
        while x:
            lead = x.bit_length() - 1
            y = pivots.get(lead)
            if y is None:
                pivots[lead] = x
                break
            x ^= y
    return len(pivots)


def _rank_modp_dense(a: np.ndarray, p: int) -> int:
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def _primitive(v: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in v.values():
        g = math.gcd(g, x)
        if g == 1:
            return v
    return {k: x // g for k, x in v.items()}


def _rank_q_sparse(vectors: Iterable[Mapping[int, int]]) -> int:
    """Fraction-free elimination over Z; each reduced vector is kept primitive."""
    pivots: dict[int, dict[int, int]] = {}
    for vec in vectors:
        v = {k: x for k, x in vec.items() if x}
        while v:
            lead = max(v)
            w = pivots.get(lead)
            if w is None:
                pivots[lead] = _primitive(v)
                break
            a, b = v[lead], w[lead]
            g = math.gcd(a, b)
            ma, mb = b // g, a // g
            out = {}
            for k in v.keys() | w.keys():
                x = ma * v.get(k, 0) - mb * w.get(k, 0)
                if x:
                    out[k] = x
            v = _primitive(out)
    return len(pivots)


def rank(m, field: FieldSpec) -> int:
    """Rank of an integer matrix over ``field`` (entries reduced mod p for GF(p))."""
    a = np.asarray(m, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("rank expects a 2-d matrix")
    if a.size == 0:
        return 0
    if field.p == 2:
        odd = a % 2
        return _rank_gf2(
            sum(1 << int(r) for r in np.flatnonzero(odd[:, j])) for j in range(a.shape[1])
        )
    if field.p is not None:
        return _rank_modp_dense(a, field.p)
    return _rank_q_sparse(
        {int(r): int(a[r, j]) for r in np.flatnonzero(a[:, j])} for j in range(a.shape[1])
    )


# -- chain complexes --------------------------------------------------------

def _faces_by_size(c: SimplicialComplex, cap: int) -> list[list[tuple[int, ...]]]:
    sizes = [c.faces(s) for s in range(c.dim + 2)]
    total = sum(map(len, sizes))
    if total > cap:
        raise TooLarge(f"complex has {total} faces, above the cap of {cap}")
    return sizes


def boundary_matrix(c: SimplicialComplex, k: int) -> np.ndarray:
    """Matrix of ∂_k (k-faces -> (k-1)-faces) in the augmented chain complex.

    Faces are ordered lexicographically; the sign of dropping the vertex in
    position ``j`` is ``(-1)^j``.
    """
    if c.is_void:
        raise VoidComplex("the void complex has no augmented chain complex")
    cols = c.faces(k + 1) if k + 1 >= 0 else []
    rows = c.faces(k) if k >= 0 else []
    where = {f: r for r, f in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, f in enumerate(cols):
        for pos in range(len(f)):
            m[where[f[:pos] + f[pos + 1:]], j] = -1 if pos % 2 else 1
    return m


def homology_from_faces(sizes: Sequence[Sequence[int]], field: FieldSpec) -> HomologyProfile:
    """Reduced homology from faces given as bitmasks, grouped by vertex count.

    ``sizes[s]`` lists the faces with ``s`` vertices; ``sizes[0]`` must be
    ``[0]`` (the empty face) unless the complex is void.
    """
    if not sizes or not sizes[0]:
        return HomologyProfile({})
    index = [{f: r for r, f in enumerate(layer)} for layer in sizes]
    ranks = [0] * (len(sizes) + 1)  # ranks[s]: rank of map from size-s faces to size-(s-1)
    for s in range(1, len(sizes)):
        below = index[s - 1]
        if field.p == 2:
            vecs = []
            for f in sizes[s]:
                x, bits = 0, f
                while bits:
                    low = bits & -bits
                    x |= 1 << below[f ^ low]
                    bits ^= low
                vecs.append(x)
            ranks[s] = _rank_gf2(vecs)
            continue
        cols = []
        for f in sizes[s]:
            col, bits, pos = {}, f, 0
            while bits:
                low = bits & -bits
                col[below[f ^ low]] = -1 if pos % 2 else 1
                bits ^= low
                pos += 1
            cols.append(col)
        if field.p is None:
            ranks[s] = _rank_q_sparse(cols)
        else:
            dense = np.zeros((len(below), len(cols)), dtype=np.int64)
            for j, col in enumerate(cols):
                for r, x in col.items():
                    dense[r, j] = x
            ranks[s] = _rank_modp_dense(dense, field.p)
    dims = {}
    for s in range(len(sizes)):
        # degree s-1: kernel of ∂ out of size-s faces minus image from size s+1
        dims[s - 1] = len(sizes[s]) - ranks[s] - ranks[s + 1]
    return HomologyProfile(dims)


def reduced_homology_dims(
    c: SimplicialComplex,
    field: FieldSpec,
    *,
    cone_shortcut: bool = True,
    face_cap: int = DEFAULT_FACE_CAP,
) -> HomologyProfile:
    """Dimensions of H̃_i(c; field); VOID gives the zero profile, {∅} gives {-1: 1}."""
    if c.is_void:
        return HomologyProfile({})
    if cone_shortcut and c.is_cone():
        return HomologyProfile({})
    pos = {v: k for k, v in enumerate(c.vertices)}
    sizes = [
        [sum(1 << pos[v] for v in f) for f in layer]
        for layer in _faces_by_size(c, face_cap)
    ]
    return homology_from_faces(sizes, field)
