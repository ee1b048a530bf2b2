"""Finite simplicial complexes given by their facets.

Vertex subsets are stored as bitmasks internally and exposed as sorted tuples.
Three degenerate cases are kept apart: the void complex (no faces at all),
the irrelevant complex ``{∅}`` and complexes with a nonempty facet.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from . import _bits
from .errors import InvalidArgument, NotAFace, ResourceLimit, UndefinedFH
from .graph import Graph, maximal_cliques_masks

DEFAULT_FACE_CAP = 1 << 24


class DegenerateDualWarning(UserWarning):
    """Alexander dual of the full simplex: the result is the void complex."""


class SimplicialComplex:
    """Complex on the ambient vertex set ``1..ambient``.

    ``embedding[v-1]`` records the original label of vertex ``v`` when the
    complex came from a restriction; otherwise it is the identity.
    """

    __slots__ = ("ambient", "masks", "embedding", "__dict__")

    def __init__(self, ambient: int, facets: Iterable[Iterable[int]] = (), *,
                 embedding: Sequence[int] | None = None):
        masks = [_bits.to_mask(f) for f in facets]
        full = _bits.full(ambient)
        for m in masks:
            if m & ~full:
                raise InvalidArgument(f"facet {_bits.to_tuple(m)} not inside 1..{ambient}")
        self._init(ambient, masks, embedding)

    def _init(self, ambient, masks, embedding):
        self.ambient = ambient
        self.masks = tuple(_bits.sort_masks(_bits.antichain(masks)))
        self.embedding = tuple(embedding) if embedding is not None else tuple(range(1, ambient + 1))
        if len(self.embedding) != ambient:
            raise InvalidArgument("embedding length must equal the ambient vertex count")

    @classmethod
    def from_masks(cls, ambient: int, masks: Iterable[int], embedding=None) -> "SimplicialComplex":
        self = cls.__new__(cls)
        self._init(ambient, list(masks), embedding)
        return self

    @classmethod
    def void(cls, ambient: int) -> "SimplicialComplex":
        return cls.from_masks(ambient, [])

    @classmethod
    def irrelevant(cls, ambient: int) -> "SimplicialComplex":
        return cls.from_masks(ambient, [0])

    @classmethod
    def simplex(cls, ambient: int) -> "SimplicialComplex":
        return cls.from_masks(ambient, [_bits.full(ambient)])

    # -- basic predicates --------------------------------------------------

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return [_bits.to_tuple(m) for m in self.masks]

    @property
    def is_void(self) -> bool:
        return not self.masks

    @property
    def is_irrelevant(self) -> bool:
        return self.masks == (0,)

    @property
    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex and -2 for the void one."""
        if not self.masks:
            return -2
        return _bits.popcount(self.masks[-1]) - 1

    @property
    def vertex_mask(self) -> int:
        v = 0
        for m in self.masks:
            v |= m
        return v

    @property
    def covers_all_vertices(self) -> bool:
        return self.vertex_mask == _bits.full(self.ambient)

    def contains_mask(self, face: int) -> bool:
        return any(face & m == face for m in self.masks)

    def __contains__(self, face) -> bool:
        return self.contains_mask(_bits.to_mask(face))

    def is_cone(self) -> bool:
        """True when some vertex lies in every facet."""
        if not self.masks:
            return False
        common = self.masks[0]
        for m in self.masks[1:]:
            common &= m
        return common != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ambient == other.ambient and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.ambient, self.masks))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(ambient={self.ambient}, void)"
        fs = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(ambient={self.ambient}, <{fs}>)"

    # -- faces ---------------------------------------------------------------

    def face_masks(self, cap: int = DEFAULT_FACE_CAP) -> set[int]:
        """Every face as a bitmask."""
        out: set[int] = set()
        for m in self.masks:
            out.update(_bits.submasks(m))
            if len(out) > cap:
                raise ResourceLimit(f"more than {cap} faces")
        return out

    @cached_property
    def faces_by_size(self) -> dict[int, list[int]]:
        """Faces grouped by cardinality, each list in canonical order."""
        by: dict[int, list[int]] = {}
        for f in self.face_masks():
            by.setdefault(_bits.popcount(f), []).append(f)
        return {k: _bits.sort_masks(v) for k, v in sorted(by.items())}

    def f_counts(self) -> list[int]:
        """``[f_{-1}, f_0, ..., f_{d-1}]``; empty for the void complex."""
        if self.is_void:
            return []
        by = self.faces_by_size
        return [len(by.get(s, ())) for s in range(self.dim + 2)]

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (s - 1) * c for s, c in enumerate(self.f_counts()))

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        return cls(data["ambient"], data["facets"])


def faces(c: SimplicialComplex, size: int) -> list[tuple[int, ...]]:
    if size < 0:
        raise InvalidArgument("face size must be >= 0")
    return [_bits.to_tuple(m) for m in c.faces_by_size.get(size, [])]


def clique_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_masks(g.n, maximal_cliques_masks(g))


# --- f- and h-vectors --------------------------------------------------------

@dataclass(frozen=True)
class FHVectors:
    f: tuple[int, ...]  # f_0 .. f_{d-1}; f_{-1} = 1 is implicit
    h: tuple[int, ...]  # h_0 .. h_d

    @property
    def d(self) -> int:
        return len(self.h) - 1


def h_from_f(f_with_empty: Sequence[int], d: int | None = None) -> list[int]:
    """Expand sum_i f_{i-1} (x-1)^{d-i} = sum_i h_i x^{d-i}.

    ``f_with_empty`` is ``[f_{-1}, f_0, ...]`` and is zero-padded up to ``d``,
    so it may be a difference of two f-vectors.
    """
    if d is None:
        d = len(f_with_empty) - 1
    f = list(f_with_empty) + [0] * (d + 1 - len(f_with_empty))
    h = [0] * (d + 1)
    for i in range(d + 1):
        # (x-1)^{d-i} contributes C(d-i, t) (-1)^{d-i-t} x^t; x^{d-k} <-> h_k
        for k in range(i, d + 1):
            h[k] += f[i] * comb(d - i, k - i) * (-1) ** (k - i)
    return h


def top_h_closed_form(f_with_empty: Sequence[int], d: int) -> int:
    """h_d = (-1)^d sum_{i=0}^{d} (-1)^i f_{i-1}."""
    f = list(f_with_empty) + [0] * (d + 1 - len(f_with_empty))
    return (-1) ** d * sum((-1) ** i * f[i] for i in range(d + 1))


def second_h_closed_form(f_with_empty: Sequence[int], d: int) -> int:
    """h_{d-1} = f_{d-2} - 2 f_{d-3} + 3 f_{d-4} - ... + (-1)^{d-1} d f_{-1}."""
    f = list(f_with_empty) + [0] * (d + 1 - len(f_with_empty))
    # f_{d-1-t} sits at list index d-t
    return sum((-1) ** (t - 1) * t * f[d - t] for t in range(1, d + 1))


def fh_vectors(c: SimplicialComplex) -> FHVectors:
    if c.is_void:
        raise UndefinedFH("f- and h-vectors are undefined for the void complex")
    fe = c.f_counts()
    return FHVectors(tuple(fe[1:]), tuple(h_from_f(fe)))


# --- duality, links, restrictions --------------------------------------------

def minimal_nonface_masks(c: SimplicialComplex) -> list[int]:
    full = _bits.full(c.ambient)
    return _bits.sort_masks(_bits.minimal_transversals(full & ~m for m in c.masks))


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """Complex whose faces are the complements of the non-faces of ``c``."""
    full = _bits.full(c.ambient)
    nonfaces = minimal_nonface_masks(c)
    if not nonfaces:
        warnings.warn("Alexander dual of the full simplex is the void complex",
                      DegenerateDualWarning, stacklevel=2)
    return SimplicialComplex.from_masks(c.ambient, [full & ~m for m in nonfaces])


def _require_face(c: SimplicialComplex, f: int) -> None:
    if not c.contains_mask(f):
        raise NotAFace(f"{_bits.to_tuple(f)} is not a face")


def link(c: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    """Faces G disjoint from f with G ∪ f a face."""
    fm = _bits.to_mask(f)
    _require_face(c, fm)
    return SimplicialComplex.from_masks(
        c.ambient, [m & ~fm for m in c.masks if m & fm == fm], c.embedding)


def star(c: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    """Closed star: all faces of facets containing f."""
    fm = _bits.to_mask(f)
    _require_face(c, fm)
    return SimplicialComplex.from_masks(
        c.ambient, [m for m in c.masks if m & fm == fm], c.embedding)


def deletion(c: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    """Faces of ``c`` that do not contain f (for a vertex: faces avoiding it)."""
    fm = _bits.to_mask(f)
    if fm == 0:
        return SimplicialComplex.void(c.ambient)
    out = []
    for m in c.masks:
        if m & fm != fm:
            out.append(m)
        else:
            out.extend(m & ~low for low in _bits.iter_bits(fm))
    return SimplicialComplex.from_masks(c.ambient, out, c.embedding)


def restriction_mask(c: SimplicialComplex, w: int) -> SimplicialComplex:
    """Faces of ``c`` inside ``w``, relabelled onto ``1..|w|``."""
    verts = _bits.to_tuple(w)
    if w == _bits.full(c.ambient):
        return c
    shrunk = set()
    for m in c.masks:
        x = m & w
        packed = 0
        for i, v in enumerate(verts):
            if x >> (v - 1) & 1:
                packed |= 1 << i
        shrunk.add(packed)
    emb = tuple(c.embedding[v - 1] for v in verts)
    return SimplicialComplex.from_masks(len(verts), shrunk, emb)


def restriction(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    wm = _bits.to_mask(w)
    if wm & ~_bits.full(c.ambient):
        raise InvalidArgument("restriction set must lie inside the ambient vertex set")
    return restriction_mask(c, wm)


# --- pure skeleta --------------------------------------------------------------

def pure_skeleton(c: SimplicialComplex, q: int) -> SimplicialComplex:
    """Subcomplex generated by all faces of size q+1 (void when there are none)."""
    if q < 0:
        return SimplicialComplex.void(c.ambient)
    return SimplicialComplex.from_masks(c.ambient, c.faces_by_size.get(q + 1, []), c.embedding)


def pure_skeleton_nonfacet(c: SimplicialComplex, q: int) -> SimplicialComplex:
    """Subcomplex generated by the size-(q+1) faces that are not facets of ``c``."""
    if q < 0:
        return SimplicialComplex.void(c.ambient)
    facet_set = set(c.masks)
    gens = [m for m in c.faces_by_size.get(q + 1, []) if m not in facet_set]
    return SimplicialComplex.from_masks(c.ambient, gens, c.embedding)


def path_facet_predicate(n: int, f: Iterable[int]) -> bool:
    """Whether ``f`` is a facet of the independence complex of the path on ``1..n``.

    Sorted elements must start at 1 or 2, advance by 2 or 3, and end at n-1 or n.
    """
    s = sorted(f)
    if not s or s[0] < 1 or s[-1] > n:
        raise InvalidArgument(f"expected a nonempty subset of 1..{n}")
    if s[0] > 2 or s[-1] < n - 1:
        return False
    return all(b - a in (2, 3) for a, b in zip(s, s[1:]))
