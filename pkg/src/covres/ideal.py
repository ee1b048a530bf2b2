"""Squarefree monomial ideals, identified with antichains of support sets."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from . import _bits
from .complex import SimplicialComplex, alexander_dual, clique_complex, minimal_nonface_masks
from .errors import DomainViolation, InvalidArgument, ZeroIdeal
from .graph import Graph, complement, minimal_vertex_covers_masks


class SquarefreeMonomialIdeal:
    """Ideal of K[x_1..x_n] with minimal generators x_F, stored by their supports F.

    Generators are kept in canonical order (size, then lexicographic); index
    based operations such as Scarf faces refer to this order, 0-based.
    """

    def __init__(self, n: int, gens: Iterable[Iterable[int]]):
        masks = [_bits.to_mask(g) for g in gens]
        self._init(n, masks)

    def _init(self, n: int, masks: list[int]):
        full = _bits.full(n)
        for m in masks:
            if m == 0:
                raise InvalidArgument("a generator must have nonempty support (unit ideal)")
            if m & ~full:
                raise InvalidArgument(f"generator {_bits.to_tuple(m)} not inside 1..{n}")
        self.n = n
        self.masks = tuple(_bits.sort_masks(_bits.minimal_antichain(masks)))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SquarefreeMonomialIdeal":
        self = cls.__new__(cls)
        self._init(n, list(masks))
        return self

    @property
    def gens(self) -> list[tuple[int, ...]]:
        return [_bits.to_tuple(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquarefreeMonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"SquarefreeMonomialIdeal(n={self.n}, ({', '.join(self.monomials())}))"

    def monomials(self) -> list[str]:
        return [monomial_str(m) for m in self.masks]

    def degree_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.masks:
            d = _bits.popcount(m)
            out[d] = out.get(d, 0) + 1
        return out

    def height(self) -> int:
        """Smallest size of a vertex set meeting every generator."""
        return min(_bits.popcount(t) for t in _bits.minimal_transversals(self.masks))

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SquarefreeMonomialIdeal":
        return cls(data["n"], data["gens"])


def monomial_str(mask: int) -> str:
    return "*".join(f"x{v}" for v in _bits.to_tuple(mask)) or "1"


def edge_ideal(g: Graph) -> SquarefreeMonomialIdeal:
    if not g.edges:
        raise ZeroIdeal("edge ideal of an edgeless graph is zero")
    return SquarefreeMonomialIdeal(g.n, g.edges)


def cover_ideal(g: Graph) -> SquarefreeMonomialIdeal:
    if g.has_isolated_vertex:
        raise DomainViolation(f"{g} has an isolated vertex")
    return SquarefreeMonomialIdeal.from_masks(g.n, minimal_vertex_covers_masks(g))


def stanley_reisner_complex(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Complex of all vertex sets containing no generator."""
    full = _bits.full(ideal.n)
    return SimplicialComplex.from_masks(
        ideal.n, [full & ~t for t in _bits.minimal_transversals(ideal.masks)])


def stanley_reisner_ideal(c: SimplicialComplex) -> SquarefreeMonomialIdeal:
    """Ideal generated by the minimal non-faces of ``c``."""
    return SquarefreeMonomialIdeal.from_masks(c.ambient, minimal_nonface_masks(c))


def dual_correspondence_check(g: Graph) -> bool:
    """cover_ideal(g) equals the Stanley-Reisner ideal of the dual of clique_complex(g^c)."""
    return cover_ideal(g) == stanley_reisner_ideal(alexander_dual(clique_complex(complement(g))))


def lcm_support(ideal: SquarefreeMonomialIdeal, indices: Sequence[int]) -> tuple[int, ...]:
    """Support of the lcm of the generators at the given 0-based indices."""
    if not indices:
        raise InvalidArgument("lcm of an empty set of generators")
    m = 0
    for i in indices:
        m |= ideal.masks[i]
    return _bits.to_tuple(m)
