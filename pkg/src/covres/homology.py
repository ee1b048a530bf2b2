"""Reduced simplicial homology over the rationals or a prime field.

Dimensions come from ranks of augmented boundary matrices, computed by
sparse elimination. Over the rationals the elimination is fraction-free:
rows stay integral and are divided by their content after every update.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from . import _bits
from .complex import SimplicialComplex, clique_complex
from .errors import InvalidArgument, ResourceLimit
from .graph import complement, cycle_graph, path_graph

MAX_NONZEROS = 10**6


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means the rationals, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not (1 < self.p < 2**31 and _is_prime(self.p)):
            raise InvalidArgument(f"{self.p} is not a prime below 2^31")

    @property
    def kind(self) -> str:
        return "rationals" if self.p == 0 else "prime"

    @classmethod
    def parse(cls, text: str | int) -> "FieldSpec":
        t = str(text).strip().lower()
        if t in ("q", "qq", "rational", "rationals", "0"):
            return cls(0)
        try:
            p = int(t)
        except ValueError:
            raise InvalidArgument(f"unknown field {text!r}") from None
        return cls(p)

    def __str__(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


# --- boundary matrices ----------------------------------------------------------

def _boundary_columns(lower: Sequence[int], upper: Sequence[int]) -> list[dict[int, int]]:
    """Columns of ∂: C(upper) -> C(lower) as sparse ``{row: ±1}`` dicts."""
    index = {m: r for r, m in enumerate(lower)}
    cols = []
    for face in upper:
        col = {}
        sign = 1
        for low in _bits.iter_bits(face):
            col[index[face ^ low]] = sign
            sign = -sign
        cols.append(col)
    return cols


def boundary_matrix(c: SimplicialComplex, i: int, field: FieldSpec = QQ) -> list[list[int]]:
    """Dense matrix of ∂_i (rows: (i-1)-faces, columns: i-faces, canonical order).

    ∂_0 is the augmentation onto the empty face. Entries are reduced mod p
    for a prime field.
    """
    by = c.faces_by_size
    lower, upper = by.get(i, []), by.get(i + 1, [])
    cols = _boundary_columns(lower, upper)
    mat = [[0] * len(upper) for _ in lower]
    for j, col in enumerate(cols):
        for r, v in col.items():
            mat[r][j] = v % field.p if field.p else v
    return mat


# --- sparse rank -------------------------------------------------------------------

def _normalize(col: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in col.values():
        g = gcd(g, v)
        if g == 1:
            return col
    return {r: v // g for r, v in col.items()}


def sparse_rank(columns: Iterable[dict[int, int]], field: FieldSpec = QQ) -> int:
    """Rank of the matrix with the given sparse columns.

    Columns are processed sparsest first (ties by index). Each new column is
    reduced against stored pivots in their storage order, so the stored set
    stays triangular; the new pivot row is the candidate appearing in the
    fewest original columns, ties to the lowest row.
    """
    p = field.p
    cols = [dict(c) for c in columns]
    if p:
        cols = [{r: v % p for r, v in c.items() if v % p} for c in cols]
    if sum(len(c) for c in cols) > MAX_NONZEROS:
        raise ResourceLimit(f"boundary matrix exceeds {MAX_NONZEROS} nonzeros")
    row_count: dict[int, int] = {}
    for c in cols:
        for r in c:
            row_count[r] = row_count.get(r, 0) + 1

    order = sorted(range(len(cols)), key=lambda j: (len(cols[j]), j))
    pivot_of_row: dict[int, int] = {}   # pivot row -> storage index
    stored: list[tuple[int, dict[int, int]]] = []

    for j in order:
        col = cols[j]
        heap = [pivot_of_row[r] for r in col if r in pivot_of_row]
        heapq.heapify(heap)
        seen = set(heap)
        while heap and col:
            s = heapq.heappop(heap)
            prow, pcol = stored[s]
            a = col.get(prow)
            if not a:
                continue
            b = pcol[prow]
            if p:
                factor = a * pow(b, -1, p) % p
                for r, v in pcol.items():
                    nv = (col.get(r, 0) - factor * v) % p
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
            else:
                g = gcd(a, b)
                sa, sb = b // g, a // g
                new = {r: v * sa for r, v in col.items()}
                for r, v in pcol.items():
                    nv = new.get(r, 0) - sb * v
                    if nv:
                        new[r] = nv
                    else:
                        new.pop(r, None)
                col = _normalize(new) if new else new
            for r in col:
                t = pivot_of_row.get(r)
                if t is not None and t not in seen:
                    seen.add(t)
                    heapq.heappush(heap, t)
        if col:
            prow = min(col, key=lambda r: (row_count[r], r))
            pivot_of_row[prow] = len(stored)
            stored.append((prow, col))
    return len(stored)


# --- homology -------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyProfile:
    """``dims[k]`` is dim H̃_{k-1}; an empty profile with ``void`` set marks the void complex."""

    dims: tuple[int, ...]
    void: bool = False

    def h(self, i: int) -> int:
        k = i + 1
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def euler(self) -> int:
        return sum((-1) ** (k - 1) * d for k, d in enumerate(self.dims))

    @property
    def is_zero(self) -> bool:
        return not any(self.dims)

    def to_json(self) -> str:
        return json.dumps(list(self.dims))


def reduced_homology(c: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    """dims of H̃_i for i = -1 .. dim c over the augmented chain complex."""
    if c.is_void:
        return HomologyProfile((), void=True)
    by = c.faces_by_size
    top = c.dim + 1  # largest face size
    ranks = [0] * (top + 2)  # ranks[s]: rank of ∂ from size-s faces to size-(s-1) faces
    for s in range(1, top + 1):
        ranks[s] = sparse_rank(_boundary_columns(by.get(s - 1, []), by.get(s, [])), field)
    dims = tuple(len(by.get(s, [])) - ranks[s] - ranks[s + 1] for s in range(top + 1))
    return HomologyProfile(dims)


def family_complex(family: str, n: int) -> SimplicialComplex:
    """Clique complex of the complement of the path or cycle on ``1..n``."""
    if family == "path":
        g = path_graph(n)
    elif family == "cycle":
        g = cycle_graph(n)
    else:
        raise InvalidArgument(f"unknown family {family!r}")
    return clique_complex(complement(g))


def homology_shift_check(family: str, n: int, field: FieldSpec = QQ) -> bool:
    """dim H̃_i(Δ_n) == dim H̃_{i-1}(Δ_{n-3}) for every i >= 0."""
    lo = 5 if family == "path" else 6
    if n < lo:
        raise InvalidArgument(f"shift check for {family} needs n >= {lo}")
    big = reduced_homology(family_complex(family, n), field)
    small = reduced_homology(family_complex(family, n - 3), field)
    top = max(len(big.dims), len(small.dims) + 1)
    return all(big.h(i) == small.h(i - 1) for i in range(0, top + 1))
