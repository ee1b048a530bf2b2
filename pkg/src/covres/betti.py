"""Graded Betti tables of squarefree monomial ideals.

Two independent routes are provided:

* :func:`betti_hochster` sums reduced homology of restrictions of the
  Stanley-Reisner complex, ``beta_{i,j}(I) = sum_{|W|=j} dim H~_{j-i-2}(Delta|_W)``;
* :func:`betti_corner_links` / :func:`betti_table_links` use links in the
  clique complex of the complementary graph, ``beta_{i,i+j}(J(G)) =
  sum_{F, |F| = n-(i+j)} dim H~_{i-1}(link F)``.

Homological degree ``i`` refers to the ideal itself, so ``beta_{0,j}``
counts the minimal generators of degree ``j``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable

from . import _bits
from .complex import (
    SimplicialComplex,
    clique_complex,
    h_from_f,
    link,
    pure_skeleton,
    pure_skeleton_nonfacet,
    restriction_mask,
)
from .errors import DomainViolation, InvalidArgument, ResourceLimit
from .graph import Graph, complement, cycle_graph, path_graph
from .homology import QQ, FieldSpec, family_complex, reduced_homology
from .ideal import SquarefreeMonomialIdeal, cover_ideal, edge_ideal, stanley_reisner_complex
from .parallel import chunked, pmap
from .report import Report

HOCHSTER_CAP = 14


@dataclass
class BettiTable:
    n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in sorted(self.entries.items()) if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        return [self.total(i) for i in range(self.pd + 1)]

    @property
    def pd(self) -> int:
        return pd_reg(self)[0]

    @property
    def reg(self) -> int:
        return pd_reg(self)[1]

    def to_dict(self) -> dict:
        return {"n": self.n,
                "entries": [{"i": i, "j": j, "v": v} for (i, j), v in self.entries.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_tsv(self) -> str:
        return "i\tj\tv\n" + "".join(f"{i}\t{j}\t{v}\n" for (i, j), v in self.entries.items())

    def to_text(self) -> str:
        """Macaulay-style table: rows are j - i, columns are i."""
        if not self.entries:
            return "(zero table)"
        pd, reg = pd_reg(self)
        lo = min(j - i for i, j in self.entries)
        width = max(len(str(v)) for v in self.totals() + [pd]) + 1
        lines = ["      " + "".join(str(i).rjust(width) for i in range(pd + 1))]
        for r in range(lo, reg + 1):
            cells = "".join(str(self[i, i + r] or ".").rjust(width) for i in range(pd + 1))
            lines.append(f"{r:>4}: " + cells)
        lines.append("total:" + "".join(str(t).rjust(width) for t in self.totals()))
        return "\n".join(lines)


def pd_reg(t: BettiTable) -> tuple[int, int]:
    if not t.entries:
        raise InvalidArgument("projective dimension and regularity of an empty table")
    return max(i for i, _ in t.entries), max(j - i for i, j in t.entries)


# --- Hochster's formula -----------------------------------------------------------

def _is_lcm_set(w: int, gens: tuple[int, ...]) -> bool:
    """True iff ``w`` is the union of the generators it contains.

    Otherwise a vertex of ``w`` lies in no generator inside ``w``, the
    restriction is a cone over it and every homology group vanishes.
    """
    u = 0
    for g in gens:
        if g & w == g:
            u |= g
    return u == w


def _hochster_chunk(ws: list[int], delta: SimplicialComplex, gens: tuple[int, ...],
                    field: FieldSpec) -> Counter:
    acc: Counter = Counter()
    for w in ws:
        if not _is_lcm_set(w, gens):
            continue
        j = _bits.popcount(w)
        prof = reduced_homology(restriction_mask(delta, w), field)
        for k, dim in enumerate(prof.dims):
            i = j - (k - 1) - 2
            if dim and i >= 0:
                acc[i, j] += dim
    return acc


def betti_hochster(ideal: SquarefreeMonomialIdeal, field: FieldSpec = QQ, *,
                   degrees: Iterable[int] | None = None, cap: int = HOCHSTER_CAP,
                   workers: int = 1) -> BettiTable:
    """Graded Betti table of ``ideal`` by Hochster's restriction formula.

    Every subset W of the variables is visited (restricted to ``|W|`` in
    ``degrees`` when given); W that are not unions of generators give cones
    and are skipped after a bitmask test.
    """
    if ideal.n > cap:
        raise ResourceLimit(
            f"Hochster sweep over 2^{ideal.n} subsets exceeds cap n <= {cap}; "
            "use betti_corner_links for single entries")
    delta = stanley_reisner_complex(ideal)
    wanted = None if degrees is None else set(degrees)
    ws = [w for w in range(1, 1 << ideal.n)
          if wanted is None or _bits.popcount(w) in wanted]
    task = partial(_hochster_chunk, delta=delta, gens=ideal.masks, field=field)
    total: Counter = Counter()
    for part in pmap(task, chunked(ws, 8 * max(1, workers)), workers):
        total.update(part)
    return BettiTable(ideal.n, dict(total))


# --- link formula ---------------------------------------------------------------------

def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertex:
        raise DomainViolation(f"{g} has an isolated vertex")


def _link_profiles(delta: SimplicialComplex, fmasks: list[int], field: FieldSpec):
    return [(_bits.popcount(f), reduced_homology(link(delta, _bits.to_tuple(f)), field))
            for f in fmasks]


def betti_corner_links(g: Graph, i: int, j: int, field: FieldSpec = QQ, *,
                       workers: int = 1) -> int:
    """beta_{i,i+j}(J(g)): sum of dim H~_{i-1}(link F) over faces F of
    the clique complex of g^c with |F| = n - (i+j)."""
    _require_no_isolated(g)
    if i < 1:
        raise InvalidArgument("link formula entry needs homological degree i >= 1")
    size = g.n - (i + j)
    if size < 0:
        return 0
    delta = clique_complex(complement(g))
    fmasks = delta.faces_by_size.get(size, [])
    task = partial(_link_profiles, delta, field=field)
    total = 0
    for part in pmap(task, chunked(fmasks, 8 * max(1, workers)), workers):
        total += sum(prof.h(i - 1) for _, prof in part)
    return total


def betti_table_links(g: Graph, field: FieldSpec = QQ, *, workers: int = 1) -> BettiTable:
    """Full Betti table of J(g) by running the link formula over every face."""
    _require_no_isolated(g)
    delta = clique_complex(complement(g))
    fmasks = sorted(delta.face_masks())
    task = partial(_link_profiles, delta, field=field)
    acc: Counter = Counter()
    for part in pmap(task, chunked(fmasks, 8 * max(1, workers)), workers):
        for size, prof in part:
            for k, dim in enumerate(prof.dims):
                if dim:
                    acc[k, g.n - size] += dim  # i = (k-1) + 1
    return BettiTable(g.n, dict(acc))


# --- Cohen-Macaulay test -------------------------------------------------------------------

def is_cohen_macaulay(ideal: SquarefreeMonomialIdeal, table: BettiTable) -> bool:
    """S/I is Cohen-Macaulay iff pd(S/I) = pd(I) + 1 equals the height of I."""
    return table.pd + 1 == ideal.height()


# --- h-vector corner for paths ------------------------------------------------------------

def nagoya_parameters(n: int) -> tuple[int, int]:
    """(k, q) for the path on n vertices: the corner index k and skeleton size q."""
    if n < 2:
        raise InvalidArgument("path corner needs n >= 2")
    r = n % 3
    if r == 0:
        return n // 3, n // 3 - 1
    if r == 2:
        k = (n + 1) // 3
        return k, k - 1
    k = (n - 1) // 3
    return k, k


def _f_with_empty(c: SimplicialComplex, length: int) -> list[int]:
    fe = c.f_counts()  # [] for the void complex
    return fe + [0] * (length - len(fe))


def nagoya_difference(n: int) -> tuple[int, list[int]]:
    """(k, h(Delta_n(q)) - h(Delta_n(q)')) with both h-vectors taken at d = q + 1."""
    k, q = nagoya_parameters(n)
    delta = family_complex("path", n)
    d = q + 1
    fa = _f_with_empty(pure_skeleton(delta, q), d + 1)
    fb = _f_with_empty(pure_skeleton_nonfacet(delta, q), d + 1)
    return k, h_from_f([a - b for a, b in zip(fa, fb)], d)


def nagoya_corner(n: int) -> int:
    k, h = nagoya_difference(n)
    return h[k]


# --- closed forms quoted for edge and cover ideals -------------------------------------------

def edge_ideal_pd_reg_formula(family: str, n: int) -> tuple[int, int]:
    """(pd, reg) of I(P_n) or I(C_n) from the known floor(n/3) formulas."""
    m, r = divmod(n, 3)
    reg = m + 1 if r in (0, 1) else m + 2
    if family == "path":
        pd = 2 * m - 1 if r in (0, 1) else 2 * m
    elif family == "cycle":
        pd = 2 * m - 1 if r == 0 else 2 * m
    else:
        raise InvalidArgument(f"unknown family {family!r}")
    return pd, reg


def cover_ideal_pd_reg_formula(family: str, n: int) -> tuple[int, int]:
    """(pd, reg) of J(P_n) or J(C_n)."""
    m, r = divmod(n, 3)
    if family == "path":
        if r == 0:
            return m, 2 * m
        if r == 1:
            return m, 2 * m
        k = m + 1  # n = 3k - 1
        return k, 2 * k - 1
    if family == "cycle":
        return {0: (m, 2 * m), 1: (m, 2 * m + 1), 2: (m + 1, 2 * m + 1)}[r]
    raise InvalidArgument(f"unknown family {family!r}")


def theorem_corner(family: str, n: int) -> tuple[int, int, int]:
    """(i, j, value) of the corner beta_{i,j}(J(G)) at j = pd + reg, with its closed-form value."""
    pd, reg = cover_ideal_pd_reg_formula(family, n)
    m, r = divmod(n, 3)
    if family == "path":
        value = m + 1 if r == 1 else 1
    else:
        value = 2 if r == 0 else 1
    return pd, pd + reg, value


def _family_graph(family: str, n: int) -> Graph:
    return path_graph(n) if family == "path" else cycle_graph(n)


def theorem_sizes(family: str, k: int) -> list[int]:
    return [3 * k - 1, 3 * k, 3 * k + 1] if family == "path" else [3 * k, 3 * k + 1, 3 * k + 2]


def verify_corner(family: str, n: int, field: FieldSpec = QQ, *,
                  hochster_cap: int = HOCHSTER_CAP, workers: int = 1) -> Report:
    """Corner Betti number of J(G) for one path or cycle, by every available route."""
    g = _family_graph(family, n)
    i, j, value = theorem_corner(family, n)
    rep = Report(f"{family} n={n} corner beta_{{{i},{j}}}")
    rep.add(f"{family} n={n} links beta_{i},{j}", value,
            betti_corner_links(g, i, j - i, field, workers=workers))
    if n <= hochster_cap:
        t = betti_hochster(cover_ideal(g), field, degrees=[j], cap=hochster_cap, workers=workers)
        rep.add(f"{family} n={n} hochster beta_{i},{j}", value, t[i, j])
    if family == "path":
        rep.add(f"{family} n={n} h-vector corner", value, nagoya_corner(n))
    return rep


def verify_pd_reg(family: str, n: int, field: FieldSpec = QQ, *,
                  hochster_cap: int = HOCHSTER_CAP, workers: int = 1) -> Report:
    """Computed pd/reg of I(G) and J(G) against the closed forms, and corner positivity."""
    g = _family_graph(family, n)
    rep = Report(f"{family} n={n} pd/reg")
    if n <= hochster_cap:
        ti = betti_hochster(edge_ideal(g), field, cap=hochster_cap, workers=workers)
        rep.add(f"{family} n={n} (pd, reg) I", edge_ideal_pd_reg_formula(family, n), pd_reg(ti))
    tj = betti_table_links(g, field, workers=workers)
    expected = cover_ideal_pd_reg_formula(family, n)
    rep.add(f"{family} n={n} (pd, reg) J", expected, pd_reg(tj))
    pd, reg = expected
    rep.add(f"{family} n={n} corner of J positive", True, tj[pd, pd + reg] > 0)
    return rep


def verify_theorem(family: str, k_max: int, field: FieldSpec = QQ, *,
                   hochster_cap: int = HOCHSTER_CAP, workers: int = 1) -> Report:
    """Corner values and pd/reg closed forms for n in each residue class, k = 1..k_max."""
    if family not in ("path", "cycle"):
        raise InvalidArgument(f"unknown family {family!r}")
    rep = Report(f"theorem {family} k<={k_max} over {field}")
    for k in range(1, k_max + 1):
        for n in theorem_sizes(family, k):
            rep.extend(verify_corner(family, n, field, hochster_cap=hochster_cap, workers=workers))
            rep.extend(verify_pd_reg(family, n, field, hochster_cap=hochster_cap, workers=workers))
    return rep


# --- combinatorial lemma counts ---------------------------------------------------------------

def _in_facet_larger_than(delta: SimplicialComplex, face: int, size: int) -> bool:
    return any(m & face == face and _bits.popcount(m) > size for m in delta.masks)


def verify_lemma_counts(k: int, cap: int = 6) -> Report:
    """Enumerative check of the facet counts behind the three path corollaries."""
    if not 2 <= k <= cap:
        raise InvalidArgument(f"k must lie in 2..{cap}")
    rep = Report(f"lemma counts k={k}")

    # (a) n = 3k
    d = family_complex("path", 3 * k)
    small = [m for m in d.masks if _bits.popcount(m) == k]
    rep.add("(a) size-k facets of Delta_3k", [tuple(range(2, 3 * k, 3))],
            [_bits.to_tuple(m) for m in small])
    if len(small) == 1:
        f0 = small[0]
        bad = [s for s in _bits.submasks(f0) if s != f0 and not _in_facet_larger_than(d, s, k)]
        rep.add("(a) proper subsets of F0 lie in larger facets", 0, len(bad))

    # (b) n = 3k - 1
    d = family_complex("path", 3 * k - 1)
    small = [m for m in d.masks if _bits.popcount(m) == k]
    rep.add("(b) number of size-k facets of Delta_3k-1", k + 1, len(small))
    span = SimplicialComplex.from_masks(d.ambient, small)
    critical = [f for f in span.faces_by_size.get(k - 1, []) if not _in_facet_larger_than(d, f, k)]
    rep.add("(b) size-(k-1) faces of the span in no facet of size > k", k, len(critical))
    smaller = [f for s in range(k - 1) for f in span.faces_by_size.get(s, [])
               if not _in_facet_larger_than(d, f, k)]
    rep.add("(b) smaller faces of the span not in a facet of size > k", 0, len(smaller))

    # (c) n = 3k + 1
    d = family_complex("path", 3 * k + 1)

    def family_f(size: int) -> int:
        count = 0
        for f in d.faces_by_size.get(size, []):
            in_k1 = any(m & f == f and _bits.popcount(m) == k + 1 for m in d.masks)
            if in_k1 and not _in_facet_larger_than(d, f, k + 1):
                count += 1
        return count

    rep.add("(c) |F_k| in Delta_3k+1", (k + 1) ** 2, family_f(k))
    rep.add("(c) |F_k-1| in Delta_3k+1", k * (k + 1) // 2, family_f(k - 1))
    loose = [f for f in d.faces_by_size.get(k - 2, []) if not _in_facet_larger_than(d, f, k + 1)]
    rep.add("(c) size-(k-2) faces not in a facet of size > k+1", 0, len(loose))
    return rep
