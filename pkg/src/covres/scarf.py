"""Leaf orders of quasi-forests, intersection multisets, sensitivity and Scarf complexes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import partial
from typing import Sequence

from . import _bits
from .betti import BettiTable, betti_hochster, betti_table_links, is_cohen_macaulay
from .complex import SimplicialComplex, clique_complex
from .errors import InvalidArgument, ResourceLimit
from .graph import Graph, all_graphs, complement, is_chordal, is_complete_bipartite
from .homology import QQ, FieldSpec
from .ideal import SquarefreeMonomialIdeal, cover_ideal
from .parallel import pmap
from .report import Report

LEAF_ORDER_CAP = 9
SCARF_CAP = 20
MULTISET_CAP = 20


# --- leaf orders -------------------------------------------------------------------------

@dataclass(frozen=True)
class LeafOrder:
    """Facets F_1..F_q in order; ``branches[i]`` holds the 0-based positions
    j < i of every branch of F_i in <F_1..F_i> (empty for i = 0)."""

    masks: tuple[int, ...]
    branches: tuple[frozenset[int], ...]

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return [_bits.to_tuple(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def branch_intersection_masks(self) -> list[int]:
        """G_i ∩ F_i for i > 1 (the same for every branch G_i of F_i)."""
        out = []
        for i in range(1, len(self.masks)):
            j = min(self.branches[i])
            out.append(self.masks[j] & self.masks[i])
        return out

    def to_dict(self) -> dict:
        return {"facets": [list(f) for f in self.facets],
                "branches": [sorted(b) for b in self.branches]}


def _branch_positions(prefix: Sequence[int], f: int) -> frozenset[int]:
    """Positions of the branches of ``f`` among the facets ``prefix``.

    G is a branch iff G ∩ f contains H ∩ f for every H, i.e. iff
    G ∩ f equals (union of prefix) ∩ f.
    """
    u = 0
    for h in prefix:
        u |= h
    target = u & f
    return frozenset(j for j, g in enumerate(prefix) if g & f == target)


def make_leaf_order(masks: Sequence[int]) -> LeafOrder | None:
    """Wrap a facet sequence as a LeafOrder, or None if some F_i (i > 1) is not a leaf."""
    branches = [frozenset()]
    for i in range(1, len(masks)):
        b = _branch_positions(masks[:i], masks[i])
        if not b:
            return None
        branches.append(b)
    return LeafOrder(tuple(masks), tuple(branches))


def leaf_order(c: SimplicialComplex) -> LeafOrder | None:
    """A leaf order of ``c``, or ``None`` when ``c`` is not a quasi-forest.

    Leaves are peeled from the full facet set (latest canonical facet
    first, backtracking on dead ends) and the peeling sequence is reversed,
    so the result starts from the earliest facets where possible.
    """
    if c.is_void:
        raise InvalidArgument("the void complex has no facets")
    facets = list(c.masks)
    q = len(facets)
    dead: set[int] = set()

    def peel(remaining: int) -> list[int] | None:
        idx = [i for i in range(q) if remaining >> i & 1]
        if len(idx) == 1:
            return idx
        if remaining in dead:
            return None
        for i in reversed(idx):
            rest = [facets[j] for j in idx if j != i]
            if _branch_positions(rest, facets[i]):
                tail = peel(remaining & ~(1 << i))
                if tail is not None:
                    return tail + [i]
        dead.add(remaining)
        return None

    found = peel((1 << q) - 1)
    if found is None:
        return None
    return make_leaf_order([facets[i] for i in found])


def all_leaf_orders(c: SimplicialComplex, cap: int = LEAF_ORDER_CAP) -> list[LeafOrder]:
    """Every ordering of the facets that is a leaf order (lexicographic in canonical indices)."""
    facets = list(c.masks)
    q = len(facets)
    if q > cap:
        raise ResourceLimit(f"{q} facets exceeds the leaf-order enumeration cap {cap}")
    out: list[LeafOrder] = []

    def extend(prefix: list[int], used: int) -> None:
        if len(prefix) == q:
            out.append(make_leaf_order(prefix))
            return
        for i in range(q):
            if used >> i & 1:
                continue
            if prefix and not _branch_positions(prefix, facets[i]):
                continue
            prefix.append(facets[i])
            extend(prefix, used | 1 << i)
            prefix.pop()

    extend([], 0)
    return out


# --- intersection multiset ------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionMultiset:
    entries: Counter
    unique: frozenset[int]

    @property
    def size(self) -> int:
        return sum(self.entries.values())

    def unique_sets(self) -> list[tuple[int, ...]]:
        return [_bits.to_tuple(m) for m in _bits.sort_masks(self.unique)]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {_bits.to_tuple(m): c for m, c in self.entries.items()}

    def literal(self) -> str:
        """Multiset literal such as ``{{2,3},{4},{3}^3,∅^6}``."""
        keys = sorted(self.entries, key=lambda m: (self.entries[m], -_bits.popcount(m),
                                                   _bits.to_tuple(m)))
        return "{" + ",".join(_set_literal(m, self.entries[m]) for m in keys) + "}"

    def unique_literal(self) -> str:
        keys = sorted(self.unique, key=lambda m: (-_bits.popcount(m), _bits.to_tuple(m)))
        return "{" + ",".join(_set_literal(m, 1) for m in keys) + "}"


def _set_literal(m: int, mult: int) -> str:
    body = "∅" if m == 0 else "{" + ",".join(map(str, _bits.to_tuple(m))) + "}"
    return body if mult == 1 else f"{body}^{mult}"


def intersection_multiset_masks(masks: Sequence[int]) -> IntersectionMultiset:
    q = len(masks)
    if not 2 <= q <= MULTISET_CAP:
        raise ResourceLimit(f"intersection multiset needs 2 <= q <= {MULTISET_CAP}, got {q}")
    inter = [0] * (1 << q)
    inter[0] = -1  # all ones: identity for &
    counts: Counter = Counter()
    for s in range(1, 1 << q):
        low = s & -s
        inter[s] = inter[s ^ low] & masks[low.bit_length() - 1]
        if s != low:
            counts[inter[s]] += 1
    unique = frozenset(m for m, c in counts.items() if c == 1)
    return IntersectionMultiset(counts, unique)


def intersection_multiset(facets: Sequence[Sequence[int]]) -> IntersectionMultiset:
    return intersection_multiset_masks([_bits.to_mask(f) for f in facets])


# --- sensitivity ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Sensitivity:
    unique_branches: bool
    incomparable: bool
    ambiguous_positions: tuple[int, ...] = ()
    comparable_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def sensitive(self) -> bool:
        return self.unique_branches and self.incomparable

    def __bool__(self) -> bool:
        return self.sensitive


def is_sensitive(lo: LeafOrder) -> Sensitivity:
    """Each F_i (i > 1) has exactly one branch, and the sets G_i ∩ F_i are
    pairwise incomparable (equality counts as comparable)."""
    ambiguous = tuple(i for i in range(1, len(lo)) if len(lo.branches[i]) != 1)
    inter = lo.branch_intersection_masks()
    pairs = []
    for a in range(len(inter)):
        for b in range(a + 1, len(inter)):
            x, y = inter[a], inter[b]
            if x & y == x or x & y == y:
                pairs.append((a + 1, b + 1))
    return Sensitivity(not ambiguous, not pairs, ambiguous, tuple(pairs))


def lemma_a_star_membership(lo: LeafOrder) -> bool:
    """Every multiplicity-one intersection is some G_i ∩ F_i; when the order is
    sensitive the two sets coincide."""
    if len(lo) < 2:
        return True
    ms = intersection_multiset_masks(lo.masks)
    branch_sets = set(lo.branch_intersection_masks())
    if not ms.unique <= branch_sets:
        return False
    if is_sensitive(lo):
        return ms.unique == branch_sets
    return True


def star_equals_branch_intersections(lo: LeafOrder) -> bool:
    if len(lo) < 2:
        return True
    return intersection_multiset_masks(lo.masks).unique == set(lo.branch_intersection_masks())


def example_a_criterion(f1: int, f2: int, f3: int) -> bool:
    """Closed form for three facets in leaf order: F ∩ F' ≠ ∅ and (F ∪ F') ∩ F'' ≠ ∅."""
    return bool(f1 & f2) and bool((f1 | f2) & f3)


# --- Scarf complex -----------------------------------------------------------------------------

@dataclass(frozen=True)
class ScarfComplexData:
    """Scarf faces as sorted tuples of 0-based generator indices."""

    faces: tuple[tuple[int, ...], ...]
    fvector: tuple[int, ...]  # fvector[c-1] = number of faces of cardinality c

    def to_dict(self) -> dict:
        return {"faces": [list(f) for f in self.faces], "fvector": list(self.fvector)}


def scarf_complex(ideal: SquarefreeMonomialIdeal, cap: int = SCARF_CAP) -> ScarfComplexData:
    """Index subsets whose lcm occurs for no other nonempty index subset."""
    s = len(ideal.masks)
    if s > cap:
        raise ResourceLimit(f"{s} generators exceeds the Scarf enumeration cap {cap}")
    lcm = [0] * (1 << s)
    counts: Counter = Counter()
    for sub in range(1, 1 << s):
        low = sub & -sub
        lcm[sub] = lcm[sub ^ low] | ideal.masks[low.bit_length() - 1]
        counts[lcm[sub]] += 1
    faces = [sub for sub in range(1, 1 << s) if counts[lcm[sub]] == 1]
    as_idx = sorted((tuple(b.bit_length() - 1 for b in _bits.iter_bits(f)) for f in faces),
                    key=lambda t: (len(t), t))
    top = max((len(t) for t in as_idx), default=0)
    fvec = [0] * top
    for t in as_idx:
        fvec[len(t) - 1] += 1
    return ScarfComplexData(tuple(as_idx), tuple(fvec))


def has_scarf_resolution(ideal: SquarefreeMonomialIdeal, table: BettiTable,
                         scarf: ScarfComplexData | None = None) -> bool:
    """Scarf face counts by cardinality c equal the total Betti numbers beta_{c-1}."""
    degs = ideal.degree_counts()
    row0 = {j: v for (i, j), v in table.entries.items() if i == 0}
    if row0 != degs:
        raise InvalidArgument("Betti table does not match the ideal's generator degrees")
    if scarf is None:
        scarf = scarf_complex(ideal)
    top = max(len(scarf.fvector), table.pd + 1)
    fv = list(scarf.fvector) + [0] * (top - len(scarf.fvector))
    return all(fv[c - 1] == table.total(c - 1) for c in range(1, top + 1))


# --- Gorenstein ---------------------------------------------------------------------------------

def is_gorenstein(g: Graph, field: FieldSpec = QQ, table: BettiTable | None = None) -> bool:
    """S/J(g) is Cohen-Macaulay with last total Betti number 1."""
    j = cover_ideal(g)
    if table is None:
        table = betti_hochster(j, field) if g.n <= 14 else betti_table_links(g, field)
    return is_cohen_macaulay(j, table) and table.total(table.pd) == 1


# --- exhaustive verification ----------------------------------------------------------------------

def _scarf_graph_check(g: Graph, field: FieldSpec) -> list[str]:
    """Violations found for one graph (empty list when everything agrees)."""
    problems = []
    delta = clique_complex(complement(g))
    orders = all_leaf_orders(delta)
    if not orders:
        return ["complement chordal but no leaf order found"]
    greedy = leaf_order(delta)
    if greedy is None:
        problems.append("greedy leaf order failed")
    verdicts = {bool(is_sensitive(o)) for o in orders}
    if len(verdicts) != 1:
        problems.append("leaf orders disagree on sensitivity")
    for o in orders:
        if bool(is_sensitive(o)) != star_equals_branch_intersections(o):
            problems.append(f"A* = {{G_i ∩ F_i}} biconditional fails for order {o.facets}")
            break
        if not lemma_a_star_membership(o):
            problems.append(f"A* member not a branch intersection for order {o.facets}")
            break
    j = cover_ideal(g)
    table = betti_hochster(j, field)
    if table.pd != (1 if len(j) > 1 else 0):
        problems.append(f"pd J = {table.pd}, expected 1")
    if table.total(1) != len(j) - 1:
        problems.append(f"beta_1 total = {table.total(1)}, expected {len(j) - 1}")
    scarf = has_scarf_resolution(j, table)
    if greedy is not None and scarf != bool(is_sensitive(greedy)):
        problems.append(f"Scarf resolution {scarf} but sensitivity {bool(is_sensitive(greedy))}")
    return problems


def _scarf_sweep(n: int, field: FieldSpec, residue: int, modulus: int):
    out = []
    checked = 0
    for code, g in enumerate(all_graphs(n)):
        if code % modulus != residue:
            continue
        if g.has_isolated_vertex or not is_chordal(complement(g)):
            continue
        checked += 1
        probs = _scarf_graph_check(g, field)
        if probs:
            out.append((code, str(g), probs))
    return checked, out


def verify_scarf_theorem(n_max: int, field: FieldSpec = QQ, *, workers: int = 1) -> Report:
    """Exhaustive check over labelled graphs on n <= n_max vertices with no
    isolated vertex and chordal complement."""
    if n_max > 7:
        raise ResourceLimit("exhaustive Scarf sweep is capped at n_max <= 7")
    rep = Report(f"scarf theorem n<={n_max}")
    for n in range(2, n_max + 1):
        parts = max(1, workers) * 4
        res = pmap(partial(_sweep_part, n, field, parts), range(parts), workers)
        checked = sum(r[0] for r in res)
        bad = sorted(x for r in res for x in r[1])
        rep.add(f"n={n}: counterexamples among {checked} graphs", [], [
            f"#{code} {desc}: {'; '.join(p)}" for code, desc, p in bad])
    return rep


def _sweep_part(n, field, modulus, residue):
    return _scarf_sweep(n, field, residue, modulus)


def verify_gorenstein(n_max: int, field: FieldSpec = QQ, *, workers: int = 1) -> Report:
    """Betti-based Gorenstein test agrees with the complete-bipartite predicate."""
    rep = Report(f"gorenstein n<={n_max}")
    for n in range(2, n_max + 1):
        parts = max(1, workers) * 4
        res = pmap(partial(_gorenstein_part, n, field, parts), range(parts), workers)
        checked = sum(r[0] for r in res)
        bad = sorted(x for r in res for x in r[1])
        rep.add(f"n={n}: disagreements among {checked} graphs", [], [f"#{c} {d}" for c, d in bad])
    return rep


def _gorenstein_part(n, field, modulus, residue):
    checked = 0
    bad = []
    for code, g in enumerate(all_graphs(n)):
        if code % modulus != residue or g.has_isolated_vertex:
            continue
        checked += 1
        if is_gorenstein(g, field) != is_complete_bipartite(g):
            bad.append((code, str(g)))
    return checked, bad
