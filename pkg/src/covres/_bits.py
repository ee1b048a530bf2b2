"""Vertex subsets as integer bitmasks (bit v-1 <-> vertex v)."""

from __future__ import annotations

from typing import Iterable, Iterator


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full(n: int) -> int:
    return (1 << n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of ``mask`` from lowest to highest."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: by size, then lexicographically on sorted vertices."""
    t = to_tuple(mask)
    return (len(t), t)


def sort_masks(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=canonical_key)


def antichain(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``masks`` (duplicates dropped)."""
    ms = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in ms:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def minimal_antichain(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of ``masks`` (duplicates dropped)."""
    ms = sorted(set(masks), key=popcount)
    kept: list[int] = []
    for m in ms:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(sets: Iterable[int]) -> list[int]:
    """Inclusion-minimal masks meeting every mask in ``sets`` (Berge's method).

    An empty family has the single transversal 0; a family containing 0 has none.
    """
    trans = [0]
    for s in sets:
        if s == 0:
            return []
        grown = set()
        for t in trans:
            if t & s:
                grown.add(t)
            else:
                for low in iter_bits(s):
                    grown.add(t | low)
        trans = minimal_antichain(grown)
    return trans
