"""Canonical forms and isomorphism testing.

A labeling is produced from a sequence of generators: starting at the unit,
points are numbered in breadth-first order of the orbit under the right
translations of the generators chosen so far. The next generator ranges
over every element outside the current orbit whose invariant key is
maximal. The canonical table is the lexicographically least relabeled
table over all such sequences.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

import numpy as np

from src.permgrp import Permutation

from .loop import Loop
from .structure import _associator_mask, right_power_period

ElementKey = tuple[int, ...]


def element_keys(loop: Loop) -> list[ElementKey]:
    """Isomorphism-invariant key of each element."""
    t = loop.table
    mask = _associator_mask(loop)
    left = mask.all(axis=(1, 2))
    middle = mask.all(axis=(0, 2))
    right = mask.all(axis=(0, 1))
    commuting = np.sum(t == t.T, axis=0)
    square_roots = np.bincount(np.diagonal(t), minlength=loop.order)
    return [
        (
            right_power_period(loop, a),
            int(left[a]),
            int(middle[a]),
            int(right[a]),
            int(commuting[a]),
            int(square_roots[a]),
        )
        for a in loop.elements()
    ]


def _orbit_order(loop: Loop, generators: Sequence[int]) -> list[int]:
    t = loop.table
    seq = [loop.unit]
    seen = {loop.unit}
    i = 0
    while i < len(seq):
        for g in generators:
            p = int(t[seq[i], g])
            if p not in seen:
                seen.add(p)
                seq.append(p)
        i += 1
    return seq


def _relabeled_key(loop: Loop, seq: list[int]) -> tuple[bytes, np.ndarray]:
    pos = np.empty(loop.order, dtype=np.int64)
    pos[seq] = np.arange(loop.order)
    new = pos[loop.table[np.ix_(seq, seq)]]
    return new.astype(">u2").tobytes(), pos


def canonical_labeling(loop: Loop) -> tuple[Loop, np.ndarray]:
    """Canonical relabeled loop and the mapping old element -> new element."""
    if loop.order == 1:
        return Loop(loop.table, 0, loop.name), np.zeros(1, dtype=np.int64)
    keys = element_keys(loop)
    best: Optional[tuple[bytes, np.ndarray]] = None

    def extend(generators: list[int], orbit: list[int]) -> None:
        nonlocal best
        if len(orbit) == loop.order:
            candidate = _relabeled_key(loop, orbit)
            if best is None or candidate[0] < best[0]:
                best = candidate
            return
        inside = set(orbit)
        outside = [a for a in loop.elements() if a not in inside]
        top = max(keys[a] for a in outside)
        for g in outside:
            if keys[g] == top:
                gens = generators + [g]
                extend(gens, _orbit_order(loop, gens))

    extend([], [loop.unit])
    assert best is not None
    _, pos = best
    return loop.relabel(pos), pos


def canonical_form(loop: Loop) -> Loop:
    return canonical_labeling(loop)[0]


def canonical_key(loop: Loop) -> bytes:
    """Bytes that order canonical tables lexicographically."""
    return canonical_form(loop).table.astype(">u2").tobytes()


def are_isomorphic(first: Loop, second: Loop) -> Optional[Permutation]:
    """An isomorphism first -> second, verified on the full table, or None."""
    if first.order != second.order:
        return None
    canon1, pos1 = canonical_labeling(first)
    canon2, pos2 = canonical_labeling(second)
    if canon1 != canon2:
        return None
    inverse2 = np.empty_like(pos2)
    inverse2[pos2] = np.arange(second.order)
    mapping = inverse2[pos1]
    if not np.array_equal(mapping[first.table], second.table[np.ix_(mapping, mapping)]):
        return None
    return Permutation.from_sequence(mapping)
