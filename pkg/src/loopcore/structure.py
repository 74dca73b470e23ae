"""Orders, nuclei, center, subloops and translation groups."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.exceptions import NotPowerAssociative
from src.permgrp import PermGroup, Permutation

from .loop import Loop

ElementSet = frozenset[int]


class Side(str, Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"


# Powers


def _closure_under_mul(loop: Loop, seeds: Iterable[int]) -> list[int]:
    t = loop.table
    members = [loop.unit]
    seen = {loop.unit}
    for s in seeds:
        if s not in seen:
            seen.add(s)
            members.append(s)
    changed = True
    while changed:
        changed = False
        current = list(members)
        for a in current:
            for b in current:
                for p in (int(t[a, b]), int(loop.ldiv_table[a, b]), int(loop.rdiv_table[a, b])):
                    if p not in seen:
                        seen.add(p)
                        members.append(p)
                        changed = True
    return members


def subloop_generated(loop: Loop, elements: Iterable[int]) -> ElementSet:
    """Smallest subloop containing the given elements."""
    return frozenset(_closure_under_mul(loop, elements))


def _cyclic_subloop_is_group(loop: Loop, a: int) -> tuple[bool, int]:
    members = sorted(subloop_generated(loop, [a]))
    k = len(members)
    pos = np.full(loop.order, -1, dtype=np.int64)
    pos[members] = np.arange(k)
    local = pos[loop.table[np.ix_(members, members)]]
    x, y, z = np.arange(k)[:, None, None], np.arange(k)[None, :, None], np.arange(k)[None, None, :]
    assoc = bool(np.all(local[local[x, y], z] == local[x, local[y, z]]))
    return assoc, k


def element_order(loop: Loop, a: int) -> int:
    """Size of the cyclic group generated by a."""
    assoc, k = _cyclic_subloop_is_group(loop, a)
    if not assoc:
        raise NotPowerAssociative(f"Element {a} generates a nonassociative subloop")
    return k


def is_power_associative(loop: Loop) -> bool:
    return all(_cyclic_subloop_is_group(loop, a)[0] for a in loop.elements())


def exponent(loop: Loop) -> int:
    return math.lcm(*(element_order(loop, a) for a in loop.elements()))


def right_power_period(loop: Loop, a: int) -> int:
    """Length of the cycle of R_a through the unit."""
    t = loop.table
    p = int(t[loop.unit, a])
    k = 1
    while p != loop.unit:
        p = int(t[p, a])
        k += 1
    return k


def squares_are_trivial(loop: Loop) -> bool:
    """x² = e for all x (exponent divides 2)."""
    return bool(np.all(np.diagonal(loop.table) == loop.unit))


# Nuclei and center


def _associator_mask(loop: Loop) -> np.ndarray:
    t = loop.table
    n = loop.order
    x, y, z = np.arange(n)[:, None, None], np.arange(n)[None, :, None], np.arange(n)[None, None, :]
    return t[t[x, y], z] == t[x, t[y, z]]


def nucleus(loop: Loop, side: Side | str) -> ElementSet:
    mask = _associator_mask(loop)
    axes = {Side.LEFT: (1, 2), Side.MIDDLE: (0, 2), Side.RIGHT: (0, 1)}[Side(side)]
    return frozenset(int(i) for i in np.flatnonzero(mask.all(axis=axes)))


def nuclei(loop: Loop) -> dict[Side, ElementSet]:
    mask = _associator_mask(loop)
    return {
        Side.LEFT: frozenset(int(i) for i in np.flatnonzero(mask.all(axis=(1, 2)))),
        Side.MIDDLE: frozenset(int(i) for i in np.flatnonzero(mask.all(axis=(0, 2)))),
        Side.RIGHT: frozenset(int(i) for i in np.flatnonzero(mask.all(axis=(0, 1)))),
    }


def full_nucleus(loop: Loop) -> ElementSet:
    parts = nuclei(loop)
    return parts[Side.LEFT] & parts[Side.MIDDLE] & parts[Side.RIGHT]


def commutant(loop: Loop) -> ElementSet:
    t = loop.table
    return frozenset(int(i) for i in np.flatnonzero(np.all(t == t.T, axis=0)))


def center(loop: Loop) -> ElementSet:
    return commutant(loop) & full_nucleus(loop)


def has_central_squares(loop: Loop) -> bool:
    squares = {int(s) for s in np.diagonal(loop.table)}
    return squares <= center(loop)


# Normality


def is_normal_subloop(loop: Loop, subset: Iterable[int]) -> bool:
    """Subloop invariant under the inner mapping generators.

    Generators used: R_a R_b R_{ab}^-1, L_a L_b L_{ba}^-1 and R_a L_a^-1,
    each applied left to right.
    """
    s = frozenset(subset)
    if not s or subloop_generated(loop, s) != s:
        return False
    t, ld, rd = loop.table, loop.ldiv_table, loop.rdiv_table
    members = np.array(sorted(s))
    member_mask = np.zeros(loop.order, dtype=bool)
    member_mask[members] = True
    for a in loop.elements():
        # x ↦ a\(x a)
        if not member_mask[ld[a, t[members, a]]].all():
            return False
        for b in loop.elements():
            ab, ba = t[a, b], t[b, a]
            # x ↦ ((x a) b)/(ab)
            if not member_mask[rd[ab, t[t[members, a], b]]].all():
                return False
            # x ↦ (ba)\(b(a x))
            if not member_mask[ld[ba, t[b, t[a, members]]]].all():
                return False
    return True


# Translation groups and autotopisms


def right_multiplication_group(loop: Loop, budget: Optional[int] = None) -> PermGroup:
    return PermGroup(
        loop.order, [loop.right_translation(a) for a in loop.elements()], budget=budget
    )


def left_multiplication_group(loop: Loop, budget: Optional[int] = None) -> PermGroup:
    return PermGroup(
        loop.order, [loop.left_translation(a) for a in loop.elements()], budget=budget
    )


@dataclass(frozen=True)
class Autotopism:
    """Triple (alpha, beta, gamma) with gamma(x·y) = alpha(x)·beta(y) when valid."""

    alpha: Permutation
    beta: Permutation
    gamma: Permutation

    @classmethod
    def identity(cls, degree: int) -> Autotopism:
        e = Permutation.identity(degree)
        return cls(e, e, e)


def is_autotopism(loop: Loop, triple: Autotopism) -> bool:
    n = loop.order
    if {triple.alpha.degree, triple.beta.degree, triple.gamma.degree} != {n}:
        raise ValueError(f"Autotopism degrees must equal the loop order {n}")
    t = loop.table
    alpha = np.array(triple.alpha.images)
    beta = np.array(triple.beta.images)
    gamma = np.array(triple.gamma.images)
    return bool(np.array_equal(gamma[t], t[np.ix_(alpha, beta)]))


def bol_autotopism(loop: Loop, d: int) -> Autotopism:
    """(R_d^-1, L_d R_d, R_d): x ↦ x/d, y ↦ (d y) d, z ↦ z d."""
    t = loop.table
    alpha = loop.rdiv_table[d, :]
    beta = t[t[d, :], d]
    gamma = t[:, d]
    return Autotopism(
        Permutation.from_sequence(alpha),
        Permutation.from_sequence(beta),
        Permutation.from_sequence(gamma),
    )
