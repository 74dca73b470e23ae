"""Standard small loops used as inputs and test corpus."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

import numpy as np

from src.permgrp import PermGroup, Permutation

from .loop import Loop


def cyclic_group(n: int) -> Loop:
    idx = np.arange(n)
    return Loop((idx[:, None] + idx[None, :]) % n, 0, f"C{n}")


def direct_product(first: Loop, second: Loop, name: Optional[str] = None) -> Loop:
    """Element (a, b) is numbered a·|second| + b."""
    m = second.order
    table = first.table[:, None, :, None] * m + second.table[None, :, None, :]
    n = first.order * m
    label = name or f"{first.name or 'L'}x{second.name or 'L'}"
    return Loop(table.reshape(n, n), first.unit * m + second.unit, label)


def elementary_abelian(k: int) -> Loop:
    """C2^k with XOR multiplication."""
    idx = np.arange(2**k)
    return Loop(idx[:, None] ^ idx[None, :], 0, f"C2^{k}")


def group_from_permutations(generators: Sequence[Permutation], name: Optional[str] = None) -> Loop:
    """Cayley table of the permutation group, identity first."""
    group = PermGroup(generators[0].degree, generators)
    elements = group.elements()
    index = {g: i for i, g in enumerate(elements)}
    table = [[index[g * h] for h in elements] for g in elements]
    return Loop.from_table(table, unit_hint=0, name=name)


def dihedral_group(m: int) -> Loop:
    """Symmetries of a regular m-gon, order 2m."""
    rotation = Permutation(tuple((i + 1) % m for i in range(m)))
    reflection = Permutation(tuple((-i) % m for i in range(m)))
    return group_from_permutations([rotation, reflection], name=f"D{m}")


def symmetric_group(m: int) -> Loop:
    cycle = Permutation(tuple((i + 1) % m for i in range(m)))
    swap = Permutation.from_cycles(m, [(0, 1)])
    return group_from_permutations([cycle, swap], name=f"S{m}")


# Unit quaternion products: (sign, unit) for units 1, i, j, k.
_QUATERNION_UNITS = [
    [(0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 1), (1, 0), (0, 3), (1, 2)],
    [(0, 2), (1, 3), (1, 0), (0, 1)],
    [(0, 3), (0, 2), (1, 1), (1, 0)],
]


def quaternion_group() -> Loop:
    """Q8 with element 4·s + u standing for (-1)^s times unit u."""
    table = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            sa, ua = divmod(a, 4)
            sb, ub = divmod(b, 4)
            s, u = _QUATERNION_UNITS[ua][ub]
            table[a, b] = 4 * ((sa + sb + s) % 2) + u
    return Loop(table, 0, "Q8")


def small_groups() -> list[Loop]:
    """One group of each isomorphism type of order at most 8."""
    c2 = cyclic_group(2)
    return [
        cyclic_group(1),
        c2,
        cyclic_group(3),
        cyclic_group(4),
        elementary_abelian(2),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group(3),
        cyclic_group(7),
        cyclic_group(8),
        direct_product(cyclic_group(4), c2, name="C4xC2"),
        elementary_abelian(3),
        dihedral_group(4),
        quaternion_group(),
    ]
