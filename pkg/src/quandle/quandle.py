"""Quandles given by operation tables, and the core of a loop."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.extension import ExtendedLoop
from src.loopcore import Loop
from src.permgrp import PermGroup, Permutation


@dataclass(frozen=True, eq=False)
class Quandle:
    """table[a, b] = a ◁ b. Axioms are checked by the predicates below."""

    table: np.ndarray
    name: Optional[str] = None

    def __post_init__(self) -> None:
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise ValueError(f"Quandle table must be a nonempty square array, got {table.shape}")
        if table.min() < 0 or table.max() >= table.shape[0]:
            raise ValueError("Quandle table entries out of range")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def trivial(cls, n: int) -> Quandle:
        return cls(np.repeat(np.arange(n)[:, None], n, axis=1), f"T{n}")

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def right_translation(self, b: int) -> Permutation:
        """a ↦ a ◁ b."""
        return Permutation.from_sequence(self.table[:, b])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quandle):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())


def core(loop: Loop) -> Quandle:
    """a + b = (b a^-1) b."""
    t, inv = loop.table, loop.inverses
    a = np.arange(loop.order)[:, None]
    b = np.arange(loop.order)[None, :]
    name = f"core({loop.name})" if loop.name else None
    return Quandle(t[t[b, inv[a]], b], name)


def _columns_are_bijections(table: np.ndarray) -> bool:
    n = table.shape[0]
    return bool(np.all(np.sort(table, axis=0) == np.arange(n)[:, None]))


def _rows_are_bijections(table: np.ndarray) -> bool:
    n = table.shape[0]
    return bool(np.all(np.sort(table, axis=1) == np.arange(n)[None, :]))


def is_quandle(q: Quandle) -> bool:
    """Idempotent, right-invertible and right self-distributive."""
    t = q.table
    n = q.order
    idx = np.arange(n)
    if not np.array_equal(t[idx, idx], idx):
        return False
    if not _columns_are_bijections(t):
        return False
    a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    return bool(np.all(t[t[a, b], c] == t[t[a, c], t[b, c]]))


def is_involutory(q: Quandle) -> bool:
    """(a ◁ b) ◁ b = a."""
    t = q.table
    b = np.arange(q.order)[None, :]
    return bool(np.all(t[t, b] == np.arange(q.order)[:, None]))


def is_quasigroup_quandle(q: Quandle) -> bool:
    return is_quandle(q) and _rows_are_bijections(q.table)


def rmlt_group(q: Quandle) -> PermGroup:
    return PermGroup(q.order, [q.right_translation(b) for b in range(q.order)])


def orbit_count(q: Quandle) -> int:
    """Orbits of the right translations, by union-find."""
    parent = list(range(q.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(q.order):
        for b in range(q.order):
            ra, rc = find(a), find(q.op(a, b))
            if ra != rc:
                parent[max(ra, rc)] = min(ra, rc)
    return len({find(x) for x in range(q.order)})


def is_connected(q: Quandle) -> bool:
    return orbit_count(q) == 1


@dataclass(frozen=True)
class CoreDecomposition:
    t_closed: bool
    v_closed: bool
    t_iso_core: bool
    v_iso_core: bool
    mixed_tv: bool
    mixed_vt: bool

    @property
    def all_hold(self) -> bool:
        return all(
            (self.t_closed, self.v_closed, self.t_iso_core, self.v_iso_core, self.mixed_tv, self.mixed_vt)
        )


def core_decomposition_check(ext: ExtendedLoop) -> CoreDecomposition:
    """Check the T/V split of the extension's core against the base core."""
    n = ext.n
    whole = core(ext.carrier).table
    base = ext.base
    base_core = core(base).table
    t = base.table
    inv = base.inverses
    tt = whole[:n, :n]
    vv = whole[n:, n:]
    tv = whole[:n, n:]
    vt = whole[n:, :n]
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    # t_a + v_b = t_(ba·b^-1) and v_a + t_b = v_(ba·b^-1)
    mixed = t[t[b, a], inv[b]]
    return CoreDecomposition(
        t_closed=bool(np.all(tt < n)),
        v_closed=bool(np.all(vv >= n)),
        t_iso_core=bool(np.array_equal(tt, base_core)),
        v_iso_core=bool(np.array_equal(vv - n, base_core)),
        mixed_tv=bool(np.array_equal(tv, mixed)),
        mixed_vt=bool(np.array_equal(vt, mixed + n)),
    )
