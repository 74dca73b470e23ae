"""Finite loops given by Cayley tables.

Elements are 0-based indices. The unit is detected from the table and
recorded as given; tables are never silently relabeled.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

import numpy as np

from src.exceptions import LoopError, NotLatin, NoUnit, TwoSidedInverseMissing, UnitMismatch
from src.permgrp import Permutation


def _find_units(table: np.ndarray) -> list[int]:
    n = table.shape[0]
    ident = np.arange(n)
    return [
        e
        for e in range(n)
        if np.array_equal(table[e], ident) and np.array_equal(table[:, e], ident)
    ]


def _inverse_rows(table: np.ndarray) -> np.ndarray:
    """out[a, table[a, x]] = x for every row a."""
    n = table.shape[0]
    out = np.empty_like(table)
    rows = np.arange(n)[:, None]
    out[rows, table] = np.arange(n)[None, :]
    return out


@dataclass(frozen=True, eq=False)
class Loop:
    """A finite loop: Latin square with a two-sided unit."""

    table: np.ndarray
    unit: int
    name: Optional[str] = None

    def __post_init__(self) -> None:
        table = np.array(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise LoopError(f"Table must be a nonempty square array, got shape {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise LoopError(f"Table entries must lie in [0, {n})")
        ident = np.arange(n)
        bad_rows = np.flatnonzero(np.any(np.sort(table, axis=1) != ident, axis=1))
        if bad_rows.size:
            raise NotLatin(f"Row {int(bad_rows[0])} repeats a value")
        bad_cols = np.flatnonzero(np.any(np.sort(table, axis=0) != ident[:, None], axis=0))
        if bad_cols.size:
            raise NotLatin(f"Column {int(bad_cols[0])} repeats a value")
        unit = int(self.unit)
        if not 0 <= unit < n:
            raise UnitMismatch(f"Unit {unit} out of range")
        if not (np.array_equal(table[unit], ident) and np.array_equal(table[:, unit], ident)):
            raise UnitMismatch(f"Element {unit} is not a two-sided identity")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "unit", unit)

    @classmethod
    def from_table(
        cls,
        rows: Sequence[Sequence[int]] | np.ndarray,
        unit_hint: Optional[int] = None,
        name: Optional[str] = None,
    ) -> Loop:
        """Validate a Cayley table and detect its unit."""
        table = np.array(rows, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise LoopError(f"Table must be a nonempty square array, got shape {table.shape}")
        if unit_hint is not None:
            return cls(table, unit_hint, name)
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise LoopError(f"Table entries must lie in [0, {n})")
        units = _find_units(table)
        if not units:
            # Latin failures take precedence over a missing unit.
            cls._check_latin(table)
            raise NoUnit("No element is a two-sided identity")
        return cls(table, units[0], name)

    @staticmethod
    def _check_latin(table: np.ndarray) -> None:
        n = table.shape[0]
        ident = np.arange(n)
        if np.any(np.sort(table, axis=1) != ident) or np.any(np.sort(table, axis=0) != ident[:, None]):
            raise NotLatin("Table is not a Latin square")

    # Basic arithmetic

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def ldiv(self, a: int, b: int) -> int:
        """The unique x with a·x = b."""
        return int(self.ldiv_table[a, b])

    def rdiv(self, b: int, a: int) -> int:
        """The unique y with y·a = b (written b/a)."""
        return int(self.rdiv_table[a, b])

    @cached_property
    def ldiv_table(self) -> np.ndarray:
        """ldiv_table[a, b] = a\\b."""
        out = _inverse_rows(self.table)
        out.setflags(write=False)
        return out

    @cached_property
    def rdiv_table(self) -> np.ndarray:
        """rdiv_table[a, b] = b/a."""
        out = _inverse_rows(np.ascontiguousarray(self.table.T))
        out.setflags(write=False)
        return out

    @cached_property
    def _one_sided_inverses(self) -> tuple[np.ndarray, np.ndarray]:
        right = self.ldiv_table[:, self.unit]
        left = self.rdiv_table[:, self.unit]
        return right, left

    def has_inverses(self) -> bool:
        right, left = self._one_sided_inverses
        return bool(np.array_equal(right, left))

    @cached_property
    def inverses(self) -> np.ndarray:
        """Two-sided inverse of every element."""
        right, left = self._one_sided_inverses
        bad = np.flatnonzero(right != left)
        if bad.size:
            a = int(bad[0])
            raise TwoSidedInverseMissing(
                f"Element {a}: right inverse {int(right[a])} != left inverse {int(left[a])}"
            )
        out = right.copy()
        out.setflags(write=False)
        return out

    def inverse(self, a: int) -> int:
        """Two-sided inverse of a alone; other elements may lack one."""
        right = int(self.ldiv_table[a, self.unit])
        left = int(self.rdiv_table[a, self.unit])
        if right != left:
            raise TwoSidedInverseMissing(
                f"Element {a}: right inverse {right} != left inverse {left}"
            )
        return right

    def square(self, a: int) -> int:
        return int(self.table[a, a])

    # Translations

    def right_translation(self, a: int) -> Permutation:
        """R_a: x ↦ x·a."""
        return Permutation.from_sequence(self.table[:, a])

    def left_translation(self, a: int) -> Permutation:
        """L_a: x ↦ a·x."""
        return Permutation.from_sequence(self.table[a, :])

    # Relabeling and presentation

    def relabel(self, mapping: Sequence[int] | np.ndarray, name: Optional[str] = None) -> Loop:
        """Isomorphic copy where old element x becomes mapping[x]."""
        pos = np.asarray(mapping, dtype=np.int64)
        n = self.order
        if sorted(pos.tolist()) != list(range(n)):
            raise ValueError("mapping must be a permutation of the elements")
        new = np.empty_like(self.table)
        new[np.ix_(pos, pos)] = pos[self.table]
        return Loop(new, int(pos[self.unit]), name if name is not None else self.name)

    def with_name(self, name: Optional[str]) -> Loop:
        return Loop(self.table, self.unit, name)

    def rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.table]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Loop):
            return NotImplemented
        return self.unit == other.unit and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.unit, self.table.tobytes()))

    def __repr__(self) -> str:
        label = f"'{self.name}', " if self.name else ""
        return f"Loop({label}order={self.order}, unit={self.unit})"
