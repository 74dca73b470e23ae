"""Enumeration of right Bol loops of small order up to isomorphism.

Search layout:
  * element 0 is the unit, so row 0 and column 0 are fixed;
  * element 1 is an element of maximal order k. In a right Bol loop
    R_x^k = R_(x^k), so every cycle of R_1 has length k and column 1 can
    be prefilled as consecutive cycles 0 -> 1 -> ... -> k-1 -> 0,
    k -> k+1 -> ... and so on. Leaves with an element of order above k
    are discarded;
  * cells are branched in minimum-remaining-values order, and every
    assignment propagates Latin singles and right Bol deductions on
    triples whose inner products are known.

Work units are (k, first branching cell, value); results are merged by
canonical form, so serial and parallel runs give the same catalog.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from src.config import settings
from src.exceptions import SearchBudgetExceeded
from src.loopcore import (
    Loop,
    canonical_labeling,
    has_central_squares,
    is_associative,
    is_right_bol,
    right_power_period,
)
from src.utils import get_logger

logger = get_logger(__name__)

MAX_ORDER = 16

ValueOrder = Literal["ascending", "descending"]


@dataclass
class Census:
    """Loops found by an enumeration, in canonical order."""

    order: int
    loops: list[Loop] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0


class _NodeBudget(Exception):
    pass


class BolSearch:
    """Backtracking completion of right Bol Cayley tables."""

    def __init__(
        self,
        n: int,
        generator_order: int,
        central_squares: bool = False,
        node_budget: Optional[int] = None,
        value_order: ValueOrder = "ascending",
    ):
        if n % generator_order:
            raise ValueError(f"Element order {generator_order} does not divide {n}")
        self.n = n
        self.k = generator_order
        self.central_squares = central_squares
        self.node_budget = node_budget or settings.effective_search_node_budget
        self.descending = value_order == "descending"
        self.nodes = 0
        self.cell = [[-1] * n for _ in range(n)]
        self.rowpos = [[-1] * n for _ in range(n)]
        self.colpos = [[-1] * n for _ in range(n)]
        self.rowfree = [n] * n
        self.colfree = [n] * n
        self.square_count = [0] * n
        self.trail: list[tuple[int, int, int]] = []
        self.leaves: list[np.ndarray] = []

    # Setup

    def setup(self) -> bool:
        """Fix the unit row and column and the R_1 cycles in column 1."""
        n, k = self.n, self.k
        for i in range(n):
            if not self.assign(0, i, i) or not self.assign(i, 0, i):
                return False
        if n > 1:
            for i in range(n):
                start = (i // k) * k
                value = i + 1 if i % k < k - 1 else start
                if not self.assign(i, 1, value):
                    return False
        return True

    # Assignment with propagation

    def assign(self, x: int, y: int, v: int) -> bool:
        cell, rowpos, colpos = self.cell, self.rowpos, self.colpos
        queue = [(x, y, v)]
        while queue:
            x, y, v = queue.pop()
            current = cell[x][y]
            if current >= 0:
                if current != v:
                    return False
                continue
            if rowpos[x][v] >= 0 or colpos[y][v] >= 0:
                return False
            cell[x][y] = v
            rowpos[x][v] = y
            colpos[y][v] = x
            self.rowfree[x] -= 1
            self.colfree[y] -= 1
            if x == y:
                self.square_count[v] += 1
            self.trail.append((x, y, v))
            if not self._propagate(x, y, v, queue):
                return False
        return True

    def undo(self, mark: int) -> None:
        cell, rowpos, colpos = self.cell, self.rowpos, self.colpos
        while len(self.trail) > mark:
            x, y, v = self.trail.pop()
            cell[x][y] = -1
            rowpos[x][v] = -1
            colpos[y][v] = -1
            self.rowfree[x] += 1
            self.colfree[y] += 1
            if x == y:
                self.square_count[v] -= 1

    def _triple(self, x: int, y: int, z: int, queue: list[tuple[int, int, int]]) -> bool:
        """((xy)z)y = x((yz)y), deducing one side from the other."""
        cell = self.cell
        a = cell[x][y]
        if a < 0:
            return True
        b = cell[a][z]
        if b < 0:
            return True
        c = cell[y][z]
        if c < 0:
            return True
        d = cell[c][y]
        if d < 0:
            return True
        lhs = cell[b][y]
        rhs = cell[x][d]
        if lhs >= 0:
            if rhs >= 0:
                return lhs == rhs
            queue.append((x, d, lhs))
        elif rhs >= 0:
            queue.append((b, y, rhs))
        return True

    def _propagate(self, p: int, q: int, v: int, queue: list[tuple[int, int, int]]) -> bool:
        n = self.n
        cell, rowpos, colpos = self.cell, self.rowpos, self.colpos

        if self.rowfree[p] == 1:
            queue.append((p, cell[p].index(-1), rowpos[p].index(-1)))
        if self.colfree[q] == 1:
            x_free = next(x for x in range(n) if cell[x][q] < 0)
            queue.append((x_free, q, colpos[q].index(-1)))

        triple = self._triple
        # (p, q) as x·y
        for z in range(n):
            if not triple(p, q, z, queue):
                return False
        # (p, q) as (xy)·z
        for x in range(n):
            y = rowpos[x][p]
            if y >= 0 and not triple(x, y, q, queue):
                return False
        # (p, q) as y·z
        for x in range(n):
            if not triple(x, p, q, queue):
                return False
        # (p, q) as (yz)·y
        z = rowpos[q][p]
        if z >= 0:
            for x in range(n):
                if not triple(x, q, z, queue):
                    return False
        # (p, q) as ((xy)z)·y
        for x in range(n):
            a = cell[x][q]
            if a >= 0:
                z = rowpos[a][p]
                if z >= 0 and not triple(x, q, z, queue):
                    return False
        # (p, q) as x·((yz)y)
        for y in range(n):
            c = colpos[y][q]
            if c >= 0:
                z = rowpos[y][c]
                if z >= 0 and not triple(p, y, z, queue):
                    return False

        if self.central_squares:
            if p == q:
                for y in range(n):
                    w = cell[v][y]
                    if w >= 0:
                        queue.append((y, v, w))
                    w = cell[y][v]
                    if w >= 0:
                        queue.append((v, y, w))
            if self.square_count[p] > 0 or self.square_count[q] > 0:
                queue.append((q, p, v))
        return True

    # Branching

    def candidates(self, x: int, y: int) -> list[int]:
        rowpos, colpos = self.rowpos[x], self.colpos[y]
        values = [v for v in range(self.n) if rowpos[v] < 0 and colpos[v] < 0]
        if self.descending:
            values.reverse()
        return values

    def choose_cell(self) -> Optional[tuple[int, int, int]]:
        """Empty cell with fewest candidates as (x, y, count), or None when full."""
        n = self.n
        best: Optional[tuple[int, int, int]] = None
        for x in range(n):
            if self.rowfree[x] == 0:
                continue
            row, rowpos = self.cell[x], self.rowpos[x]
            for y in range(n):
                if row[y] >= 0:
                    continue
                colpos = self.colpos[y]
                count = sum(1 for v in range(n) if rowpos[v] < 0 and colpos[v] < 0)
                if best is None or count < best[2]:
                    best = (x, y, count)
                    if count <= 1:
                        return best
        return best

    def search(self) -> None:
        choice = self.choose_cell()
        if choice is None:
            self.leaves.append(np.array(self.cell, dtype=np.int64))
            return
        x, y, count = choice
        if count == 0:
            return
        for v in self.candidates(x, y):
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise _NodeBudget
            mark = len(self.trail)
            if self.assign(x, y, v):
                self.search()
            self.undo(mark)


@dataclass(frozen=True)
class _UnitSpec:
    n: int
    k: int
    cell: Optional[tuple[int, int, int]]
    nonassociative_only: bool
    central_squares: bool
    node_budget: int
    value_order: ValueOrder


@dataclass
class _UnitResult:
    tables: dict[bytes, list[list[int]]]
    nodes: int
    complete: bool


def _accept(table: np.ndarray, spec: _UnitSpec) -> Optional[Loop]:
    loop = Loop(table, 0)
    if any(right_power_period(loop, a) > spec.k for a in loop.elements()):
        return None
    if not is_right_bol(loop):
        return None
    if spec.central_squares and not has_central_squares(loop):
        return None
    if spec.nonassociative_only and is_associative(loop):
        return None
    return loop


def _run_unit(spec: _UnitSpec) -> _UnitResult:
    search = BolSearch(spec.n, spec.k, spec.central_squares, spec.node_budget, spec.value_order)
    complete = True
    if search.setup() and (spec.cell is None or search.assign(*spec.cell)):
        try:
            search.search()
        except _NodeBudget:
            complete = False
    tables: dict[bytes, list[list[int]]] = {}
    for leaf in search.leaves:
        loop = _accept(leaf, spec)
        if loop is None:
            continue
        canonical, _ = canonical_labeling(loop)
        key = canonical.table.astype(">u2").tobytes()
        if key not in tables:
            tables[key] = canonical.rows()
    logger.debug(
        f"Unit k={spec.k} cell={spec.cell}: {len(search.leaves)} leaves, "
        f"{len(tables)} classes, {search.nodes} nodes"
    )
    return _UnitResult(tables, search.nodes, complete)


def _work_units(
    n: int,
    nonassociative_only: bool,
    central_squares: bool,
    node_budget: int,
    value_order: ValueOrder,
) -> list[_UnitSpec]:
    units = []
    for k in range(2, n + 1):
        if n % k:
            continue
        root = BolSearch(n, k, central_squares, node_budget, value_order)
        if not root.setup():
            continue
        choice = root.choose_cell()
        common = dict(
            n=n,
            k=k,
            nonassociative_only=nonassociative_only,
            central_squares=central_squares,
            node_budget=node_budget,
            value_order=value_order,
        )
        if choice is None:
            units.append(_UnitSpec(cell=None, **common))  # type: ignore[arg-type]
            continue
        x, y, _ = choice
        for v in root.candidates(x, y):
            units.append(_UnitSpec(cell=(x, y, v), **common))  # type: ignore[arg-type]
    return units


def enumerate_right_bol(
    n: int,
    nonassociative_only: bool = False,
    central_squares_only: bool = False,
    node_budget: Optional[int] = None,
    jobs: int = 1,
    value_order: ValueOrder = "ascending",
) -> Census:
    """All right Bol loops of order n up to isomorphism, canonically sorted.

    node_budget applies to each work unit. Raises SearchBudgetExceeded with
    the partial census attached when some unit runs out.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"Enumeration supports orders 1..{MAX_ORDER}, got {n}")
    if n == MAX_ORDER:
        logger.warning("Enumerating order 16 is a long-running search")
    budget = node_budget or settings.effective_search_node_budget

    if n == 1:
        trivial = Loop(np.zeros((1, 1), dtype=np.int64), 0, "RightBol1-1")
        return Census(1, [] if nonassociative_only else [trivial])

    units = _work_units(n, nonassociative_only, central_squares_only, budget, value_order)
    logger.info(f"Order {n}: {len(units)} work units, jobs={jobs}")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_unit, units))
    else:
        results = [_run_unit(unit) for unit in units]

    merged: dict[bytes, list[list[int]]] = {}
    for result in results:
        merged.update(result.tables)
    loops = [
        Loop(np.array(merged[key]), 0, f"RightBol{n}-{i + 1}")
        for i, key in enumerate(sorted(merged))
    ]
    census = Census(
        order=n,
        loops=loops,
        complete=all(r.complete for r in results),
        nodes=sum(r.nodes for r in results),
    )
    logger.info(f"Order {n}: {len(loops)} loops, {census.nodes} nodes, complete={census.complete}")
    if not census.complete:
        raise SearchBudgetExceeded(census)
    return census
