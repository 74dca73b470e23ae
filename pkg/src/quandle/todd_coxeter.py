"""HLT coset enumeration.

Generators declared involutions (g² is a relator) share a single
self-inverse column; all other generators get a column for g and one for
g^-1. Cosets are defined first-free and coincidences are processed
immediately.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.config import settings
from src.exceptions import BudgetExceeded
from src.utils import get_logger

from .presentation import GroupPresentation, Word, rstr_presentation
from .quandle import Quandle

logger = get_logger(__name__)


class CosetStatus(str, Enum):
    COMPLETE = "complete"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class CosetTable:
    """rows[c][j] is the coset reached from c by column j."""

    rows: tuple[tuple[int, ...], ...]
    status: CosetStatus
    columns: tuple[int, ...]
    defined: int
    max_cosets: int

    @property
    def index(self) -> int:
        return len(self.rows)

    @property
    def complete(self) -> bool:
        return self.status == CosetStatus.COMPLETE

    def act(self, coset: int, letter: int) -> int:
        return self.rows[coset][self.columns[letter]]

    def trace(self, coset: int, word: Sequence[int]) -> int:
        for letter in word:
            coset = self.act(coset, letter)
        return coset


class _Overflow(Exception):
    pass


class CosetEnumerator:
    """Working state of one enumeration; not shared between threads."""

    def __init__(self, presentation: GroupPresentation, max_cosets: int):
        self.max_cosets = max_cosets
        involutions = presentation.involutory_generators()
        columns: list[int] = []
        inverse_of: list[int] = []
        for i in range(presentation.generator_count):
            if i in involutions:
                c = len(inverse_of)
                inverse_of.append(c)
                columns.extend([c, c])
            else:
                c = len(inverse_of)
                inverse_of.extend([c + 1, c])
                columns.extend([c, c + 1])
        self.columns = tuple(columns)
        self.inverse_of = inverse_of
        self.width = len(inverse_of)
        self.relators: list[list[int]] = []
        for word in presentation.relators:
            cols = [columns[letter] for letter in word]
            if len(cols) == 2 and cols[0] == cols[1] and inverse_of[cols[0]] == cols[0]:
                continue
            self.relators.append(cols)
        self.table: list[list[int]] = [[-1] * self.width]
        self.parent: list[int] = [0]

    def to_columns(self, word: Word) -> list[int]:
        return [self.columns[letter] for letter in word]

    # Coset bookkeeping

    def define(self, coset: int, col: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise _Overflow
        new = len(self.table)
        self.table.append([-1] * self.width)
        self.parent.append(new)
        self.table[coset][col] = new
        self.table[new][self.inverse_of[col]] = coset

    def rep(self, coset: int) -> int:
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            self.parent[coset], coset = root, self.parent[coset]
        return root

    def merge(self, first: int, second: int, queue: deque[int]) -> None:
        a, b = self.rep(first), self.rep(second)
        if a != b:
            low, high = min(a, b), max(a, b)
            self.parent[high] = low
            queue.append(high)

    def coincidence(self, first: int, second: int) -> None:
        queue: deque[int] = deque()
        self.merge(first, second, queue)
        table, inverse_of = self.table, self.inverse_of
        while queue:
            dead = queue.popleft()
            for col in range(self.width):
                target = table[dead][col]
                if target < 0:
                    continue
                back = inverse_of[col]
                table[target][back] = -1
                mu, nu = self.rep(dead), self.rep(target)
                if table[mu][col] >= 0:
                    self.merge(nu, table[mu][col], queue)
                elif table[nu][back] >= 0:
                    self.merge(mu, table[nu][back], queue)
                else:
                    table[mu][col] = nu
                    table[nu][back] = mu

    def scan_and_fill(self, coset: int, word: list[int]) -> None:
        table, inverse_of = self.table, self.inverse_of
        f, b = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][inverse_of[word[j]]] >= 0:
                b = table[b][inverse_of[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][inverse_of[word[i]]] = f
                return
            self.define(f, word[i])

    # Driver

    def run(self, subgroup_words: Sequence[Word]) -> bool:
        """True when the enumeration closes within budget."""
        try:
            for word in subgroup_words:
                self.scan_and_fill(0, self.to_columns(word))
            alpha = 0
            while alpha < len(self.table):
                if self.parent[alpha] == alpha:
                    for relator in self.relators:
                        self.scan_and_fill(alpha, relator)
                        if self.parent[alpha] != alpha:
                            break
                    if self.parent[alpha] == alpha:
                        for col in range(self.width):
                            if self.table[alpha][col] < 0:
                                self.define(alpha, col)
                alpha += 1
        except _Overflow:
            return False
        return True

    def standardized_rows(self) -> tuple[tuple[int, ...], ...]:
        """Live cosets renumbered in breadth-first order from coset 0."""
        order = [0]
        number = {0: 0}
        i = 0
        while i < len(order):
            row = self.table[order[i]]
            for col in range(self.width):
                if row[col] < 0:
                    continue
                target = self.rep(row[col])
                if target not in number:
                    number[target] = len(order)
                    order.append(target)
            i += 1
        return tuple(
            tuple(number[self.rep(c)] if c >= 0 else -1 for c in self.table[coset])
            for coset in order
        )

    def live_count(self) -> int:
        return sum(1 for c, p in enumerate(self.parent) if c == p)


def todd_coxeter(
    presentation: GroupPresentation,
    subgroup_gens: Sequence[Word] = (),
    max_cosets: Optional[int] = None,
) -> CosetTable:
    """Enumerate the cosets of the subgroup; status tells whether it closed."""
    budget = max_cosets or settings.effective_max_cosets
    enumerator = CosetEnumerator(presentation, budget)
    closed = enumerator.run(subgroup_gens)
    defined = len(enumerator.table)
    if closed:
        rows = enumerator.standardized_rows()
        logger.debug(f"Coset enumeration closed: index {len(rows)}, {defined} cosets defined")
        return CosetTable(rows, CosetStatus.COMPLETE, enumerator.columns, defined, budget)
    logger.info(f"Coset enumeration stopped at {defined} cosets ({enumerator.live_count()} live)")
    return CosetTable((), CosetStatus.BUDGET_EXCEEDED, enumerator.columns, defined, budget)


def group_order(presentation: GroupPresentation, max_cosets: Optional[int] = None) -> int:
    table = todd_coxeter(presentation, (), max_cosets)
    if not table.complete:
        raise BudgetExceeded(table)
    return table.index


def rstr_order(q: Quandle, max_cosets: Optional[int] = None) -> int:
    """Order of the restricted structure group."""
    return group_order(rstr_presentation(q), max_cosets)
