"""Permutation groups by breadth-first closure."""

from __future__ import annotations

import threading
from collections import deque
from collections.abc import Iterable, Sequence
from typing import Optional

from src.config import settings
from src.exceptions import ClosureBudgetExceeded
from src.utils import get_logger

from .permutation import Permutation

logger = get_logger(__name__)


class PermGroup:
    """Group generated by permutations of a common degree.

    The element set is materialized on first use and guarded by a lock,
    after which the group is read-only.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        budget: Optional[int] = None,
        elements: Optional[Iterable[Permutation]] = None,
    ):
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"Generator degree {g.degree} != group degree {degree}")
        self.budget = budget or settings.effective_closure_budget
        self._lock = threading.Lock()
        self._elements: Optional[frozenset[Permutation]] = (
            frozenset(elements) if elements is not None else None
        )

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> PermGroup:
        """Wrap an already closed element set."""
        members = tuple(elements)
        return cls(degree, generators=members, elements=members)

    def closure(self) -> frozenset[Permutation]:
        """All group elements."""
        with self._lock:
            if self._elements is None:
                self._elements = self._close()
            return self._elements

    def _close(self) -> frozenset[Permutation]:
        identity = Permutation.identity(self.degree)
        seen = {identity}
        queue = deque([identity])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    if len(seen) > self.budget:
                        raise ClosureBudgetExceeded(self.budget)
                    queue.append(h)
        logger.debug(f"Closure of {len(self.generators)} generators on {self.degree} points: {len(seen)}")
        return frozenset(seen)

    def elements(self) -> list[Permutation]:
        """Group elements in a deterministic order."""
        return sorted(self.closure())

    def order(self) -> int:
        return len(self.closure())

    def contains(self, g: Permutation) -> bool:
        return g.degree == self.degree and g in self.closure()

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            for s in self.generators:
                q = s(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        result: list[frozenset[int]] = []
        covered: set[int] = set()
        for p in range(self.degree):
            if p not in covered:
                orb = self.orbit(p)
                covered |= orb
                result.append(orb)
        return result

    def stabilizer(self, point: int) -> PermGroup:
        return PermGroup.from_elements(
            self.degree, (g for g in self.elements() if g(point) == point)
        )


def is_sharply_transitive(perms: Sequence[Permutation], points: Iterable[int]) -> bool:
    """True iff every ordered pair of points is joined by exactly one permutation."""
    point_set = set(points)
    if not point_set:
        raise ValueError("points must be nonempty")
    for s in perms:
        if any(s(p) not in point_set for p in point_set):
            return False
    for x in point_set:
        hits = [s(x) for s in perms]
        if len(hits) != len(point_set) or set(hits) != point_set:
            return False
    return True
