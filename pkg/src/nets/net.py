"""The 3-net of a loop and its Bol reflections.

Points (x, y) are numbered x·n + y. Lines come in three pencils:
horizontal h_a = {(x, a)}, vertical v_b = {(b, y)} and transversal
t_c = {(x, y) : xy = c}. Line actions number t_c as c and v_b as n + b.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.exceptions import DegenerateNet, NotALineMap
from src.loopcore import Loop
from src.permgrp import PermGroup, Permutation


class Pencil(str, Enum):
    H = "h"
    V = "v"
    T = "t"


@dataclass(frozen=True)
class NetPoint:
    x: int
    y: int

    def third(self, loop: Loop) -> int:
        return loop.mul(self.x, self.y)

    def index(self, n: int) -> int:
        return self.x * n + self.y

    @classmethod
    def from_index(cls, index: int, n: int) -> NetPoint:
        return cls(*divmod(index, n))


@dataclass(frozen=True)
class LineIndex:
    pencil: Pencil
    label: int


def _coordinates(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, y = np.divmod(np.arange(n * n), n)
    return x, y


def reflection_image(loop: Loop, d: int, point: NetPoint) -> NetPoint:
    """Reflection through h_d: (a, b) ↦ ((ab)/d, u) with ((ab)/d)·u = a·d."""
    a, b = point.x, point.y
    first = loop.rdiv(loop.mul(a, b), d)
    return NetPoint(first, loop.ldiv(first, loop.mul(a, d)))


def geometric_reflection(loop: Loop, d: int) -> Permutation:
    """reflection_image on every point, as a point permutation."""
    n = loop.order
    t, ld, rd = loop.table, loop.ldiv_table, loop.rdiv_table
    x, y = _coordinates(n)
    first = rd[d, t[x, y]]
    second = ld[first, t[x, d]]
    return Permutation.from_sequence(first * n + second)


def bol_reflection(loop: Loop, d: int) -> Permutation:
    """(x, y) ↦ (xy·d^-1, d y^-1·d); needs two-sided inverses."""
    n = loop.order
    t, inv = loop.table, loop.inverses
    x, y = _coordinates(n)
    d_inv = inv[d]
    first = t[t[x, y], d_inv]
    second = t[t[d, inv[y]], d]
    return Permutation.from_sequence(first * n + second)


def _line_labels(loop: Loop) -> dict[Pencil, np.ndarray]:
    x, y = _coordinates(loop.order)
    return {Pencil.H: y, Pencil.V: x, Pencil.T: loop.table[x, y]}


def _line_points(loop: Loop, line: LineIndex) -> np.ndarray:
    labels = _line_labels(loop)[line.pencil]
    return np.flatnonzero(labels == line.label)


def image_line(loop: Loop, f: Permutation, line: LineIndex) -> Optional[LineIndex]:
    """The line that f maps the given line onto, or None."""
    labels = _line_labels(loop)
    images = np.asarray(f.images)[_line_points(loop, line)]
    for pencil in (Pencil.H, Pencil.V, Pencil.T):
        values = labels[pencil][images]
        if np.all(values == values[0]):
            return LineIndex(pencil, int(values[0]))
    return None


def is_collineation(loop: Loop, f: Permutation) -> bool:
    n = loop.order
    if f.degree != n * n:
        raise ValueError(f"Point map must have degree {n * n}")
    return all(
        image_line(loop, f, LineIndex(pencil, label)) is not None
        for pencil in Pencil
        for label in range(n)
    )


def line_action(loop: Loop, f: Permutation) -> Permutation:
    """Permutation induced by f on the 2n transversal and vertical lines."""
    n = loop.order
    if n < 2:
        raise DegenerateNet("Line actions need a loop of order at least 2")
    images = []
    for pencil in (Pencil.T, Pencil.V):
        for label in range(n):
            target = image_line(loop, f, LineIndex(pencil, label))
            if target is None or target.pencil == Pencil.H:
                raise NotALineMap(f"Line {pencil.value}{label} is not sent to a T or V line")
            images.append(target.label if target.pencil == Pencil.T else n + target.label)
    return Permutation(tuple(images))


def line_index(loop: Loop, line: LineIndex) -> int:
    if line.pencil == Pencil.H:
        raise NotALineMap("Horizontal lines are not numbered")
    return line.label if line.pencil == Pencil.T else loop.order + line.label


def reflection_line_maps(loop: Loop) -> list[Permutation]:
    """Line actions of sigma_d for d in element order."""
    return [line_action(loop, bol_reflection(loop, d)) for d in loop.elements()]


def sigma_set(loop: Loop) -> list[Permutation]:
    """[sigma_d for d] + [sigma_1 sigma_d for d], as line permutations."""
    reflections = reflection_line_maps(loop)
    first = reflections[loop.unit]
    return reflections + [first * r for r in reflections]


def gamma_group(loop: Loop, budget: Optional[int] = None) -> PermGroup:
    return PermGroup(2 * loop.order, reflection_line_maps(loop), budget=budget)
