"""Index-2 extension of a loop by two copies T and V of its elements.

Products on the carrier:

    t_a t_b = t_ab    t_a v_b = v_ab    v_a t_b = v_(a b^-1)    v_a v_b = t_(a b^-1)

Carrier numbering puts t_a at a and v_a at n + a.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.exceptions import CentralSquaresLost
from src.loopcore import (
    Identity,
    Loop,
    check_identity,
    exponent,
    has_central_squares,
    is_abelian_group,
    is_associative,
    is_right_bol,
)
from src.utils import get_logger

logger = get_logger(__name__)


class Kind(str, Enum):
    T = "t"
    V = "v"


@dataclass(frozen=True, order=True)
class TaggedElement:
    kind: Kind
    base: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.base}"


@dataclass(frozen=True)
class ExtendedLoop:
    """The extension loop together with its t/v labeling."""

    carrier: Loop
    base: Loop

    def __post_init__(self) -> None:
        if self.carrier.order != 2 * self.base.order:
            raise ValueError("Carrier must have twice the order of the base")

    @property
    def n(self) -> int:
        return self.base.order

    def t(self, a: int) -> int:
        return a

    def v(self, a: int) -> int:
        return self.n + a

    def tag(self, index: int) -> TaggedElement:
        if index < self.n:
            return TaggedElement(Kind.T, index)
        return TaggedElement(Kind.V, index - self.n)

    @property
    def labeling(self) -> tuple[TaggedElement, ...]:
        return tuple(self.tag(i) for i in range(2 * self.n))

    def transversal(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def vertical(self) -> frozenset[int]:
        return frozenset(range(self.n, 2 * self.n))


def _extension_table(loop: Loop) -> np.ndarray:
    t, inv = loop.table, loop.inverses
    n = loop.order
    t_inv = t[:, inv]  # a·b^-1
    return np.block([[t, t + n], [t_inv + n, t_inv]])


def extend(loop: Loop) -> ExtendedLoop:
    """Build the order-2n extension; needs two-sided inverses."""
    name = f"ext({loop.name})" if loop.name else None
    carrier = Loop(_extension_table(loop), loop.unit, name)
    return ExtendedLoop(carrier, loop)


def extension_cocycle_form(loop: Loop) -> np.ndarray:
    """Extension table from (a x^d)(b x^e) = (a b^m) x^(d+e), m = (-1)^d.

    Element (a, d) is numbered d·n + a; t_a is a and v_1 is x.
    """
    n = loop.order
    t, inv = loop.table, loop.inverses
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for delta in (0, 1):
        for eps in (0, 1):
            right = inv if delta else np.arange(n)
            block = t[:, right]
            table[delta * n : (delta + 1) * n, eps * n : (eps + 1) * n] = block + ((delta + eps) % 2) * n
    return table


def extension_is_right_bol_predicted(loop: Loop) -> bool:
    return is_right_bol(loop) and has_central_squares(loop)


def extension_bol_criterion(loop: Loop) -> bool:
    """Right conjugacy closed plus ab·a^-1 = a^-1 b·a."""
    return (
        is_right_bol(loop)
        and check_identity(loop, Identity.RCC).holds
        and check_identity(loop, Identity.INVERSE_CONJUGATION).holds
    )


def squares_survive_extension(loop: Loop) -> bool:
    """Whether the extension of a Bol loop with central squares keeps them."""
    return 4 % exponent(loop) == 0


def iterate_extension(loop: Loop, depth: int) -> list[Loop]:
    """[L, ext(L), ext(ext(L)), ...] with depth extension steps.

    Raises CentralSquaresLost(step) when the loop about to be extended at
    that step (1-based) is not a right Bol loop with central squares.
    """
    loops = [loop]
    for step in range(1, depth + 1):
        current = loops[-1]
        if not extension_is_right_bol_predicted(current):
            logger.info(f"Step {step}: order {current.order} loop lacks central squares")
            raise CentralSquaresLost(step, loops)
        logger.debug(
            f"Step {step}: extending order {current.order}, "
            f"squares survive: {squares_survive_extension(current)}"
        )
        loops.append(extend(current).carrier)
    return loops


@dataclass(frozen=True)
class MoufangReport:
    tilde_moufang: bool
    tilde_associative: bool
    base_abelian_group: bool

    @property
    def consistent(self) -> bool:
        return self.tilde_moufang == self.tilde_associative == self.base_abelian_group


def moufang_equivalences_report(loop: Loop) -> MoufangReport:
    carrier = extend(loop).carrier
    return MoufangReport(
        tilde_moufang=check_identity(carrier, Identity.MOUFANG).holds,
        tilde_associative=is_associative(carrier),
        base_abelian_group=is_abelian_group(loop),
    )
