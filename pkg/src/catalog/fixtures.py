"""Built-in loops used by the self-test and the test suite."""

from collections.abc import Iterable
from functools import lru_cache

import numpy as np

from src.extension import extension_is_right_bol_predicted
from src.loopcore import Loop, is_associative, small_groups, squares_are_trivial

from .enumeration import enumerate_right_bol

# Order 5, not right Bol; 1\0 = 2 but 0/1 = 4, so 1 has no two-sided inverse.
NON_BOL_ORDER5 = [
    [0, 1, 2, 3, 4],
    [1, 2, 0, 4, 3],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 0, 3, 1, 2],
]


def non_bol_loop() -> Loop:
    return Loop(np.array(NON_BOL_ORDER5), 0, "L5")


@lru_cache(maxsize=1)
def order8_bol_loops() -> tuple[Loop, ...]:
    """The nonassociative right Bol loops of order 8, enumerated once per process."""
    return tuple(enumerate_right_bol(8, nonassociative_only=True).loops)


def exponent_two_groups() -> list[Loop]:
    return [g for g in small_groups() if squares_are_trivial(g)]


def corpus(include_enumerated: bool = True) -> list[Loop]:
    """Every group of order at most 8, optionally with the order-8 Bol loops."""
    loops = small_groups()
    if include_enumerated:
        loops.extend(order8_bol_loops())
    return loops


def extendable(loops: Iterable[Loop]) -> list[Loop]:
    """Loops whose extension is right Bol."""
    return [loop for loop in loops if extension_is_right_bol_predicted(loop)]


def groups(loops: Iterable[Loop]) -> list[Loop]:
    return [loop for loop in loops if is_associative(loop)]
