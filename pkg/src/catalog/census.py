"""Vertical left nucleus census over a population of right Bol loops."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import pandas as pd

from src.exceptions import PopulationFilterViolated
from src.extension import extend, vertical_left_nucleus
from src.loopcore import (
    Loop,
    Side,
    check_identity,
    has_central_squares,
    is_associative,
    is_right_bol,
    nucleus,
)
from src.utils import get_logger

logger = get_logger(__name__)


def in_nu_population(loop: Loop) -> bool:
    """Right Bol with central squares, neither associative nor AIP."""
    return (
        is_right_bol(loop)
        and has_central_squares(loop)
        and not is_associative(loop)
        and not check_identity(loop, "aip").holds
    )


def _require_population(loop: Loop) -> None:
    if in_nu_population(loop):
        return
    name = loop.name or f"loop of order {loop.order}"
    raise PopulationFilterViolated(
        f"{name} is not a nonassociative, non-AIP right Bol loop with central squares"
    )


def nu_set(loop: Loop) -> frozenset[int]:
    """Base indices n with v_n in the left nucleus of the extension."""
    _require_population(loop)
    ext = extend(loop)
    left = nucleus(ext.carrier, Side.LEFT) & ext.vertical()
    found = frozenset(i - ext.n for i in left)
    by_formula = vertical_left_nucleus(loop)
    if found != by_formula:
        logger.warning(
            f"{loop.name}: vertical left nucleus {sorted(found)} disagrees with "
            f"formula result {sorted(by_formula)}"
        )
    return found


def nu_value(loop: Loop) -> int:
    return len(nu_set(loop))


def nu_histogram(loops: Iterable[Loop]) -> dict[int, int]:
    """k -> number of loops with nu = k, for k = 0..max order."""
    members = list(loops)
    values = [nu_value(loop) for loop in members]
    top = max((loop.order for loop in members), default=0)
    histogram = {k: 0 for k in range(top + 1)}
    for value in values:
        histogram[value] += 1
    return histogram


def histogram_frame(histogram: Mapping[int, int]) -> pd.DataFrame:
    frame = pd.DataFrame(
        {"k": list(histogram.keys()), "mu_k": list(histogram.values())}
    )
    return frame.sort_values("k").reset_index(drop=True)


@dataclass(frozen=True)
class CensusSummary:
    total: int
    central_squares: int
    nu_population: int


def census_summary(loops: Iterable[Loop]) -> CensusSummary:
    total = 0
    central = 0
    population = 0
    for loop in loops:
        total += 1
        if not has_central_squares(loop):
            continue
        central += 1
        if not is_associative(loop) and not check_identity(loop, "aip").holds:
            population += 1
    logger.info(f"Census: {total} loops, {central} with central squares, {population} in nu population")
    return CensusSummary(total, central, population)
