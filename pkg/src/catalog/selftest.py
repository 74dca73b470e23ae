"""Structural invariants checked by brute force over the built-in corpus."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.exceptions import BolkitError
from src.extension import (
    chein,
    chein_tv_form,
    extend,
    extension_bol_criterion,
    extension_cocycle_form,
    extension_is_right_bol_predicted,
    moufang_equivalences_report,
    predicted_center,
    predicted_left_nucleus,
    predicted_left_nucleus_transversal,
    predicted_right_nucleus,
    squares_survive_extension,
)
from src.loopcore import (
    Loop,
    Side,
    center,
    check_identity,
    cyclic_group,
    direct_product,
    elementary_abelian,
    has_central_squares,
    is_associative,
    is_normal_subloop,
    is_right_bol,
    nucleus,
    symmetric_group,
)
from src.nets import gamma_group, lambda_loop, sigma_set
from src.permgrp import is_sharply_transitive
from src.quandle import (
    abelianized_rank,
    core,
    core_decomposition_check,
    orbit_count,
    rstr_order,
    rstr_presentation,
)
from src.utils import get_logger

from .fixtures import corpus, exponent_two_groups, extendable, groups, order8_bol_loops

logger = get_logger(__name__)

Outcome = Optional[str]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _first_failure(loops: Sequence[Loop], check: Callable[[Loop], Outcome]) -> Outcome:
    for loop in loops:
        problem = check(loop)
        if problem:
            return f"{loop.name}: {problem}"
    return None


def _order8_census(_: Sequence[Loop]) -> Outcome:
    loops = order8_bol_loops()
    if len(loops) != 6:
        return f"found {len(loops)} nonassociative right Bol loops of order 8"
    lost = [loop.name for loop in loops if not has_central_squares(loop)]
    return f"squares not central in {lost}" if lost else None


def _bol_equivalence(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        actual = is_right_bol(extend(loop).carrier)
        if actual != extension_is_right_bol_predicted(loop):
            return f"extension right Bol = {actual}, predicted otherwise"
        if actual != extension_bol_criterion(loop):
            return "conjugacy closure criterion disagrees"
        return None

    return _first_failure(loops, check)


def _moufang_equivalence(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        report = moufang_equivalences_report(loop)
        return None if report.consistent else str(report)

    return _first_failure(loops, check)


def _nuclei_and_center(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        ext = extend(loop)
        carrier = ext.carrier
        left = nucleus(carrier, Side.LEFT)
        if nucleus(carrier, Side.RIGHT) != predicted_right_nucleus(ext):
            return "right nucleus"
        if left & ext.transversal() != predicted_left_nucleus_transversal(ext):
            return "left nucleus on T"
        whole = predicted_left_nucleus(ext)
        if whole is not None and left != whole:
            return "left nucleus"
        if center(carrier) != predicted_center(ext):
            return "center"
        if not check_identity(loop, "aip").holds:
            outside = frozenset(ext.v(a) for a in loop.elements()) - frozenset(
                ext.v(a) for a in nucleus(loop, Side.LEFT)
            )
            if not left & ext.vertical() <= outside:
                return "vertical left nucleus meets v_n for n in the left nucleus"
        return None

    return _first_failure(extendable(loops), check)


def _center_normal(loops: Sequence[Loop]) -> Outcome:
    return _first_failure(
        loops, lambda loop: None if is_normal_subloop(loop, center(loop)) else "center not normal"
    )


def _squares_survive(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        actual = has_central_squares(extend(loop).carrier)
        return None if actual == squares_survive_extension(loop) else f"central squares = {actual}"

    return _first_failure(extendable(loops), check)


def _net_loop(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        sigma = sigma_set(loop)
        if not is_sharply_transitive(sigma, range(2 * loop.order)):
            return "sigma set not sharply transitive on lines"
        rebuilt = lambda_loop(gamma_group(loop), sigma, loop.unit)
        if not np.array_equal(rebuilt.table, extend(loop).carrier.table):
            return "line loop differs from the extension"
        return None

    return _first_failure([loop for loop in extendable(loops) if loop.order > 1], check)


def _core_decomposition(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        result = core_decomposition_check(extend(loop))
        return None if result.all_hold else str(result)

    return _first_failure(extendable(loops), check)


def _abelianized_rank(loops: Sequence[Loop]) -> Outcome:
    def check(loop: Loop) -> Outcome:
        q = core(loop)
        rank = abelianized_rank(rstr_presentation(q))
        orbits = orbit_count(q)
        return None if rank == orbits else f"rank {rank} != {orbits} orbits"

    return _first_failure([loop for loop in loops if is_right_bol(loop)], check)


def _rstr_orders(_: Sequence[Loop]) -> Outcome:
    c2 = cyclic_group(2)

    def product_law(loop: Loop) -> Outcome:
        base = core(loop)
        expected = rstr_order(base) * 2 ** orbit_count(base)
        actual = rstr_order(core(direct_product(loop, c2)))
        return None if actual == expected else f"L x C2 gives {actual}, expected {expected}"

    def square_law(loop: Loop) -> Outcome:
        expected = rstr_order(core(loop)) ** 2
        actual = rstr_order(core(extend(loop).carrier))
        return None if actual == expected else f"extension gives {actual}, expected {expected}"

    squares = [cyclic_group(2), cyclic_group(3), cyclic_group(4), elementary_abelian(2)]
    return _first_failure(exponent_two_groups(), product_law) or _first_failure(squares, square_law)


def _chein(loops: Sequence[Loop]) -> Outcome:
    m12 = chein(symmetric_group(3))
    if m12.order != 12 or is_associative(m12) or not check_identity(m12, "moufang").holds:
        return "chein(S3) is not a nonassociative Moufang loop of order 12"

    def forms_agree(loop: Loop) -> Outcome:
        if not np.array_equal(chein_tv_form(loop).carrier.table, chein(loop).table):
            return "t/v form differs"
        return None

    def cocycle_agrees(loop: Loop) -> Outcome:
        if not np.array_equal(extension_cocycle_form(loop), extend(loop).carrier.table):
            return "cocycle form differs"
        return None

    return _first_failure(groups(loops), forms_agree) or _first_failure(loops, cocycle_agrees)


CHECKS: list[tuple[str, Callable[[Sequence[Loop]], Outcome]]] = [
    ("order-8 census", _order8_census),
    ("extension right Bol equivalence", _bol_equivalence),
    ("extension Moufang equivalence", _moufang_equivalence),
    ("extension nuclei and center", _nuclei_and_center),
    ("center is normal", _center_normal),
    ("central squares survive extension", _squares_survive),
    ("net reflections rebuild extension", _net_loop),
    ("core decomposition", _core_decomposition),
    ("abelianized rank equals orbit count", _abelianized_rank),
    ("restricted structure group orders", _rstr_orders),
    ("chein construction", _chein),
]


def run_selftest(include_enumerated: bool = True) -> list[CheckResult]:
    loops = corpus(include_enumerated)
    results = []
    for name, check in CHECKS:
        if not include_enumerated and check is _order8_census:
            continue
        try:
            problem = check(loops)
        except BolkitError as exc:
            problem = f"{type(exc).__name__}: {exc}"
        result = CheckResult(name, problem is None, problem or "")
        level = "info" if result.ok else "error"
        getattr(logger, level)(f"{name}: {'ok' if result.ok else problem}")
        results.append(result)
    return results
