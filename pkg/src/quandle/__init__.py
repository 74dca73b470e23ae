"""Quandle module - Core quandles, restricted structure groups and coset enumeration."""

from .presentation import (
    GroupPresentation,
    Word,
    abelianized_rank,
    evaluate_word,
    format_presentation,
    format_word,
    gen,
    inv,
    parse_presentation,
    rstr_presentation,
)
from .quandle import (
    CoreDecomposition,
    Quandle,
    core,
    core_decomposition_check,
    is_connected,
    is_involutory,
    is_quandle,
    is_quasigroup_quandle,
    orbit_count,
    rmlt_group,
)
from .todd_coxeter import (
    CosetEnumerator,
    CosetStatus,
    CosetTable,
    group_order,
    rstr_order,
    todd_coxeter,
)

__all__ = [
    "CoreDecomposition",
    "CosetEnumerator",
    "CosetStatus",
    "CosetTable",
    "GroupPresentation",
    "Quandle",
    "Word",
    "abelianized_rank",
    "core",
    "core_decomposition_check",
    "evaluate_word",
    "format_presentation",
    "format_word",
    "gen",
    "group_order",
    "inv",
    "is_connected",
    "is_involutory",
    "is_quandle",
    "is_quasigroup_quandle",
    "orbit_count",
    "parse_presentation",
    "rmlt_group",
    "rstr_order",
    "rstr_presentation",
    "todd_coxeter",
]
