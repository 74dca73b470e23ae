"""Catalog module - Loop files, enumeration, analysis reports and census."""

from .analysis import (
    RECORD_COLUMNS,
    CatalogRecord,
    analyze,
    analyze_all,
    records_to_frame,
    write_tsv,
)
from .census import (
    CensusSummary,
    census_summary,
    histogram_frame,
    in_nu_population,
    nu_histogram,
    nu_set,
    nu_value,
)
from .enumeration import BolSearch, Census, enumerate_right_bol
from .fixtures import corpus, exponent_two_groups, non_bol_loop, order8_bol_loops
from .models import Base, LoopRecord
from .reader import LoopFileReader, read_loops
from .selftest import CheckResult, run_selftest
from .store import CatalogStore, table_digest
from .writer import format_block, format_loops, write_loops, write_tables

__all__ = [
    "RECORD_COLUMNS",
    "Base",
    "BolSearch",
    "CatalogRecord",
    "CatalogStore",
    "Census",
    "CensusSummary",
    "CheckResult",
    "LoopFileReader",
    "LoopRecord",
    "analyze",
    "analyze_all",
    "census_summary",
    "corpus",
    "enumerate_right_bol",
    "exponent_two_groups",
    "format_block",
    "format_loops",
    "histogram_frame",
    "in_nu_population",
    "non_bol_loop",
    "nu_histogram",
    "nu_set",
    "nu_value",
    "order8_bol_loops",
    "read_loops",
    "records_to_frame",
    "run_selftest",
    "table_digest",
    "write_loops",
    "write_tables",
    "write_tsv",
]
