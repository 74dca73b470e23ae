"""Per-loop structural summary and TSV reports."""

from collections.abc import Iterable
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Optional

import pandas as pd

from src.exceptions import PopulationFilterViolated
from src.loopcore import (
    Loop,
    Side,
    center,
    check_identity,
    commutant,
    exponent,
    has_central_squares,
    is_power_associative,
    nuclei,
)
from src.quandle import core, orbit_count
from src.utils import get_logger

from .census import nu_value

logger = get_logger(__name__)

RECORD_COLUMNS = [
    "name",
    "order",
    "right_bol",
    "moufang",
    "associative",
    "commutative",
    "aip",
    "rcc",
    "central_squares",
    "exponent",
    "left_nucleus",
    "middle_nucleus",
    "right_nucleus",
    "commutant",
    "center",
    "core_orbits",
    "nu",
]

OPTIONAL_COLUMNS = ["exponent", "core_orbits", "nu"]


@dataclass(frozen=True)
class CatalogRecord:
    """Flags and invariants of one loop; None marks an undefined value."""

    name: str
    order: int
    right_bol: bool
    moufang: bool
    associative: bool
    commutative: bool
    aip: bool
    rcc: bool
    central_squares: bool
    exponent: Optional[int]
    left_nucleus: int
    middle_nucleus: int
    right_nucleus: int
    commutant: int
    center: int
    core_orbits: Optional[int]
    nu: Optional[int]

    def as_row(self) -> dict[str, Any]:
        return asdict(self)


def analyze(loop: Loop) -> CatalogRecord:
    flags = {
        name: check_identity(loop, name).holds
        for name in ("right_bol", "moufang", "associative", "commutative", "aip", "rcc")
    }
    parts = nuclei(loop)

    core_orbits: Optional[int] = None
    if flags["right_bol"]:
        core_orbits = orbit_count(core(loop))

    nu: Optional[int]
    try:
        nu = nu_value(loop)
    except PopulationFilterViolated:
        nu = None

    record = CatalogRecord(
        name=loop.name or "",
        order=loop.order,
        central_squares=has_central_squares(loop),
        exponent=exponent(loop) if is_power_associative(loop) else None,
        left_nucleus=len(parts[Side.LEFT]),
        middle_nucleus=len(parts[Side.MIDDLE]),
        right_nucleus=len(parts[Side.RIGHT]),
        commutant=len(commutant(loop)),
        center=len(center(loop)),
        core_orbits=core_orbits,
        nu=nu,
        **flags,
    )
    logger.debug(f"Analyzed {record.name or 'loop'}: {record}")
    return record


def analyze_all(loops: Iterable[Loop]) -> list[CatalogRecord]:
    records = [analyze(loop) for loop in loops]
    logger.info(f"Analyzed {len(records)} loops")
    return records


def records_to_frame(records: Iterable[CatalogRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([r.as_row() for r in records], columns=RECORD_COLUMNS)
    for column in OPTIONAL_COLUMNS:
        frame[column] = frame[column].astype("Int64")
    return frame


def write_tsv(records: Iterable[CatalogRecord], path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = records_to_frame(records)
    frame.to_csv(path, sep="\t", index=False, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} records to {path}")
