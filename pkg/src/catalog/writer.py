"""Loop file writer; output is byte-for-byte deterministic."""

from collections.abc import Iterable, Sequence
from pathlib import Path

import numpy as np

from src.loopcore import Loop


def format_block(keyword: str, name: str, table: np.ndarray) -> str:
    lines = [f"{keyword} {name}", f"order {table.shape[0]}"]
    lines.extend(" ".join(str(int(v) + 1) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def format_loops(loops: Sequence[Loop]) -> str:
    blocks = [
        format_block("loop", loop.name or f"loop{i + 1}", loop.table)
        for i, loop in enumerate(loops)
    ]
    return "\n".join(blocks)


def write_loops(path: Path, loops: Iterable[Loop]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_loops(list(loops)))


def write_tables(path: Path, keyword: str, named_tables: Iterable[tuple[str, np.ndarray]]) -> None:
    """Write arbitrary square tables (quandles) in the same block format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = "\n".join(format_block(keyword, name, table) for name, table in named_tables)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
