"""Loop file reader.

Format: UTF-8 text; '#' starts a comment line; each block is ``loop <name>``,
``order <n>`` and n rows of n whitespace-separated 1-based entries; blocks
are separated by blank lines.
"""

from pathlib import Path
from typing import Optional

import numpy as np

from src.exceptions import LoopError, ParseError
from src.loopcore import Loop
from src.utils import get_logger

logger = get_logger(__name__)


class LoopFileReader:
    """Read Cayley tables from a loop catalog file."""

    HEADER_KEYWORD = "loop"

    def __init__(self, file_path: Path):
        self.file_path = Path(file_path)

    def read(self) -> list[Loop]:
        """Parse every block and return validated loops in file order."""
        if not self.file_path.exists():
            raise FileNotFoundError(f"File not found: {self.file_path}")
        text = self.file_path.read_text(encoding="utf-8")
        loops = self.parse(text)
        logger.info(f"Read {len(loops)} loops from {self.file_path.name}")
        return loops

    def parse(self, text: str) -> list[Loop]:
        loops: list[Loop] = []
        name: Optional[str] = None
        order: Optional[int] = None
        rows: list[list[int]] = []
        start = 0

        def finish(lineno: int) -> None:
            nonlocal name, order, rows
            if name is None:
                return
            if order is None:
                raise ParseError(lineno, f"loop '{name}' has no order line")
            if len(rows) != order:
                raise ParseError(lineno, f"loop '{name}' has {len(rows)} rows, expected {order}")
            loops.append(self._build(name, rows, start))
            name, order, rows = None, None, []

        lines = text.splitlines()
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if line.startswith("#"):
                continue
            if not line:
                finish(lineno)
                continue
            head, _, rest = line.partition(" ")
            if head == self.HEADER_KEYWORD:
                finish(lineno)
                name = rest.strip()
                if not name:
                    raise ParseError(lineno, "loop header without a name")
                start = lineno
            elif head == "order":
                if name is None or order is not None:
                    raise ParseError(lineno, "unexpected order line")
                try:
                    order = int(rest)
                except ValueError:
                    raise ParseError(lineno, f"bad order '{rest.strip()}'") from None
                if order <= 0:
                    raise ParseError(lineno, "order must be positive")
            else:
                if name is None or order is None:
                    raise ParseError(lineno, "table row outside a loop block")
                rows.append(self._parse_row(line, order, lineno))
                if len(rows) > order:
                    raise ParseError(lineno, f"loop '{name}' has more than {order} rows")
        finish(len(lines) + 1)
        return loops

    @staticmethod
    def _parse_row(line: str, order: int, lineno: int) -> list[int]:
        try:
            values = [int(v) for v in line.split()]
        except ValueError:
            raise ParseError(lineno, "non-integer table entry") from None
        if len(values) != order:
            raise ParseError(lineno, f"row has {len(values)} entries, expected {order}")
        if any(not 1 <= v <= order for v in values):
            raise ParseError(lineno, f"entries must lie in 1..{order}")
        return [v - 1 for v in values]

    @staticmethod
    def _build(name: str, rows: list[list[int]], lineno: int) -> Loop:
        try:
            return Loop.from_table(np.array(rows), name=name)
        except LoopError as exc:
            raise type(exc)(f"loop '{name}' (line {lineno}): {exc}") from exc


def read_loops(path: Path) -> list[Loop]:
    return LoopFileReader(path).read()
