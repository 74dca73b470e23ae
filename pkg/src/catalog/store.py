"""Database persistence for loop analyses."""

import hashlib
from collections.abc import Iterable
from typing import Optional

import pandas as pd
from sqlalchemy import create_engine, select
from sqlalchemy.orm import sessionmaker

from src.config import settings
from src.loopcore import Loop
from src.utils import get_logger

from .analysis import CatalogRecord
from .models import Base, LoopRecord

logger = get_logger(__name__)


def table_text(loop: Loop) -> str:
    return "\n".join(" ".join(str(v + 1) for v in row) for row in loop.rows())


def table_digest(loop: Loop) -> str:
    return hashlib.sha256(table_text(loop).encode("utf-8")).hexdigest()


class CatalogStore:
    """Store CatalogRecords keyed by (name, table digest)."""

    def __init__(self, database_url: Optional[str] = None):
        self.database_url = database_url or settings.database_url
        if not self.database_url or "://" not in self.database_url:
            raise ValueError(f"Invalid database URL: {self.database_url}")
        self.engine = create_engine(self.database_url)
        self.SessionLocal = sessionmaker(bind=self.engine)

    def create_tables(self) -> None:
        """Create all tables if they don't exist."""
        Base.metadata.create_all(self.engine)

    def drop_tables(self) -> None:
        """Drop all tables."""
        Base.metadata.drop_all(self.engine)

    def save_records(self, records: Iterable[tuple[Loop, CatalogRecord]]) -> dict[str, int]:
        """Upsert (loop, record) pairs; returns inserted/updated counts."""
        stats = {"inserted": 0, "updated": 0}
        with self.SessionLocal() as session:
            for loop, record in records:
                digest = table_digest(loop)
                data = record.as_row()
                data.update(unit=loop.unit, table_text=table_text(loop), digest=digest)

                stmt = select(LoopRecord).where(
                    LoopRecord.name == record.name, LoopRecord.digest == digest
                )
                existing = session.execute(stmt).scalar_one_or_none()
                if existing:
                    for key, value in data.items():
                        setattr(existing, key, value)
                    stats["updated"] += 1
                else:
                    session.add(LoopRecord(**data))
                    stats["inserted"] += 1
            session.commit()
        logger.info(f"Saved loop records: {stats}")
        return stats

    def load_records(self, order: Optional[int] = None) -> pd.DataFrame:
        stmt = select(LoopRecord).order_by(LoopRecord.id)
        if order is not None:
            stmt = stmt.where(LoopRecord.order == order)
        with self.engine.connect() as connection:
            return pd.read_sql(stmt, connection)
