"""SQLAlchemy models for stored loop analyses."""

from typing import Optional

from sqlalchemy import BigInteger, Boolean, Index, Integer, String, Text, UniqueConstraint
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    """Base class for all models."""

    pass


class LoopRecord(Base):
    """
    루프 분석 결과 테이블.
    """

    __tablename__ = "loop_record"

    id: Mapped[int] = mapped_column(
        BigInteger().with_variant(Integer, "sqlite"),
        primary_key=True,
        autoincrement=True,
        comment="레코드 고유 식별자",
    )
    name: Mapped[str] = mapped_column(String(255), nullable=False, comment="루프 이름")
    order: Mapped[int] = mapped_column(Integer, nullable=False, comment="루프의 위수")
    unit: Mapped[int] = mapped_column(Integer, nullable=False, comment="항등원 (0부터 시작)")
    table_text: Mapped[str] = mapped_column(
        Text, nullable=False, comment="곱셈표 (1부터 시작, 행은 줄바꿈으로 구분)"
    )
    digest: Mapped[str] = mapped_column(String(64), nullable=False, comment="곱셈표 SHA-256")

    right_bol: Mapped[bool] = mapped_column(Boolean, nullable=False, comment="우 Bol 항등식")
    moufang: Mapped[bool] = mapped_column(Boolean, nullable=False, comment="Moufang 항등식")
    associative: Mapped[bool] = mapped_column(Boolean, nullable=False, comment="결합 법칙")
    commutative: Mapped[bool] = mapped_column(Boolean, nullable=False, comment="교환 법칙")
    aip: Mapped[bool] = mapped_column(Boolean, nullable=False, comment="자기동형 역원 성질 (AIP)")
    rcc: Mapped[bool] = mapped_column(Boolean, nullable=False, comment="우 켤레 닫힘 (RCC)")
    central_squares: Mapped[bool] = mapped_column(
        Boolean, nullable=False, comment="모든 제곱이 중심에 속하는지 여부"
    )

    exponent: Mapped[Optional[int]] = mapped_column(
        Integer, nullable=True, comment="지수 (거듭제곱 결합이 아니면 NULL)"
    )
    left_nucleus: Mapped[int] = mapped_column(Integer, nullable=False, comment="|N_λ|")
    middle_nucleus: Mapped[int] = mapped_column(Integer, nullable=False, comment="|N_μ|")
    right_nucleus: Mapped[int] = mapped_column(Integer, nullable=False, comment="|N_ρ|")
    commutant: Mapped[int] = mapped_column(Integer, nullable=False, comment="|C|")
    center: Mapped[int] = mapped_column(Integer, nullable=False, comment="|Z|")
    core_orbits: Mapped[Optional[int]] = mapped_column(
        Integer, nullable=True, comment="코어 콴들 궤도 수 (우 Bol 루프만)"
    )
    nu: Mapped[Optional[int]] = mapped_column(
        Integer, nullable=True, comment="확장의 수직 좌핵 크기 (모집단 밖이면 NULL)"
    )

    __table_args__ = (
        UniqueConstraint("name", "digest", name="uq_loop_record_name_digest"),
        Index("idx_loop_record_order", "order"),
        Index("idx_loop_record_digest", "digest"),
    )

    def __repr__(self) -> str:
        return f"<LoopRecord(id={self.id}, name='{self.name}', order={self.order})>"
