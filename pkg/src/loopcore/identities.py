"""Exhaustive identity checks over all element tuples."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.exceptions import TwoSidedInverseMissing

from .loop import Loop


class Identity(str, Enum):
    """Identities understood by check_identity."""

    RIGHT_BOL = "right_bol"
    LEFT_BOL = "left_bol"
    MOUFANG = "moufang"
    ASSOCIATIVE = "associative"
    COMMUTATIVE = "commutative"
    AIP = "aip"
    RCC = "rcc"
    LEFT_INVERSE_CANCEL = "left_inverse_cancel"
    RIGHT_INVERSE = "right_inverse"
    BOL_INVERSE_ANTIHOM = "bol_inverse_antihom"
    INVERSE_CONJUGATION = "inverse_conjugation"
    SQUARES_COMMUTE = "squares_commute"


NEEDS_INVERSES = {
    Identity.AIP,
    Identity.LEFT_INVERSE_CANCEL,
    Identity.RIGHT_INVERSE,
    Identity.BOL_INVERSE_ANTIHOM,
    Identity.INVERSE_CONJUGATION,
}


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of an identity check; truthy when the identity holds."""

    identity: Identity
    holds: bool
    witness: Optional[tuple[int, ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _grids(n: int, arity: int) -> tuple[np.ndarray, ...]:
    axes = np.arange(n)
    shape = [1] * arity
    out = []
    for i in range(arity):
        s = list(shape)
        s[i] = n
        out.append(axes.reshape(s))
    return tuple(out)


def _violation(lhs: np.ndarray, rhs: np.ndarray) -> Optional[tuple[int, ...]]:
    lhs, rhs = np.broadcast_arrays(lhs, rhs)
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def _right_bol(loop: Loop) -> Optional[tuple[int, ...]]:
    # ((xy)z)y = x((yz)y)
    t = loop.table
    x, y, z = _grids(loop.order, 3)
    return _violation(t[t[t[x, y], z], y], t[x, t[t[y, z], y]])


def _left_bol(loop: Loop) -> Optional[tuple[int, ...]]:
    # x(y(xz)) = (x(yx))z
    t = loop.table
    x, y, z = _grids(loop.order, 3)
    return _violation(t[x, t[y, t[x, z]]], t[t[x, t[y, x]], z])


def _moufang(loop: Loop) -> Optional[tuple[int, ...]]:
    return _right_bol(loop) or _left_bol(loop)


def _associative(loop: Loop) -> Optional[tuple[int, ...]]:
    t = loop.table
    x, y, z = _grids(loop.order, 3)
    return _violation(t[t[x, y], z], t[x, t[y, z]])


def _commutative(loop: Loop) -> Optional[tuple[int, ...]]:
    return _violation(loop.table, loop.table.T)


def _aip(loop: Loop) -> Optional[tuple[int, ...]]:
    t, inv = loop.table, loop.inverses
    x, y = _grids(loop.order, 2)
    return _violation(inv[t[x, y]], t[inv[x], inv[y]])


def _rcc(loop: Loop) -> Optional[tuple[int, ...]]:
    # R_x R_y R_x^-1 = R_{xy/x}, applied to z: ((zx)y)/x = z((xy)/x)
    t, rd = loop.table, loop.rdiv_table
    x, y, z = _grids(loop.order, 3)
    return _violation(rd[x, t[t[z, x], y]], t[z, rd[x, t[x, y]]])


def _left_inverse_cancel(loop: Loop) -> Optional[tuple[int, ...]]:
    # (xy)y^-1 = x
    t, inv = loop.table, loop.inverses
    x, y = _grids(loop.order, 2)
    return _violation(t[t[x, y], inv[y]], x)


def _bol_inverse_antihom(loop: Loop) -> Optional[tuple[int, ...]]:
    # (ab·a)^-1 = a^-1 b^-1 · a^-1
    t, inv = loop.table, loop.inverses
    a, b = _grids(loop.order, 2)
    return _violation(inv[t[t[a, b], a]], t[t[inv[a], inv[b]], inv[a]])


def _inverse_conjugation(loop: Loop) -> Optional[tuple[int, ...]]:
    # ab·a^-1 = a^-1 b·a
    t, inv = loop.table, loop.inverses
    a, b = _grids(loop.order, 2)
    return _violation(t[t[a, b], inv[a]], t[t[inv[a], b], a])


def _squares_commute(loop: Loop) -> Optional[tuple[int, ...]]:
    # a b^2 = b^2 a
    t = loop.table
    a, b = _grids(loop.order, 2)
    sq = t[b, b]
    return _violation(t[a, sq], t[sq, a])


_CHECKS: dict[Identity, Callable[[Loop], Optional[tuple[int, ...]]]] = {
    Identity.RIGHT_BOL: _right_bol,
    Identity.LEFT_BOL: _left_bol,
    Identity.MOUFANG: _moufang,
    Identity.ASSOCIATIVE: _associative,
    Identity.COMMUTATIVE: _commutative,
    Identity.AIP: _aip,
    Identity.RCC: _rcc,
    Identity.LEFT_INVERSE_CANCEL: _left_inverse_cancel,
    Identity.RIGHT_INVERSE: _left_inverse_cancel,
    Identity.BOL_INVERSE_ANTIHOM: _bol_inverse_antihom,
    Identity.INVERSE_CONJUGATION: _inverse_conjugation,
    Identity.SQUARES_COMMUTE: _squares_commute,
}


def check_identity(loop: Loop, identity: Identity | str) -> IdentityCheck:
    """Check an identity for all element tuples.

    Identities that mention inverses fail with a reason when some element
    has no two-sided inverse.
    """
    ident = Identity(identity)
    if ident in NEEDS_INVERSES:
        try:
            loop.inverses
        except TwoSidedInverseMissing as exc:
            return IdentityCheck(ident, False, reason=str(exc))
    witness = _CHECKS[ident](loop)
    if witness is None:
        return IdentityCheck(ident, True)
    return IdentityCheck(ident, False, witness, reason=f"violated at {witness}")


def is_right_bol(loop: Loop) -> bool:
    return check_identity(loop, Identity.RIGHT_BOL).holds


def is_associative(loop: Loop) -> bool:
    return check_identity(loop, Identity.ASSOCIATIVE).holds


def is_commutative(loop: Loop) -> bool:
    return check_identity(loop, Identity.COMMUTATIVE).holds


def is_abelian_group(loop: Loop) -> bool:
    return is_associative(loop) and is_commutative(loop)
