"""Predicted nuclei and center of an extension, from the base loop alone."""

from __future__ import annotations

import numpy as np

from src.loopcore import (
    Loop,
    Side,
    center,
    check_identity,
    is_associative,
    is_commutative,
    nucleus,
    squares_are_trivial,
)

from .extended import ExtendedLoop


def predicted_right_nucleus(ext: ExtendedLoop) -> frozenset[int]:
    """{t_z, v_z : z in Z(L)}."""
    z = center(ext.base)
    return frozenset(ext.t(a) for a in z) | frozenset(ext.v(a) for a in z)


def predicted_left_nucleus_transversal(ext: ExtendedLoop) -> frozenset[int]:
    """{t_n : n in N_left(L)}, the T-part of the left nucleus."""
    return frozenset(ext.t(a) for a in nucleus(ext.base, Side.LEFT))


def predicted_left_nucleus(ext: ExtendedLoop) -> frozenset[int] | None:
    """Whole left nucleus when the base is a group or has the AIP, else None."""
    base = ext.base
    left = nucleus(base, Side.LEFT)
    if check_identity(base, "aip").holds:
        return frozenset(ext.t(a) for a in left) | frozenset(ext.v(a) for a in left)
    if is_associative(base) and not is_commutative(base):
        return ext.transversal()
    return None


def predicted_center(ext: ExtendedLoop) -> frozenset[int]:
    base = ext.base
    z = center(base)
    if squares_are_trivial(base):
        return frozenset(ext.t(a) for a in z) | frozenset(ext.v(a) for a in z)
    return frozenset(ext.t(a) for a in z if base.square(a) == base.unit)


def vertical_left_nucleus(base: Loop) -> frozenset[int]:
    """Base elements n with n = ((n a) b)(a^-1 b^-1) for all a, b."""
    t, inv = base.table, base.inverses
    k = base.order
    n = np.arange(k)[:, None, None]
    a = np.arange(k)[None, :, None]
    b = np.arange(k)[None, None, :]
    value = t[t[t[n, a], b], t[inv[a], inv[b]]]
    holds = np.all(value == n, axis=(1, 2))
    return frozenset(int(i) for i in np.flatnonzero(holds))
