"""Chein's Moufang loop M(G, 2) of a group G.

On pairs g x^d, with v = (-1)^e and m = (-1)^(d+e):

    (g1 x^d)(g2 x^e) = (g1^v g2^m)^v x^(d+e)
"""

from __future__ import annotations

import numpy as np

from src.exceptions import NotAGroup
from src.loopcore import Loop, is_associative

from .extended import ExtendedLoop


def _require_group(group: Loop) -> None:
    if not is_associative(group):
        raise NotAGroup(f"{group.name or 'loop'} is not associative")


def chein(group: Loop) -> Loop:
    """Element g x^d is numbered d·n + g."""
    _require_group(group)
    n = group.order
    t, inv = group.table, group.inverses
    ident = np.arange(n)
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for delta in (0, 1):
        for eps in (0, 1):
            nu = ident if eps == 0 else inv
            mu = ident if (delta + eps) % 2 == 0 else inv
            block = t[nu[:, None], mu[None, :]]
            if eps == 1:
                block = inv[block]
            table[delta * n : (delta + 1) * n, eps * n : (eps + 1) * n] = block + ((delta + eps) % 2) * n
    name = f"M({group.name},2)" if group.name else None
    return Loop(table, group.unit, name)


def chein_tv_form(group: Loop) -> ExtendedLoop:
    """The same loop written with t_g = g and v_g = g x.

    t_g t_h = t_gh, t_g v_h = v_hg, v_g t_h = v_(g h^-1), v_g v_h = t_(h^-1 g)
    """
    _require_group(group)
    n = group.order
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            h_inv = group.inverse(h)
            table[g, h] = group.mul(g, h)
            table[g, n + h] = n + group.mul(h, g)
            table[n + g, h] = n + group.mul(g, h_inv)
            table[n + g, n + h] = group.mul(h_inv, g)
    return ExtendedLoop(Loop(table, group.unit), group)
