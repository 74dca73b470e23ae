"""Loop folders (G, H, K) and loops built from sharply transitive sets."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

from src.config import settings
from src.exceptions import NotAFolder, NotSharplyTransitive
from src.loopcore import Loop, right_multiplication_group
from src.permgrp import PermGroup, Permutation, is_sharply_transitive
from src.utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FolderCheck:
    valid: bool
    partial: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class LoopFolder:
    """Group G, subgroup H and a section K of right coset representatives."""

    group: PermGroup
    subgroup: PermGroup
    section: tuple[Permutation, ...]
    check: FolderCheck = field(default=FolderCheck(True), compare=False)

    @classmethod
    def build(
        cls,
        group: PermGroup,
        subgroup: PermGroup,
        section: Sequence[Permutation],
        budget: Optional[int] = None,
    ) -> LoopFolder:
        """Validate the transversal condition and build the folder."""
        result = check_folder(group, subgroup, section, budget)
        if not result.valid:
            raise NotAFolder(result.reason)
        return cls(group, subgroup, tuple(section), result)


def _is_transversal(section: Sequence[Permutation], members: frozenset[Permutation], index: int) -> bool:
    if len(section) != index:
        return False
    inverses = [k.inverse() for k in section]
    for i, k1 in enumerate(section):
        for j in range(i + 1, len(section)):
            if k1 * inverses[j] in members:
                return False
    return True


def check_folder(
    group: PermGroup,
    subgroup: PermGroup,
    section: Sequence[Permutation],
    budget: Optional[int] = None,
) -> FolderCheck:
    """K must contain the identity and be a right transversal of every conjugate of H."""
    budget = budget or settings.folder_check_budget
    identity = Permutation.identity(group.degree)
    if identity not in section:
        return FolderCheck(False, reason="section does not contain the identity")
    if not all(group.contains(k) for k in section):
        return FolderCheck(False, reason="section is not contained in the group")
    h_elements = subgroup.closure()
    if not all(group.contains(h) for h in h_elements):
        return FolderCheck(False, reason="subgroup is not contained in the group")
    order = group.order()
    if order % len(h_elements):
        return FolderCheck(False, reason="subgroup order does not divide group order")
    index = order // len(h_elements)

    if order > budget:
        logger.warning(f"Group order {order} exceeds folder check budget {budget}; partial check")
        ok = _is_transversal(section, h_elements, index)
        return FolderCheck(ok, partial=True, reason="" if ok else "not a transversal of H")

    seen: set[frozenset[Permutation]] = set()
    for g in group.elements():
        g_inv = g.inverse()
        conjugate = frozenset(g_inv * h * g for h in h_elements)
        if conjugate in seen:
            continue
        seen.add(conjugate)
        if not _is_transversal(section, conjugate, index):
            return FolderCheck(False, reason=f"not a transversal of the conjugate by {g}")
    return FolderCheck(True)


def envelope(loop: Loop) -> LoopFolder:
    """(RMlt(L), stabilizer of the unit, right translations in element order)."""
    group = right_multiplication_group(loop)
    stabilizer = group.stabilizer(loop.unit)
    section = [loop.right_translation(a) for a in loop.elements()]
    return LoopFolder.build(group, stabilizer, section)


def loop_of_folder(folder: LoopFolder) -> Loop:
    """a * b is the k in K with H k = H a b."""
    h_elements = folder.subgroup.elements()

    def coset_key(g: Permutation) -> tuple[int, ...]:
        return min((h * g).images for h in h_elements)

    index = {coset_key(k): i for i, k in enumerate(folder.section)}
    table = [
        [index[coset_key(a * b)] for b in folder.section] for a in folder.section
    ]
    identity = Permutation.identity(folder.group.degree)
    return Loop.from_table(table, unit_hint=folder.section.index(identity))


def is_bol_folder(folder: LoopFolder) -> bool:
    """K closed under inversion and under a b a."""
    members = set(folder.section)
    for a in folder.section:
        if a.inverse() not in members:
            return False
        for b in folder.section:
            if a * b * a not in members:
                return False
    return True


def lambda_loop(group: PermGroup, perms: Sequence[Permutation], base_point: int) -> Loop:
    """Loop on the orbit of base_point with x * y = x^s, where base_point^s = y."""
    identity = Permutation.identity(group.degree)
    if identity not in perms:
        raise NotSharplyTransitive("The set must contain the identity")
    if not all(group.contains(s) for s in perms):
        raise NotSharplyTransitive("The set is not contained in the group")
    points = sorted(group.orbit(base_point))
    if not is_sharply_transitive(perms, points):
        raise NotSharplyTransitive(f"Not sharply transitive on the orbit of {base_point}")
    position = {p: i for i, p in enumerate(points)}
    by_target = {s(base_point): s for s in perms}
    table = [[position[by_target[y](x)] for y in points] for x in points]
    return Loop.from_table(table, unit_hint=position[base_point])
