"""Finitely presented groups and the restricted structure group of a quandle.

Words are tuples of letters: letter 2i is generator g_i and 2i + 1 its
inverse, so ``letter ^ 1`` inverts a letter.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from src.exceptions import NotInvolutory, ParseError
from src.permgrp import Permutation

from .quandle import Quandle, is_involutory

Word = tuple[int, ...]


def gen(i: int) -> int:
    return 2 * i


def inv(i: int) -> int:
    return 2 * i + 1


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        limit = 2 * self.generator_count
        for word in self.relators:
            if not word:
                raise ValueError("Relators must be nonempty")
            if any(not 0 <= letter < limit for letter in word):
                raise ValueError(f"Relator {word} uses an unknown generator")

    def involutory_generators(self) -> frozenset[int]:
        """Generators g with g² among the relators."""
        return frozenset(
            word[0] // 2
            for word in self.relators
            if len(word) == 2 and word[0] == word[1] and word[0] % 2 == 0
        )


def rstr_presentation(q: Quandle) -> GroupPresentation:
    """<g_a | g_a², g_b g_a g_b g_(a◁b)^-1 for a != b>."""
    if not is_involutory(q):
        raise NotInvolutory(f"{q.name or 'quandle'} is not involutory")
    relators: list[Word] = [(gen(a), gen(a)) for a in range(q.order)]
    for a in range(q.order):
        for b in range(q.order):
            if a != b:
                relators.append((gen(b), gen(a), gen(b), inv(q.op(a, b))))
    return GroupPresentation(q.order, tuple(relators))


def abelianized_rank(presentation: GroupPresentation) -> int:
    """Rank over GF(2) of the abelianization, all generators being involutions."""
    n = presentation.generator_count
    missing = set(range(n)) - presentation.involutory_generators()
    if missing:
        raise NotInvolutory(f"Generators {sorted(missing)} are not declared involutions")
    matrix = np.zeros((len(presentation.relators), n), dtype=np.uint8)
    for row, word in enumerate(presentation.relators):
        for letter in word:
            matrix[row, letter // 2] ^= 1
    return n - _gf2_rank(matrix)


def _gf2_rank(matrix: np.ndarray) -> int:
    m = matrix.copy()
    rank = 0
    rows, cols = m.shape
    for col in range(cols):
        pivots = np.flatnonzero(m[rank:, col]) + rank
        if pivots.size == 0:
            continue
        pivot = int(pivots[0])
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        others = np.flatnonzero(m[:, col])
        others = others[others != rank]
        m[others] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def evaluate_word(word: Sequence[int], images: Sequence[Permutation]) -> Permutation:
    """Left-to-right product of generator images."""
    result = Permutation.identity(images[0].degree)
    for letter in word:
        g = images[letter // 2]
        result = result * (g.inverse() if letter % 2 else g)
    return result


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"g{letter // 2}" + ("'" if letter % 2 else "") for letter in word)


def format_presentation(presentation: GroupPresentation) -> str:
    lines = [f"# generators {presentation.generator_count}"]
    lines.extend(format_word(word) for word in presentation.relators)
    return "\n".join(lines) + "\n"


_LETTER = re.compile(r"^g(\d+)('?)$")


def parse_presentation(text: str) -> GroupPresentation:
    count = None
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "generators":
                count = int(parts[1])
            continue
        word = []
        for token in line.split():
            match = _LETTER.match(token)
            if match is None:
                raise ParseError(lineno, f"bad letter '{token}'")
            word.append(2 * int(match.group(1)) + (1 if match.group(2) else 0))
        relators.append(tuple(word))
    if count is None:
        count = max((letter // 2 for word in relators for letter in word), default=-1) + 1
    return GroupPresentation(count, tuple(relators))
