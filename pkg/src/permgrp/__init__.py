"""Permgrp module - Permutations and permutation group closure."""

from .group import PermGroup, is_sharply_transitive
from .permutation import Permutation

__all__ = ["Permutation", "PermGroup", "is_sharply_transitive"]
