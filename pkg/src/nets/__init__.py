"""Nets module - 3-nets, Bol reflections, loop folders and sharply transitive sets."""

from .folder import (
    FolderCheck,
    LoopFolder,
    check_folder,
    envelope,
    is_bol_folder,
    lambda_loop,
    loop_of_folder,
)
from .net import (
    LineIndex,
    NetPoint,
    Pencil,
    bol_reflection,
    gamma_group,
    geometric_reflection,
    image_line,
    is_collineation,
    line_action,
    line_index,
    reflection_image,
    reflection_line_maps,
    sigma_set,
)

__all__ = [
    "FolderCheck",
    "LineIndex",
    "LoopFolder",
    "NetPoint",
    "Pencil",
    "bol_reflection",
    "check_folder",
    "envelope",
    "gamma_group",
    "geometric_reflection",
    "image_line",
    "is_bol_folder",
    "is_collineation",
    "lambda_loop",
    "line_action",
    "line_index",
    "loop_of_folder",
    "reflection_image",
    "reflection_line_maps",
    "sigma_set",
]
