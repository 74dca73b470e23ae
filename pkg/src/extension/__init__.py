"""Extension module - Index-2 extensions, Chein loops and their predicted structure."""

from .chein import chein, chein_tv_form
from .extended import (
    ExtendedLoop,
    Kind,
    MoufangReport,
    TaggedElement,
    extend,
    extension_bol_criterion,
    extension_cocycle_form,
    extension_is_right_bol_predicted,
    iterate_extension,
    moufang_equivalences_report,
    squares_survive_extension,
)
from .theorems import (
    predicted_center,
    predicted_left_nucleus,
    predicted_left_nucleus_transversal,
    predicted_right_nucleus,
    vertical_left_nucleus,
)

__all__ = [
    "ExtendedLoop",
    "Kind",
    "MoufangReport",
    "TaggedElement",
    "chein",
    "chein_tv_form",
    "extend",
    "extension_bol_criterion",
    "extension_cocycle_form",
    "extension_is_right_bol_predicted",
    "iterate_extension",
    "moufang_equivalences_report",
    "predicted_center",
    "predicted_left_nucleus",
    "predicted_left_nucleus_transversal",
    "predicted_right_nucleus",
    "squares_survive_extension",
    "vertical_left_nucleus",
]
