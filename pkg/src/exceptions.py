"""Exception hierarchy shared by all bolkit packages."""

from typing import Any, Optional


class BolkitError(Exception):
    """Base class for every error raised by bolkit."""


# Loops


class LoopError(BolkitError, ValueError):
    """A table or element violates a loop requirement."""


class NotLatin(LoopError):
    """A row or column of a table repeats a value."""


class NoUnit(LoopError):
    """No two-sided identity element exists."""


class UnitMismatch(LoopError):
    """The supplied unit hint fails the identity laws."""


class TwoSidedInverseMissing(LoopError):
    """The left and right inverse of some element differ."""


class NotPowerAssociative(LoopError):
    """Powers of some element depend on bracketing."""


class NotAGroup(LoopError):
    """An associative loop was required."""


class PopulationFilterViolated(LoopError):
    """A loop lies outside the population a census is defined on."""


# Geometry and groups


class NotALineMap(BolkitError, ValueError):
    """A point map does not send transversal/vertical lines to such lines."""


class NotSharplyTransitive(BolkitError, ValueError):
    """A permutation set is not sharply transitive on the required points."""


class NotAFolder(BolkitError, ValueError):
    """A section fails the transversal condition of a loop folder."""


class DegenerateNet(BolkitError, ValueError):
    """Line actions are undefined on the net of the trivial loop."""


# Quandles


class NotInvolutory(BolkitError, ValueError):
    """A quandle or presentation lacks the involution relations."""


# Files


class ParseError(BolkitError, ValueError):
    """A catalog file does not follow the loop file format."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


# Structural


class CentralSquaresLost(BolkitError):
    """Iterated extension reached a loop whose squares are not central."""

    def __init__(self, depth: int, loops: Optional[list[Any]] = None):
        self.depth = depth
        self.loops = loops or []
        super().__init__(f"central squares fail before extension step {depth}")


# Budgets


class BudgetError(BolkitError):
    """A computation stopped at its configured budget."""


class ClosureBudgetExceeded(BudgetError):
    """Group closure exceeded the element budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"closure exceeded {budget} elements")


class BudgetExceeded(BudgetError):
    """Coset enumeration exceeded its coset budget."""

    def __init__(self, table: Any):
        self.table = table
        super().__init__(
            f"coset enumeration exceeded {table.max_cosets} cosets ({table.defined} defined)"
        )


class SearchBudgetExceeded(BudgetError):
    """Enumeration exceeded its node budget; partial results are attached."""

    def __init__(self, partial: Any):
        self.partial = partial
        super().__init__(
            f"search exceeded node budget after {partial.nodes} nodes; "
            f"{len(partial.loops)} loops found so far"
        )
