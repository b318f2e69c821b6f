"""Exception hierarchy shared by the library, the services and the CLI."""
from typing import Optional


class RvclabError(Exception):
    """Base class for every error raised by rvclab."""


class InvalidParameterError(RvclabError, ValueError):
    """A numeric parameter or graph argument is outside the operation's domain."""


class InvalidTreeError(InvalidParameterError):
    """An edge list does not describe a tree on vertices 1..m."""


class InvalidColoringError(RvclabError, ValueError):
    """A coloring does not fit the graph it is applied to."""


class UnsupportedSpecError(RvclabError):
    """A family specification lies outside every theorem domain."""

    def __init__(self, message: str, condition: Optional[str] = None):
        super().__init__(message)
        self.condition = condition


class FormulaCoverageError(RvclabError):
    """A coloring formula leaves some flare vertex without a color."""

    def __init__(self, edge_index: int, copy_index: int, rule: str):
        super().__init__(
            f"{rule}: no formula branch covers flare vertex (i={edge_index}, k={copy_index})"
        )
        self.edge_index = edge_index
        self.copy_index = copy_index
        self.rule = rule

    @property
    def pair(self) -> tuple[int, int]:
        return self.edge_index, self.copy_index


class InfeasibleAssignmentError(RvclabError):
    """No family of pairwise distinct flare color sets fits the palette."""


class OversizeGraphError(RvclabError):
    """The graph exceeds the configured solvable size and force was not given."""

    def __init__(self, vertices: int, cap: int, target: str):
        super().__init__(
            f"{target} search on {vertices} vertices exceeds the cap of {cap}; use --force to run anyway"
        )
        self.vertices = vertices
        self.cap = cap


class BudgetExhaustedError(RvclabError):
    """The node or wall-clock budget ran out before the search space was exhausted."""

    def __init__(self, nodes: int, reason: str = "nodes"):
        super().__init__(f"search budget exhausted ({reason}) after {nodes} nodes")
        self.nodes = nodes
        self.reason = reason


class DocumentError(RvclabError):
    """An input document cannot be read or does not match its schema."""
