"""Pydantic models for solver budgets, options and results."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from .bounds import Target
from .coloring import VertexColoring


class SolveStatus(str, Enum):
    """Exhaustiveness status of a solve."""
    PROVED = "Proved"
    UPPER_WITNESS_ONLY = "UpperWitnessOnly"
    BUDGET_EXHAUSTED = "Budget-Exhausted"


class Budget(BaseModel):
    """Search limits for one solve_exact or feasible_with_k call."""
    nodes: int = Field(default=10**8, ge=1, description="Maximum explored search nodes")
    seconds: float = Field(default=300.0, gt=0, description="Wall-clock limit in seconds")


class SearchOptions(BaseModel):
    """Pruning switches and parallelism for the canonical search."""
    twin_pruning: bool = Field(default=True, description="Forbid equal colors on twins (rvcl only)")
    partial_rainbow_pruning: bool = Field(
        default=True, description="Cut prefixes with no optimistic rainbow completion"
    )
    settled_code_pruning: bool = Field(
        default=True, description="Cut prefixes where two final rainbow codes already collide (rvcl only)"
    )
    workers: int = Field(default=1, ge=1, description="Worker processes")
    start_k: Optional[int] = Field(default=None, ge=1, description="Start the ladder at this k")


class SearchStats(BaseModel):
    """Counters accumulated by the search."""
    nodes: int = 0
    leaves: int = 0
    twin_cuts: int = 0
    rainbow_cuts: int = 0
    code_cuts: int = 0

    def absorb(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.twin_cuts += other.twin_cuts
        self.rainbow_cuts += other.rainbow_cuts
        self.code_cuts += other.code_cuts


class SolveResult(BaseModel):
    """Exact (or bracketed) value of rvc or rvcl with its witness."""
    target: Target
    value: int = Field(..., ge=1)
    status: SolveStatus
    witness: VertexColoring
    lower: int = Field(..., ge=1, description="Certified lower end of the bracket")
    upper: int = Field(..., ge=1, description="Upper end of the bracket")
    lower_bound_rule: Optional[str] = Field(
        default=None, description="Bound rule certifying the levels that were not searched"
    )
    nodes_explored: int = 0
    elapsed_ms: int = 0
    stats: SearchStats = Field(default_factory=SearchStats)

    @model_validator(mode="after")
    def _check_bracket(self) -> "SolveResult":
        if self.witness.k != self.value:
            raise ValueError(f"witness uses {self.witness.k} colors, value is {self.value}")
        if not self.lower <= self.value <= self.upper:
            raise ValueError(f"value {self.value} outside bracket [{self.lower}, {self.upper}]")
        if self.status == SolveStatus.PROVED and self.lower != self.value:
            raise ValueError("a proved value closes the bracket")
        return self

    @property
    def proved(self) -> bool:
        return self.status == SolveStatus.PROVED
