"""Pydantic models for graph family specifications and predicted values."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .bounds import Target


class CoreFamily(str, Enum):
    """Core graph families G_m."""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    TREE = "tree"


class FlareFamily(str, Enum):
    """Flare graph families H_n."""
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"


class FamilySpec(BaseModel):
    """
    G_m ⋄ H_n described by family names and orders.

    Tree cores carry their edge list on vertices 1..m.
    """
    model_config = ConfigDict(frozen=True)

    core: CoreFamily
    m: int = Field(..., ge=1, description="Core order")
    flare: FlareFamily = FlareFamily.COMPLETE
    n: int = Field(..., ge=1, description="Flare order")
    tree_edges: Optional[tuple[tuple[int, int], ...]] = None

    @model_validator(mode="after")
    def _check_tree(self) -> "FamilySpec":
        if self.core == CoreFamily.TREE and self.tree_edges is None:
            raise ValueError("tree cores need an edge list")
        if self.core != CoreFamily.TREE and self.tree_edges is not None:
            raise ValueError(f"{self.core.value} cores take no edge list")
        return self

    @classmethod
    def create(
        cls,
        core: str,
        m: int,
        n: int,
        flare: str = "complete",
        tree_edges: Optional[list[tuple[int, int]]] = None,
    ) -> "FamilySpec":
        """Factory method accepting plain strings."""
        return cls(
            core=CoreFamily(core),
            m=m,
            flare=FlareFamily(flare),
            n=n,
            tree_edges=tuple(tuple(e) for e in tree_edges) if tree_edges is not None else None,
        )

    @property
    def is_tree_core(self) -> bool:
        """Paths and stars are trees too."""
        return self.core in (CoreFamily.PATH, CoreFamily.STAR, CoreFamily.TREE)

    def describe(self) -> str:
        return f"{self.core.value}:{self.m} * {self.flare.value}:{self.n}"


class PredictedValue(BaseModel):
    """Theorem-predicted value, or a bounds-only bracket, with the branch that fired."""
    target: Target
    value: Optional[int] = Field(default=None, description="Exact prediction")
    lower: Optional[int] = Field(default=None, description="Bounds-only lower end")
    upper: Optional[int] = Field(default=None, description="Bounds-only upper end")
    branch: str

    @model_validator(mode="after")
    def _check_shape(self) -> "PredictedValue":
        exact = self.value is not None
        bracket = self.lower is not None and self.upper is not None
        if exact == bracket:
            raise ValueError("a prediction is either a value or a bounds-only bracket")
        return self

    @property
    def bounds_only(self) -> bool:
        return self.value is None

    def admits(self, exact: int) -> bool:
        """Whether an exact value agrees with the prediction."""
        if self.value is not None:
            return exact == self.value
        return self.lower <= exact <= self.upper

    def render(self) -> str:
        """Text used in the CSV ``predicted`` column."""
        if self.value is not None:
            return str(self.value)
        return f"bounds({self.lower},{self.upper})"


class ConstructionRule(str, Enum):
    """Named constructive colorings."""
    UPPER_GENERAL = "upper-general"
    TREE_RVC = "tree-rvc"
    PATH_RVCL = "path-rvcl"
    CYCLE_RVC = "cycle-rvc"
    CYCLE_RVCL = "cycle-rvcl"
    COMPLETE_RVC = "complete-rvc"
    COMPLETE_RVCL = "complete-rvcl"

    @property
    def target(self) -> Target:
        """Property the construction is meant to satisfy."""
        if self in (ConstructionRule.TREE_RVC, ConstructionRule.CYCLE_RVC, ConstructionRule.COMPLETE_RVC):
            return Target.RVC
        return Target.RVCL
