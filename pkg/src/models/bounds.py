"""Pydantic models for bound reports."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class Target(str, Enum):
    """Graph parameter being bounded, predicted or solved."""
    RVC = "rvc"
    RVCL = "rvcl"


class BoundKind(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


class BoundRule(str, Enum):
    """Rule tags used in bound justifications."""
    EQ1 = "eq1"
    LEMMA_CUT = "lemma-cut"
    DIAM = "diam"
    LEMMA_TWIN = "lemma-twin"
    LEMMA_TWO_CLASSES = "lemma-two-classes"
    LEMMA_N_PLUS_1 = "lemma-n-plus-1"
    THM_UPPER_CORONA = "thm-upper-corona"


class Justification(BaseModel):
    """A single bound contribution."""
    value: int
    rule: BoundRule
    kind: BoundKind = BoundKind.LOWER
    reason: str = Field(default="", description="Short statement of what the rule measured")


class BoundReport(BaseModel):
    """Lower and upper bounds for one target with their justifications."""
    target: Target
    lower: int = Field(..., ge=0)
    upper: Optional[int] = Field(default=None, description="None when no upper rule applies")
    justifications: list[Justification] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_consistency(self) -> "BoundReport":
        lowers = [j.value for j in self.justifications if j.kind == BoundKind.LOWER]
        uppers = [j.value for j in self.justifications if j.kind == BoundKind.UPPER]
        if lowers and self.lower != max(max(lowers), 0):
            raise ValueError(f"lower={self.lower} does not equal the best lower rule {max(lowers)}")
        if uppers and self.upper != min(uppers):
            raise ValueError(f"upper={self.upper} does not equal the best upper rule {min(uppers)}")
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower={self.lower} exceeds upper={self.upper}")
        return self

    @property
    def lower_rule(self) -> Optional[BoundRule]:
        """Tag of the first lower rule attaining the lower bound."""
        for justification in self.justifications:
            if justification.kind == BoundKind.LOWER and justification.value == self.lower:
                return justification.rule
        return None
