"""Pydantic models for reproduction rows."""
from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, Field

from .bounds import Target


class Agreement(str, Enum):
    """Comparison of a theorem prediction with the exact value."""
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    CONSTRUCTION_FAILS = "CONSTRUCTION_FAILS"
    SKIPPED = "SKIPPED"
    OBSERVED = "OBSERVED"


CSV_COLUMNS = [
    "family",
    "m",
    "n",
    "target",
    "predicted",
    "branch",
    "construction_valid",
    "exact",
    "agreement",
]


class ReproduceRow(BaseModel):
    """One (family, m, n, target) cell of a reproduction grid."""
    family: str
    m: int
    n: int
    target: Target
    predicted: str = Field(..., description="Predicted value or bounds(l,u)")
    branch: str
    construction_valid: Optional[bool] = Field(
        default=None, description="None when the theorem has no construction"
    )
    exact: Union[int, str] = Field(..., description="Exact value, skipped(size) or skipped(budget)")
    agreement: Agreement
    status: Optional[str] = None
    elapsed_ms: int = 0
    erratum: Optional[str] = Field(default=None, description="Registered printed-formula erratum")

    @property
    def sort_key(self) -> tuple[str, int, int, str]:
        return self.family, self.m, self.n, self.target.value

    @property
    def blocking(self) -> bool:
        """Whether this row makes the reproduce command fail."""
        if self.agreement == Agreement.MISMATCH:
            return True
        if self.agreement == Agreement.CONSTRUCTION_FAILS:
            return not (self.erratum and isinstance(self.exact, int))
        return False

    def csv_record(self) -> dict[str, str]:
        """Row restricted to the frozen CSV columns."""
        construction = "" if self.construction_valid is None else str(self.construction_valid).lower()
        return {
            "family": self.family,
            "m": str(self.m),
            "n": str(self.n),
            "target": self.target.value,
            "predicted": self.predicted,
            "branch": self.branch,
            "construction_valid": construction,
            "exact": str(self.exact),
            "agreement": self.agreement.value,
        }
