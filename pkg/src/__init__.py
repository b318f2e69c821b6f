"""rvclab: rainbow vertex and locating rainbow colorings of edge coronas."""
from .lab_client import RainbowLab
from .schema_validator import DocumentSchemaValidator, get_schema_validator

__all__ = [
    "DocumentSchemaValidator",
    "RainbowLab",
    "get_schema_validator",
]
