"""Pydantic models for rvclab entities."""
from .bounds import BoundKind, BoundReport, BoundRule, Justification, Target
from .coloring import LocatingCollision, RainbowCode, VerificationReport, VertexColoring
from .family import ConstructionRule, CoreFamily, FamilySpec, FlareFamily, PredictedValue
from .graph import CoronaShape, DistanceMatrix, Graph, TwinPartition, VertexKind, VertexLabel
from .reproduce import CSV_COLUMNS, Agreement, ReproduceRow
from .solve import Budget, SearchOptions, SearchStats, SolveResult, SolveStatus

__all__ = [
    "Agreement",
    "BoundKind",
    "BoundReport",
    "BoundRule",
    "Budget",
    "CSV_COLUMNS",
    "ConstructionRule",
    "CoreFamily",
    "CoronaShape",
    "DistanceMatrix",
    "FamilySpec",
    "FlareFamily",
    "Graph",
    "Justification",
    "LocatingCollision",
    "PredictedValue",
    "RainbowCode",
    "ReproduceRow",
    "SearchOptions",
    "SearchStats",
    "SolveResult",
    "SolveStatus",
    "Target",
    "TwinPartition",
    "VerificationReport",
    "VertexColoring",
    "VertexKind",
    "VertexLabel",
]
