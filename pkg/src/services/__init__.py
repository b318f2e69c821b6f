"""Service classes grouping rvclab operations per concern."""
from .construction_service import ConstructionService
from .graph_service import GraphService
from .reproduce_service import ReproduceService
from .solve_service import SolveService
from .verify_service import VerifyService

__all__ = [
    "ConstructionService",
    "GraphService",
    "ReproduceService",
    "SolveService",
    "VerifyService",
]
