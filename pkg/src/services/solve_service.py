"""Bounds and exact solving under the configured budget and size caps."""
import logging
from typing import Optional

from src.bounds import bounds_for
from src.codec import bounds_to_document, solve_result_to_document
from src.exceptions import OversizeGraphError
from src.models import BoundReport, Graph, SolveResult, Target, VertexColoring
from src.solver import feasible_with_k, solve_exact

from .base_service import BaseService

logger = logging.getLogger(__name__)


class SolveService(BaseService):
    """
    Service class for exact values.

    Usage:
        lab = RainbowLab()
        result = lab.solve.exact(g, Target.RVCL)
        lab.solve.bounds(g, Target.RVCL).lower
    """

    def cap(self, target: Target) -> int:
        """Largest vertex count solved without force."""
        settings = self._lab.settings
        return settings.max_rvc_vertices if target == Target.RVC else settings.max_rvcl_vertices

    def _check_size(self, g: Graph, target: Target, force: bool) -> None:
        cap = self.cap(target)
        if g.vertex_count > cap:
            if not force:
                raise OversizeGraphError(g.vertex_count, cap, target.value)
            logger.warning(f"Forcing {target.value} search on {g.vertex_count} vertices (cap {cap})")

    def bounds(self, g: Graph, target: Target) -> BoundReport:
        return bounds_for(g, target)

    def exact(
        self,
        g: Graph,
        target: Target,
        force: bool = False,
        start_k: Optional[int] = None,
    ) -> SolveResult:
        """
        Least k for the target property.

        Args:
            g: Connected graph
            target: rvc or rvcl
            force: Solve even above the size cap
            start_k: Start the ladder above the certified lower bound

        Raises:
            OversizeGraphError: g is above the cap and force is False
        """
        self._check_size(g, target, force)
        options = self._lab.search_options()
        if start_k is not None:
            options = options.model_copy(update={"start_k": start_k})
        return solve_exact(g, target, self._lab.budget(), options)

    def feasible(self, g: Graph, target: Target, k: int, force: bool = False) -> Optional[VertexColoring]:
        """
        A verifying k-coloring, or None when the canonical space holds none.

        Raises:
            OversizeGraphError: g is above the cap and force is False
            BudgetExhaustedError: the budget ran out first
        """
        self._check_size(g, target, force)
        return feasible_with_k(g, target, k, self._lab.budget(), self._lab.search_options())

    def render_result(self, result: SolveResult) -> str:
        document = solve_result_to_document(result)
        self._lab.check_document(document, "SolveResult")
        return self._lab.dumps(document)

    def render_bounds(self, report: BoundReport) -> str:
        document = bounds_to_document(report)
        self._lab.check_document(document, "BoundReport")
        return self._lab.dumps(document)
