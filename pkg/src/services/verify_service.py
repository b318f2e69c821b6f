"""Coloring documents and rainbow / locating verification."""
import logging

from src.codec import coloring_from_document, coloring_to_document, load_json, report_to_document
from src.models import Graph, Target, VerificationReport, VertexColoring
from src.rainbow_check import is_locating_rainbow_coloring, is_rainbow_vertex_coloring

from .base_service import BaseService

logger = logging.getLogger(__name__)


class VerifyService(BaseService):
    """
    Service class for verification.

    Usage:
        lab = RainbowLab()
        report = lab.verify.check(g, coloring)
        report.passed
    """

    def check(self, g: Graph, coloring: VertexColoring, target: Target = Target.RVCL) -> VerificationReport:
        """
        Verify a coloring.

        Args:
            g: Graph
            coloring: Coloring covering every vertex of g
            target: rvc checks rainbow paths only, rvcl adds rainbow codes

        Returns:
            VerificationReport
        """
        if target == Target.RVC:
            return is_rainbow_vertex_coloring(g, coloring)
        return is_locating_rainbow_coloring(g, coloring)

    def load_coloring(self, text: str, g: Graph, source: str = "<coloring>") -> VertexColoring:
        """
        Parse and validate a coloring document against a graph.

        Raises:
            DocumentError: the text is not a valid coloring document
            InvalidColoringError: ids do not cover exactly the vertices of g
        """
        document = load_json(text, source)
        self._lab.check_document(document, "Coloring")
        return coloring_from_document(document, g.vertex_count)

    def render_coloring(self, coloring: VertexColoring) -> str:
        document = coloring_to_document(coloring)
        self._lab.check_document(document, "Coloring")
        return self._lab.dumps(document)

    def render_report(self, report: VerificationReport) -> str:
        document = report_to_document(report)
        self._lab.check_document(document, "VerificationReport")
        return self._lab.dumps(document)
