"""Graph construction, structural queries and graph documents."""
import logging
from typing import Optional

from src.codec import graph_from_document, graph_to_document, graph_to_dot, load_json
from src.graph_core import build_corona, cut_vertices, twin_classes
from src.models import FamilySpec, Graph, TwinPartition, VertexColoring

from .base_service import BaseService

logger = logging.getLogger(__name__)


class GraphService(BaseService):
    """
    Service class for graphs.

    Usage:
        lab = RainbowLab()
        g = lab.graph.construct(FamilySpec.create("cycle", 5, 2))
        text = lab.graph.render(g, "dot")
    """

    def construct(self, spec: FamilySpec) -> Graph:
        """
        Build G_m ⋄ H_n.

        Args:
            spec: Core and flare families with their orders

        Returns:
            Labeled edge corona
        """
        g = build_corona(spec)
        logger.info(f"Constructed {spec.describe()}: {g.vertex_count} vertices, {g.edge_count} edges")
        return g

    def render(self, g: Graph, fmt: str = "json", coloring: Optional[VertexColoring] = None) -> str:
        """
        Serialize a graph as JSON or DOT.

        Args:
            g: Graph to write
            fmt: "json" or "dot"
            coloring: Colors attached to DOT nodes

        Returns:
            Document text
        """
        if fmt == "dot":
            return graph_to_dot(g, coloring)
        document = graph_to_document(g)
        self._lab.check_document(document, "Graph")
        return self._lab.dumps(document)

    def load(self, text: str, source: str = "<graph>") -> Graph:
        """
        Parse and validate a graph document.

        Raises:
            DocumentError: the text is not a valid graph document
        """
        document = load_json(text, source)
        self._lab.check_document(document, "Graph")
        return graph_from_document(document)

    def twins(self, g: Graph) -> TwinPartition:
        return twin_classes(g)

    def cut_vertices(self, g: Graph) -> list[int]:
        return sorted(cut_vertices(g))
