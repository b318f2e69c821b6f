"""Pydantic models for labeled graphs and structural query results."""
import re
from enum import Enum
from typing import Any, Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator


_LABEL_PATTERN = re.compile(r"^(core):(\d+)$|^(flare):(\d+):(\d+)$")


class VertexKind(str, Enum):
    """Provenance of a vertex inside an edge corona."""
    CORE = "core"
    FLARE = "flare"


class VertexLabel(BaseModel):
    """
    Provenance label of a vertex.

    Core vertices carry their 1-based core index. Flare vertices carry the
    1-based index of the core edge their copy hangs from and the 1-based index
    of the vertex inside that copy.
    """
    model_config = ConfigDict(frozen=True)

    kind: VertexKind
    index: int = Field(..., ge=1, description="Core index, or core edge index for flare vertices")
    copy_index: Optional[int] = Field(default=None, ge=1, description="Vertex index inside the flare copy")

    @model_validator(mode="after")
    def _check_shape(self) -> "VertexLabel":
        if self.kind == VertexKind.CORE and self.copy_index is not None:
            raise ValueError("core labels carry no copy index")
        if self.kind == VertexKind.FLARE and self.copy_index is None:
            raise ValueError("flare labels need a copy index")
        return self

    @classmethod
    def core(cls, index: int) -> "VertexLabel":
        """Factory method for Core(index)."""
        return cls(kind=VertexKind.CORE, index=index)

    @classmethod
    def flare(cls, edge_index: int, copy_index: int) -> "VertexLabel":
        """Factory method for Flare(edge_index, copy_index)."""
        return cls(kind=VertexKind.FLARE, index=edge_index, copy_index=copy_index)

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        """
        Parse the textual form used in graph documents.

        Args:
            text: "core:i" or "flare:j:k"

        Returns:
            Parsed label
        """
        match = _LABEL_PATTERN.match(text.strip())
        if not match:
            raise ValueError(f"Malformed vertex label: {text!r}")
        if match.group(1):
            return cls.core(int(match.group(2)))
        return cls.flare(int(match.group(4)), int(match.group(5)))

    @property
    def is_core(self) -> bool:
        return self.kind == VertexKind.CORE

    @property
    def edge_index(self) -> Optional[int]:
        return None if self.is_core else self.index

    def sort_key(self) -> tuple[int, int, int]:
        """Key placing core vertices first, then flares by (edge, copy)."""
        if self.is_core:
            return 0, self.index, 0
        return 1, self.index, self.copy_index

    def __str__(self) -> str:
        if self.is_core:
            return f"core:{self.index}"
        return f"flare:{self.index}:{self.copy_index}"


class Graph(BaseModel):
    """
    Undirected simple graph with provenance-labeled vertices.

    Vertex ids are positions in ``labels``. Edges are stored as (min, max)
    pairs in edge-index order, so the j-th edge has 1-based index j.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(default="graph", description="Human readable family name")
    labels: tuple[VertexLabel, ...] = Field(..., min_length=1)
    edges: tuple[tuple[int, int], ...] = Field(default=())

    _adjacency: tuple[frozenset[int], ...] = PrivateAttr(default=())
    _ids: dict[VertexLabel, int] = PrivateAttr(default_factory=dict)

    @field_validator("edges", mode="before")
    @classmethod
    def _normalise_edges(cls, value: Any) -> Any:
        return tuple((min(u, v), max(u, v)) for u, v in value)

    def model_post_init(self, __context: Any) -> None:
        count = len(self.labels)
        ids = {label: vid for vid, label in enumerate(self.labels)}
        if len(ids) != count:
            raise ValueError("Vertex labels must be unique")

        neighbours: list[set[int]] = [set() for _ in range(count)]
        for u, v in self.edges:
            if not (0 <= u < count and 0 <= v < count):
                raise ValueError(f"Edge ({u}, {v}) references an unknown vertex")
            if u == v:
                raise ValueError(f"Loop at vertex {u}")
            if v in neighbours[u]:
                raise ValueError(f"Duplicate edge ({u}, {v})")
            neighbours[u].add(v)
            neighbours[v].add(u)

        self._adjacency = tuple(frozenset(n) for n in neighbours)
        self._ids = ids

    # ==================== Size ====================

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(len(self.labels))

    # ==================== Adjacency ====================

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adjacency

    def neighbors(self, vertex: int) -> frozenset[int]:
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._adjacency[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def edge(self, index: int) -> tuple[int, int]:
        """Endpoints of the edge with 1-based index ``index``."""
        return self.edges[index - 1]

    # ==================== Labels ====================

    def vertex_id(self, label: VertexLabel) -> int:
        """Look up a vertex id by label."""
        try:
            return self._ids[label]
        except KeyError:
            raise KeyError(f"No vertex labeled {label}") from None

    def label_of(self, vertex: int) -> VertexLabel:
        return self.labels[vertex]

    def core_vertices(self) -> list[int]:
        return [vid for vid, label in enumerate(self.labels) if label.is_core]

    def flare_vertices(self, edge_index: int) -> list[int]:
        """Vertices of the flare copy attached to core edge ``edge_index``."""
        return [
            vid for vid, label in enumerate(self.labels)
            if not label.is_core and label.index == edge_index
        ]

    # ==================== Conversions ====================

    def to_networkx(self) -> nx.Graph:
        """Build a networkx view with vertex ids as nodes and labels as attributes."""
        graph = nx.Graph(name=self.name)
        graph.add_nodes_from((vid, {"label": str(label)}) for vid, label in enumerate(self.labels))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())


class CoronaShape(BaseModel):
    """Edge-corona parameters recovered from vertex labels."""
    model_config = ConfigDict(frozen=True)

    core_order: int = Field(..., description="m, number of core vertices")
    core_edges: int = Field(..., description="|E(G_m)|, number of flare copies")
    flare_order: int = Field(..., description="n, vertices per flare copy")
    flares_complete: bool = Field(..., description="Every flare copy is a clique")


class DistanceMatrix(BaseModel):
    """Read-only table of hop distances indexed by vertex id."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _freeze(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=np.int32)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"Distance table must be square, got shape {array.shape}")
        array.setflags(write=False)
        return array

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return int(self.values[u, v])

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    @property
    def diameter(self) -> int:
        return int(self.values.max()) if self.size else 0

    def row(self, vertex: int) -> np.ndarray:
        return self.values[vertex]


class TwinPartition(BaseModel):
    """Partition of the vertex set into maximal twin classes (singletons included)."""
    model_config = ConfigDict(frozen=True)

    classes: tuple[tuple[int, ...], ...]

    def class_of(self, vertex: int) -> tuple[int, ...]:
        for members in self.classes:
            if vertex in members:
                return members
        raise KeyError(f"Vertex {vertex} is not covered by the partition")

    def nontrivial(self) -> list[tuple[int, ...]]:
        """Classes with at least two members."""
        return [members for members in self.classes if len(members) > 1]

    @property
    def largest(self) -> int:
        return max((len(members) for members in self.classes), default=0)
