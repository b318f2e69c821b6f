"""Graph families, the edge-corona product and structural queries."""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

import networkx as nx
import numpy as np

from src.exceptions import InvalidParameterError, InvalidTreeError
from src.models import (
    CoreFamily,
    CoronaShape,
    DistanceMatrix,
    FamilySpec,
    FlareFamily,
    Graph,
    TwinPartition,
    VertexLabel,
)

logger = logging.getLogger(__name__)


def _plain_graph(name: str, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph whose vertices are all Core(1..order)."""
    return Graph(
        name=name,
        labels=tuple(VertexLabel.core(i) for i in range(1, order + 1)),
        edges=tuple(edges),
    )


# ==================== Base Families ====================

def build_path(m: int) -> Graph:
    """
    Path u_1..u_m; edge j joins u_j and u_{j+1}.

    Raises:
        InvalidParameterError: m < 2
    """
    if m < 2:
        raise InvalidParameterError(f"path needs m >= 2, got {m}")
    return _plain_graph(f"path:{m}", m, ((i, i + 1) for i in range(m - 1)))


def build_cycle(m: int) -> Graph:
    """
    Cycle u_1..u_m; edge m joins u_m and u_1.

    Raises:
        InvalidParameterError: m < 3
    """
    if m < 3:
        raise InvalidParameterError(f"cycle needs m >= 3, got {m}")
    edges = [(i, i + 1) for i in range(m - 1)] + [(m - 1, 0)]
    return _plain_graph(f"cycle:{m}", m, edges)


def build_complete(m: int) -> Graph:
    """
    Complete graph K_m with edges indexed lexicographically on (i, j), i < j.

    Raises:
        InvalidParameterError: m < 2
    """
    if m < 2:
        raise InvalidParameterError(f"complete graph needs m >= 2, got {m}")
    return _plain_graph(f"complete:{m}", m, combinations(range(m), 2))


def build_star(m: int) -> Graph:
    """Star K_{1,m-1} centred at u_1; edge j joins u_1 and u_{j+1}."""
    if m < 2:
        raise InvalidParameterError(f"star needs m >= 2, got {m}")
    return _plain_graph(f"star:{m}", m, ((0, i) for i in range(1, m)))


def build_tree(edge_list: Iterable[tuple[int, int]]) -> Graph:
    """
    Tree from a 1-based edge list; edge j of the list becomes edge index j.

    Args:
        edge_list: Pairs of vertices numbered 1..m

    Returns:
        Tree on m vertices

    Raises:
        InvalidTreeError: input is empty, cyclic, disconnected or skips a vertex number
    """
    edges = [tuple(edge) for edge in edge_list]
    if not edges:
        raise InvalidTreeError("tree edge list is empty")
    if any(len(edge) != 2 for edge in edges):
        raise InvalidTreeError("tree edges must be vertex pairs")

    vertices = sorted({v for edge in edges for v in edge})
    order = len(vertices)
    if vertices != list(range(1, order + 1)):
        raise InvalidTreeError(f"tree vertices must be exactly 1..{order}, got {vertices}")

    candidate = nx.Graph()
    candidate.add_nodes_from(vertices)
    candidate.add_edges_from(edges)
    if candidate.number_of_edges() != len(edges) or nx.number_of_selfloops(candidate):
        raise InvalidTreeError("tree edge list contains loops or repeated edges")
    if not nx.is_connected(candidate):
        raise InvalidTreeError("tree edge list is disconnected")
    if not nx.is_tree(candidate):
        raise InvalidTreeError("tree edge list contains a cycle")

    return _plain_graph(f"tree:{order}", order, ((u - 1, v - 1) for u, v in edges))


# ==================== Edge Corona ====================

def edge_corona(core: Graph, flare: Graph) -> Graph:
    """
    Edge corona core ⋄ flare.

    The j-th copy of ``flare`` is joined completely to both endpoints of the
    j-th core edge. Vertices are ordered core first, then flare copies by
    (edge index, copy index); edges are ordered core edges first, then per
    flare the attachment edges followed by the copy's own edges.

    Raises:
        InvalidParameterError: the core has no edge or either graph is disconnected
    """
    if core.edge_count == 0:
        raise InvalidParameterError(f"edge corona needs a core with at least one edge: {core.name}")
    if not core.is_connected():
        raise InvalidParameterError(f"core {core.name} is disconnected")
    if not flare.is_connected():
        raise InvalidParameterError(f"flare {flare.name} is disconnected")

    m = core.vertex_count
    n = flare.vertex_count

    labels = [VertexLabel.core(i) for i in range(1, m + 1)]
    labels += [
        VertexLabel.flare(j, k)
        for j in range(1, core.edge_count + 1)
        for k in range(1, n + 1)
    ]

    def flare_vertex(edge_index: int, copy_index: int) -> int:
        return m + (edge_index - 1) * n + (copy_index - 1)

    edges = list(core.edges)
    for j, (a, b) in enumerate(core.edges, start=1):
        for k in range(1, n + 1):
            vertex = flare_vertex(j, k)
            edges.append((a, vertex))
            edges.append((b, vertex))
        for x, y in flare.edges:
            edges.append((flare_vertex(j, x + 1), flare_vertex(j, y + 1)))

    corona = Graph(name=f"{core.name}*{flare.name}", labels=tuple(labels), edges=tuple(edges))
    logger.debug(
        f"Built {corona.name}: {corona.vertex_count} vertices, {corona.edge_count} edges"
    )
    return corona


def build_core(family: CoreFamily, m: int, tree_edges: Optional[Iterable[tuple[int, int]]] = None) -> Graph:
    """Build a core graph G_m by family name."""
    if family == CoreFamily.PATH:
        return build_path(m)
    if family == CoreFamily.CYCLE:
        return build_cycle(m)
    if family == CoreFamily.COMPLETE:
        return build_complete(m)
    if family == CoreFamily.STAR:
        return build_star(m)
    tree = build_tree(tree_edges or [])
    if tree.vertex_count != m:
        raise InvalidTreeError(f"tree edge list spans {tree.vertex_count} vertices, expected {m}")
    return tree


def build_flare(family: FlareFamily, n: int) -> Graph:
    """Build a flare graph H_n by family name."""
    if family == FlareFamily.COMPLETE:
        return build_complete(n)
    if family == FlareFamily.PATH:
        return build_path(n)
    if family == FlareFamily.CYCLE:
        return build_cycle(n)
    return build_star(n)


def build_corona(spec: FamilySpec) -> Graph:
    """Build G_m ⋄ H_n for a family specification."""
    core = build_core(spec.core, spec.m, spec.tree_edges)
    return edge_corona(core, build_flare(spec.flare, spec.n))


# ==================== Structural Queries ====================

def _require_connected(g: Graph) -> nx.Graph:
    view = g.to_networkx()
    if not nx.is_connected(view):
        raise InvalidParameterError(f"{g.name} is disconnected")
    return view


@lru_cache(maxsize=128)
def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """
    BFS hop distances between all vertex pairs.

    Raises:
        InvalidParameterError: g is disconnected
    """
    view = _require_connected(g)
    table = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int32)
    for source, lengths in nx.all_pairs_shortest_path_length(view):
        for target, distance in lengths.items():
            table[source, target] = distance
    return DistanceMatrix(values=table)


def diameter(g: Graph) -> int:
    return all_pairs_distances(g).diameter


@lru_cache(maxsize=128)
def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph."""
    return frozenset(nx.articulation_points(_require_connected(g)))


def are_twins(g: Graph, w: int, z: int) -> bool:
    """Adjacent and equidistant from every vertex outside {w, z}."""
    if w == z or not g.has_edge(w, z):
        return False
    table = all_pairs_distances(g).values
    others = np.ones(g.vertex_count, dtype=bool)
    others[[w, z]] = False
    return bool(np.array_equal(table[w, others], table[z, others]))


@lru_cache(maxsize=128)
def twin_classes(g: Graph) -> TwinPartition:
    """
    Maximal twin classes by the exact equidistance predicate.

    Adjacent equidistant pairs are closed-neighbourhood twins, an equivalence
    relation, so the classes are the components of the twin-pair graph.
    """
    pairs = nx.Graph()
    pairs.add_nodes_from(g.vertices)
    pairs.add_edges_from((u, v) for u, v in g.edges if are_twins(g, u, v))
    classes = sorted(tuple(sorted(component)) for component in nx.connected_components(pairs))
    return TwinPartition(classes=tuple(classes))


def corona_shape(g: Graph) -> Optional[CoronaShape]:
    """
    Recover (m, |E(G_m)|, n) from the labels of an edge corona.

    Returns:
        CoronaShape, or None when the labels do not describe an edge corona
    """
    core = g.core_vertices()
    copies: dict[int, list[int]] = {}
    for label in g.labels:
        if not label.is_core:
            copies.setdefault(label.index, []).append(label.copy_index)
    if not copies or not core:
        return None

    core_edges = len(copies)
    if sorted(copies) != list(range(1, core_edges + 1)):
        return None
    orders = {len(members) for members in copies.values()}
    if len(orders) != 1:
        return None
    n = orders.pop()
    if any(sorted(members) != list(range(1, n + 1)) for members in copies.values()):
        return None

    core_set = set(core)
    core_edge_list = [(u, v) for u, v in g.edges if u in core_set and v in core_set]
    if len(core_edge_list) != core_edges:
        return None
    for j, (a, b) in enumerate(core_edge_list, start=1):
        members = set(g.flare_vertices(j))
        for vertex in members:
            if g.neighbors(vertex) - members != {a, b}:
                return None

    complete = all(
        g.has_edge(x, y)
        for j in copies
        for x, y in combinations(g.flare_vertices(j), 2)
    )
    return CoronaShape(core_order=len(core), core_edges=core_edges, flare_order=n, flares_complete=complete)
