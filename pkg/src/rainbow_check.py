"""Rainbow vertex path search, rainbow codes and the locating property."""
import logging
from typing import Optional, Sequence

import numpy as np

from src.exceptions import InvalidColoringError, InvalidParameterError
from src.graph_core import all_pairs_distances
from src.models import (
    DistanceMatrix,
    Graph,
    LocatingCollision,
    RainbowCode,
    VerificationReport,
    VertexColoring,
)

logger = logging.getLogger(__name__)

UNASSIGNED = 0


def rainbow_reach(
    adjacency: Sequence[Sequence[int]],
    colors: Sequence[int],
    k: int,
    source: int,
    wanted: int,
) -> int:
    """
    Vertices joined to ``source`` by a rainbow vertex path.

    Explores states (end vertex, internal colors used, unassigned internals).
    A walk whose internal colors are pairwise distinct never repeats an
    internal vertex and can be shortcut at the endpoints, so walks and simple
    paths reach the same vertices. Vertices colored UNASSIGNED count as fresh
    distinct colors with at most k distinct internal colors overall; on a
    partial coloring the result is therefore an over-approximation of what
    any completion can reach.

    Args:
        adjacency: Neighbour lists indexed by vertex
        colors: Color per vertex, UNASSIGNED allowed
        k: Number of colors available
        source: Start vertex
        wanted: Bit mask of vertices of interest; search stops once all are reached

    Returns:
        Bit mask of reached vertices (the source included)
    """
    reached = 1 << source
    if reached & wanted == wanted:
        return reached

    stack = [(source, 0, 0)]
    seen = {(source, 0, 0)}
    while stack:
        vertex, used, fresh = stack.pop()
        for nxt in adjacency[vertex]:
            reached |= 1 << nxt
            if nxt == source:
                continue
            color = colors[nxt]
            if color == UNASSIGNED:
                state_used, state_fresh = used, fresh + 1
                if state_used.bit_count() + state_fresh > k:
                    continue
            else:
                bit = 1 << (color - 1)
                if used & bit:
                    continue
                state_used, state_fresh = used | bit, fresh
                if state_fresh and state_used.bit_count() + state_fresh > k:
                    continue
            state = (nxt, state_used, state_fresh)
            if state not in seen:
                seen.add(state)
                stack.append(state)
        if reached & wanted == wanted:
            break
    return reached


def first_unreachable_pair(
    adjacency: Sequence[Sequence[int]],
    colors: Sequence[int],
    k: int,
) -> Optional[tuple[int, int]]:
    """Lexicographically least pair without a rainbow vertex path, if any."""
    count = len(adjacency)
    everyone = (1 << count) - 1
    for u in range(count - 1):
        later = everyone & ~((1 << (u + 1)) - 1)
        reached = rainbow_reach(adjacency, colors, k, u, later)
        missing = later & ~reached
        if missing:
            v = (missing & -missing).bit_length() - 1
            return u, v
    return None


def _check_fits(g: Graph, c: VertexColoring) -> None:
    if c.vertex_count != g.vertex_count:
        raise InvalidColoringError(
            f"coloring covers {c.vertex_count} vertices, graph {g.name} has {g.vertex_count}"
        )


# ==================== Rainbow Vertex Paths ====================

def rvp_exists(g: Graph, c: VertexColoring, u: int, v: int) -> bool:
    """
    Whether some u-v path has pairwise distinct internal colors.

    Raises:
        InvalidParameterError: u == v or a vertex id is unknown
    """
    _check_fits(g, c)
    if u == v:
        raise InvalidParameterError(f"rainbow path endpoints must differ, got {u} twice")
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
        raise InvalidParameterError(f"unknown vertex in pair ({u}, {v})")
    target = 1 << v
    return bool(rainbow_reach(g.adjacency, c.colors, c.k, u, target) & target)


def is_rainbow_vertex_coloring(g: Graph, c: VertexColoring) -> VerificationReport:
    """
    Check every unordered pair for a rainbow vertex path.

    Returns:
        Report with the rainbow fields set; the first failing pair in
        vertex order is reported
    """
    _check_fits(g, c)
    pair = first_unreachable_pair(g.adjacency, c.colors, c.k)
    if pair is not None:
        logger.debug(f"{g.name}: no rainbow vertex path between {pair[0]} and {pair[1]}")
    return VerificationReport(rainbow_ok=pair is None, failing_pair_rainbow=pair)


# ==================== Rainbow Codes ====================

def code_table(distances: np.ndarray, colors: np.ndarray, k: int) -> np.ndarray:
    """
    Rainbow codes of all vertices as a |V| x k array.

    Entry (v, i) is the distance from v to the nearest vertex of color i+1.
    Every color 1..k must be used.
    """
    order = np.argsort(colors, kind="stable")
    starts = np.searchsorted(colors[order], np.arange(1, k + 1))
    return np.minimum.reduceat(distances[:, order], starts, axis=1)


def codes_distinct(codes: np.ndarray) -> bool:
    """Whether all rows of a code table differ."""
    return np.unique(codes, axis=0).shape[0] == codes.shape[0]


def rainbow_code(
    g: Graph,
    c: VertexColoring,
    v: int,
    dm: Optional[DistanceMatrix] = None,
) -> RainbowCode:
    """
    Rainbow code of one vertex.

    Args:
        g: Graph
        c: Surjective coloring of g
        v: Vertex id
        dm: Distance matrix of g (computed when omitted)
    """
    _check_fits(g, c)
    dm = dm or all_pairs_distances(g)
    if dm.size != g.vertex_count:
        raise InvalidParameterError(f"distance matrix of size {dm.size} does not match {g.name}")
    row = dm.row(v)
    entries = tuple(int(min(row[w] for w in members)) for members in c.classes())
    return RainbowCode(vertex=v, entries=entries)


def rainbow_codes(g: Graph, c: VertexColoring, dm: Optional[DistanceMatrix] = None) -> np.ndarray:
    """Code table of the whole graph."""
    _check_fits(g, c)
    dm = dm or all_pairs_distances(g)
    return code_table(dm.values, np.asarray(c.colors), c.k)


def first_collision(codes: np.ndarray) -> Optional[LocatingCollision]:
    """Lexicographically least pair of vertices with identical codes."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for vertex, row in enumerate(codes.tolist()):
        groups.setdefault(tuple(row), []).append(vertex)
    clashes = [(members[0], members[1], code) for code, members in groups.items() if len(members) > 1]
    if not clashes:
        return None
    u, v, code = min(clashes)
    return LocatingCollision(pair=(u, v), code=code)


def is_locating(g: Graph, c: VertexColoring) -> VerificationReport:
    """
    Check that all rainbow codes are pairwise distinct.

    Returns:
        Report with the locating fields and the full code table
    """
    codes = rainbow_codes(g, c)
    collision = first_collision(codes)
    if collision is not None:
        logger.debug(f"{g.name}: vertices {collision.pair} share code {collision.code}")
    return VerificationReport(
        locating_ok=collision is None,
        failing_pair_locating=collision,
        codes=codes.tolist(),
    )


def is_locating_rainbow_coloring(g: Graph, c: VertexColoring) -> VerificationReport:
    """Both checks, with both witnesses populated on failure."""
    report = is_rainbow_vertex_coloring(g, c).merged(is_locating(g, c))
    logger.info(
        f"Verified {c.k}-coloring of {g.name}: rainbow={report.rainbow_ok}, locating={report.locating_ok}"
    )
    return report
