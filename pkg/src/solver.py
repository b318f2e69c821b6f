"""Exact rvc / rvcl values by backtracking over canonical surjective colorings."""
import logging
import multiprocessing
import time
from functools import lru_cache
from typing import Any, Iterator, Optional

import numpy as np

from src.bounds import bounds_for
from src.exceptions import BudgetExhaustedError, InvalidParameterError
from src.graph_core import all_pairs_distances, twin_classes
from src.models import (
    Budget,
    Graph,
    SearchOptions,
    SearchStats,
    SolveResult,
    SolveStatus,
    Target,
    VertexColoring,
)
from src.rainbow_check import UNASSIGNED, first_unreachable_pair

logger = logging.getLogger(__name__)

# Wall clock and stop flag are polled every this many nodes
_CLOCK_INTERVAL = 4096
_MAX_PREFIX_DEPTH = 8


class _SearchCancelled(Exception):
    """A sibling worker already found a witness."""


def vertex_order(g: Graph) -> list[int]:
    """Assignment order: descending degree, ties by vertex id."""
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


def color_choices(max_used: int, remaining_after: int, k: int) -> range:
    """
    Colors a vertex may take in a canonical surjective k-coloring.

    A color is allowed when it is at most one above the largest color used so
    far, and enough vertices remain to introduce every color still missing.
    """
    top = min(max_used + 1, k)
    need = k - remaining_after
    if max_used >= need:
        return range(1, top + 1)
    if top > max_used and top >= need:
        return range(top, top + 1)
    return range(0)


def canonical_colorings(vertex_count: int, k: int) -> Iterator[tuple[int, ...]]:
    """
    Every canonical surjective k-coloring of vertices 0..vertex_count-1.

    One coloring per color-permutation orbit, so the count is the Stirling
    number of the second kind S(vertex_count, k).
    """
    colors = [UNASSIGNED] * vertex_count

    def extend(position: int, max_used: int) -> Iterator[tuple[int, ...]]:
        if position == vertex_count:
            yield tuple(colors)
            return
        for color in color_choices(max_used, vertex_count - position - 1, k):
            colors[position] = color
            yield from extend(position + 1, max(max_used, color))
        colors[position] = UNASSIGNED

    yield from extend(0, 0)


class _CanonicalSearch:
    """
    Depth-first search over canonical surjective k-colorings of one graph.

    Partial prunes (each switchable through SearchOptions):
      * twin clash: twins never share a color (rvcl only);
      * optimistic rainbow: while only vertices outside non-trivial twin
        classes are assigned, a pair with no rainbow path even when every
        unassigned vertex gets a fresh color cuts the branch;
      * settled codes (rvcl only): a code entry no larger than the distance to
        the nearest unassigned vertex is final; equal final codes cut.
    """

    def __init__(
        self,
        g: Graph,
        target: Target,
        k: int,
        options: SearchOptions,
        node_limit: int,
        deadline: float,
        stop_event: Any = None,
    ):
        self.graph = g
        self.k = k
        self.size = g.vertex_count
        self.rvcl = target == Target.RVCL
        self.node_limit = node_limit
        self.deadline = deadline
        self.stop_event = stop_event
        self.stats = SearchStats()

        self.order = vertex_order(g)
        position = {vertex: depth for depth, vertex in enumerate(self.order)}
        self.adjacency = [tuple(sorted(g.neighbors(v))) for v in g.vertices]
        self.distances = all_pairs_distances(g).values.astype(np.int64)

        prefix_depth = self.size
        self.earlier_twins: list[tuple[int, ...]] = [()] * self.size
        for members in twin_classes(g).nontrivial():
            prefix_depth = min(prefix_depth, min(position[v] for v in members))
            if self.rvcl and options.twin_pruning:
                for v in members:
                    self.earlier_twins[position[v]] = tuple(w for w in members if position[w] < position[v])
        self.rainbow_depth = prefix_depth if options.partial_rainbow_pruning else 0
        self.code_depth = prefix_depth if (self.rvcl and options.settled_code_pruning) else self.size + 1

        diam = int(self.distances.max())
        self.unreached = diam + 1
        base = diam + 2
        self.weights = (base ** np.arange(k, dtype=np.int64)) if base ** k < 2**62 else None
        # Distance from every vertex to the nearest vertex still unassigned at each depth
        self.horizons = [
            self.distances[:, self.order[depth:]].min(axis=1) for depth in range(self.size)
        ]

        self.colors = [UNASSIGNED] * self.size
        self.class_min = np.full((self.size, k), self.unreached, dtype=np.int64)
        self._undo: list[np.ndarray] = []

    # ==================== Bookkeeping ====================

    def _tick(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.node_limit:
            raise BudgetExhaustedError(self.stats.nodes, "nodes")
        if self.stats.nodes % _CLOCK_INTERVAL == 0:
            if time.time() > self.deadline:
                raise BudgetExhaustedError(self.stats.nodes, "seconds")
            if self.stop_event is not None and self.stop_event.is_set():
                raise _SearchCancelled()

    def _assign(self, vertex: int, color: int) -> None:
        self.colors[vertex] = color
        column = self.class_min[:, color - 1]
        self._undo.append(column.copy())
        np.minimum(column, self.distances[:, vertex], out=column)

    def _unassign(self, vertex: int, color: int) -> None:
        self.class_min[:, color - 1] = self._undo.pop()
        self.colors[vertex] = UNASSIGNED

    def _rows_distinct(self, rows: np.ndarray) -> bool:
        if self.weights is not None:
            keys = rows @ self.weights
            return np.unique(keys).size == keys.size
        return np.unique(rows, axis=0).shape[0] == rows.shape[0]

    # ==================== Prunes ====================

    def _viable(self, assigned: int) -> bool:
        if assigned >= self.size:
            return True
        if assigned <= self.rainbow_depth:
            if first_unreachable_pair(self.adjacency, self.colors, self.k) is not None:
                self.stats.rainbow_cuts += 1
                return False
        if assigned >= self.code_depth:
            settled = (self.class_min <= self.horizons[assigned][:, None]).all(axis=1)
            if np.count_nonzero(settled) > 1 and not self._rows_distinct(self.class_min[settled]):
                self.stats.code_cuts += 1
                return False
        return True

    def _accept_leaf(self) -> bool:
        self.stats.leaves += 1
        if self.rvcl and not self._rows_distinct(self.class_min):
            return False
        return first_unreachable_pair(self.adjacency, self.colors, self.k) is None

    # ==================== Search ====================

    def _choices(self, depth: int, max_used: int) -> Iterator[int]:
        twins = self.earlier_twins[depth]
        for color in color_choices(max_used, self.size - depth - 1, self.k):
            if twins and any(self.colors[w] == color for w in twins):
                self.stats.twin_cuts += 1
                continue
            yield color

    def _extend(self, depth: int, max_used: int) -> bool:
        if depth == self.size:
            return self._accept_leaf()
        vertex = self.order[depth]
        for color in self._choices(depth, max_used):
            self._tick()
            self._assign(vertex, color)
            if self._viable(depth + 1) and self._extend(depth + 1, max(max_used, color)):
                return True
            self._unassign(vertex, color)
        return False

    def prefixes(self, target_depth: int) -> list[tuple[int, ...]]:
        """Viable canonical prefixes (colors in assignment order) of a given length."""
        found: list[tuple[int, ...]] = []

        def walk(depth: int, max_used: int) -> None:
            if depth == target_depth:
                found.append(tuple(self.colors[v] for v in self.order[:depth]))
                return
            vertex = self.order[depth]
            for color in self._choices(depth, max_used):
                self._assign(vertex, color)
                if self._viable(depth + 1):
                    walk(depth + 1, max(max_used, color))
                self._unassign(vertex, color)

        walk(0, 0)
        return found

    def run(self, prefix: tuple[int, ...] = ()) -> Optional[VertexColoring]:
        """
        Search below a prefix of assignment-order colors.

        Returns:
            The first verifying coloring in canonical order, or None when the
            subtree holds none

        Raises:
            BudgetExhaustedError: node or time budget ran out
        """
        for vertex, color in zip(self.order, prefix):
            self._assign(vertex, color)
        if self._extend(len(prefix), max(prefix, default=0)):
            return VertexColoring(k=self.k, colors=tuple(self.colors))
        return None


def _search_task(
    g: Graph,
    target: Target,
    k: int,
    options: SearchOptions,
    prefix: tuple[int, ...],
    node_limit: int,
    deadline: float,
    stop_event: Any,
) -> tuple[str, Optional[tuple[int, ...]], SearchStats]:
    """Worker entry point: search one prefix subtree."""
    search = _CanonicalSearch(g, target, k, options, node_limit, deadline, stop_event)
    try:
        witness = search.run(prefix)
    except BudgetExhaustedError:
        return "budget", None, search.stats
    except _SearchCancelled:
        return "cancelled", None, search.stats
    if witness is None:
        return "exhausted", None, search.stats
    stop_event.set()
    return "found", witness.colors, search.stats


def _parallel_search(
    g: Graph,
    target: Target,
    k: int,
    options: SearchOptions,
    node_limit: int,
    deadline: float,
    stats: SearchStats,
) -> Optional[VertexColoring]:
    planner = _CanonicalSearch(g, target, k, options, node_limit, deadline)
    tasks: list[tuple[int, ...]] = []
    for depth in range(1, min(g.vertex_count, _MAX_PREFIX_DEPTH) + 1):
        tasks = planner.prefixes(depth)
        if len(tasks) >= options.workers:
            break
    logger.info(f"Fanning out k={k} over {len(tasks)} prefixes on {options.workers} workers")
    if not tasks:
        return None

    with multiprocessing.Manager() as manager:
        stop_event = manager.Event()
        arguments = [
            (g, target, k, options, prefix, node_limit, deadline, stop_event) for prefix in tasks
        ]
        with multiprocessing.Pool(options.workers) as pool:
            outcomes = pool.starmap(_search_task, arguments)

    for _, _, task_stats in outcomes:
        stats.absorb(task_stats)
    # Merge by canonical rank: prefixes were generated in canonical order
    for outcome, colors, _ in outcomes:
        if outcome == "found":
            return VertexColoring(k=k, colors=colors)
    if any(outcome == "budget" for outcome, _, _ in outcomes):
        raise BudgetExhaustedError(stats.nodes, "parallel")
    return None


def _search_level(
    g: Graph,
    target: Target,
    k: int,
    options: SearchOptions,
    node_limit: int,
    deadline: float,
    stats: SearchStats,
) -> Optional[VertexColoring]:
    if options.workers > 1:
        return _parallel_search(g, target, k, options, node_limit, deadline, stats)
    search = _CanonicalSearch(g, target, k, options, node_limit, deadline)
    try:
        return search.run()
    finally:
        stats.absorb(search.stats)


def feasible_with_k(
    g: Graph,
    target: Target,
    k: int,
    budget: Optional[Budget] = None,
    options: Optional[SearchOptions] = None,
) -> Optional[VertexColoring]:
    """
    A k-coloring verifying the target property, or None if none exists.

    Raises:
        InvalidParameterError: k outside 1..|V|
        BudgetExhaustedError: the canonical space was not exhausted within budget
    """
    if not 1 <= k <= g.vertex_count:
        raise InvalidParameterError(f"k must lie in 1..{g.vertex_count}, got {k}")
    budget = budget or Budget()
    options = options or SearchOptions()
    deadline = time.time() + budget.seconds
    return _search_level(g, target, k, options, budget.nodes, deadline, SearchStats())


def solve_exact(
    g: Graph,
    target: Target,
    budget: Optional[Budget] = None,
    options: Optional[SearchOptions] = None,
    size_cap: Optional[int] = None,
) -> SolveResult:
    """
    Least k admitting a rainbow (rvc) or locating rainbow (rvcl) k-coloring.

    The ladder starts at the certified lower bound from the bounds module (or
    at ``options.start_k`` when larger) and ascends until a witness appears.

    Args:
        g: Connected graph
        target: rvc or rvcl
        budget: Node and time limits for the whole ladder
        options: Pruning switches, workers and start level
        size_cap: Vertex count above which a warning is logged

    Returns:
        SolveResult; on budget exhaustion the all-distinct coloring is the
        witness and [lower, upper] brackets the true value
    """
    budget = budget or Budget()
    options = options or SearchOptions()
    if not g.is_connected():
        raise InvalidParameterError(f"{g.name} is disconnected")
    if size_cap is not None and g.vertex_count > size_cap:
        logger.warning(f"{target.value} search on {g.vertex_count} vertices exceeds the cap of {size_cap}")

    started = time.perf_counter()
    deadline = time.time() + budget.seconds
    report = bounds_for(g, target)
    certified = max(report.lower, 1)
    rule = report.lower_rule.value if report.lower > 1 and report.lower_rule else None
    start = max(certified, options.start_k or certified)
    start = min(start, g.vertex_count)
    stats = SearchStats()

    def elapsed_ms() -> int:
        return int((time.perf_counter() - started) * 1000)

    logger.info(f"Solving {target.value}({g.name}) from k={start} (certified {certified}, rule {rule})")
    for k in range(start, g.vertex_count + 1):
        try:
            witness = _search_level(g, target, k, options, budget.nodes - stats.nodes, deadline, stats)
        except BudgetExhaustedError as exc:
            logger.warning(f"{target.value}({g.name}) budget exhausted at k={k}: {exc}")
            return SolveResult(
                target=target,
                value=g.vertex_count,
                status=SolveStatus.BUDGET_EXHAUSTED,
                witness=VertexColoring.all_distinct(g.vertex_count),
                lower=k if start == certified else certified,
                upper=g.vertex_count,
                lower_bound_rule=rule,
                nodes_explored=stats.nodes,
                elapsed_ms=elapsed_ms(),
                stats=stats,
            )
        if witness is None:
            logger.info(f"k={k} refuted after {stats.nodes} nodes")
            continue

        proved = start == certified
        result = SolveResult(
            target=target,
            value=k,
            status=SolveStatus.PROVED if proved else SolveStatus.UPPER_WITNESS_ONLY,
            witness=witness,
            lower=k if proved else certified,
            upper=k,
            lower_bound_rule=rule,
            nodes_explored=stats.nodes,
            elapsed_ms=elapsed_ms(),
            stats=stats,
        )
        logger.info(
            f"{target.value}({g.name}) = {k} [{result.status.value}] "
            f"nodes={stats.nodes} elapsed={result.elapsed_ms}ms"
        )
        return result

    raise RuntimeError(f"no coloring of {g.name} verified, not even the all-distinct one")


@lru_cache(maxsize=256)
def solved_value(g: Graph, target: Target) -> int:
    """
    Proved value of a small graph, cached per (graph, target).

    Raises:
        BudgetExhaustedError: the default budget did not prove the value
    """
    result = solve_exact(g, target)
    if not result.proved:
        raise BudgetExhaustedError(result.nodes_explored, result.status.value)
    return result.value
