"""
Constructive colorings of edge coronas and theorem-predicted values.

Generators follow the printed coloring rules literally. A generated coloring
is relabeled to the colors it actually uses, so a rule that leaves a palette
color unused shows up as a color-count mismatch rather than being patched.
"""
import logging
from itertools import combinations
from math import ceil
from typing import Callable, NamedTuple, Optional

from src.exceptions import (
    FormulaCoverageError,
    InfeasibleAssignmentError,
    InvalidParameterError,
    UnsupportedSpecError,
)
from src.graph_core import (
    build_complete,
    build_core,
    build_corona,
    build_cycle,
    build_flare,
    build_path,
    cut_vertices,
    edge_corona,
)
from src.models import (
    ConstructionRule,
    CoreFamily,
    FamilySpec,
    FlareFamily,
    Graph,
    PredictedValue,
    Target,
    VerificationReport,
    VertexColoring,
    VertexLabel,
)
from src.rainbow_check import is_locating_rainbow_coloring, is_rainbow_vertex_coloring
from src.solver import solved_value

logger = logging.getLogger(__name__)


def _half_up(m: int) -> int:
    return ceil(m / 2)


def _third_up(m: int) -> int:
    return ceil(m / 3)


class Construction(NamedTuple):
    """Generated coloring together with the palette size its rule declares."""
    rule: ConstructionRule
    graph: Graph
    coloring: VertexColoring
    palette: int

    @property
    def uses_declared_palette(self) -> bool:
        return self.coloring.k == self.palette

    def verify(self) -> VerificationReport:
        """Verifier report for the property the rule targets."""
        if self.rule.target == Target.RVC:
            return is_rainbow_vertex_coloring(self.graph, self.coloring)
        return is_locating_rainbow_coloring(self.graph, self.coloring)

    def is_valid(self) -> bool:
        """The coloring verifies and uses exactly the declared palette."""
        return self.uses_declared_palette and self.verify().passed


class _Paint:
    """Raw color buffer over the vertices of an edge corona."""

    def __init__(self, g: Graph, fill: int = 0):
        self.graph = g
        self.colors = [fill] * g.vertex_count

    def core(self, i: int, color: int) -> None:
        self.colors[self.graph.vertex_id(VertexLabel.core(i))] = color

    def flare(self, i: int, k: int, color: int) -> None:
        self.colors[self.graph.vertex_id(VertexLabel.flare(i, k))] = color

    def coloring(self) -> VertexColoring:
        return VertexColoring.from_colors(self.colors)


# ==================== Predictions ====================

def _require(condition: bool, message: str, rule: str) -> None:
    if not condition:
        raise UnsupportedSpecError(message, condition=rule)


def _predict_tree_rvc(spec: FamilySpec) -> PredictedValue:
    core = build_core(spec.core, spec.m, spec.tree_edges)
    return PredictedValue(target=Target.RVC, value=solved_value(core, Target.RVC), branch="rvc(T_m)")


def _predict_path_rvcl(spec: FamilySpec) -> PredictedValue:
    _require(spec.flare == FlareFamily.COMPLETE, "path rvcl needs complete flares", "flare=K_n")
    _require(spec.m >= 2 and spec.n >= 2, f"path rvcl needs m >= 2 and n >= 2, got {spec.describe()}", "m>=2, n>=2")
    core_value = solved_value(build_path(spec.m), Target.RVC)
    return PredictedValue(
        target=Target.RVCL,
        value=max(core_value, spec.n + 2),
        branch="max{rvc(P_m),n+2}",
    )


def _predict_cycle_rvc(spec: FamilySpec) -> PredictedValue:
    _require(spec.m >= 3, f"cycle cores need m >= 3, got {spec.m}", "m>=3")
    if spec.m == 3:
        return PredictedValue(target=Target.RVC, value=1, branch="m=3")
    return PredictedValue(target=Target.RVC, value=_half_up(spec.m), branch="m>=4")


def cycle_rvcl_case(m: int, n: int) -> str:
    """
    Branch of the cycle rvcl theorem that applies to C_m ⋄ K_n.

    Returns:
        "1" (n+1), "2a" / "2b" (max{⌈m/2⌉+1, n+2}) or "3" (⌈m/2⌉)

    Raises:
        UnsupportedSpecError: m < 3 or n < 2
    """
    _require(m >= 3 and n >= 2, f"cycle rvcl needs m >= 3 and n >= 2, got ({m}, {n})", "m>=3, n>=2")
    h = _half_up(m)
    if m == 3 or n >= m - 1:
        return "1"
    if h - 1 <= n:
        return "2a" if n == h - 1 else "2b"
    return "3"


_CYCLE_RVCL_BRANCHES = {
    "1": "m=3 or n>=m-1",
    "2a": "m>=4, ceil(m/2)-1<=n<m-1",
    "2b": "m>=4, ceil(m/2)-1<=n<m-1",
    "3": "m>=5, n<=ceil(m/2)-2",
}


def _predict_cycle_rvcl(spec: FamilySpec) -> PredictedValue:
    _require(spec.flare == FlareFamily.COMPLETE, "cycle rvcl needs complete flares", "flare=K_n")
    case = cycle_rvcl_case(spec.m, spec.n)
    h = _half_up(spec.m)
    if case == "1":
        value = spec.n + 1
    elif case == "3":
        value = h
    else:
        value = max(h + 1, spec.n + 2)
    return PredictedValue(target=Target.RVCL, value=value, branch=_CYCLE_RVCL_BRANCHES[case])


def _predict_complete_rvc(spec: FamilySpec) -> PredictedValue:
    _require(spec.m >= 3, f"complete cores need m >= 3, got {spec.m}", "m>=3")
    return PredictedValue(target=Target.RVC, value=_third_up(spec.m), branch="ceil(m/3)")


def _predict_complete_rvcl(spec: FamilySpec) -> PredictedValue:
    _require(spec.flare == FlareFamily.COMPLETE, "complete rvcl needs complete flares", "flare=K_n")
    _require(3 <= spec.m <= spec.n, f"complete rvcl needs 3 <= m <= n, got {spec.describe()}", "3<=m<=n")
    edges = spec.m * (spec.m - 1) // 2
    if spec.n >= edges - 1:
        return PredictedValue(target=Target.RVCL, value=spec.n + 1, branch="n>=|E(K_m)|-1")
    return PredictedValue(target=Target.RVCL, value=spec.n + 2, branch="n<|E(K_m)|-1")


def predict(spec: FamilySpec, target: Target) -> PredictedValue:
    """
    Theorem value of rvc or rvcl for a family, with the branch that fired.

    rvc(P_m) and rvc(T_m) sub-terms come from the exact solver on the bare
    core (cached per graph).

    Raises:
        UnsupportedSpecError: no theorem covers (spec, target)
    """
    if target == Target.RVC:
        if spec.is_tree_core:
            return _predict_tree_rvc(spec)
        if spec.core == CoreFamily.CYCLE:
            return _predict_cycle_rvc(spec)
        return _predict_complete_rvc(spec)

    if spec.core == CoreFamily.PATH:
        return _predict_path_rvcl(spec)
    if spec.core == CoreFamily.CYCLE:
        return _predict_cycle_rvcl(spec)
    if spec.core == CoreFamily.COMPLETE:
        return _predict_complete_rvcl(spec)
    raise UnsupportedSpecError(
        f"no theorem gives rvcl of {spec.describe()}; use bounds and the solver",
        condition="core in {path, cycle, complete}",
    )


# ==================== Generic Colorings ====================

def color_upper_general(core: Graph, n: int) -> VertexColoring:
    """
    Upper-bound coloring of core ⋄ K_n with m+n+|E|-1 colors.

    Core vertex i gets color i; copy k of flare j gets m+j+k-1.
    """
    if n < 2:
        raise InvalidParameterError(f"upper coloring needs n >= 2, got {n}")
    paint = _Paint(edge_corona(core, build_complete(n)))
    m = core.vertex_count
    for i in range(1, m + 1):
        paint.core(i, i)
    for j in range(1, core.edge_count + 1):
        for k in range(1, n + 1):
            paint.flare(j, k, m + j + k - 1)
    return paint.coloring()


def color_tree_rvc(core_tree: Graph, flare: Graph) -> VertexColoring:
    """Cut vertices of the tree get colors 1..c in id order; all others get 1."""
    if core_tree.vertex_count < 2 or core_tree.edge_count != core_tree.vertex_count - 1:
        raise InvalidParameterError(f"{core_tree.name} is not a tree on at least two vertices")
    paint = _Paint(edge_corona(core_tree, flare), fill=1)
    for color, vertex in enumerate(sorted(cut_vertices(core_tree)), start=1):
        paint.core(vertex + 1, color)
    return paint.coloring()


# ==================== Path Cores ====================

def color_path_rvcl(m: int, n: int) -> VertexColoring:
    """
    Locating rainbow coloring of P_m ⋄ K_n with max{rvc(P_m), n+2} colors.

    Core: u_1 gets 1, u_m gets m-2, u_i gets i-1 otherwise. Flare on edge i,
    copy j: j+1 for i = 1, else ((i+j-2) mod K)+1. For m = 2 the corona is
    K_{n+2} and every vertex gets its own color.
    """
    return _path_rvcl(m, n)[0]


def _path_rvcl(m: int, n: int) -> tuple[VertexColoring, int]:
    if m < 2 or n < 2:
        raise InvalidParameterError(f"path rvcl needs m >= 2 and n >= 2, got ({m}, {n})")
    g = edge_corona(build_path(m), build_complete(n))
    if m == 2:
        return VertexColoring.all_distinct(g.vertex_count), n + 2

    palette = max(solved_value(build_path(m), Target.RVC), n + 2)
    paint = _Paint(g)
    paint.core(1, 1)
    paint.core(m, m - 2)
    for i in range(2, m):
        paint.core(i, i - 1)
    for i in range(1, m):
        for j in range(1, n + 1):
            paint.flare(i, j, j + 1 if i == 1 else ((i + j - 2) % palette) + 1)
    return paint.coloring(), palette


# ==================== Cycle Cores ====================

def color_cycle_rvc(m: int, flare: Graph) -> VertexColoring:
    """Core vertex i gets ((i-1) mod ⌈m/2⌉)+1 (all ones for m = 3); flares get 1."""
    if m < 3:
        raise InvalidParameterError(f"cycle cores need m >= 3, got {m}")
    paint = _Paint(edge_corona(build_cycle(m), flare), fill=1)
    if m > 3:
        h = _half_up(m)
        for i in range(1, m + 1):
            paint.core(i, ((i - 1) % h) + 1)
    return paint.coloring()


class _Branch(NamedTuple):
    """One guarded piece of a piecewise flare formula."""
    guard: Callable[[int, int], bool]
    color: Callable[[int, int], int]


def _apply_branches(
    paint: _Paint,
    m: int,
    n: int,
    branches: list[_Branch],
    rule: str,
) -> None:
    """Color flare (i, k) by the first branch whose guard holds."""
    for i in range(1, m + 1):
        for k in range(1, n + 1):
            branch = next((b for b in branches if b.guard(i, k)), None)
            if branch is None:
                raise FormulaCoverageError(i, k, rule)
            paint.flare(i, k, branch.color(i, k))


def _case_two_branches(m: int, first_mod: int, second_mod: int) -> list[_Branch]:
    h = _half_up(m)
    low = m // 2
    return [
        _Branch(
            guard=lambda i, k: (1 <= i <= h - 2 or h <= i <= m) and i + k - 2 < m,
            color=lambda i, k: ((i + k - 2) % first_mod) + 1,
        ),
        _Branch(
            guard=lambda i, k: i == h - 1 and i + k - 2 <= m,
            color=lambda i, k: ((i + k - 2) % second_mod) + 1,
        ),
        _Branch(
            guard=lambda i, k: low + 1 <= i <= m and i + k - 2 >= m,
            color=lambda i, k: ((i + k - 2) % m) + 1,
        ),
    ]


def _case_three_odd_branches(m: int) -> list[_Branch]:
    low = m // 2
    return [
        _Branch(
            guard=lambda i, k: 1 <= i <= low - 1,
            color=lambda i, k: ((i + k - 2) % low) + 1,
        ),
        _Branch(
            guard=lambda i, k: low <= i <= m and i + k - 1 <= m,
            color=lambda i, k: ((i + k - 2) % (low + 1)) + 1,
        ),
        _Branch(
            guard=lambda i, k: low + 1 <= i <= m and i + k - 2 >= m,
            color=lambda i, k: ((i + k - 2) % m) + 1,
        ),
    ]


def _case_three_even_branches(m: int, n: int) -> list[_Branch]:
    # the printed half m/2 is read as ⌈m/2⌉ so odd m stays integral
    h = _half_up(m)
    return [
        _Branch(
            guard=lambda i, k: 1 <= i <= h,
            color=lambda i, k: ((i + k - 2) % h) + 1,
        ),
        _Branch(
            guard=lambda i, k: h < i <= m and k <= n - 1 and i + k - 1 < m,
            color=lambda i, k: ((i + k - 1) % h) + 1,
        ),
        _Branch(
            guard=lambda i, k: h < i <= m and k == n and i + k < m,
            color=lambda i, k: ((i + k) % h) + 1,
        ),
        _Branch(
            guard=lambda i, k: h < i <= m and k <= n - 1 and i + k - 1 >= m,
            color=lambda i, k: ((i + k - 1) % m) + 1,
        ),
        _Branch(
            guard=lambda i, k: h < i <= m and k == n and i + k >= m,
            color=lambda i, k: ((i + k) % m) + 1,
        ),
    ]


# Small case-2 instances, one row per (m, n): core colors u_1..u_m, then the
# color set of the flare on each edge (u_i, u_{i+1}), copies in ascending order.
CYCLE_CASE_TWO_TABLES: dict[tuple[int, int], tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = {
    (4, 2): ((1, 2, 3, 4), ((1, 2), (2, 3), (3, 4), (1, 4))),
    (5, 2): ((1, 2, 3, 4, 2), ((1, 2), (2, 3), (3, 4), (2, 4), (1, 2))),
    (6, 2): ((1, 2, 3, 4, 2, 3), ((1, 2), (2, 3), (3, 4), (2, 4), (1, 4), (1, 3))),
    (5, 3): ((1, 2, 3, 4, 5), ((1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5))),
    (6, 3): ((1, 2, 3, 4, 5, 3), ((1, 2, 3), (2, 3, 4), (3, 4, 5), (3, 4, 5), (1, 3, 5), (1, 2, 3))),
    (6, 4): (
        (1, 2, 3, 4, 5, 6),
        ((1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6), (1, 4, 5, 6), (1, 2, 5, 6), (1, 2, 3, 6)),
    ),
}


def color_cycle_rvcl(m: int, n: int) -> VertexColoring:
    """
    Locating rainbow coloring of C_m ⋄ K_n for the theorem branch of (m, n).

    Case 2 with m <= 6 uses the explicit tables; every other case applies its
    piecewise flare formula, first matching branch wins.

    Raises:
        UnsupportedSpecError: m < 3 or n < 2
        FormulaCoverageError: some flare vertex matches no branch
    """
    return _cycle_rvcl(m, n)[0]


def _cycle_rvcl(m: int, n: int) -> tuple[VertexColoring, int]:
    case = cycle_rvcl_case(m, n)
    h = _half_up(m)
    paint = _Paint(edge_corona(build_cycle(m), build_complete(n)))
    logger.debug(f"cycle rvcl C_{m}*K_{n}: case {case}")

    if case == "1":
        palette = n + 1
        for i in range(1, m + 1):
            paint.core(i, i)
        for i in range(1, m + 1):
            for k in range(1, n + 1):
                paint.flare(i, k, ((i + k - 2) % palette) + 1)
        return paint.coloring(), palette

    if case in ("2a", "2b") and m <= 6:
        core, flares = CYCLE_CASE_TWO_TABLES[(m, n)]
        for i, color in enumerate(core, start=1):
            paint.core(i, color)
        for i, colors in enumerate(flares, start=1):
            for k, color in enumerate(colors, start=1):
                paint.flare(i, k, color)
        return paint.coloring(), max(h + 1, n + 2)

    for i in range(1, m + 1):
        paint.core(i, ((i - 1) % h) + 1)
    if case == "2a":
        palette = h + 1
        branches = _case_two_branches(m, h, h + 1)
    elif case == "2b":
        palette = n + 2
        branches = _case_two_branches(m, n + 1, n + 2)
    elif n % 2:
        palette = h
        branches = _case_three_odd_branches(m)
    else:
        palette = h
        branches = _case_three_even_branches(m, n)
    _apply_branches(paint, m, n, branches, f"cycle-rvcl case {case}")
    return paint.coloring(), palette


# ==================== Complete Cores ====================

def color_complete_rvc(m: int, flare: Graph) -> VertexColoring:
    """
    Rainbow coloring of K_m ⋄ H_n with ⌈m/3⌉ colors.

    Core vertex i gets ((i-1) mod ⌈m/3⌉)+1 up to i = 2⌈m/3⌉ and
    i mod 2⌈m/3⌉ beyond; flares get 1.
    """
    if m < 3:
        raise InvalidParameterError(f"complete cores need m >= 3, got {m}")
    t = _third_up(m)
    paint = _Paint(edge_corona(build_complete(m), flare), fill=1)
    for i in range(1, m + 1):
        paint.core(i, ((i - 1) % t) + 1 if i <= 2 * t else i % (2 * t))
    return paint.coloring()


def flare_color_sets(m: int, n: int, palette: int) -> list[tuple[int, ...]]:
    """
    Pairwise distinct size-n color sets, one per edge {i, j} of K_m, each containing i and j.

    Edges are taken in index order and each takes the colexicographically
    first unused candidate, backtracking when a later edge is starved.

    Raises:
        InfeasibleAssignmentError: no such family exists within the palette
    """
    edges = list(combinations(range(1, m + 1), 2))
    candidates = [
        sorted(
            (s for s in combinations(range(1, palette + 1), n) if i in s and j in s),
            key=lambda s: tuple(reversed(s)),
        )
        for i, j in edges
    ]
    chosen: list[tuple[int, ...]] = []
    taken: set[tuple[int, ...]] = set()

    def place(p: int) -> bool:
        if p == len(edges):
            return True
        for candidate in candidates[p]:
            if candidate in taken:
                continue
            chosen.append(candidate)
            taken.add(candidate)
            if place(p + 1):
                return True
            chosen.pop()
            taken.discard(candidate)
        return False

    if not place(0):
        raise InfeasibleAssignmentError(
            f"no {len(edges)} distinct {n}-sets over [1..{palette}] fit the edges of K_{m}"
        )
    return chosen


def color_complete_rvcl(m: int, n: int) -> VertexColoring:
    """
    Locating rainbow coloring of K_m ⋄ K_n for 3 <= m <= n.

    Core vertex i gets color i; the flare on edge {i, j} gets a distinct color
    set containing i and j, assigned to copies in ascending order.

    Raises:
        UnsupportedSpecError: outside 3 <= m <= n
        InfeasibleAssignmentError: the distinct color sets do not fit the palette
    """
    return _complete_rvcl(m, n)[0]


def _complete_rvcl(m: int, n: int) -> tuple[VertexColoring, int]:
    _require(3 <= m <= n, f"complete rvcl needs 3 <= m <= n, got ({m}, {n})", "3<=m<=n")
    palette = predict(FamilySpec.create("complete", m, n), Target.RVCL).value
    paint = _Paint(edge_corona(build_complete(m), build_complete(n)))
    for i in range(1, m + 1):
        paint.core(i, i)
    for p, colors in enumerate(flare_color_sets(m, n, palette), start=1):
        for k, color in enumerate(colors, start=1):
            paint.flare(p, k, color)
    return paint.coloring(), palette


# ==================== Errata ====================

class Erratum(NamedTuple):
    """A printed rule known to produce an invalid coloring on some cells."""
    rule: ConstructionRule
    applies: Callable[[int, int], bool]
    note: str


KNOWN_ERRATA: list[Erratum] = [
    Erratum(
        rule=ConstructionRule.PATH_RVCL,
        applies=lambda m, n: m == 3,
        note="core rule colors u_1, u_2, u_3 alike and never uses the top palette color",
    ),
    Erratum(
        rule=ConstructionRule.CYCLE_RVCL,
        applies=lambda m, n: m >= 7 and n >= 2 and cycle_rvcl_case(m, n) != "1",
        note="flare formulas past six core vertices can repeat a rainbow code, e.g. C_7 ⋄ K_2 collides on (1, 5)",
    ),
]


def erratum_for(rule: ConstructionRule, m: int, n: int) -> Optional[str]:
    """Note of the registered erratum covering (rule, m, n), if any."""
    for erratum in KNOWN_ERRATA:
        if erratum.rule == rule and erratum.applies(m, n):
            return erratum.note
    return None


# ==================== Dispatcher ====================

def generate(rule: ConstructionRule, spec: FamilySpec) -> Construction:
    """
    Run a named construction on a family.

    Args:
        rule: Construction to apply
        spec: Core, flare and orders; must fit the rule

    Returns:
        Construction with the graph, the generated coloring and the declared palette

    Raises:
        UnsupportedSpecError: the family does not fit the rule
    """
    complete_flare = spec.flare == FlareFamily.COMPLETE
    if rule == ConstructionRule.UPPER_GENERAL:
        _require(complete_flare, "upper coloring needs complete flares", "flare=K_n")
        core = build_core(spec.core, spec.m, spec.tree_edges)
        coloring = color_upper_general(core, spec.n)
        palette = spec.m + spec.n + core.edge_count - 1
    elif rule == ConstructionRule.TREE_RVC:
        _require(spec.is_tree_core, f"{spec.core.value} cores are not trees", "core is a tree")
        core = build_core(spec.core, spec.m, spec.tree_edges)
        coloring = color_tree_rvc(core, build_flare(spec.flare, spec.n))
        palette = max(len(cut_vertices(core)), 1)
    elif rule == ConstructionRule.PATH_RVCL:
        _require(spec.core == CoreFamily.PATH and complete_flare, "path-rvcl needs P_m * K_n", "core=P_m, flare=K_n")
        coloring, palette = _path_rvcl(spec.m, spec.n)
    elif rule == ConstructionRule.CYCLE_RVC:
        _require(spec.core == CoreFamily.CYCLE, "cycle-rvc needs a cycle core", "core=C_m")
        coloring = color_cycle_rvc(spec.m, build_flare(spec.flare, spec.n))
        palette = _predict_cycle_rvc(spec).value
    elif rule == ConstructionRule.CYCLE_RVCL:
        _require(spec.core == CoreFamily.CYCLE and complete_flare, "cycle-rvcl needs C_m * K_n", "core=C_m, flare=K_n")
        coloring, palette = _cycle_rvcl(spec.m, spec.n)
    elif rule == ConstructionRule.COMPLETE_RVC:
        _require(spec.core == CoreFamily.COMPLETE, "complete-rvc needs a complete core", "core=K_m")
        coloring = color_complete_rvc(spec.m, build_flare(spec.flare, spec.n))
        palette = _third_up(spec.m)
    else:
        _require(
            spec.core == CoreFamily.COMPLETE and complete_flare,
            "complete-rvcl needs K_m * K_n",
            "core=K_m, flare=K_n",
        )
        coloring, palette = _complete_rvcl(spec.m, spec.n)

    graph = build_corona(spec)
    logger.info(f"{rule.value} on {spec.describe()}: {coloring.k} colors used, {palette} declared")
    return Construction(rule=rule, graph=graph, coloring=coloring, palette=palette)
