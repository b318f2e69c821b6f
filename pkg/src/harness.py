"""Reproduction grid: theorem predictions against constructions and exact values."""
import logging
import time
from math import ceil
from typing import Iterable, NamedTuple, Optional, Sequence

from src.bounds import rvcl_lower, rvcl_upper_corona
from src.constructions import erratum_for, generate, predict
from src.exceptions import FormulaCoverageError, InfeasibleAssignmentError, InvalidParameterError, UnsupportedSpecError
from src.graph_core import build_corona
from src.models import (
    Agreement,
    Budget,
    ConstructionRule,
    FamilySpec,
    Graph,
    PredictedValue,
    ReproduceRow,
    SearchOptions,
    SolveResult,
    SolveStatus,
    Target,
)
from src.solver import solve_exact

logger = logging.getLogger(__name__)


class Selector(NamedTuple):
    """Theorem selector with its default grid."""
    name: str
    m_values: tuple[int, ...]
    n_values: tuple[int, ...]


SELECTORS: dict[str, Selector] = {
    s.name: s
    for s in (
        Selector("path", tuple(range(2, 5)), (2, 3)),
        Selector("tree-rvc", tuple(range(2, 6)), (2, 3)),
        Selector("upper-corona", tuple(range(2, 5)), (2, 3)),
        Selector("cycle-rvc", tuple(range(3, 8)), (2,)),
        Selector("cycle-rvcl", tuple(range(3, 7)), (2, 3)),
        Selector("complete-rvc", (3, 4), (2, 3)),
        Selector("complete-rvcl", (3,), (3, 4)),
        Selector("open-problem", tuple(range(4, 7)), (2, 3)),
    )
}

ALL_SELECTORS = "all"

SKIPPED_SIZE = "skipped(size)"
SKIPPED_BUDGET = "skipped(budget)"


class Cell(NamedTuple):
    """One grid cell before evaluation."""
    family: str
    spec: FamilySpec
    target: Target
    rule: Optional[ConstructionRule]
    observe_only: bool = False


def selector_names() -> list[str]:
    return [*SELECTORS, ALL_SELECTORS]


def _open_range(m: int, n: int) -> bool:
    h = ceil(m / 2)
    return m >= 4 and h - 1 <= n < m - 1


def cells_for(selector: str, m_values: Iterable[int], n_values: Iterable[int]) -> list[Cell]:
    """
    Grid cells of one selector; cells outside the theorem domain are left out.

    Raises:
        InvalidParameterError: unknown selector
    """
    if selector not in SELECTORS:
        raise InvalidParameterError(f"unknown theorem selector {selector!r}; choose from {selector_names()}")

    cells: list[Cell] = []
    for m in m_values:
        for n in n_values:
            if n < 2:
                continue
            if selector == "path":
                cells.append(Cell("path", FamilySpec.create("path", m, n), Target.RVCL, ConstructionRule.PATH_RVCL))
            elif selector == "tree-rvc":
                cells.append(Cell("star", FamilySpec.create("star", m, n), Target.RVC, ConstructionRule.TREE_RVC))
            elif selector == "upper-corona":
                for core in ("path", "cycle"):
                    if core == "cycle" and m < 3:
                        continue
                    cells.append(
                        Cell(f"upper:{core}", FamilySpec.create(core, m, n), Target.RVCL, ConstructionRule.UPPER_GENERAL)
                    )
            elif selector == "cycle-rvc" and m >= 3:
                cells.append(Cell("cycle", FamilySpec.create("cycle", m, n), Target.RVC, ConstructionRule.CYCLE_RVC))
            elif selector == "cycle-rvcl" and m >= 3:
                cells.append(Cell("cycle", FamilySpec.create("cycle", m, n), Target.RVCL, ConstructionRule.CYCLE_RVCL))
            elif selector == "complete-rvc" and m >= 3:
                cells.append(
                    Cell("complete", FamilySpec.create("complete", m, n), Target.RVC, ConstructionRule.COMPLETE_RVC)
                )
            elif selector == "complete-rvcl" and 3 <= m <= n:
                cells.append(
                    Cell("complete", FamilySpec.create("complete", m, n), Target.RVCL, ConstructionRule.COMPLETE_RVCL)
                )
            elif selector == "open-problem" and _open_range(m, n):
                for core in ("path", "cycle", "complete", "star"):
                    cells.append(Cell(f"open:{core}", FamilySpec.create(core, m, n), Target.RVCL, None, True))
    return cells


class ReproduceHarness:
    """
    Evaluates grid cells against the solver, memoizing solved graphs per run.

    Args:
        budget: Solver budget per cell
        options: Search options handed to the solver
        caps: Largest vertex count solved per target
        force: Solve cells above the caps anyway
    """

    def __init__(
        self,
        budget: Optional[Budget] = None,
        options: Optional[SearchOptions] = None,
        caps: Optional[dict[Target, int]] = None,
        force: bool = False,
    ):
        self.budget = budget or Budget()
        self.options = options or SearchOptions()
        self.caps = caps or {Target.RVCL: 18, Target.RVC: 30}
        self.force = force
        self._memo: dict[tuple[Graph, Target], SolveResult] = {}

    def exact(self, g: Graph, target: Target) -> Optional[SolveResult]:
        """Solver result for (g, target), or None when g is above the cap."""
        if g.vertex_count > self.caps[target] and not self.force:
            logger.info(f"Skipping {target.value}({g.name}): {g.vertex_count} vertices above cap {self.caps[target]}")
            return None
        key = (g, target)
        if key not in self._memo:
            self._memo[key] = solve_exact(g, target, self.budget, self.options)
        return self._memo[key]

    @staticmethod
    def _prediction(cell: Cell, g: Graph) -> PredictedValue:
        if cell.observe_only:
            candidate = max(ceil(cell.spec.m / 2) + 1, cell.spec.n + 2)
            return PredictedValue(
                target=cell.target,
                lower=candidate,
                upper=rvcl_upper_corona(cell.spec.m, cell.spec.n, _core_edges(g)),
                branch="open: max{ceil(m/2)+1,n+2}",
            )
        if cell.rule == ConstructionRule.UPPER_GENERAL:
            report = rvcl_lower(g)
            return PredictedValue(
                target=cell.target,
                lower=report.lower,
                upper=report.upper,
                branch="bounds-only",
            )
        return predict(cell.spec, cell.target)

    @staticmethod
    def _construction_valid(cell: Cell) -> Optional[bool]:
        if cell.rule is None:
            return None
        try:
            construction = generate(cell.rule, cell.spec)
        except (FormulaCoverageError, InfeasibleAssignmentError) as exc:
            logger.warning(f"{cell.rule.value} on {cell.spec.describe()} failed: {exc}")
            return False
        if not construction.uses_declared_palette:
            logger.warning(
                f"{cell.rule.value} on {cell.spec.describe()} uses {construction.coloring.k} colors, "
                f"declares {construction.palette}"
            )
        return construction.is_valid()

    def evaluate(self, cell: Cell) -> ReproduceRow:
        """Build, predict, construct and solve one cell."""
        started = time.perf_counter()
        g = build_corona(cell.spec)
        predicted = self._prediction(cell, g)
        valid = self._construction_valid(cell)
        result = self.exact(g, cell.target)

        status = None
        if result is None:
            exact: int | str = SKIPPED_SIZE
        elif result.status == SolveStatus.BUDGET_EXHAUSTED:
            exact, status = SKIPPED_BUDGET, result.status.value
        else:
            exact, status = result.value, result.status.value

        if cell.observe_only:
            agreement = Agreement.OBSERVED if isinstance(exact, int) else Agreement.SKIPPED
        elif isinstance(exact, int) and not predicted.admits(exact):
            agreement = Agreement.MISMATCH
        elif valid is False:
            agreement = Agreement.CONSTRUCTION_FAILS
        elif isinstance(exact, int):
            agreement = Agreement.MATCH
        else:
            agreement = Agreement.SKIPPED

        erratum = erratum_for(cell.rule, cell.spec.m, cell.spec.n) if valid is False else None
        row = ReproduceRow(
            family=cell.family,
            m=cell.spec.m,
            n=cell.spec.n,
            target=cell.target,
            predicted=predicted.render(),
            branch=predicted.branch,
            construction_valid=valid,
            exact=exact,
            agreement=agreement,
            status=status,
            elapsed_ms=int((time.perf_counter() - started) * 1000),
            erratum=erratum,
        )
        logger.info(
            f"{row.family} m={row.m} n={row.n} {row.target.value}: predicted {row.predicted}, "
            f"exact {row.exact}, {row.agreement.value}"
        )
        return row

    def run(
        self,
        selector: str,
        m_values: Optional[Sequence[int]] = None,
        n_values: Optional[Sequence[int]] = None,
    ) -> list[ReproduceRow]:
        """
        Evaluate a selector (or ``all``) over a grid, rows sorted by (family, m, n, target).

        Ranges default to each selector's own grid.

        Raises:
            InvalidParameterError: unknown selector
        """
        names = list(SELECTORS) if selector == ALL_SELECTORS else [selector]
        cells: list[Cell] = []
        for name in names:
            if name not in SELECTORS:
                raise InvalidParameterError(f"unknown theorem selector {name!r}; choose from {selector_names()}")
            defaults = SELECTORS[name]
            cells += cells_for(name, m_values or defaults.m_values, n_values or defaults.n_values)

        rows: dict[tuple, ReproduceRow] = {}
        for cell in cells:
            try:
                row = self.evaluate(cell)
            except UnsupportedSpecError as exc:
                logger.warning(f"Leaving out {cell.family} {cell.spec.describe()}: {exc}")
                continue
            rows[row.sort_key] = row
        return sorted(rows.values(), key=lambda r: r.sort_key)


def _core_edges(g: Graph) -> int:
    core = set(g.core_vertices())
    return sum(1 for u, v in g.edges if u in core and v in core)


def exit_code(rows: Sequence[ReproduceRow]) -> int:
    """0 when no row blocks, 1 otherwise."""
    blocking = [row for row in rows if row.blocking]
    for row in blocking:
        logger.error(f"{row.family} m={row.m} n={row.n} {row.target.value}: {row.agreement.value}")
    return 1 if blocking else 0
