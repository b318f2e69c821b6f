"""Reproduction grids and their CSV / JSON tables."""
import logging
from typing import Optional, Sequence

from src.codec import rows_to_csv, rows_to_document
from src.harness import ReproduceHarness, exit_code
from src.models import ReproduceRow, Target

from .base_service import BaseService

logger = logging.getLogger(__name__)


class ReproduceService(BaseService):
    """
    Service class for reproduction runs.

    Usage:
        lab = RainbowLab()
        rows = lab.reproduce.run("path")
        lab.reproduce.exit_code(rows)
    """

    def run(
        self,
        selector: str,
        m_values: Optional[Sequence[int]] = None,
        n_values: Optional[Sequence[int]] = None,
        force: bool = False,
    ) -> list[ReproduceRow]:
        """
        Evaluate a theorem selector over a grid.

        Args:
            selector: Theorem selector or "all"
            m_values: Core orders (selector default when omitted)
            n_values: Flare orders (selector default when omitted)
            force: Solve cells above the size caps

        Raises:
            InvalidParameterError: unknown selector
        """
        settings = self._lab.settings
        harness = ReproduceHarness(
            budget=self._lab.budget(),
            options=self._lab.search_options(),
            caps={Target.RVCL: settings.max_rvcl_vertices, Target.RVC: settings.max_rvc_vertices},
            force=force,
        )
        rows = harness.run(selector, m_values, n_values)
        logger.info(f"Reproduced {selector}: {len(rows)} rows")
        return rows

    def exit_code(self, rows: Sequence[ReproduceRow]) -> int:
        return exit_code(rows)

    def render(self, rows: Sequence[ReproduceRow], fmt: str = "csv") -> str:
        """Rows as CSV (frozen columns) or JSON (with status, timing and erratum)."""
        if fmt == "csv":
            return rows_to_csv(rows)
        document = rows_to_document(rows)
        self._lab.check_document(document, "ReproduceRows")
        return self._lab.dumps(document)
