"""RainbowLab client that aggregates all operation services."""
import logging
from typing import Any, Optional

from config.settings import Settings, get_current_settings
from src.codec import dumps
from src.models import Budget, SearchOptions
from src.schema_validator import DocumentSchemaValidator, get_schema_validator

logger = logging.getLogger(__name__)


class RainbowLab:
    """
    Entry point aggregating the graph, verify, solve, construction and
    reproduce services under one set of settings.

    Usage:
        lab = RainbowLab()

        g = lab.graph.construct(FamilySpec.create("path", 3, 2))
        result = lab.solve.exact(g, Target.RVCL)
        report = lab.verify.check(g, result.witness)

        rows = lab.reproduce.run("cycle-rvcl")
        print(lab.reproduce.render(rows, "csv"))
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        validate_documents: bool = True,
    ):
        """
        Initialize the lab.

        Args:
            settings: Settings to use (current settings if not provided)
            validate_documents: Whether documents are checked against the schema
        """
        self.settings = settings or get_current_settings()
        self.validate_documents = validate_documents

        self._schema_validator: Optional[DocumentSchemaValidator] = None
        if validate_documents:
            self._schema_validator = get_schema_validator()

        # Import here to avoid circular imports
        from src.services import (
            ConstructionService,
            GraphService,
            ReproduceService,
            SolveService,
            VerifyService,
        )

        self.graph = GraphService(self)
        self.verify = VerifyService(self)
        self.solve = SolveService(self)
        self.construction = ConstructionService(self)
        self.reproduce = ReproduceService(self)

        logger.debug(f"RainbowLab initialized with environment: {self.settings.env_name}")

    # ==================== Settings Views ====================

    def budget(self) -> Budget:
        return Budget(nodes=self.settings.budget_nodes, seconds=self.settings.budget_seconds)

    def search_options(self) -> SearchOptions:
        return SearchOptions(
            twin_pruning=self.settings.twin_pruning,
            partial_rainbow_pruning=self.settings.partial_rainbow_pruning,
            settled_code_pruning=self.settings.settled_code_pruning,
            workers=self.settings.workers,
        )

    # ==================== Documents ====================

    def check_document(self, document: Any, name: str) -> None:
        """
        Validate a document against its schema definition when validation is on.

        Raises:
            DocumentError: the document does not match
        """
        if self._schema_validator is not None:
            self._schema_validator.require_valid(document, name)

    @staticmethod
    def dumps(document: Any) -> str:
        return dumps(document)
