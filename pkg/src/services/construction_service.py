"""Theorem predictions and constructive colorings."""
import logging

from src.codec import prediction_to_document
from src.constructions import Construction, erratum_for, generate, predict
from src.models import ConstructionRule, FamilySpec, PredictedValue, Target

from .base_service import BaseService

logger = logging.getLogger(__name__)


class ConstructionService(BaseService):
    """
    Service class for constructions.

    Usage:
        lab = RainbowLab()
        built = lab.construction.color(ConstructionRule.CYCLE_RVCL, FamilySpec.create("cycle", 5, 2))
        lab.verify.check(built.graph, built.coloring)
    """

    def color(self, rule: ConstructionRule, spec: FamilySpec) -> Construction:
        """
        Run a named construction.

        Raises:
            UnsupportedSpecError: the family does not fit the rule
            FormulaCoverageError: a printed formula leaves a vertex uncolored
            InfeasibleAssignmentError: distinct flare color sets do not fit the palette
        """
        built = generate(rule, spec)
        if built.is_valid():
            return built
        note = erratum_for(rule, spec.m, spec.n)
        if note:
            logger.warning(f"{rule.value} on {spec.describe()} is a registered erratum: {note}")
        else:
            logger.warning(f"{rule.value} on {spec.describe()} produced an invalid coloring")
        return built

    def predict(self, spec: FamilySpec, target: Target) -> PredictedValue:
        """
        Theorem value for a family.

        Raises:
            UnsupportedSpecError: no theorem covers (spec, target)
        """
        return predict(spec, target)

    def render_prediction(self, prediction: PredictedValue) -> str:
        document = prediction_to_document(prediction)
        self._lab.check_document(document, "Prediction")
        return self._lab.dumps(document)
