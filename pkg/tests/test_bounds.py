"""Tests for rvc and rvcl bounds."""
import logging

import pytest

from src.bounds import bounds_for, rvc_lower, rvcl_lower, rvcl_upper_corona
from src.exceptions import InvalidParameterError
from src.graph_core import build_corona, build_path
from src.models import BoundKind, BoundRule, FamilySpec, Target

logger = logging.getLogger(__name__)


@pytest.mark.bounds
class TestRvcLower:
    """Tests for the rvc lower bound."""

    @pytest.mark.positive
    def test_path_lower_bound(self, path4):
        """P_4 has two cut vertices and diameter 3."""
        report = rvc_lower(path4)
        logger.info(f"Justifications: {report.justifications}")

        assert report.lower == 2
        assert report.target == Target.RVC
        assert report.upper is None

    @pytest.mark.positive
    def test_cut_rule_reported_on_tie(self):
        """On P_7 the cut and diameter rules both give 5; the cut rule is reported."""
        report = rvc_lower(build_path(7))

        assert report.lower == 5
        assert report.lower_rule == BoundRule.LEMMA_CUT

    @pytest.mark.boundary
    def test_complete_graph_needs_no_color(self, k4):
        assert rvc_lower(k4).lower == 0


@pytest.mark.bounds
class TestRvclLower:
    """Tests for the rvcl lower bound and corona upper bound."""

    @pytest.mark.positive
    def test_two_twin_classes_of_equal_size(self, p3_k2):
        """Two disjoint twin classes of size 3 force four colors."""
        report = rvcl_lower(p3_k2)
        logger.info(f"Bounds: [{report.lower}, {report.upper}] via {report.lower_rule}")

        assert report.lower == 4
        assert report.lower_rule == BoundRule.LEMMA_TWO_CLASSES
        assert report.upper == 6

    @pytest.mark.positive
    def test_cycle_corona_bounds(self, c3_k2):
        """C_3 ⋄ K_2: twin pairs and the n+1 rule give 3; upper is 3+2+3-1."""
        report = rvcl_lower(c3_k2)

        assert report.lower == 3
        assert report.upper == 7
        rules = {j.rule for j in report.justifications}
        assert {BoundRule.LEMMA_TWIN, BoundRule.LEMMA_N_PLUS_1, BoundRule.THM_UPPER_CORONA} <= rules

    @pytest.mark.positive
    def test_complete_graph_is_one_twin_class(self, k4):
        """All of K_4 are twins, so every vertex needs its own color."""
        report = rvcl_lower(k4)

        assert report.lower == 4
        assert report.lower_rule == BoundRule.LEMMA_TWIN
        assert report.upper is None

    @pytest.mark.positive
    def test_upper_rule_is_marked_upper(self, p4_k2):
        report = rvcl_lower(p4_k2)
        uppers = [j for j in report.justifications if j.kind == BoundKind.UPPER]

        assert len(uppers) == 1
        assert uppers[0].value == report.upper == 4 + 2 + 3 - 1

    @pytest.mark.positive
    def test_non_complete_flares_get_no_upper(self):
        """The corona upper bound is stated for complete flares only."""
        g = build_corona(FamilySpec.create("path", 3, 3, flare="path"))

        assert rvcl_lower(g).upper is None

    @pytest.mark.positive
    def test_rvcl_lower_dominates_rvc_lower(self, p4_k2):
        assert rvcl_lower(p4_k2).lower >= rvc_lower(p4_k2).lower

    @pytest.mark.positive
    @pytest.mark.parametrize("target", list(Target))
    def test_bounds_for_dispatches_on_target(self, p3_k2, target):
        assert bounds_for(p3_k2, target).target == target

    @pytest.mark.positive
    def test_corona_upper_formula(self):
        assert rvcl_upper_corona(3, 2, 3) == 7
        assert rvcl_upper_corona(2, 2, 1) == 4

    @pytest.mark.negative
    @pytest.mark.parametrize("m,n,edges", [(1, 2, 1), (3, 1, 2), (3, 2, 0)])
    def test_corona_upper_rejects_degenerate_parameters(self, m, n, edges):
        with pytest.raises(InvalidParameterError):
            rvcl_upper_corona(m, n, edges)

    @pytest.mark.boundary
    def test_p2_corona_is_complete_graph_bound(self):
        """P_2 ⋄ K_2 is K_4; the twin rule alone gives 4 and the upper bound agrees."""
        report = rvcl_lower(build_corona(FamilySpec.create("path", 2, 2)))

        assert report.lower == 4
        assert report.upper == 4
