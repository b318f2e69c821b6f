"""Tests for theorem predictions and constructive colorings."""
import logging

import pytest

import src.constructions as constructions
from src.constructions import (
    CYCLE_CASE_TWO_TABLES,
    color_complete_rvc,
    color_complete_rvcl,
    color_cycle_rvc,
    color_cycle_rvcl,
    color_path_rvcl,
    color_tree_rvc,
    color_upper_general,
    cycle_rvcl_case,
    erratum_for,
    flare_color_sets,
    generate,
    predict,
)
from src.exceptions import FormulaCoverageError, InfeasibleAssignmentError, UnsupportedSpecError
from src.graph_core import (
    build_complete,
    build_corona,
    build_cycle,
    build_path,
    build_star,
    build_tree,
    edge_corona,
)
from src.models import ConstructionRule, FamilySpec, Target, VertexLabel
from src.rainbow_check import is_locating_rainbow_coloring, is_rainbow_vertex_coloring

logger = logging.getLogger(__name__)


def flare_colors(m: int, n: int, coloring, core="cycle") -> list[tuple[int, ...]]:
    """Colors of each flare copy in copy order."""
    g = build_corona(FamilySpec.create(core, m, n))
    edges = g.vertex_count - m
    return [
        tuple(coloring.color_of(g.vertex_id(VertexLabel.flare(i, k))) for k in range(1, n + 1))
        for i in range(1, edges // n + 1)
    ]


@pytest.mark.constructions
class TestPredict:
    """Tests for theorem-predicted values and branches."""

    @pytest.mark.positive
    @pytest.mark.parametrize("m,n,value,branch", [
        (3, 2, 3, "m=3 or n>=m-1"),
        (5, 4, 5, "m=3 or n>=m-1"),
        (5, 2, 4, "m>=4, ceil(m/2)-1<=n<m-1"),
        (7, 3, 5, "m>=4, ceil(m/2)-1<=n<m-1"),
        (9, 2, 5, "m>=5, n<=ceil(m/2)-2"),
    ])
    def test_cycle_rvcl(self, m, n, value, branch):
        prediction = predict(FamilySpec.create("cycle", m, n), Target.RVCL)
        logger.info(f"C_{m} * K_{n}: {prediction.value} via {prediction.branch}")

        assert prediction.value == value
        assert prediction.branch == branch

    @pytest.mark.positive
    @pytest.mark.parametrize("m,n,expected", [(3, 2, "1"), (4, 3, "1"), (7, 3, "2a"), (6, 3, "2b"), (9, 3, "3")])
    def test_cycle_rvcl_case(self, m, n, expected):
        assert cycle_rvcl_case(m, n) == expected

    @pytest.mark.positive
    @pytest.mark.parametrize("m,value,branch", [(3, 1, "m=3"), (4, 2, "m>=4"), (7, 4, "m>=4")])
    def test_cycle_rvc(self, m, value, branch):
        prediction = predict(FamilySpec.create("cycle", m, 2), Target.RVC)
        assert (prediction.value, prediction.branch) == (value, branch)

    @pytest.mark.positive
    @pytest.mark.parametrize("m,n,value,branch", [
        (3, 4, 5, "n>=|E(K_m)|-1"),
        (3, 3, 4, "n>=|E(K_m)|-1"),
        (4, 4, 6, "n<|E(K_m)|-1"),
    ])
    def test_complete_rvcl(self, m, n, value, branch):
        prediction = predict(FamilySpec.create("complete", m, n), Target.RVCL)
        assert (prediction.value, prediction.branch) == (value, branch)

    @pytest.mark.positive
    @pytest.mark.parametrize("m,value", [(3, 1), (4, 2), (6, 2), (7, 3)])
    def test_complete_rvc(self, m, value):
        assert predict(FamilySpec.create("complete", m, 2), Target.RVC).value == value

    @pytest.mark.positive
    def test_path_rvcl_uses_core_rvc(self):
        """rvcl(P_m ⋄ K_n) = max{rvc(P_m), n+2}."""
        assert predict(FamilySpec.create("path", 3, 2), Target.RVCL).value == 4
        assert predict(FamilySpec.create("path", 7, 2), Target.RVCL).value == 5

    @pytest.mark.positive
    def test_tree_rvc_equals_core_rvc(self):
        prediction = predict(FamilySpec.create("star", 5, 3), Target.RVC)
        assert (prediction.value, prediction.branch) == (1, "rvc(T_m)")

    @pytest.mark.negative
    def test_complete_rvcl_needs_m_at_most_n(self):
        """K_3 ⋄ K_2 is outside the complete-core theorem."""
        with pytest.raises(UnsupportedSpecError) as exc_info:
            predict(FamilySpec.create("complete", 3, 2), Target.RVCL)

        assert exc_info.value.condition == "3<=m<=n"

    @pytest.mark.negative
    def test_star_rvcl_has_no_theorem(self):
        with pytest.raises(UnsupportedSpecError):
            predict(FamilySpec.create("star", 4, 2), Target.RVCL)

    @pytest.mark.negative
    def test_cycle_rvcl_needs_complete_flares(self):
        with pytest.raises(UnsupportedSpecError):
            predict(FamilySpec.create("cycle", 5, 3, flare="path"), Target.RVCL)


@pytest.mark.constructions
class TestGenericColorings:
    """Tests for the general upper coloring and tree rvc coloring."""

    @pytest.mark.positive
    @pytest.mark.parametrize("core,colors", [(build_path(2), 4), (build_path(3), 6), (build_cycle(3), 7)])
    def test_upper_coloring_is_locating_rainbow(self, core, colors):
        """m + n + |E| - 1 colors always suffice."""
        coloring = color_upper_general(core, 2)
        g = edge_corona(core, build_complete(2))

        assert coloring.k == colors
        assert is_locating_rainbow_coloring(g, coloring).passed

    @pytest.mark.positive
    @pytest.mark.parametrize("core,cuts", [(build_star(5), 1), (build_path(4), 2), (build_tree([(1, 2), (2, 3), (2, 4), (4, 5)]), 2)])
    def test_tree_coloring_colors_cut_vertices(self, core, cuts):
        """Cut vertices get distinct colors; everything else shares color 1."""
        flare = build_complete(3)
        coloring = color_tree_rvc(core, flare)

        assert coloring.k == cuts
        assert is_rainbow_vertex_coloring(edge_corona(core, flare), coloring).rainbow_ok

    @pytest.mark.boundary
    def test_tree_coloring_of_single_edge(self):
        coloring = color_tree_rvc(build_path(2), build_complete(2))
        assert coloring.k == 1


@pytest.mark.constructions
class TestPathColoring:
    """Tests for the path-core locating rainbow coloring."""

    @pytest.mark.positive
    def test_single_edge_path_is_all_distinct(self):
        coloring = color_path_rvcl(2, 3)
        assert coloring.k == 5

    @pytest.mark.positive
    @pytest.mark.parametrize("m,n", [(4, 2), (4, 3)])
    def test_valid_beyond_three_core_vertices(self, m, n):
        coloring = color_path_rvcl(m, n)
        g = build_corona(FamilySpec.create("path", m, n))

        assert coloring.k == max(m - 2, n + 2)
        assert is_locating_rainbow_coloring(g, coloring).passed

    @pytest.mark.negative
    def test_three_vertex_core_misses_a_color(self):
        """The printed rule leaves the top palette color unused on P_3."""
        construction = generate(ConstructionRule.PATH_RVCL, FamilySpec.create("path", 3, 2))
        logger.info(f"Colors used {construction.coloring.k}, declared {construction.palette}")

        assert construction.palette == 4
        assert construction.coloring.k == 3
        assert not construction.uses_declared_palette
        assert erratum_for(ConstructionRule.PATH_RVCL, 3, 2) is not None
        assert erratum_for(ConstructionRule.PATH_RVCL, 4, 2) is None


@pytest.mark.constructions
class TestCycleColorings:
    """Tests for cycle-core colorings."""

    @pytest.mark.positive
    @pytest.mark.parametrize("m,colors", [(3, 1), (4, 2), (6, 3), (7, 4)])
    def test_rvc_coloring(self, m, colors):
        flare = build_complete(2)
        coloring = color_cycle_rvc(m, flare)

        assert coloring.k == colors
        assert is_rainbow_vertex_coloring(edge_corona(build_cycle(m), flare), coloring).rainbow_ok

    @pytest.mark.positive
    @pytest.mark.parametrize("m,n", [(3, 2), (3, 3), (4, 3), (5, 2)])
    def test_rvcl_coloring_is_valid(self, m, n):
        coloring = color_cycle_rvcl(m, n)
        g = build_corona(FamilySpec.create("cycle", m, n))
        expected = predict(FamilySpec.create("cycle", m, n), Target.RVCL).value

        assert coloring.k == expected
        assert is_locating_rainbow_coloring(g, coloring).passed

    @pytest.mark.positive
    def test_case_one_flares_rotate(self):
        """Case 1 on C_3 ⋄ K_2: copy k of flare i gets ((i+k-2) mod 3)+1."""
        coloring = color_cycle_rvcl(3, 2)

        assert coloring.colors[:3] == (1, 2, 3)
        assert flare_colors(3, 2, coloring) == [(1, 2), (2, 3), (3, 1)]

    @pytest.mark.positive
    def test_case_two_tables_are_used_for_small_cycles(self):
        coloring = color_cycle_rvcl(5, 2)
        core, flares = CYCLE_CASE_TWO_TABLES[(5, 2)]

        assert coloring.colors[:5] == core
        assert flare_colors(5, 2, coloring) == list(flares)

    @pytest.mark.positive
    def test_case_two_formula_on_seven_cycle(self):
        """C_7 ⋄ K_3 falls in case 2 with n = ⌈m/2⌉-1; the printed coloring does not locate."""
        coloring = color_cycle_rvcl(7, 3)

        assert coloring.colors[:7] == (1, 2, 3, 4, 1, 2, 3)
        assert flare_colors(7, 3, coloring) == [
            (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 1, 2), (1, 2, 3), (2, 3, 1), (3, 1, 2),
        ]
        assert coloring.k == 5
        assert not is_locating_rainbow_coloring(build_corona(FamilySpec.create("cycle", 7, 3)), coloring).passed
        assert erratum_for(ConstructionRule.CYCLE_RVCL, 7, 3) is not None

    @pytest.mark.positive
    def test_case_three_even_formula(self):
        """C_9 ⋄ K_2 uses ⌈m/2⌉ = 5 colors."""
        coloring = color_cycle_rvcl(9, 2)

        assert coloring.k == 5
        assert coloring.colors[:9] == (1, 2, 3, 4, 5, 1, 2, 3, 4)
        assert flare_colors(9, 2, coloring) == [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 4), (3, 1), (4, 2), (1, 3),
        ]
        assert is_locating_rainbow_coloring(build_corona(FamilySpec.create("cycle", 9, 2)), coloring).passed

    @pytest.mark.negative
    def test_seven_cycle_repeats_a_code(self):
        report = is_locating_rainbow_coloring(build_corona(FamilySpec.create("cycle", 7, 2)), color_cycle_rvcl(7, 2))
        logger.info(f"Collision: {report.failing_pair_locating}")

        assert report.locating_ok is False
        assert report.failing_pair_locating.pair == (1, 5)

    @pytest.mark.negative
    @pytest.mark.parametrize("m,n", [(7, 2), (7, 5), (8, 3), (9, 4), (10, 5), (11, 3)])
    def test_invalid_cells_are_registered(self, m, n):
        construction = generate(ConstructionRule.CYCLE_RVCL, FamilySpec.create("cycle", m, n))

        assert not construction.is_valid(), f"C_{m} ⋄ K_{n} unexpectedly verifies"
        assert erratum_for(ConstructionRule.CYCLE_RVCL, m, n) is not None

    @pytest.mark.boundary
    @pytest.mark.parametrize("m,n", [(5, 2), (6, 4), (5, 4), (6, 5)])
    def test_six_vertex_cores_have_no_erratum(self, m, n):
        assert generate(ConstructionRule.CYCLE_RVCL, FamilySpec.create("cycle", m, n)).is_valid()
        assert erratum_for(ConstructionRule.CYCLE_RVCL, m, n) is None

    @pytest.mark.negative
    def test_uncovered_flare_vertex_is_reported(self, monkeypatch):
        """A formula without a branch for some (i, k) raises with that pair."""
        original = constructions._case_three_odd_branches
        monkeypatch.setattr(constructions, "_case_three_odd_branches", lambda m: original(m)[:1])

        with pytest.raises(FormulaCoverageError) as exc_info:
            color_cycle_rvcl(9, 3)

        assert exc_info.value.pair == (4, 1)

    @pytest.mark.negative
    def test_small_cycles_rejected(self):
        with pytest.raises(UnsupportedSpecError):
            color_cycle_rvcl(3, 1)


@pytest.mark.constructions
class TestCompleteColorings:
    """Tests for complete-core colorings."""

    @pytest.mark.positive
    @pytest.mark.parametrize("m,colors", [(3, 1), (5, 2), (7, 3)])
    def test_rvc_coloring(self, m, colors):
        flare = build_complete(2)
        coloring = color_complete_rvc(m, flare)

        assert coloring.k == colors
        assert is_rainbow_vertex_coloring(edge_corona(build_complete(m), flare), coloring).rainbow_ok

    @pytest.mark.positive
    def test_flare_sets_in_colex_order(self):
        """K_3 ⋄ K_4 takes the colex-first free 4-set per edge."""
        sets = flare_color_sets(3, 4, 5)
        logger.info(f"Flare color sets: {sets}")

        assert sets == [(1, 2, 3, 4), (1, 2, 3, 5), (2, 3, 4, 5)]

    @pytest.mark.positive
    @pytest.mark.parametrize("m,n", [(3, 3), (3, 4)])
    def test_rvcl_coloring_is_valid(self, m, n):
        coloring = color_complete_rvcl(m, n)
        g = build_corona(FamilySpec.create("complete", m, n))

        assert coloring.k == n + 1
        assert is_locating_rainbow_coloring(g, coloring).passed

    @pytest.mark.positive
    def test_sets_are_distinct_and_contain_endpoints(self):
        sets = flare_color_sets(4, 4, 6)
        edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]

        assert len(set(sets)) == len(sets) == 6
        for (i, j), colors in zip(edges, sets):
            assert i in colors and j in colors, f"Set {colors} misses an endpoint of ({i}, {j})"

    @pytest.mark.negative
    def test_too_small_palette_is_infeasible(self):
        """Only five 4-sets exist over five colors, K_4 has six edges."""
        with pytest.raises(InfeasibleAssignmentError):
            flare_color_sets(4, 4, 5)

    @pytest.mark.negative
    def test_m_above_n_rejected(self):
        with pytest.raises(UnsupportedSpecError):
            color_complete_rvcl(3, 2)


@pytest.mark.constructions
class TestGenerate:
    """Tests for the construction dispatcher."""

    @pytest.mark.positive
    @pytest.mark.parametrize("rule,core,m,n", [
        (ConstructionRule.UPPER_GENERAL, "cycle", 4, 2),
        (ConstructionRule.TREE_RVC, "path", 5, 2),
        (ConstructionRule.CYCLE_RVC, "cycle", 5, 3),
        (ConstructionRule.CYCLE_RVCL, "cycle", 4, 3),
        (ConstructionRule.COMPLETE_RVC, "complete", 4, 2),
        (ConstructionRule.COMPLETE_RVCL, "complete", 3, 4),
    ])
    def test_generated_colorings_verify(self, rule, core, m, n):
        construction = generate(rule, FamilySpec.create(core, m, n))
        if rule.target == Target.RVC:
            report = is_rainbow_vertex_coloring(construction.graph, construction.coloring)
        else:
            report = is_locating_rainbow_coloring(construction.graph, construction.coloring)

        assert report.passed, f"{rule.value} on {core}:{m} * K_{n} failed: {report}"
        assert construction.uses_declared_palette

    @pytest.mark.negative
    def test_rule_and_family_must_fit(self):
        with pytest.raises(UnsupportedSpecError):
            generate(ConstructionRule.PATH_RVCL, FamilySpec.create("cycle", 4, 2))

    @pytest.mark.negative
    def test_tree_rule_rejects_cycles(self):
        with pytest.raises(UnsupportedSpecError):
            generate(ConstructionRule.TREE_RVC, FamilySpec.create("cycle", 4, 2))
