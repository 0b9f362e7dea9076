"""Depth bound tests: sl dispatch, both bound families, best-bound
selection, the wedge depth formula, and report serialization."""

import pytest
from hypothesis import given, settings, strategies as st

from polydepth.abelian import from_cyclic_factors, sl_abelian
from polydepth.catalog import catalog_abelian_factors, catalog_group, catalog_names, cyclic
from polydepth.depth import (
    GENERAL_ASSUMPTIONS,
    TWO_DIM_ASSUMPTIONS,
    DepthBoundReport,
    NoBoundApplicable,
    WedgeDepthResult,
    best_bound,
    bound_2dim,
    bound_general,
    render_report,
    render_subwedge,
    report_to_json,
    sl_of,
    wedge_exact_depth,
)
from polydepth.errors import (
    CdNotFinite,
    DimensionNotTwo,
    NotFinitelyGenerated,
    OrderExceedsCap,
)
from polydepth.finitegroup import n1
from polydepth.intlinalg import IntMatrix
from polydepth.pi1 import (
    ElementaryAmenable,
    FgAbelian,
    Finite,
    Free,
    Trivial,
    free,
)
from polydepth.topology import (
    EXAMPLE_COMPLEXES,
    ChainComplex,
    Explicit,
    Sphere,
    product,
    wedge,
)

S1, S2, S3, S5 = Sphere(1), Sphere(2), Sphere(3), Sphere(5)

DISC = ChainComplex(
    dim=2,
    boundary=(IntMatrix.from_rows([[0]]), IntMatrix.from_rows([[1]])),
    cells=(1, 1, 1),
)


class TestSlOf:
    def test_trivial(self):
        assert sl_of(Trivial()) == 0

    def test_free_rank(self):
        assert sl_of(Free(2)) == 2
        assert sl_of(Free(7)) == 7

    def test_elementary_amenable_hirsch(self):
        assert sl_of(ElementaryAmenable(hirsch=3, cd_finite=True)) == 3
        with pytest.raises(CdNotFinite):
            sl_of(ElementaryAmenable(hirsch=3, cd_finite=False))

    def test_finite_dispatches_to_series_length(self):
        assert sl_of(Finite(catalog_group("S3"))) == 2
        assert sl_of(Finite(catalog_group("Q8"))) == 1
        assert sl_of(Finite(catalog_group("Z6"))) == 2

    def test_finite_respects_cap(self):
        with pytest.raises(OrderExceedsCap):
            sl_of(Finite(cyclic(33)))

    def test_abelian_counts_primary_summands(self):
        assert sl_of(FgAbelian(from_cyclic_factors(2, [6]))) == 4

    @pytest.mark.parametrize(
        "name",
        [
            n
            for n in catalog_names()
            if catalog_abelian_factors(n) is not None
            and catalog_group(n).order <= 16
        ],
    )
    def test_abelian_bridge(self, name):
        # the same group through both descriptors gives the same length
        factors = catalog_abelian_factors(name)
        via_abelian = sl_abelian(from_cyclic_factors(0, list(factors)))
        via_table = n1(catalog_group(name)).length
        assert via_abelian == via_table


class TestBoundGeneral:
    def test_wedge_of_higher_spheres(self):
        report = bound_general(wedge(S2, S2, S3))
        assert report.bound == 3
        assert report.sl_pi1 == 0
        assert report.per_degree == {2: 2, 3: 1}
        assert report.applied_rule == "Cor-simply"
        assert report.assumptions_used == GENERAL_ASSUMPTIONS

    def test_circle_cross_sphere(self):
        report = bound_general(product(S1, S2))
        assert report.bound == 2
        assert report.sl_pi1 == 1
        assert report.per_degree == {2: 1, 3: 0}
        assert report.applied_rule == "Cor-abelian"

    def test_single_sphere(self):
        assert bound_general(S5).bound == 1
        assert bound_general(S5).per_degree == {2: 0, 3: 0, 4: 0, 5: 1}

    def test_circle_alone_is_free_rule(self):
        report = bound_general(S1)
        assert report.applied_rule == "Cor-free" and report.bound == 1

    def test_torus_uses_contractible_cover(self):
        report = bound_general(product(S1, S1))
        assert report.bound == 2
        assert report.per_degree == {2: 0}

    def test_not_fg_cover_is_inapplicable(self):
        with pytest.raises(NotFinitelyGenerated) as err:
            bound_general(wedge(S1, S2))
        assert err.value.degree == 2

    def test_finite_pi1_with_supplied_cover(self):
        rp2 = Explicit(
            EXAMPLE_COMPLEXES["projective-plane"],
            Finite(catalog_group("Z2")),
            cover=EXAMPLE_COMPLEXES["sphere2"],
        )
        report = bound_general(rp2)
        assert report.applied_rule == "Cor-finite"
        assert report.bound == 1 + 1  # sl(Z2) = 1, H_2(S^2) one summand

    def test_amenable_pi1(self):
        klein = Explicit(
            EXAMPLE_COMPLEXES["klein-bottle"],
            ElementaryAmenable(hirsch=2, cd_finite=True),
            cover=EXAMPLE_COMPLEXES["point"],
        )
        report = bound_general(klein)
        assert report.applied_rule == "Cor-amenable"
        assert report.bound == 2


class TestBound2Dim:
    def test_wedge_with_circle(self):
        report = bound_2dim(wedge(S1, S2))
        assert report.bound == 2
        assert report.applied_rule == "Cor-free-2dim"
        assert report.per_degree == {2: 1}
        assert report.assumptions_used == TWO_DIM_ASSUMPTIONS

    def test_two_circles_one_sphere(self):
        report = bound_2dim(wedge(S1, S1, S2))
        assert report.bound == 3 and report.sl_pi1 == 2

    def test_contractible_disc(self):
        report = bound_2dim(Explicit(DISC, Trivial()))
        assert report.bound == 0
        assert report.applied_rule == "Thm4.8"

    def test_torus(self):
        report = bound_2dim(product(S1, S1))
        assert report.bound == 3
        assert report.applied_rule == "Cor-abelian-2dim"

    def test_klein_bottle_amenable(self):
        klein = Explicit(
            EXAMPLE_COMPLEXES["klein-bottle"],
            ElementaryAmenable(hirsch=2, cd_finite=True),
        )
        report = bound_2dim(klein)
        assert report.bound == 2
        assert report.applied_rule == "Cor-amenable-2dim"

    def test_wrong_dimension_rejected(self):
        with pytest.raises(DimensionNotTwo):
            bound_2dim(S3)
        with pytest.raises(DimensionNotTwo):
            bound_2dim(wedge(S2, S3))

    def test_agrees_with_general_when_simply_connected(self):
        for space in [S2, wedge(S2, S2), Explicit(EXAMPLE_COMPLEXES["sphere2"], Trivial())]:
            assert bound_2dim(space).bound == bound_general(space).bound


class TestBestBound:
    def test_prefers_2dim_when_general_dies(self):
        report = best_bound(wedge(S1, S2))
        assert isinstance(report, DepthBoundReport)
        assert report.applied_rule == "Cor-free-2dim"
        assert report.bound == 2
        assert report.exact_depth == 2

    def test_sphere_is_simply_connected_rule(self):
        report = best_bound(S2)
        assert report.applied_rule == "Cor-simply" and report.bound == 1

    def test_torus_picks_smaller_general_bound(self):
        report = best_bound(product(S1, S1))
        assert report.applied_rule == "Cor-abelian"
        assert report.bound == 2
        assert any("2-dim bound 3" in a for a in report.assumptions_used)

    def test_tie_prefers_general_family(self):
        report = best_bound(wedge(S2, S2))
        assert report.applied_rule == "Cor-simply"
        assert report.bound == 2
        assert any("both rules apply" in a for a in report.assumptions_used)

    def test_returned_bound_reproducible_by_named_rule(self):
        spaces = [S2, S5, wedge(S1, S2), product(S1, S2), product(S1, S1), wedge(S2, S3)]
        for space in spaces:
            report = best_bound(space)
            if report.applied_rule.endswith("2dim") or report.applied_rule == "Thm4.8":
                again = bound_2dim(space)
            else:
                again = bound_general(space)
            assert again.bound == report.bound

    def test_no_bound_when_cd_infinite(self):
        space = Explicit(DISC, ElementaryAmenable(hirsch=1, cd_finite=False))
        outcome = best_bound(space)
        assert isinstance(outcome, NoBoundApplicable)
        families = [family for family, _ in outcome.failures]
        assert families == ["Thm4.1", "Thm4.8"]
        assert all("CdNotFinite" in reason for _, reason in outcome.failures)

    def test_exact_depth_attachment(self):
        assert best_bound(wedge(S2, S2, S3)).exact_depth == 3
        assert best_bound(product(S1, S3)).exact_depth == 2
        assert best_bound(product(S1, S3)).provenance is not None
        assert best_bound(product(S2, S3)).exact_depth is None
        assert best_bound(product(S1, S1)).exact_depth is None

    def test_exact_depth_never_exceeds_bound(self):
        for space in [S2, S5, wedge(S1, S2), wedge(S2, S2, S3),
                      product(S1, S2), product(S1, S5)]:
            report = best_bound(space)
            if report.exact_depth is not None:
                assert report.exact_depth <= report.bound

    def test_wedge_of_circles_is_outside_both_rules(self):
        # dim 1 rules out the 2-dim bound and the cover list has no rule for
        # a wedge of circles, so the honest answer is structured failure
        outcome = best_bound(wedge(S1, S1))
        assert isinstance(outcome, NoBoundApplicable)
        reasons = dict(outcome.failures)
        assert "UnsupportedConstruction" in reasons["Thm4.1"]
        assert "DimensionNotTwo" in reasons["Thm4.8"]


class TestWedgeExactDepth:
    def test_pinned_examples(self):
        result = wedge_exact_depth({2: 2, 3: 1})
        assert (result.depth, result.capacity) == (3, 6)
        result = wedge_exact_depth({})
        assert (result.depth, result.capacity) == (0, 1)
        assert result.chain == ((),)
        result = wedge_exact_depth({5: 4})
        assert (result.depth, result.capacity) == (4, 5)

    def test_chain_grows_one_sphere_at_a_time(self):
        result = wedge_exact_depth({2: 2, 3: 1})
        assert result.chain[0] == ()
        assert result.chain[-1] == ((2, 2), (3, 1))
        assert len(result.chain) == result.depth + 1
        for before, after in zip(result.chain, result.chain[1:]):
            size = lambda c: sum(n for _, n in c)
            assert size(after) == size(before) + 1

    def test_render_subwedge(self):
        result = wedge_exact_depth({2: 2, 3: 1})
        assert [render_subwedge(c) for c in result.chain] == [
            "1",
            "S^2",
            "S^2 v S^2",
            "S^2 v S^2 v S^3",
        ]

    def test_validation(self):
        with pytest.raises(ValueError):
            wedge_exact_depth({0: 1})
        with pytest.raises(ValueError):
            wedge_exact_depth({2: 0})

    @settings(max_examples=80, deadline=None)
    @given(
        st.dictionaries(
            st.integers(2, 6), st.integers(1, 3), min_size=1, max_size=3
        )
    )
    def test_sharpness_against_best_bound(self, counts):
        parts = []
        for degree, count in sorted(counts.items()):
            parts.extend([Sphere(degree)] * count)
        result = wedge_exact_depth(counts)
        report = best_bound(wedge(*parts)) if len(parts) > 1 else best_bound(parts[0])
        assert report.bound == result.depth
        assert report.exact_depth == result.depth
        capacity = 1
        for count in counts.values():
            capacity *= count + 1
        assert result.capacity == capacity


class TestReports:
    def test_text_first_line_pinned(self):
        text = render_report(best_bound(wedge(S1, S2)))
        assert text.splitlines()[0] == "rule=Cor-free-2dim bound=2"

    def test_json_round_shape(self):
        j = report_to_json(best_bound(product(S1, S2)))
        assert j["rule"] == "Cor-abelian"
        assert j["bound"] == 2
        assert j["per_degree"] == {"2": 1, "3": 0}
        assert j["exact_depth"] == 2
        assert isinstance(j["assumptions"], list)

    def test_json_for_no_bound(self):
        space = Explicit(DISC, ElementaryAmenable(hirsch=1, cd_finite=False))
        j = report_to_json(best_bound(space))
        assert j["rule"] is None and j["bound"] is None
        assert len(j["failures"]) == 2

    def test_render_no_bound(self):
        space = Explicit(DISC, ElementaryAmenable(hirsch=1, cd_finite=False))
        text = render_report(best_bound(space))
        assert text.splitlines()[0] == "no bound applicable"
        assert "Thm4.1 failed" in text and "Thm4.8 failed" in text
