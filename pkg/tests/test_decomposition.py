"""Tests for decompositions: axioms, widths, rebagging, and transfers."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radialdec.decomposition import (
    DECOMPOSITION_CLASSES,
    GraphDecomposition,
    MinorModel,
    center_rebag,
    check_minor_model,
    enlarge_bags,
    format_decomposition,
    is_cycle_graph,
    is_path_graph,
    is_subdivided_star,
    is_tree_graph,
    make_decomposition,
    metrics,
    parse_decomposition,
    radial_width,
    restrict_to_quasi_geodesic,
    transfer_along_minor,
    verify,
)
from radialdec.errors import FormatError, InputError, PreconditionError
from radialdec.generators import cycle_graph, grid_graph, path_graph, star_graph
from radialdec.graph import INFINITY, Graph, graph_radius, part_radius


def path_host(t: int) -> Graph:
    return Graph(t, tuple((i, i + 1) for i in range(t - 1)))


def halves_of_c6() -> GraphDecomposition:
    """A two-bag decomposition of C6 along a two-node host path."""
    return make_decomposition(path_host(2), [(5, 0, 1, 2), (2, 3, 4, 5)])


# ---------------------------------------------------------------------------
# construction and verification


class TestVerify:
    def test_two_overlapping_halves_of_a_cycle(self) -> None:
        g = cycle_graph(6)
        dec = halves_of_c6()
        report = verify(g, dec)
        assert report.ok
        assert radial_width(g, dec) == 2

    def test_missing_vertex_is_reported(self) -> None:
        g = path_graph(2)
        dec = make_decomposition(path_host(1), [(0, 1)])
        report = verify(g, dec)
        assert not report.ok
        assert any("vertex 2" in v for v in report.violations)

    def test_uncovered_edge_is_reported(self) -> None:
        g = cycle_graph(4)
        dec = make_decomposition(path_host(3), [(0, 1), (1, 2), (2, 3)])
        report = verify(g, dec)
        assert not report.ok
        assert any("edge 0-3" in v for v in report.violations)
        assert report.coverage_ok is False

    def test_disconnected_trace_is_reported(self) -> None:
        g = path_graph(4)
        dec = make_decomposition(path_host(3), [(0, 1), (1, 2, 3), (3, 4, 0)])
        report = verify(g, dec)
        assert not report.ok
        assert report.connectivity_ok is False
        assert any("vertex 0" in v for v in report.violations)

    def test_bag_outside_host_raises(self) -> None:
        g = path_graph(2)
        dec = make_decomposition(path_host(1), [(0, 1, 7)])
        with pytest.raises(InputError):
            verify(g, dec)

    def test_bag_count_must_match_host(self) -> None:
        with pytest.raises(InputError):
            make_decomposition(path_host(2), [(0, 1)])

    def test_within_restricts_both_axioms(self) -> None:
        g = cycle_graph(6)
        dec = make_decomposition(path_host(2), [(0, 1, 2), (2, 3, 4)])
        assert not verify(g, dec).ok
        assert verify(g, dec, within=(0, 1, 2, 3, 4)).ok

    def test_empty_graph_single_empty_bag(self) -> None:
        g = Graph(0, ())
        dec = make_decomposition(path_host(1), [()])
        assert verify(g, dec).ok
        assert radial_width(g, dec) == 0


# ---------------------------------------------------------------------------
# widths and metrics


class TestMetrics:
    def test_widths_of_cycle_halves(self) -> None:
        g = cycle_graph(6)
        numbers = metrics(g, halves_of_c6())
        assert numbers.radial_width == 2
        assert numbers.outer_radial_width == 2
        assert numbers.radial_spread == 1  # shared vertices trace both host nodes
        assert numbers.honest is True

    def test_single_bag_width_is_graph_radius(self) -> None:
        g = grid_graph(3, 3)
        dec = make_decomposition(path_host(1), [tuple(g.vertices)])
        assert radial_width(g, dec) == graph_radius(g)

    def test_disconnected_part_has_infinite_width(self) -> None:
        g = path_graph(3)
        dec = make_decomposition(path_host(2), [(0, 2), (0, 1, 2, 3)])
        assert verify(g, dec).ok
        assert radial_width(g, dec) is INFINITY

    def test_dishonest_decomposition(self) -> None:
        g = path_graph(1)
        dec = make_decomposition(path_host(2), [(0, 1), ()])
        assert verify(g, dec).ok
        assert metrics(g, dec).honest is False  # adjacent bags do not intersect

    def test_metrics_raise_on_invalid_decomposition(self) -> None:
        g = path_graph(2)
        dec = make_decomposition(path_host(1), [(0, 1)])
        with pytest.raises(PreconditionError):
            metrics(g, dec)


# ---------------------------------------------------------------------------
# rebagging


class TestRebagging:
    def test_enlarge_bags_covers_new_edges(self) -> None:
        g = cycle_graph(8)
        dec = make_decomposition(
            path_host(2), [(7, 0, 1, 2, 3), (3, 4, 5, 6, 7)]
        )
        assert verify(g, dec).ok
        fat = enlarge_bags(g, dec, 1)
        assert verify(g, fat).ok
        assert fat.bags[0] == frozenset({6, 7, 0, 1, 2, 3, 4})

    def test_center_rebag_bounds_width_by_twice_outer(self) -> None:
        g = grid_graph(4, 4)
        # Bags of two adjacent columns each (row-major numbering).
        column = [tuple(range(c, 16, 4)) for c in range(4)]
        pairs = [column[c] + column[c + 1] for c in range(3)]
        dec = make_decomposition(path_host(3), pairs)
        assert verify(g, dec).ok
        outer = metrics(g, dec).outer_radial_width
        rebagged = center_rebag(g, dec)
        assert verify(g, rebagged).ok
        assert radial_width(g, rebagged) <= 2 * outer

    def test_center_rebag_requires_finite_outer_radius(self) -> None:
        g = Graph(2, ())
        dec = make_decomposition(path_host(1), [(0, 1)])
        with pytest.raises(PreconditionError):
            center_rebag(g, dec)


# ---------------------------------------------------------------------------
# restriction to quasi-geodesic subgraphs


class TestRestriction:
    def test_restrict_cycle_to_arc(self) -> None:
        g = cycle_graph(8)
        dec = halves = make_decomposition(
            path_host(2), [(7, 0, 1, 2, 3), (3, 4, 5, 6, 7)]
        )
        assert verify(g, halves).ok
        r = radial_width(g, dec)
        xs = (0, 1, 2, 3, 4)  # an arc is a geodesic, hence 1-quasi-geodesic
        restricted = restrict_to_quasi_geodesic(g, dec, xs, 1)
        assert verify(g, restricted, within=xs).ok
        assert radial_width(g, restricted, within=xs) <= 3 * 1 * r

    def test_restriction_keeps_host(self) -> None:
        g = cycle_graph(8)
        dec = halves_of_c6_on_c8 = make_decomposition(
            path_host(2), [(7, 0, 1, 2, 3), (3, 4, 5, 6, 7)]
        )
        restricted = restrict_to_quasi_geodesic(g, dec, (0, 1, 2), 1)
        assert restricted.graph == dec.graph


# ---------------------------------------------------------------------------
# minor transfer


class TestMinorTransfer:
    def test_transfer_pads_with_empty_bags(self) -> None:
        g = cycle_graph(6)
        dec = halves_of_c6()
        # The two-node host path is a minor of a four-node path.
        model = MinorModel(host=path_host(4), branch_sets=((0, 1), (2, 3)))
        check_minor_model(dec.graph, model)
        moved = transfer_along_minor(g, dec, model)
        assert moved.graph == model.host
        assert verify(g, moved).ok
        assert radial_width(g, moved) == radial_width(g, dec)
        assert moved.bags[0] == moved.bags[1] == dec.bags[0]

    def test_faithful_model_rejects_extra_edges(self) -> None:
        pattern = Graph(2, ())  # two nonadjacent nodes
        model = MinorModel(host=path_host(2), branch_sets=((0,), (1,)))
        with pytest.raises(InputError):
            check_minor_model(pattern, model, faithful=True)
        check_minor_model(pattern, model, faithful=False)

    def test_branch_sets_must_be_connected(self) -> None:
        model = MinorModel(host=path_host(3), branch_sets=((0, 2), (1,)))
        with pytest.raises(InputError):
            check_minor_model(path_host(2), model)


# ---------------------------------------------------------------------------
# decomposition graph classes


class TestClasses:
    def test_class_predicates(self) -> None:
        assert is_path_graph(path_host(1))
        assert is_path_graph(path_host(4))
        assert not is_path_graph(cycle_graph(4))
        assert is_cycle_graph(cycle_graph(3))
        assert not is_cycle_graph(path_host(3))
        assert is_subdivided_star(star_graph(5))
        assert is_subdivided_star(path_host(4))  # paths count
        assert not is_subdivided_star(two_branch_tree())
        assert is_tree_graph(two_branch_tree())
        assert not is_tree_graph(cycle_graph(5))

    def test_class_table(self) -> None:
        assert set(DECOMPOSITION_CLASSES) == {"path", "cycle", "star", "tree"}
        assert DECOMPOSITION_CLASSES["star"](star_graph(3))
        assert not DECOMPOSITION_CLASSES["cycle"](path_host(2))


def two_branch_tree() -> Graph:
    """A tree with two vertices of degree three (not a subdivided star)."""
    return Graph(6, ((0, 1), (1, 2), (1, 3), (3, 4), (3, 5)))


# ---------------------------------------------------------------------------
# certificate format


class TestCertificateFormat:
    def test_round_trip(self) -> None:
        dec = halves_of_c6()
        assert parse_decomposition(format_decomposition(dec)) == dec

    def test_canonical_text(self) -> None:
        text = format_decomposition(halves_of_c6())
        assert text == (
            "decomposition\n2 1\n0 1\nbag 0: 0 1 2 5\nbag 1: 2 3 4 5\n"
        )

    def test_missing_header_rejected(self) -> None:
        with pytest.raises(FormatError, match="line 1"):
            parse_decomposition("2 1\n0 1\nbag 0: 0\nbag 1: 0\n")

    def test_wrong_bag_count_rejected(self) -> None:
        with pytest.raises(FormatError):
            parse_decomposition("decomposition\n2 1\n0 1\nbag 0: 0\n")

    def test_unsorted_bag_accepted_and_canonicalized(self) -> None:
        dec = parse_decomposition("decomposition\n1 0\nbag 0: 1 0\n")
        assert format_decomposition(dec) == "decomposition\n1 0\nbag 0: 0 1\n"

    @given(st.integers(min_value=3, max_value=9))
    @settings(max_examples=20, deadline=None)
    def test_round_trip_cycle_covers(self, n: int) -> None:
        g = cycle_graph(n)
        bags = [(i, (i + 1) % n) for i in range(n)]
        dec = make_decomposition(cycle_graph(n), bags)
        assert verify(g, dec).ok
        assert parse_decomposition(format_decomposition(dec)) == dec
        assert radial_width(g, dec) == 1
