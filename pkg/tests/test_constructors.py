"""Tests for the constructive decomposition dichotomies and ball covers."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radialdec.constructors import (
    Decomposed,
    DecomposeOutcome,
    Obstructed,
    ball_decomposition,
    decompose_cycle,
    decompose_path,
    decompose_star,
)
from radialdec.decomposition import (
    is_cycle_graph,
    is_path_graph,
    is_subdivided_star,
    radial_width,
    verify,
)
from radialdec.errors import InputError
from radialdec.generators import (
    claw,
    cycle_graph,
    grid_graph,
    path_graph,
    subdivide,
    wrench,
)
from radialdec.graph import Graph, ball, part_radius
from radialdec.obstructions import verify_witness


def assert_decomposed(
    g: Graph, outcome: DecomposeOutcome, bound: int, host_check
) -> Decomposed:
    assert isinstance(outcome, Decomposed)
    assert outcome.claimed_bound == bound
    assert host_check(outcome.dec.graph)
    assert verify(g, outcome.dec).ok
    assert radial_width(g, outcome.dec) <= bound
    return outcome


def assert_obstructed(
    g: Graph, outcome: DecomposeOutcome, pattern: str, min_k: int
) -> Obstructed:
    assert isinstance(outcome, Obstructed)
    w = outcome.witness
    assert w.pattern.name == pattern
    assert w.k >= min_k
    assert verify_witness(g, w).ok
    return outcome


# ---------------------------------------------------------------------------
# the ball-decomposition primitive


class TestBallDecomposition:
    def test_whole_cycle_base_meets_the_bound_exactly(self) -> None:
        g = cycle_graph(8)
        dec, covered = ball_decomposition(g, range(8), 1)
        assert covered == frozenset(range(8))
        assert is_cycle_graph(dec.graph)
        assert verify(g, dec, within=covered).ok
        # c = 1, so the bound (c+1)r + ceil(c/2) = 3 and a bag spanning a
        # seven-vertex arc attains it.
        assert max(part_radius(g, b) for b in dec.bags) == 3
        assert max(len(b) for b in dec.bags) == 7

    def test_row_of_a_grid_covers_its_neighbourhood(self) -> None:
        g = grid_graph(4, 4)
        dec, covered = ball_decomposition(g, [0, 1, 2, 3], 1)
        assert covered == ball(g, {0, 1, 2, 3}, 1) == frozenset(range(8))
        assert dec.graph.n == 4
        assert sorted(dec.bags[0]) == [0, 1, 2, 3, 4, 5, 6]
        assert sorted(dec.bags[3]) == [0, 1, 2, 3, 5, 6, 7]

    def test_radius_zero_keeps_the_base(self) -> None:
        g = grid_graph(3, 3)
        dec, covered = ball_decomposition(g, [3, 4, 5], 0)
        assert covered == frozenset({3, 4, 5})
        assert verify(g, dec, within=covered).ok

    def test_empty_base_is_rejected(self) -> None:
        with pytest.raises(InputError, match="empty"):
            ball_decomposition(cycle_graph(6), [], 1)

    def test_disconnected_base_is_rejected(self) -> None:
        with pytest.raises(InputError, match="connected"):
            ball_decomposition(cycle_graph(6), [0, 3], 1)

    def test_bool_radius_is_rejected(self) -> None:
        with pytest.raises(InputError, match="radius"):
            ball_decomposition(cycle_graph(6), [0, 1], True)

    def test_unknown_base_vertex_is_rejected(self) -> None:
        with pytest.raises(InputError, match="9"):
            ball_decomposition(cycle_graph(6), [0, 9], 1)

    @given(n=st.integers(4, 16), r=st.integers(0, 2), start=st.integers(0, 3))
    @settings(max_examples=40, deadline=None)
    def test_arc_bases_verify_and_respect_the_bound(
        self, n: int, r: int, start: int
    ) -> None:
        g = cycle_graph(n)
        arc = [(start + i) % n for i in range(min(n - 1, 5))]
        dec, covered = ball_decomposition(g, arc, r)
        assert verify(g, dec, within=covered).ok
        width = max(part_radius(g, b) for b in dec.bags)
        assert width <= 2 * r + 1  # c = 1 on an arc of a cycle


# ---------------------------------------------------------------------------
# the path-class dichotomy


class TestDecomposePath:
    def test_long_path_decomposes_with_width_one(self) -> None:
        g = path_graph(20)
        out = assert_decomposed(g, decompose_path(g, 0), 2, is_path_graph)
        assert radial_width(g, out.dec) == 1

    def test_single_vertex_has_width_zero(self) -> None:
        g = path_graph(0)
        out = assert_decomposed(g, decompose_path(g, 0), 2, is_path_graph)
        assert radial_width(g, out.dec) == 0

    def test_short_cycle_yields_a_geodesic_triangle(self) -> None:
        g = cycle_graph(9)
        out = assert_obstructed(g, decompose_path(g, 0), "K3", 4 * 0 + 1)
        assert out.witness.k == 2
        assert out.witness.c == 1

    def test_wide_cycle_fits_in_one_ball(self) -> None:
        g = cycle_graph(30)
        out = assert_decomposed(g, decompose_path(g, 1), 20, is_path_graph)
        assert out.dec.graph.n == 1
        assert radial_width(g, out.dec) == 15

    def test_grid_yields_a_claw_at_level_zero(self) -> None:
        g = grid_graph(6, 6)
        out = assert_obstructed(g, decompose_path(g, 0), "K13", 3 * 0)
        assert out.witness.c == 3

    def test_grid_fits_in_one_ball_at_level_one(self) -> None:
        g = grid_graph(6, 6)
        out = assert_decomposed(g, decompose_path(g, 1), 20, is_path_graph)
        assert radial_width(g, out.dec) == 6

    def test_claimed_bound_follows_the_level(self) -> None:
        g = path_graph(4)
        for k in range(4):
            out = decompose_path(g, k)
            assert isinstance(out, Decomposed)
            assert out.claimed_bound == 18 * k + 2


# ---------------------------------------------------------------------------
# the cycle-class dichotomy


class TestDecomposeCycle:
    def test_cycles_decompose_directly(self) -> None:
        for n in (9, 30):
            g = cycle_graph(n)
            out = assert_decomposed(g, decompose_cycle(g, 0), 2, is_cycle_graph)
            assert radial_width(g, out.dec) == 1

    def test_path_decomposition_transfers_onto_a_cycle(self) -> None:
        g = path_graph(5)
        out = assert_decomposed(g, decompose_cycle(g, 0), 2, is_cycle_graph)
        assert out.dec.graph.n == 6

    def test_claw_witnesses_pass_through(self) -> None:
        g = grid_graph(6, 6)
        out = assert_obstructed(g, decompose_cycle(g, 0), "K13", 3 * 0)
        assert out.witness.c == 3

    def test_claimed_bound_follows_the_level(self) -> None:
        g = cycle_graph(12)
        out = decompose_cycle(g, 2)
        assert isinstance(out, Decomposed)
        assert out.claimed_bound == 18 * 2 + 2


# ---------------------------------------------------------------------------
# the star-class dichotomy


class TestDecomposeStar:
    def test_small_grid_fits_in_one_ball(self) -> None:
        g = grid_graph(5, 5)
        out = assert_decomposed(g, decompose_star(g, 0), 14, is_subdivided_star)
        assert out.dec.graph.n == 1
        assert radial_width(g, out.dec) == 4

    def test_subdivided_claw_grows_legs(self) -> None:
        g = subdivide(claw(), 20)
        out = assert_decomposed(g, decompose_star(g, 0), 14, is_subdivided_star)
        assert out.dec.graph.n > 1

    def test_lightly_subdivided_wrench_still_decomposes(self) -> None:
        g = subdivide(wrench(), 4)
        assert_decomposed(g, decompose_star(g, 0), 14, is_subdivided_star)

    def test_heavily_subdivided_wrench_yields_a_wrench(self) -> None:
        g = subdivide(wrench(), 20)
        out = assert_obstructed(g, decompose_star(g, 0), "W", 3 * 0)
        assert out.witness.c == 3

    def test_wrench_witness_scales_with_the_level(self) -> None:
        g = subdivide(wrench(), 30)
        out = assert_obstructed(g, decompose_star(g, 1), "W", 3 * 1)
        assert out.witness.k == 3

    def test_long_cycle_yields_a_geodesic_triangle(self) -> None:
        g = cycle_graph(60)
        out = assert_obstructed(g, decompose_star(g, 0), "K3", 0)
        assert out.witness.k == 19
        assert out.witness.c == 1

    def test_long_cycle_fits_in_one_ball_at_level_one(self) -> None:
        g = cycle_graph(60)
        out = assert_decomposed(g, decompose_star(g, 1), 86, is_subdivided_star)
        assert out.dec.graph.n == 1
        assert radial_width(g, out.dec) == 30

    def test_long_path_uses_the_wide_ball_fallback(self) -> None:
        g = path_graph(70)
        out = assert_decomposed(g, decompose_star(g, 1), 86, is_subdivided_star)
        assert out.dec.graph.n == 71


# ---------------------------------------------------------------------------
# input validation shared by all three builders


@pytest.mark.parametrize(
    "builder", [decompose_path, decompose_cycle, decompose_star]
)
class TestBuilderValidation:
    def test_empty_graph_is_rejected(self, builder) -> None:
        with pytest.raises(InputError, match="empty"):
            builder(Graph(0, ()), 0)

    def test_disconnected_graph_is_rejected(self, builder) -> None:
        with pytest.raises(InputError, match="disconnected"):
            builder(Graph(2, ()), 0)

    @pytest.mark.parametrize("k", [-1, True, 1.5, "2"])
    def test_bad_level_is_rejected(self, builder, k) -> None:
        with pytest.raises(InputError, match="k must be"):
            builder(path_graph(3), k)


# ---------------------------------------------------------------------------
# the dichotomy as a property: every outcome carries its own proof


PATTERNS_BY_BUILDER = {
    decompose_path: {"K3", "K13"},
    decompose_cycle: {"K13"},
    decompose_star: {"K3", "W"},
}

HOST_CHECKS = {
    decompose_path: is_path_graph,
    decompose_cycle: is_cycle_graph,
    decompose_star: is_subdivided_star,
}


def assert_dichotomy(g: Graph, k: int, builder) -> None:
    out = builder(g, k)
    if isinstance(out, Decomposed):
        assert HOST_CHECKS[builder](out.dec.graph)
        assert verify(g, out.dec).ok
        assert radial_width(g, out.dec) <= out.claimed_bound
    else:
        assert out.witness.pattern.name in PATTERNS_BY_BUILDER[builder]
        assert verify_witness(g, out.witness).ok


class TestDichotomyProperty:
    @given(n=st.integers(3, 40), k=st.integers(0, 1))
    @settings(max_examples=30, deadline=None)
    def test_cycles(self, n: int, k: int) -> None:
        g = cycle_graph(n)
        for builder in (decompose_path, decompose_cycle, decompose_star):
            assert_dichotomy(g, k, builder)

    @given(rows=st.integers(1, 5), cols=st.integers(1, 5), k=st.integers(0, 1))
    @settings(max_examples=30, deadline=None)
    def test_grids(self, rows: int, cols: int, k: int) -> None:
        g = grid_graph(rows, cols)
        for builder in (decompose_path, decompose_cycle, decompose_star):
            assert_dichotomy(g, k, builder)

    @given(length=st.integers(1, 25), k=st.integers(0, 1))
    @settings(max_examples=20, deadline=None)
    def test_subdivided_claws_and_wrenches(self, length: int, k: int) -> None:
        for base in (claw(), wrench()):
            g = subdivide(base, length)
            for builder in (decompose_path, decompose_cycle, decompose_star):
                assert_dichotomy(g, k, builder)
