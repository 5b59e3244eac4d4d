"""Tests for the deterministic example-family generators."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radialdec.decomposition import is_cycle_graph, is_path_graph
from radialdec.errors import InputError
from radialdec.generators import (
    basic,
    claw,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    split_subdivide,
    star_graph,
    subdivide,
    subdivide_with_paths,
    tree_of_wheels,
    triangle,
    wrench,
)
from radialdec.graph import Graph, graph_radius, is_connected


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degree(v) for v in g.vertices)


# ---------------------------------------------------------------------------
# basic families


class TestBasicFamilies:
    def test_path_counts(self) -> None:
        g = path_graph(5)
        assert (g.n, len(g.edges)) == (6, 5)
        assert is_path_graph(g)

    def test_path_zero_is_a_single_vertex(self) -> None:
        g = path_graph(0)
        assert (g.n, g.edges) == (1, ())

    def test_cycle_counts(self) -> None:
        g = cycle_graph(7)
        assert (g.n, len(g.edges)) == (7, 7)
        assert is_cycle_graph(g)

    def test_cycle_below_three_is_rejected(self) -> None:
        with pytest.raises(InputError, match=">= 3"):
            cycle_graph(2)

    def test_complete_edge_count(self) -> None:
        g = complete_graph(6)
        assert len(g.edges) == 15
        assert degree_sequence(g) == [5] * 6

    def test_star_shape(self) -> None:
        g = star_graph(4)
        assert degree_sequence(g) == [1, 1, 1, 1, 4]
        assert g.neighbors(0) == (1, 2, 3, 4)

    def test_grid_is_row_major(self) -> None:
        g = grid_graph(3, 4)
        assert g.n == 12
        assert g.has_edge(0, 1) and g.has_edge(0, 4)
        assert not g.has_edge(3, 4)  # no wrap between rows
        assert len(g.edges) == 3 * 3 + 2 * 4

    def test_two_by_two_grid_is_a_four_cycle(self) -> None:
        assert is_cycle_graph(grid_graph(2, 2))

    def test_triangle_and_claw(self) -> None:
        assert triangle().edges == cycle_graph(3).edges
        assert degree_sequence(claw()) == [1, 1, 1, 3]

    def test_wrench_shape(self) -> None:
        g = wrench()
        assert degree_sequence(g) == [1, 1, 1, 1, 3, 3]
        assert g.has_edge(2, 3)
        assert g.neighbors(2) == (0, 1, 3)
        assert g.neighbors(3) == (2, 4, 5)

    def test_dispatch_matches_the_direct_generators(self) -> None:
        assert basic("path", [4]).edges == path_graph(4).edges
        assert basic("cycle", [5]).edges == cycle_graph(5).edges
        assert basic("complete", [4]).edges == complete_graph(4).edges
        assert basic("star", [3]).edges == star_graph(3).edges
        assert basic("grid", [2, 3]).edges == grid_graph(2, 3).edges
        assert basic("triangle").edges == triangle().edges
        assert basic("claw").edges == claw().edges
        assert basic("wrench").edges == wrench().edges

    def test_dispatch_rejects_unknown_families(self) -> None:
        with pytest.raises(InputError, match="unknown family"):
            basic("torus", [3])

    def test_dispatch_rejects_wrong_arity(self) -> None:
        with pytest.raises(InputError, match="parameter"):
            basic("grid", [3])


# ---------------------------------------------------------------------------
# subdivisions


class TestSubdivide:
    def test_uniform_length_counts(self) -> None:
        g = claw()
        sub = subdivide(g, 4)
        assert sub.n == g.n + 3 * (4 - 1)
        assert len(sub.edges) == 3 * 4

    def test_length_one_is_the_identity(self) -> None:
        g = grid_graph(3, 3)
        sub = subdivide(g, 1)
        assert (sub.n, sub.edges) == (g.n, g.edges)

    def test_paths_run_between_the_original_endpoints(self) -> None:
        g = path_graph(1)
        sub, paths = subdivide_with_paths(g, 3)
        assert paths == {(0, 1): (0, 2, 3, 1)}
        assert sub.n == 4

    def test_per_edge_lengths(self) -> None:
        g = claw()
        sub, paths = subdivide_with_paths(g, {(0, 1): 1, (2, 0): 2, (0, 3): 3})
        assert sub.n == 4 + 0 + 1 + 2
        assert paths[(0, 1)] == (0, 1)
        assert len(paths[(0, 2)]) == 3
        assert len(paths[(0, 3)]) == 4

    def test_inner_vertices_are_fresh_and_ordered(self) -> None:
        g = cycle_graph(3)
        sub, paths = subdivide_with_paths(g, 2)
        # Sorted edge order (0,1) < (0,2) < (1,2); one inner vertex each.
        assert paths == {(0, 1): (0, 3, 1), (0, 2): (0, 4, 2), (1, 2): (1, 5, 2)}
        assert is_cycle_graph(sub)

    def test_non_edge_length_is_rejected(self) -> None:
        with pytest.raises(InputError, match="not an edge"):
            subdivide(claw(), {(1, 2): 1, (0, 1): 1, (0, 2): 1, (0, 3): 1})

    def test_duplicate_length_is_rejected(self) -> None:
        with pytest.raises(InputError, match="twice"):
            subdivide(path_graph(1), {(0, 1): 1, (1, 0): 2})

    def test_missing_length_is_rejected(self) -> None:
        with pytest.raises(InputError, match="no length"):
            subdivide(claw(), {(0, 1): 1})

    def test_non_positive_length_is_rejected(self) -> None:
        with pytest.raises(InputError, match="positive"):
            subdivide(path_graph(1), 0)

    @given(n=st.integers(3, 8), length=st.integers(1, 5))
    @settings(max_examples=30, deadline=None)
    def test_subdividing_a_cycle_gives_the_longer_cycle(
        self, n: int, length: int
    ) -> None:
        sub = subdivide(cycle_graph(n), length)
        assert is_cycle_graph(sub)
        assert sub.n == n * length
        assert graph_radius(sub) == (n * length) // 2


# ---------------------------------------------------------------------------
# trees of wheels


class TestTreeOfWheels:
    def test_depth_zero_is_a_single_wheel(self) -> None:
        g, wheels = tree_of_wheels(6, 0)
        assert (g.n, len(g.edges)) == (7, 12)
        assert set(wheels) == {()}
        assert wheels[()] == wheels[()].__class__(hub=6, rim=(0, 1, 2, 3, 4, 5))
        assert g.neighbors(6) == (0, 1, 2, 3, 4, 5)

    def test_depth_one_glues_one_wheel_per_rim_edge(self) -> None:
        n = 6
        g, wheels = tree_of_wheels(n, 1)
        assert len(wheels) == 1 + n
        assert set(wheels) == {()} | {(i,) for i in range(1, n + 1)}
        # Each child shares exactly its rim edge with the centre: rim slot 0
        # carries the parent's v_i, slot 1 the parent's v_{i-1}.
        centre = wheels[()]
        for i in range(1, n + 1):
            child = wheels[(i,)]
            assert child.rim[0] == centre.rim[i % n]
            assert child.rim[1] == centre.rim[i - 1]
            assert g.has_edge(child.rim[0], child.rim[1])
        # n+1 central vertices plus n-1 fresh vertices per glued wheel.
        assert g.n == (n + 1) + n * (n - 1)

    def test_depth_two_wheel_count(self) -> None:
        n = 4
        g, wheels = tree_of_wheels(n, 2)
        assert len(wheels) == 1 + n + n * (n - 1)
        assert g.n == (n + 1) + (n + n * (n - 1)) * (n - 1)
        assert is_connected(g)

    def test_deeper_wheels_skip_the_shared_edge(self) -> None:
        _, wheels = tree_of_wheels(3, 2)
        assert (1, 1) not in wheels
        assert (1, 2) in wheels and (1, 3) in wheels

    def test_every_wheel_is_a_wheel(self) -> None:
        g, wheels = tree_of_wheels(5, 1)
        for info in wheels.values():
            assert len(info.rim) == 5
            for j in range(5):
                assert g.has_edge(info.rim[j], info.rim[(j + 1) % 5])
                assert g.has_edge(info.hub, info.rim[j])

    def test_small_size_is_rejected(self) -> None:
        with pytest.raises(InputError, match=">= 3"):
            tree_of_wheels(2, 1)

    def test_negative_depth_is_rejected(self) -> None:
        with pytest.raises(InputError, match="depth"):
            tree_of_wheels(6, -1)


# ---------------------------------------------------------------------------
# splitting after subdivision


class TestSplitSubdivide:
    def test_split_degrees_and_counts(self) -> None:
        m = star_graph(4)
        out = split_subdivide(m, 1, 0)
        sub_n = m.n + 4 * (4 * 1 + 1 - 1)
        assert out.n == sub_n + 1
        assert out.degree(out.n - 1) == 3
        assert out.degree(0) == 3
        assert out.has_edge(0, out.n - 1)
        assert is_connected(out)

    def test_split_preserves_maximum_degree(self) -> None:
        m = star_graph(5)
        out = split_subdivide(m, 2, 0)
        assert max(out.degree(v) for v in out.vertices) <= 5
        assert sum(1 for v in out.vertices if out.degree(v) >= 3) == 2

    def test_zero_parameter_is_rejected(self) -> None:
        with pytest.raises(InputError, match="positive"):
            split_subdivide(star_graph(4), 0, 0)

    def test_low_degree_vertex_is_rejected(self) -> None:
        with pytest.raises(InputError, match="degree"):
            split_subdivide(claw(), 1, 0)

    def test_unknown_vertex_is_rejected(self) -> None:
        with pytest.raises(InputError, match="no vertex"):
            split_subdivide(star_graph(4), 1, 99)
