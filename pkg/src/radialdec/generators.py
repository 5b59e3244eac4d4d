"""Deterministic construction of the example families used in tests.

All generators are pure functions of their integer parameters with
documented canonical vertex numberings, so generated instances are
bit-stable across runs.  Randomized test graphs live in the test harness,
not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InputError, InternalInvariantError
from .graph import Graph


# ---------------------------------------------------------------------------
# basic families


def path_graph(n: int) -> Graph:
    """Path with vertices ``0..n`` in order (length ``n``)."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"path length must be a non-negative integer, got {n!r}")
    return Graph(n + 1, [(i, i + 1) for i in range(n)])


def cycle_graph(n: int) -> Graph:
    """Cycle ``0 - 1 - ... - (n-1) - 0``; needs ``n >= 3``."""
    if not isinstance(n, int) or n < 3:
        raise InputError(f"cycle length must be an integer >= 3, got {n!r}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if not isinstance(n, int) or n < 0:
        raise InputError(f"order must be a non-negative integer, got {n!r}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and leaves ``1..leaves``."""
    if not isinstance(leaves, int) or leaves < 0:
        raise InputError(f"leaf count must be a non-negative integer, got {leaves!r}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    """Row-major grid: vertex ``(i, j)`` is ``i*cols + j``."""
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise InputError(f"grid dimensions must be positive integers, got {rows!r}x{cols!r}")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def triangle() -> Graph:
    return cycle_graph(3)


def claw() -> Graph:
    return star_graph(3)


def wrench() -> Graph:
    """Six vertices, five edges; 2 and 3 are the adjacent degree-3 hubs,
    0 and 1 hang off 2, and 4 and 5 hang off 3."""
    return Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])


_BASIC_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "grid": 2,
    "triangle": 0,
    "claw": 0,
    "wrench": 0,
}


def basic(family: str, params: Sequence[int] = ()) -> Graph:
    """Dispatch a basic family by name; see the individual generators for
    numbering conventions."""
    if family not in _BASIC_ARITY:
        raise InputError(
            f"unknown family {family!r}; choose from {', '.join(sorted(_BASIC_ARITY))}"
        )
    if len(params) != _BASIC_ARITY[family]:
        raise InputError(
            f"family {family!r} takes {_BASIC_ARITY[family]} parameter(s), got {len(params)}"
        )
    if family == "path":
        return path_graph(params[0])
    if family == "cycle":
        return cycle_graph(params[0])
    if family == "complete":
        return complete_graph(params[0])
    if family == "star":
        return star_graph(params[0])
    if family == "grid":
        return grid_graph(params[0], params[1])
    if family == "triangle":
        return triangle()
    if family == "claw":
        return claw()
    return wrench()


# ---------------------------------------------------------------------------
# subdivisions


def subdivide_with_paths(
    g: Graph, lengths: int | Mapping[tuple[int, int], int]
) -> tuple[Graph, dict[tuple[int, int], tuple[int, ...]]]:
    """Replace every edge ``u-v`` by a fresh path of the requested length.

    ``lengths`` maps each edge (either endpoint order) to a positive path
    length, or is a single integer applied uniformly.  Original vertices
    keep their indices; inner vertices are appended edge by edge in sorted
    edge order, running from the lower to the higher endpoint.  Returns
    the subdivided graph and, per original edge, the replacing path.
    """
    if isinstance(lengths, int):
        table = {e: lengths for e in g.edges}
    else:
        table = {}
        for key, value in lengths.items():
            u, v = key
            e = (min(u, v), max(u, v))
            if not g.has_edge(*e):
                raise InputError(f"length given for {u}-{v}, which is not an edge")
            if e in table:
                raise InputError(f"length for edge {e[0]}-{e[1]} given twice")
            table[e] = value
        missing = [e for e in g.edges if e not in table]
        if missing:
            raise InputError(f"no length given for edge {missing[0][0]}-{missing[0][1]}")
    for e, value in table.items():
        if not isinstance(value, int) or value < 1:
            raise InputError(
                f"length for edge {e[0]}-{e[1]} must be a positive integer, got {value!r}"
            )
    n = g.n
    edges: list[tuple[int, int]] = []
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in g.edges:
        u, v = e
        inner = list(range(n, n + table[e] - 1))
        n += len(inner)
        path = [u] + inner + [v]
        edges.extend(zip(path, path[1:]))
        paths[e] = tuple(path)
    return Graph(n, edges), paths


def subdivide(g: Graph, lengths: int | Mapping[tuple[int, int], int]) -> Graph:
    return subdivide_with_paths(g, lengths)[0]


# ---------------------------------------------------------------------------
# trees of wheels


@dataclass(frozen=True)
class WheelInfo:
    """One wheel of a tree of wheels: its hub and its rim ``v_0..v_{n-1}``
    (the rim closes up, ``v_n = v_0``)."""

    hub: int
    rim: tuple[int, ...]


def tree_of_wheels(n: int, d: int) -> tuple[Graph, dict[tuple[int, ...], WheelInfo]]:
    """Glue wheels ``W_n`` recursively to depth ``d``.

    The central wheel (sequence ``()``) has rim ``0..n-1`` and hub ``n``.
    A wheel is glued onto rim edge ``e_i = v_{i-1} v_i`` of its parent by
    identifying its own ``v_1`` with the parent's ``v_{i-1}`` and its
    ``v_0`` with the parent's ``v_i`` (so its rim edge ``e_1`` is the
    shared edge); its sequence extends the parent's by ``i``.  The central
    wheel spawns children at every rim edge ``i = 1..n``, deeper wheels
    only at ``i = 2..n`` (never on the shared edge).  Fresh vertices are
    numbered wheel by wheel, rim first (``v_2..v_{n-1}``), then the hub,
    with wheels processed depth by depth in lexicographic sequence order.
    """
    if not isinstance(n, int) or n < 3:
        raise InputError(f"wheel size must be an integer >= 3, got {n!r}")
    if not isinstance(d, int) or d < 0:
        raise InputError(f"depth must be a non-negative integer, got {d!r}")
    edges: set[tuple[int, int]] = set()
    wheels: dict[tuple[int, ...], WheelInfo] = {}

    def add_edge(a: int, b: int) -> None:
        edges.add((min(a, b), max(a, b)))

    def register(seq: tuple[int, ...], rim: list[int], hub: int) -> None:
        for j in range(n):
            add_edge(rim[j], rim[(j + 1) % n])
            add_edge(hub, rim[j])
        wheels[seq] = WheelInfo(hub=hub, rim=tuple(rim))

    register((), list(range(n)), n)
    total = n + 1
    frontier = [()]
    for _depth in range(1, d + 1):
        next_frontier: list[tuple[int, ...]] = []
        for seq in frontier:
            parent = wheels[seq]
            spots = range(1, n + 1) if seq == () else range(2, n + 1)
            for i in spots:
                v_prev = parent.rim[(i - 1) % n]
                v_here = parent.rim[i % n]
                rim = [0] * n
                rim[0] = v_here
                rim[1] = v_prev
                for slot in range(2, n):
                    rim[slot] = total
                    total += 1
                hub = total
                total += 1
                child = seq + (i,)
                register(child, rim, hub)
                next_frontier.append(child)
        frontier = next_frontier
    return Graph(total, sorted(edges)), wheels


# ---------------------------------------------------------------------------
# splitting a high-degree vertex after subdivision


def split_subdivide(m: Graph, big_r: int, v: int) -> Graph:
    """Subdivide every edge of ``m`` exactly ``4*big_r`` times, then split
    the degree-``>=4`` vertex ``v`` into two adjacent vertices.

    The new vertex (index ``n-1`` of the output) takes over the two
    lowest-indexed subdivided branches of ``v`` plus the splitting edge,
    so it has degree exactly 3; ``v`` keeps its index and the remaining
    branches, ending with degree ``deg(v) - 1``.
    """
    if not isinstance(big_r, int) or big_r < 1:
        raise InputError(f"subdivision parameter must be a positive integer, got {big_r!r}")
    if not isinstance(v, int) or not 0 <= v < m.n:
        raise InputError(f"no vertex {v!r} to split")
    if m.degree(v) < 4:
        raise InputError(f"vertex {v} has degree {m.degree(v)}, need at least 4")
    sub, _paths = subdivide_with_paths(m, 4 * big_r + 1)
    branches = sorted(sub.neighbors(v))
    moved = branches[:2]
    u_e = sub.n
    edges = [e for e in sub.edges if not (v in e and (e[0] in moved or e[1] in moved))]
    edges += [(min(u_e, x), max(u_e, x)) for x in moved]
    edges.append((v, u_e))
    out = Graph(sub.n + 1, edges)
    if out.degree(u_e) != 3 or out.degree(v) != m.degree(v) - 1:
        raise InternalInvariantError("split degrees differ from the construction's")
    before = sum(1 for x in m.vertices if m.degree(x) >= 3)
    after = sum(1 for x in out.vertices if out.degree(x) >= 3)
    max_deg = max(m.degree(x) for x in m.vertices)
    if after != before + 1 or any(out.degree(x) > max_deg for x in out.vertices):
        raise InternalInvariantError("split changed the degree structure unexpectedly")
    return out
