"""Subdivision witnesses: certificates that a graph has large radial width.

A witness exhibits a subdivision of a small fixed pattern (a triangle, a
claw, or a wrench) inside a host graph: one host vertex per pattern
vertex, one host path per pattern edge, all internally disjoint, every
path of length at least ``k+1``, and the union — taken as a subgraph with
exactly the path edges — ``c``-quasi-geodesic in the host.  Such a
witness pins the radial width of every decomposition over the matching
class from below.

The module also provides the winding-number bookkeeping used to extract a
long geodesic cycle from a component that attaches to both ends of a
geodesic path but nowhere in between, and a bounded search that looks for
witnesses directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FormatError, InputError, InternalInvariantError, PreconditionError
from .graph import (
    INFINITY,
    Graph,
    all_pairs_distances,
    bfs_distances,
    check_vertex_set,
    components,
    is_geodesic_path,
    is_path_in_graph,
    path_to_set,
)
from .metric import quasi_geodesic_constant


# ---------------------------------------------------------------------------
# patterns


@dataclass(frozen=True)
class Pattern:
    """One of the three fixed obstruction shapes."""

    name: str
    graph: Graph


#: Triangle.
K3 = Pattern("K3", Graph(3, [(0, 1), (0, 2), (1, 2)]))

#: Claw; vertex 0 is the centre, 1-3 are the leaves.
K13 = Pattern("K13", Graph(4, [(0, 1), (0, 2), (0, 3)]))

#: Wrench; vertices 2 and 3 are the adjacent degree-3 hubs, 0,1 hang off
#: vertex 2 and 4,5 hang off vertex 3.
W = Pattern("W", Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]))

PATTERNS = {p.name: p for p in (K3, K13, W)}

#: Patterns whose quasi-geodesic subdivisions obstruct small radial width
#: over each class of decomposition graphs.
FORBIDDEN = {
    "path": (K3, K13),
    "cycle": (K13,),
    "star": (K3, W),
    "tree": (K3,),
}


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class SubdivisionWitness:
    """A subdivision of ``pattern`` embedded in a host graph.

    ``branch_vertices[p]`` is the host image of pattern vertex ``p``;
    ``branch_paths[e]`` is the host path for the ``e``-th pattern edge (in
    the pattern's sorted edge order), running from the image of the lower
    pattern endpoint to the image of the higher one.  ``k`` certifies that
    every path has length at least ``k+1`` and ``c`` that the union of the
    paths is ``c``-quasi-geodesic as a subgraph.
    """

    pattern: Pattern
    branch_vertices: tuple[int, ...]
    branch_paths: tuple[tuple[int, ...], ...]
    k: int
    c: int


def witness_subgraph(w: SubdivisionWitness) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    """Vertex and edge set of the subdivision as a host subgraph."""
    vs: set[int] = set(w.branch_vertices)
    es: set[tuple[int, int]] = set()
    for path in w.branch_paths:
        vs.update(path)
        for a, b in zip(path, path[1:]):
            es.add((min(a, b), max(a, b)))
    return frozenset(vs), frozenset(es)


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    violations: tuple[str, ...]


def verify_witness(g: Graph, w: SubdivisionWitness) -> WitnessReport:
    """Check every invariant of a subdivision witness against its host."""
    violations: list[str] = []
    pat = w.pattern.graph
    if len(w.branch_vertices) != pat.n:
        raise InputError(
            f"pattern {w.pattern.name} has {pat.n} vertices but {len(w.branch_vertices)} images"
        )
    if len(w.branch_paths) != pat.m:
        raise InputError(
            f"pattern {w.pattern.name} has {pat.m} edges but {len(w.branch_paths)} paths"
        )
    for v in w.branch_vertices:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise InputError(f"branch vertex {v!r} is not a host vertex")
    for path in w.branch_paths:
        for v in path:
            if not isinstance(v, int) or not 0 <= v < g.n:
                raise InputError(f"path vertex {v!r} is not a host vertex")
    if w.k < 0:
        violations.append(f"subdivision parameter k = {w.k} is negative")
    if w.c < 1:
        violations.append(f"quasi-geodesic constant c = {w.c} is below 1")
    if len(set(w.branch_vertices)) != len(w.branch_vertices):
        violations.append("branch vertices are not pairwise distinct")
    branch_set = set(w.branch_vertices)
    seen_inner: set[int] = set()
    for idx, (u, v) in enumerate(pat.edges):
        path = w.branch_paths[idx]
        if not is_path_in_graph(g, path):
            violations.append(f"path {idx} is not a path in the host")
            continue
        if path[0] != w.branch_vertices[u] or path[-1] != w.branch_vertices[v]:
            violations.append(
                f"path {idx} does not run between the images of pattern edge {u}-{v}"
            )
        if len(path) - 1 < w.k + 1:
            violations.append(
                f"path {idx} has length {len(path) - 1}, below k+1 = {w.k + 1}"
            )
        inner = set(path[1:-1])
        if inner & branch_set:
            violations.append(f"path {idx} passes through a branch vertex")
        if inner & seen_inner:
            violations.append(f"path {idx} shares an inner vertex with an earlier path")
        seen_inner |= inner
    if not violations:
        vs, es = witness_subgraph(w)
        measured = quasi_geodesic_constant(g, vs, es)
        if measured is INFINITY or measured > w.c:
            violations.append(
                f"subdivision is not {w.c}-quasi-geodesic (constant {measured})"
            )
    return WitnessReport(ok=not violations, violations=tuple(violations))


def lower_bounds(w: SubdivisionWitness, g: Graph | None = None) -> dict[str, Fraction]:
    """Radial-width lower bounds certified by a witness, as exact rationals.

    ``standalone`` bounds the radial width of the subdivision graph itself
    over the class excluding the pattern (``k/4``); ``host`` bounds the
    radial width of the host graph (``k/(12c)``).  Pass the host graph to
    re-verify the witness first; without it only the witness-internal
    structure is checked.
    """
    if g is not None:
        report = verify_witness(g, w)
        if not report.ok:
            raise PreconditionError(
                "witness failed verification: " + "; ".join(report.violations[:3])
            )
    else:
        if w.k < 0 or w.c < 1:
            raise PreconditionError("witness parameters out of range")
        for path in w.branch_paths:
            if len(path) - 1 < w.k + 1:
                raise PreconditionError(
                    f"a branch path has length {len(path) - 1}, below k+1 = {w.k + 1}"
                )
    return {
        "standalone": Fraction(w.k, 4),
        "host": Fraction(w.k, 12 * w.c),
    }


# ---------------------------------------------------------------------------
# cycles and winding numbers


def check_cycle(g: Graph, seq: Sequence[int]) -> None:
    """A cycle is a sequence of at least three distinct vertices with
    consecutive ones adjacent, wrapping around."""
    if len(seq) < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise InputError("cycle repeats a vertex")
    for a, b in zip(seq, list(seq[1:]) + [seq[0]]):
        if not (0 <= a < g.n) or not (0 <= b < g.n):
            raise InputError(f"cycle vertex {max(a, b)} out of range")
        if not g.has_edge(a, b):
            raise InputError(f"cycle step {a}-{b} is not an edge")


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate and possibly reflect a cycle sequence so that it starts at
    its smallest vertex and continues towards the smaller neighbour."""
    n = len(seq)
    start = min(range(n), key=lambda i: seq[i])
    forward = tuple(seq[(start + i) % n] for i in range(n))
    backward = tuple(seq[(start - i) % n] for i in range(n))
    return min(forward, backward)


def _cycle_arcs(
    o: Sequence[int], s: frozenset[int]
) -> list[list[int]]:
    """Maximal subpaths of the cycle between consecutive visits to ``s``
    (each arc includes both endpoints, which lie in ``s``)."""
    hits = [i for i, v in enumerate(o) if v in s]
    if len(hits) < 2:
        return []
    n = len(o)
    arcs = []
    for t, i in enumerate(hits):
        j = hits[(t + 1) % len(hits)]
        arc = [o[i]]
        pos = i
        while pos != j:
            pos = (pos + 1) % n
            arc.append(o[pos])
        arcs.append(arc)
    return arcs


def m0_m1_path_count(g: Graph, o: Sequence[int], m0: Iterable[int], m1: Iterable[int]) -> int:
    """Number of subpaths of the cycle running from ``m0`` to ``m1`` with
    no inner vertex in either set (always even)."""
    check_cycle(g, o)
    m0 = check_vertex_set(g, m0, "M0")
    m1 = check_vertex_set(g, m1, "M1")
    if m0 & m1:
        raise PreconditionError("M0 and M1 must be disjoint")
    count = 0
    for arc in _cycle_arcs(o, m0 | m1):
        ends = {arc[0], arc[-1]}
        if ends & m0 and ends & m1:
            count += 1
    return count


def winding_number(
    g: Graph,
    o: Sequence[int],
    m0: Iterable[int],
    m1: Iterable[int],
    c_comp: Iterable[int],
) -> int:
    """Number of ``m0``-``m1`` subpaths of the cycle with an inner vertex
    in the component ``c_comp`` of ``g`` minus both sets.

    The count ignores traversal direction.  Because the component's
    neighbourhood lies inside the two sets, "has an inner vertex in" and
    "meets" the component coincide for these subpaths; this coincidence is
    asserted.
    """
    check_cycle(g, o)
    m0 = check_vertex_set(g, m0, "M0")
    m1 = check_vertex_set(g, m1, "M1")
    c_comp = check_vertex_set(g, c_comp, "component")
    if m0 & m1:
        raise PreconditionError("M0 and M1 must be disjoint")
    rest = frozenset(g.vertices) - m0 - m1
    comp_lists = components(g, rest)
    if sorted(c_comp) not in comp_lists:
        raise PreconditionError("C is not a component of the graph minus M0 and M1")
    count = 0
    for arc in _cycle_arcs(o, m0 | m1):
        ends = {arc[0], arc[-1]}
        if not (ends & m0 and ends & m1):
            continue
        has_inner = any(x in c_comp for x in arc[1:-1])
        meets = any(x in c_comp for x in arc)
        if has_inner != meets:
            raise InternalInvariantError(
                "an endpoint of a separated subpath lies in the component"
            )
        if has_inner:
            count += 1
    return count


# ---------------------------------------------------------------------------
# extracting a long geodesic cycle


def _shortest_crossing_path(
    g: Graph, m0: frozenset[int], m1: frozenset[int], c_comp: frozenset[int]
) -> list[int] | None:
    """Lexicographically least shortest ``m0``-``m1`` path whose inner
    vertices lie in ``c_comp`` (there is at least one inner vertex)."""
    dist: dict[int, int] = {}
    queue: list[int] = []
    for v in sorted(m0):
        dist[v] = 0
        queue.append(v)
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        if x in m1:
            continue
        for y in g.neighbors(x):
            if y in dist:
                continue
            if x in m0:
                allowed = y in c_comp
            else:
                allowed = y in c_comp or y in m1
            if allowed:
                dist[y] = dist[x] + 1
                queue.append(y)
    targets = [v for v in sorted(m1) if v in dist]
    if not targets:
        return None
    best = min(dist[v] for v in targets)
    end = min(v for v in targets if dist[v] == best)
    path = [end]
    while dist[path[-1]] > 0:
        x = path[-1]
        here = dist[x]
        step = None
        for y in sorted(g.neighbors(x)):
            if y in dist and dist[y] == here - 1:
                if here == 1 and y not in m0:
                    continue
                if here > 1 and y not in c_comp and y not in m0:
                    continue
                step = y
                break
        if step is None:
            raise InternalInvariantError("broken backtrack in crossing-path search")
        path.append(step)
    path.reverse()
    return path


def long_geodesic_cycle(
    g: Graph,
    p: Sequence[int],
    r: int,
    c_comp: Iterable[int],
    m0: int,
    m1: int,
) -> list[int]:
    """Extract a geodesic cycle of length at least ``2*(n - m0 - m1 - 2r)``
    from a component that attaches to both ends of a geodesic path but not
    to its middle.

    ``p`` is a geodesic path of length ``n``; around each of its vertices
    sits a ball of radius ``r``; ``c_comp`` must be a component of the
    graph minus all those balls whose neighbourhood meets the balls of the
    first ``m0+1`` and last ``m1+1`` path vertices only.  The cycle is
    built from a shortest crossing path through the component, two
    attachment paths and a subpath of ``p``, then repeatedly shortened via
    shortcuts while keeping its winding parity odd; the result is verified
    geodesic by direct measurement and returned in canonical rotation.
    """
    p = list(p)
    if not is_geodesic_path(g, p):
        raise PreconditionError("base sequence is not a geodesic path")
    n = len(p) - 1
    if not isinstance(r, int) or r < 0:
        raise InputError(f"ball radius must be a non-negative integer, got {r!r}")
    if not isinstance(m0, int) or not isinstance(m1, int) or m0 < 0 or m1 < 0:
        raise InputError("end-zone sizes m0, m1 must be non-negative integers")
    m = n - m0 - m1 - 2 * r
    if m <= 0:
        raise PreconditionError(
            f"path too short: n - m0 - m1 - 2r = {m} must be positive"
        )
    c_comp = check_vertex_set(g, c_comp, "component")
    dists_from_p = [bfs_distances(g, pv) for pv in p]
    balls_union = {
        v for v in g.vertices if any(dists_from_p[i][v] <= r for i in range(n + 1))
    }
    outside = frozenset(g.vertices) - balls_union
    if sorted(c_comp) not in components(g, outside):
        raise PreconditionError("C is not a component of the graph minus the balls around the path")
    neighbours = {
        u
        for v in c_comp
        for u in g.neighbors(v)
        if u not in c_comp
    }
    low = frozenset(
        u for u in neighbours if any(dists_from_p[i][u] <= r for i in range(m0 + 1))
    )
    high = frozenset(
        u for u in neighbours if any(dists_from_p[i][u] <= r for i in range(n - m1, n + 1))
    )
    if not low:
        raise PreconditionError("component has no neighbour near the start of the path")
    if not high:
        raise PreconditionError("component has no neighbour near the end of the path")
    for u in sorted(neighbours):
        if any(dists_from_p[i][u] <= r for i in range(m0 + 1, n - m1)):
            raise PreconditionError(
                f"component has neighbour {u} near the middle of the path"
            )
    if low & high:
        raise InternalInvariantError("end-zone neighbourhoods overlap")
    if neighbours - low - high:
        raise InternalInvariantError("component neighbour outside both end zones")

    # initial cycle with odd winding number
    q_path = _shortest_crossing_path(g, low, high, c_comp)
    if q_path is None:
        raise InternalInvariantError("no crossing path through the component")
    v0, v1 = q_path[0], q_path[-1]
    p_set = set(p)
    r0 = path_to_set(g, v0, p_set)
    r1 = path_to_set(g, v1, p_set)
    if r0 is None or r1 is None or len(r0) - 1 != r or len(r1) - 1 != r:
        raise InternalInvariantError("attachment paths do not have length exactly r")
    if set(r0) & set(r1):
        raise InternalInvariantError("attachment paths intersect")
    ext = list(reversed(r0)) + q_path[1:] + r1[1:]
    if len(set(ext)) != len(ext):
        raise InternalInvariantError("external path repeats a vertex")
    if any(x in p_set for x in ext[1:-1]):
        raise InternalInvariantError("external path touches the base path internally")
    a = p.index(ext[0])
    b = p.index(ext[-1])
    if a == b:
        raise InternalInvariantError("external path returns to its starting path vertex")
    if a < b:
        closing = [p[i] for i in range(b - 1, a, -1)]
    else:
        closing = [p[i] for i in range(b + 1, a)]
    cycle = ext + closing
    check_cycle(g, cycle)

    def w_of(o: Sequence[int]) -> int:
        return winding_number(g, o, low, high, c_comp)

    if w_of(cycle) % 2 != 1:
        raise InternalInvariantError("initial cycle has even winding number")

    # shorten while a shortcut exists, preserving odd winding parity
    while True:
        length = len(cycle)
        pos = {v: i for i, v in enumerate(cycle)}
        shortcut: tuple[int, int, int] | None = None
        for u in sorted(pos):
            du = bfs_distances(g, u)
            for v in sorted(pos):
                if v <= u:
                    continue
                delta = abs(pos[u] - pos[v])
                cyc = min(delta, length - delta)
                if du[v] < cyc:
                    cand = (du[v], u, v)
                    if shortcut is None or cand < shortcut:
                        shortcut = cand
        if shortcut is None:
            break
        _, u, v = shortcut
        pi = path_to_set(g, u, {v})
        if pi is None:
            raise InternalInvariantError("shortcut endpoints disconnected")
        if any(x in pos for x in pi[1:-1]):
            raise InternalInvariantError("minimal shortcut path touches the cycle internally")
        iu, iv = pos[u], pos[v]
        if iu > iv:
            iu, iv = iv, iu
            pi = list(reversed(pi))
        arc_a = cycle[iu : iv + 1]
        arc_b = cycle[iv:] + cycle[: iu + 1]
        child_a = pi + arc_b[1:-1]
        child_b = pi + list(reversed(arc_a[1:-1]))
        check_cycle(g, child_a)
        check_cycle(g, child_b)
        if len(child_a) >= length or len(child_b) >= length:
            raise InternalInvariantError("shortcut child no shorter than its parent")
        wa, wb = w_of(child_a) % 2, w_of(child_b) % 2
        if wa + wb != 1:
            raise InternalInvariantError("winding parity did not split odd/even")
        candidates = [child_a, child_b] if wa else [child_b, child_a]
        cycle = candidates[0]

    if len(cycle) < 2 * m:
        raise InternalInvariantError(
            f"final cycle length {len(cycle)} below the guaranteed {2 * m}"
        )
    pos = {v: i for i, v in enumerate(cycle)}
    for u in cycle:
        du = bfs_distances(g, u)
        for v in cycle:
            delta = abs(pos[u] - pos[v])
            if min(delta, len(cycle) - delta) != du[v]:
                raise InternalInvariantError("final cycle is not geodesic")
    return list(canonical_cycle(cycle))


# ---------------------------------------------------------------------------
# bounded witness search


@dataclass(frozen=True)
class SearchCaps:
    """Step budget for the witness search."""

    max_steps: int = 200_000


FOUND = "found"
EXHAUSTED = "exhausted"
CAP_HIT = "cap_hit"


@dataclass(frozen=True)
class FindResult:
    """Outcome of a bounded witness search.

    ``exhausted`` means the searched family is provably witness-free: for
    the triangle the family is complete (all sufficiently long
    ``c``-quasi-geodesic cycles, enumerated shortcut-free), so no witness
    exists at all; for the claw and the wrench the family is all
    branch-vertex tuples joined by lexicographic BFS-tree paths, so a
    witness outside that family may still exist.  ``cap_hit`` guarantees
    nothing.
    """

    status: str
    witness: SubdivisionWitness | None = None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def _ceil_constant(measured) -> int:
    if measured is INFINITY:
        raise InternalInvariantError("connected subdivision measured as disconnected")
    return max(1, math.ceil(measured))


def cycle_witness(g: Graph, cycle: Sequence[int], k: int) -> SubdivisionWitness:
    """Turn a long cycle into a triangle-subdivision witness by placing the
    branch vertices at thirds of its canonical rotation.

    Every arc then has length at least ``floor(len/3) >= k+1``, so the
    witness parameter is at least ``k``; the recorded ``k`` and ``c`` are
    the measured values (shortest arc minus one, ceiling of the measured
    quasi-geodesic constant of the cycle subgraph)."""
    o = list(canonical_cycle(cycle))
    length = len(o)
    if not isinstance(k, int) or k < 0:
        raise InputError(f"witness parameter must be a non-negative integer, got {k!r}")
    if length < 3 * (k + 1):
        raise PreconditionError(
            f"cycle of length {length} cannot yield parameter {k}; "
            f"needs length at least {3 * (k + 1)}"
        )
    q1, q2 = length // 3, (2 * length) // 3
    bv = (o[0], o[q1], o[q2])
    path_01 = tuple(o[0 : q1 + 1])
    path_02 = tuple([o[0]] + o[q2:][::-1])
    path_12 = tuple(o[q1 : q2 + 1])
    arcs = (path_01, path_02, path_12)
    k_measured = min(len(a) - 1 for a in arcs) - 1
    if k_measured < k:
        raise InternalInvariantError("thirds placement fell below the requested parameter")
    vs = frozenset(o)
    es = frozenset((min(a, b), max(a, b)) for a, b in zip(o, o[1:] + [o[0]]))
    c_measured = _ceil_constant(quasi_geodesic_constant(g, vs, es))
    return SubdivisionWitness(
        pattern=K3,
        branch_vertices=bv,
        branch_paths=arcs,
        k=k_measured,
        c=c_measured,
    )


def _find_k3(g: Graph, k: int, c: int, budget: _Budget) -> FindResult:
    """Enumerate simple cycles canonically, pruning partial paths that can
    no longer close into a ``c``-quasi-geodesic cycle of length at least
    ``3(k+1)``.  The pruning is sound, so exhausting the enumeration
    proves no such cycle — equivalently, no triangle witness — exists."""
    lmin = 3 * (k + 1)
    dist = all_pairs_distances(g)

    def prune(path: list[int], y: int) -> bool:
        t = len(path)
        for i, x in enumerate(path):
            delta = t - i
            need = min(delta, lmin - delta)
            if need > 0 and c * dist[x][y] < need:
                return True
        return False

    for root in g.vertices:
        stack: list[tuple[list[int], int]] = [([root], 0)]
        while stack:
            path, next_idx = stack.pop()
            if not budget.spend():
                return FindResult(CAP_HIT)
            x = path[-1]
            nbrs = g.neighbors(x)
            if next_idx >= len(nbrs):
                continue
            stack.append((path, next_idx + 1))
            y = nbrs[next_idx]
            if y <= root or y in path[1:]:
                if y == root and len(path) >= 3 and path[1] < path[-1]:
                    cycle = list(path)
                    if len(cycle) >= lmin:
                        measured = quasi_geodesic_constant(
                            g,
                            frozenset(cycle),
                            [(a, b) for a, b in zip(cycle, cycle[1:] + [cycle[0]])],
                        )
                        if measured is not INFINITY and measured <= c:
                            witness = cycle_witness(g, cycle, k)
                            report = verify_witness(g, witness)
                            if not report.ok:
                                raise InternalInvariantError(
                                    "search produced an invalid triangle witness: "
                                    + "; ".join(report.violations[:3])
                                )
                            return FindResult(FOUND, witness)
                continue
            if prune(path, y):
                continue
            stack.append((path + [y], 0))
    return FindResult(EXHAUSTED)


def _bfs_tree_paths(g: Graph, root: int) -> tuple[list, dict[int, list[int]]]:
    """Distances from ``root`` and, per vertex, the lexicographically least
    shortest path from ``root`` (following lowest-numbered parents)."""
    dist = bfs_distances(g, root)
    paths: dict[int, list[int]] = {root: [root]}

    def build(v: int) -> list[int]:
        if v in paths:
            return paths[v]
        parent = min(u for u in g.neighbors(v) if dist[u] == dist[v] - 1)
        paths[v] = build(parent) + [v]
        return paths[v]

    for v in g.vertices:
        if dist[v] is not INFINITY:
            build(v)
    return dist, paths


def _legs_disjoint(legs: Sequence[Sequence[int]], shared: dict[int, set[int]]) -> bool:
    """Paths may meet only in prescribed shared endpoints: ``shared`` maps
    a leg index to the vertices it is allowed to share with other legs."""
    seen: dict[int, int] = {}
    for idx, leg in enumerate(legs):
        for v in leg:
            if v in seen and seen[v] != idx:
                if v not in shared.get(idx, set()) or v not in shared.get(seen[v], set()):
                    return False
                continue
            seen[v] = idx
    return True


def _find_k13(g: Graph, k: int, c: int, budget: _Budget) -> FindResult:
    for centre in g.vertices:
        dist, paths = _bfs_tree_paths(g, centre)
        tips = [v for v in g.vertices if v != centre and dist[v] is not INFINITY and dist[v] >= k + 1]
        for i1, u1 in enumerate(tips):
            for i2 in range(i1 + 1, len(tips)):
                u2 = tips[i2]
                for i3 in range(i2 + 1, len(tips)):
                    u3 = tips[i3]
                    if not budget.spend():
                        return FindResult(CAP_HIT)
                    legs = [paths[u1], paths[u2], paths[u3]]
                    if not _legs_disjoint(legs, {0: {centre}, 1: {centre}, 2: {centre}}):
                        continue
                    vs = frozenset(v for leg in legs for v in leg)
                    es = frozenset(
                        (min(a, b), max(a, b))
                        for leg in legs
                        for a, b in zip(leg, leg[1:])
                    )
                    measured = quasi_geodesic_constant(g, vs, es)
                    if measured is INFINITY or measured > c:
                        continue
                    witness = SubdivisionWitness(
                        pattern=K13,
                        branch_vertices=(centre, u1, u2, u3),
                        branch_paths=tuple(tuple(leg) for leg in legs),
                        k=min(len(leg) - 1 for leg in legs) - 1,
                        c=_ceil_constant(measured),
                    )
                    report = verify_witness(g, witness)
                    if not report.ok:
                        raise InternalInvariantError(
                            "search produced an invalid claw witness: "
                            + "; ".join(report.violations[:3])
                        )
                    return FindResult(FOUND, witness)
    return FindResult(EXHAUSTED)


def _find_w(g: Graph, k: int, c: int, budget: _Budget) -> FindResult:
    for h2 in g.vertices:
        dist2, paths2 = _bfs_tree_paths(g, h2)
        tips2 = [v for v in g.vertices if v != h2 and dist2[v] is not INFINITY and dist2[v] >= k + 1]
        for h3 in g.vertices:
            if h3 <= h2 or dist2[h3] is INFINITY or dist2[h3] < k + 1:
                continue
            middle = paths2[h3]
            dist3, paths3 = _bfs_tree_paths(g, h3)
            tips3 = [v for v in g.vertices if v != h3 and dist3[v] is not INFINITY and dist3[v] >= k + 1]
            for a1 in range(len(tips2)):
                for a2 in range(a1 + 1, len(tips2)):
                    for b1 in range(len(tips3)):
                        for b2 in range(b1 + 1, len(tips3)):
                            if not budget.spend():
                                return FindResult(CAP_HIT)
                            t0, t1 = tips2[a1], tips2[a2]
                            t4, t5 = tips3[b1], tips3[b2]
                            legs = [
                                paths2[t0][::-1],  # t0 .. h2
                                paths2[t1][::-1],  # t1 .. h2
                                middle,            # h2 .. h3
                                paths3[t4],        # h3 .. t4
                                paths3[t5],        # h3 .. t5
                            ]
                            shared = {
                                0: {h2},
                                1: {h2},
                                2: {h2, h3},
                                3: {h3},
                                4: {h3},
                            }
                            if not _legs_disjoint(legs, shared):
                                continue
                            vs = frozenset(v for leg in legs for v in leg)
                            es = frozenset(
                                (min(x, y), max(x, y))
                                for leg in legs
                                for x, y in zip(leg, leg[1:])
                            )
                            measured = quasi_geodesic_constant(g, vs, es)
                            if measured is INFINITY or measured > c:
                                continue
                            witness = SubdivisionWitness(
                                pattern=W,
                                branch_vertices=(t0, t1, h2, h3, t4, t5),
                                branch_paths=tuple(tuple(leg) for leg in legs),
                                k=min(len(leg) - 1 for leg in legs) - 1,
                                c=_ceil_constant(measured),
                            )
                            report = verify_witness(g, witness)
                            if not report.ok:
                                raise InternalInvariantError(
                                    "search produced an invalid wrench witness: "
                                    + "; ".join(report.violations[:3])
                                )
                            return FindResult(FOUND, witness)
    return FindResult(EXHAUSTED)


def find_subdivision(
    g: Graph,
    pattern: Pattern,
    k: int,
    c: int,
    caps: SearchCaps = SearchCaps(),
) -> FindResult:
    """Bounded search for a ``c``-quasi-geodesic subdivision witness with
    parameter at least ``k``; see ``FindResult`` for the strength of each
    outcome.  Any returned witness passes ``verify_witness``."""
    if not isinstance(k, int) or k < 0:
        raise InputError(f"subdivision parameter must be a non-negative integer, got {k!r}")
    if not isinstance(c, int) or c < 1:
        raise InputError(f"quasi-geodesic constant must be a positive integer, got {c!r}")
    budget = _Budget(caps.max_steps)
    if pattern.name == "K3":
        return _find_k3(g, k, c, budget)
    if pattern.name == "K13":
        return _find_k13(g, k, c, budget)
    if pattern.name == "W":
        return _find_w(g, k, c, budget)
    raise InputError(f"unknown pattern {pattern.name!r}")


# ---------------------------------------------------------------------------
# certificate format
#
#   witness K3 5 1
#   branch 0 12
#   branch 1 4
#   branch 2 8
#   path 0 1: 12 11 ... 4
#   ...


def format_witness(w: SubdivisionWitness) -> str:
    lines = [f"witness {w.pattern.name} {w.k} {w.c}"]
    for pv, host in enumerate(w.branch_vertices):
        lines.append(f"branch {pv} {host}")
    for (u, v), path in zip(w.pattern.graph.edges, w.branch_paths):
        body = " ".join(str(x) for x in path)
        lines.append(f"path {u} {v}: {body}")
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> SubdivisionWitness:
    cleaned: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            cleaned.append((lineno, body))
    if not cleaned:
        raise FormatError("empty witness certificate")
    lineno, header = cleaned[0]
    fields = header.split()
    if len(fields) != 4 or fields[0] != "witness":
        raise FormatError("header must read 'witness <pattern> <k> <c>'", lineno)
    if fields[1] not in PATTERNS:
        raise FormatError(f"unknown pattern {fields[1]!r}", lineno)
    pattern = PATTERNS[fields[1]]
    try:
        k, c = int(fields[2]), int(fields[3])
    except ValueError:
        raise FormatError("witness parameters must be integers", lineno) from None
    branches: dict[int, int] = {}
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, body in cleaned[1:]:
        if body.startswith("branch "):
            parts = body.split()
            if len(parts) != 3:
                raise FormatError("branch lines must read 'branch <pattern-vertex> <host-vertex>'", lineno)
            try:
                pv, host = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError("branch entries must be integers", lineno) from None
            if pv in branches:
                raise FormatError(f"duplicate branch vertex {pv}", lineno)
            if not 0 <= pv < pattern.graph.n:
                raise FormatError(f"pattern vertex {pv} out of range", lineno)
            branches[pv] = host
        elif body.startswith("path "):
            head, sep, rest = body.partition(":")
            if not sep:
                raise FormatError("path lines must contain a colon", lineno)
            parts = head.split()
            if len(parts) != 3:
                raise FormatError("path lines must read 'path <u> <v>: ...'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
                seq = tuple(int(x) for x in rest.split())
            except ValueError:
                raise FormatError("path entries must be integers", lineno) from None
            if not pattern.graph.has_edge(u, v):
                raise FormatError(f"{u}-{v} is not an edge of pattern {pattern.name}", lineno)
            key = (min(u, v), max(u, v))
            if key in paths:
                raise FormatError(f"duplicate path for pattern edge {u}-{v}", lineno)
            if not seq:
                raise FormatError("empty path", lineno)
            paths[key] = seq
        else:
            raise FormatError(f"unexpected line {body!r} in witness certificate", lineno)
    missing_b = [pv for pv in range(pattern.graph.n) if pv not in branches]
    if missing_b:
        raise FormatError(f"missing branch vertex {missing_b[0]}")
    missing_p = [e for e in pattern.graph.edges if e not in paths]
    if missing_p:
        raise FormatError(f"missing path for pattern edge {missing_p[0][0]}-{missing_p[0][1]}")
    return SubdivisionWitness(
        pattern=pattern,
        branch_vertices=tuple(branches[i] for i in range(pattern.graph.n)),
        branch_paths=tuple(paths[e] for e in pattern.graph.edges),
        k=k,
        c=c,
    )
