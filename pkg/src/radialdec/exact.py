"""Exhaustive radial-width oracle for tiny graphs.

The oracle answers "does ``g`` admit a decomposition of radial width at most
``r`` whose decomposition graph lies in a given class?" by complete
enumeration.  For each candidate decomposition graph ``H`` it assigns bags to
the nodes of ``H`` one by one, where the candidate bags are exactly the
vertex sets whose induced part has radius at most ``r``.  Connectivity of the
node sets ``H_v = {h : v in V_h}`` is enforced incrementally: processing the
nodes of a tree in depth-first preorder, a vertex may only reappear in a bag
if it also sits in the parent's bag, which makes every ``H_v`` a subtree.  On
cycles the nodes are processed around the circle and a vertex may wrap
exactly once, from a bag prefix that started at the first node.

A negative answer (``ExceedsAll``) is sound because the candidate list is
exhaustive up to a normalisation: whenever a bag is contained in the bag of a
neighbouring node, contracting that decomposition-graph edge preserves both
axioms, the width, and membership in each supported class (a triangle with a
nested bag is enumerated directly rather than contracted).  Once no bag is
contained in a neighbouring bag, mapping each node ``h`` to the least vertex
of ``V_h`` not shared with its parent is injective, so the decomposition
graph has at most ``|V(g)|`` nodes.  It therefore suffices to enumerate
paths, cycles, subdivided stars and trees with at most ``max(|V(g)|, 3)``
nodes; for the tree-like classes, padding with empty bags further reduces
this to hosts with exactly ``|V(g)|`` nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

import networkx as nx

from .decomposition import (
    DECOMPOSITION_CLASSES,
    GraphDecomposition,
    VerifyReport,
    radial_width,
    verify,
)
from .errors import InputError, InternalInvariantError
from .graph import Graph, components, part_radius

__all__ = [
    "AtMost",
    "ExactCaps",
    "ExactResult",
    "ExceedsAll",
    "Inconclusive",
    "exact_width",
    "exact_width_at_most",
]


@dataclass(frozen=True)
class ExactCaps:
    """Resource limits for the exhaustive search.

    ``max_vertices`` bounds the size of the input graph and ``max_steps``
    bounds the total number of candidate bags tried across all candidate
    decomposition graphs of one query.
    """

    max_vertices: int = 10
    max_steps: int = 20_000_000


@dataclass(frozen=True)
class AtMost:
    """The graph admits a decomposition of radial width at most ``r``."""

    dec: GraphDecomposition


@dataclass(frozen=True)
class ExceedsAll:
    """No decomposition in the class has radial width at most ``r``."""


@dataclass(frozen=True)
class Inconclusive:
    """The search hit a resource cap before settling the question."""

    caps_hit: str


ExactResult = Union[AtMost, ExceedsAll, Inconclusive]


class _BudgetExhausted(Exception):
    """Internal signal that the step budget ran out."""


def _check_inputs(g: Graph, decomposition_class: str, caps: ExactCaps) -> None:
    if decomposition_class not in DECOMPOSITION_CLASSES:
        raise InputError(
            f"unknown decomposition class {decomposition_class!r}; "
            f"expected one of {sorted(DECOMPOSITION_CLASSES)}"
        )
    if g.n == 0:
        raise InputError("the graph is empty")
    if len(components(g)) != 1:
        raise InputError("the exact oracle requires a connected graph")
    if g.n > caps.max_vertices:
        raise InputError(
            f"the graph has {g.n} vertices but the cap allows at most "
            f"{caps.max_vertices}; raise ExactCaps.max_vertices explicitly"
        )


def _path_host(t: int) -> Graph:
    return Graph(t, tuple((i, i + 1) for i in range(t - 1)))


def _cycle_host(length: int) -> Graph:
    edges = [(i, i + 1) for i in range(length - 1)] + [(0, length - 1)]
    return Graph(length, tuple(sorted(edges)))


def _star_host(leg_lengths: tuple[int, ...]) -> Graph:
    """Subdivided star with centre 0 and one path per entry of the partition."""
    edges: list[tuple[int, int]] = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((min(prev, nxt), max(prev, nxt)))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(sorted(edges)))


def _partitions(total: int) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` into positive parts, descending within
    each tuple, in lexicographically decreasing order from ``(total,)``."""
    if total == 0:
        yield ()
        return
    for first in range(total, 0, -1):
        for rest in _partitions_bounded(total - first, first):
            yield (first, *rest)


def _partitions_bounded(total: int, bound: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, bound), 0, -1):
        for rest in _partitions_bounded(total - first, first):
            yield (first, *rest)


def _tree_hosts(order: int) -> Iterator[Graph]:
    """All trees on ``order`` nodes up to isomorphism, in a fixed order."""
    if order == 1:
        yield Graph(1, ())
        return
    if order == 2:
        yield Graph(2, ((0, 1),))
        return
    for tree in nx.nonisomorphic_trees(order):
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in tree.edges()))
        yield Graph(order, edges)


def _candidate_hosts(decomposition_class: str, n: int) -> Iterator[tuple[str, Graph]]:
    """Candidate decomposition graphs with a label for cap messages.

    ``max(n, 3)`` nodes suffice; see the module docstring.  For the tree-like
    classes a decomposition on a smaller host extends to any larger host of
    the same class that contains it, by padding with empty bags, so only
    hosts with exactly ``n`` nodes are searched.  Cycles do not extend this
    way, hence every length is tried.  Tree hosts are ordered by maximum
    degree so path-like hosts, which tend to admit decompositions first, are
    searched early."""
    if decomposition_class == "path":
        yield f"path with {n} nodes", _path_host(n)
    elif decomposition_class == "cycle":
        for length in range(3, max(n, 3) + 1):
            yield f"cycle with {length} nodes", _cycle_host(length)
    elif decomposition_class == "star":
        for legs in _partitions(n - 1):
            yield f"star with legs {legs}", _star_host(legs)
    else:
        trees = list(enumerate(_tree_hosts(n)))
        trees.sort(key=lambda item: (max(map(item[1].degree, range(n))), item[0]))
        for index, tree in trees:
            yield f"tree {index} with {n} nodes", tree


def _single_bag(g: Graph, decomposition_class: str) -> GraphDecomposition:
    everything = frozenset(g.vertices)
    if decomposition_class == "cycle":
        return GraphDecomposition(
            _cycle_host(3), (everything, frozenset(), frozenset())
        )
    return GraphDecomposition(Graph(1, ()), (everything,))


def _valid_bags(g: Graph, r: int) -> list[tuple[int, int]]:
    """All bags usable at radius ``r`` as ``(vertex mask, covered-edge
    mask)`` pairs, ordered by (size, mask); includes the empty bag."""
    bags = [(0, 0)]
    for mask in range(1, 1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if part_radius(g, members) > r:
            continue
        emask = 0
        for j, (u, v) in enumerate(g.edges):
            if mask >> u & 1 and mask >> v & 1:
                emask |= 1 << j
        bags.append((mask, emask))
    bags.sort(key=lambda item: (item[0].bit_count(), item[0]))
    return bags


def _tree_order(
    h: Graph,
) -> tuple[list[int], list[int], list[list[int]], list[bool], list[list[int]]]:
    """Preorder from node 0 and parents, plus per position the already
    assigned nodes that still have unassigned children — the only bags that
    can pass a vertex on to future nodes — whether the node assigned at that
    position is itself such a node, and the nodes whose bags determine the
    remaining search (the feeders together with the next node's parent)."""
    parent = [-1] * h.n
    seen = [False] * h.n
    seen[0] = True
    order: list[int] = []
    stack = [0]
    while stack:
        t = stack.pop()
        order.append(t)
        kids = [u for u in h.neighbors(t) if not seen[u]]
        for u in kids:
            seen[u] = True
            parent[u] = t
        stack.extend(reversed(kids))
    position = {t: i for i, t in enumerate(order)}
    last_child_position = [-1] * h.n
    for t in h.vertices:
        if parent[t] >= 0:
            p = parent[t]
            last_child_position[p] = max(last_child_position[p], position[t])
    open_lists: list[list[int]] = []
    self_open: list[bool] = []
    state_nodes: list[list[int]] = []
    for i, t in enumerate(order):
        open_lists.append([a for a in order[:i] if last_child_position[a] > i])
        self_open.append(last_child_position[t] > i)
        state_nodes.append(
            [a for a in order[:i] if last_child_position[a] >= i]
        )
    return order, parent, open_lists, self_open, state_nodes


def _search_tree_host(
    g: Graph, h: Graph, bags: list[tuple[int, int]], budget: list[int]
) -> tuple[int, ...] | None:
    """First bag assignment on tree host ``h`` in candidate order, or
    ``None``; bags are returned indexed by host node."""
    order, parent, open_lists, self_open, state_nodes = _tree_order(h)
    n = g.n
    full_vertices = (1 << n) - 1
    full_edges = (1 << len(g.edges)) - 1
    vertex_edges = [0] * n
    for j, (u, v) in enumerate(g.edges):
        vertex_edges[u] |= 1 << j
        vertex_edges[v] |= 1 << j
    max_bag = max(mask.bit_count() for mask, _ in bags)
    # Host edges are bridges, so for a connected input a non-empty bag must
    # share a vertex with its non-empty parent bag once any vertex has
    # appeared: otherwise the two cut sides would both carry vertices with
    # no part covering an edge between them.  Nested neighbouring bags can
    # be ruled out as well: contracting the edge between them yields an
    # equally good decomposition on a smaller host of the same class, which
    # is searched via padding.  An empty parent passes nothing on, so only
    # the empty bag remains.  The admissible children of each bag are
    # precomputed here, in candidate order, empty bag first.
    index_of = {mask: idx for idx, (mask, _) in enumerate(bags)}
    compat: list[list[tuple[int, int]]] = []
    for pmask, _ in bags:
        fits = [bags[0]]
        if pmask:
            for mask, emask in bags:
                if mask & pmask and mask & ~pmask and pmask & ~mask:
                    fits.append((mask, emask))
        compat.append(fits)
    chosen = [0] * h.n
    chosen_idx = [0] * h.n
    total = len(order)
    refuted: set[tuple[int, ...]] = set()

    def extend(i: int, appeared: int, covered: int) -> bool:
        if i == total:
            return appeared == full_vertices and covered == full_edges
        missing = (full_vertices & ~appeared).bit_count()
        if missing > (total - i) * max_bag:
            return False
        key = (i, appeared, covered, *(chosen[a] for a in state_nodes[i]))
        if key in refuted:
            return False
        t = order[i]
        above = chosen[parent[t]] if parent[t] >= 0 else 0
        allowed = above | (full_vertices & ~appeared)
        keep_own = self_open[i]
        base_alive = 0
        for a in open_lists[i]:
            base_alive |= chosen[a]
        cands = compat[chosen_idx[parent[t]]] if appeared else bags
        for mask, emask in cands:
            if budget[0] <= 0:
                raise _BudgetExhausted
            budget[0] -= 1
            if mask & ~allowed:
                continue
            covered_next = covered | emask
            # A vertex absent from every bag that can still feed an
            # unassigned node can never reappear, so its edges must all be
            # covered already.
            alive = base_alive | mask if keep_own else base_alive
            dead = (appeared | mask) & ~alive
            ok = True
            while dead:
                low = dead & -dead
                if vertex_edges[low.bit_length() - 1] & ~covered_next:
                    ok = False
                    break
                dead ^= low
            if not ok:
                continue
            chosen[t] = mask
            chosen_idx[t] = index_of[mask]
            if extend(i + 1, appeared | mask, covered_next):
                return True
        chosen[t] = 0
        chosen_idx[t] = 0
        if len(refuted) < 1_000_000:
            refuted.add(key)
        return False

    if extend(0, 0, 0):
        return tuple(chosen)
    return None


def _search_cycle_host(
    g: Graph, h: Graph, bags: list[tuple[int, int]], budget: list[int]
) -> tuple[int, ...] | None:
    """Like ``_search_tree_host`` for a cycle host, processing the nodes
    around the circle.  A vertex whose first interval of appearances starts
    at node 0 may re-enter once and must then stay until the last node, so
    its node set wraps around the seam as an arc."""
    length = h.n
    n = g.n
    full_vertices = (1 << n) - 1
    full_edges = (1 << len(g.edges)) - 1
    vertex_edges = [0] * n
    for j, (u, v) in enumerate(g.edges):
        vertex_edges[u] |= 1 << j
        vertex_edges[v] |= 1 << j
    max_bag = max(mask.bit_count() for mask, _ in bags)
    chosen = [0] * length
    refuted: set[tuple[int, int, int, int, int, int]] = set()

    def extend(i: int, appeared: int, covered: int, reopened: int) -> bool:
        if i == length:
            return appeared == full_vertices and covered == full_edges
        missing = (full_vertices & ~appeared).bit_count()
        if missing > (length - i) * max_bag:
            return False
        key = (
            i,
            appeared,
            covered,
            chosen[i - 1] if i > 0 else 0,
            chosen[0] if i > 0 else 0,
            reopened,
        )
        if key in refuted:
            return False
        previous = chosen[i - 1] if i > 0 else 0
        eligible = chosen[0] if i > 0 else 0
        allowed = previous | eligible | (full_vertices & ~appeared)
        for mask, emask in bags:
            if budget[0] <= 0:
                raise _BudgetExhausted
            budget[0] -= 1
            if mask & ~allowed or reopened & ~mask:
                continue
            covered_next = covered | emask
            # Vertices leaving the running interval: their edges must be
            # covered, except that a vertex present at node 0 may still wrap.
            closing = previous & ~mask & ~eligible
            ok = True
            while closing:
                low = closing & -closing
                if vertex_edges[low.bit_length() - 1] & ~covered_next:
                    ok = False
                    break
                closing ^= low
            if not ok:
                continue
            chosen[i] = mask
            if extend(
                i + 1,
                appeared | mask,
                covered_next,
                reopened | (mask & appeared & ~previous),
            ):
                return True
        chosen[i] = 0
        if len(refuted) < 1_000_000:
            refuted.add(key)
        return False

    if extend(0, 0, 0, 0):
        return tuple(chosen)
    return None


def _search(
    g: Graph, h: Graph, is_cycle: bool, bags: list[tuple[int, int]], budget: list[int]
) -> GraphDecomposition | None:
    masks = (
        _search_cycle_host(g, h, bags, budget)
        if is_cycle
        else _search_tree_host(g, h, bags, budget)
    )
    if masks is None:
        return None
    bag_sets = tuple(
        frozenset(v for v in range(g.n) if masks[t] >> v & 1) for t in h.vertices
    )
    return GraphDecomposition(h, bag_sets)


def exact_width_at_most(
    g: Graph,
    decomposition_class: str,
    r: int,
    caps: ExactCaps = ExactCaps(),
) -> ExactResult:
    """Decide whether ``g`` has a decomposition of radial width at most ``r``
    over the given class by exhaustive search.

    Returns ``AtMost`` with the first verifying decomposition in canonical
    order, ``ExceedsAll`` if the complete enumeration found none, or
    ``Inconclusive`` if the step budget ran out first.
    """
    _check_inputs(g, decomposition_class, caps)
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise InputError(f"radius bound must be a non-negative integer, got {r!r}")
    radius = part_radius(g, g.vertices)
    if radius <= r:
        dec = _single_bag(g, decomposition_class)
        _require_valid(g, dec, r)
        return AtMost(dec)
    if r == 0:
        # Some edge exists (radius > 0), and the part covering it has at
        # least two vertices, hence radius at least one.
        return ExceedsAll()
    bags = _valid_bags(g, r)
    max_bag = max(mask.bit_count() for mask, _ in bags)
    max_bag_edges = max(emask.bit_count() for _, emask in bags)
    budget = [caps.max_steps]
    for label, host in _candidate_hosts(decomposition_class, g.n):
        # Each node covers at most one bag's worth of vertices and edges, so
        # hosts below these counting thresholds cannot carry a decomposition.
        if host.n * max_bag < g.n or host.n * max_bag_edges < len(g.edges):
            continue
        try:
            found = _search(g, host, decomposition_class == "cycle", bags, budget)
        except _BudgetExhausted:
            return Inconclusive(
                f"step budget {caps.max_steps} exhausted at {label}, "
                f"radius bound {r}"
            )
        if found is not None:
            _require_valid(g, found, r)
            return AtMost(found)
    return ExceedsAll()


def _require_valid(g: Graph, dec: GraphDecomposition, r: int) -> None:
    report: VerifyReport = verify(g, dec)
    if not report.ok:
        raise InternalInvariantError(
            f"oracle produced an invalid decomposition: {report.violations[0]}"
        )
    width = radial_width(g, dec)
    if width > r:
        raise InternalInvariantError(
            f"oracle produced width {width}, claimed at most {r}"
        )


def exact_width(
    g: Graph,
    decomposition_class: str,
    caps: ExactCaps = ExactCaps(),
) -> int | Inconclusive:
    """Exact radial width of ``g`` over the given decomposition class, found
    by ascending search; ``Inconclusive`` propagates from the first radius
    whose search ran out of budget."""
    _check_inputs(g, decomposition_class, caps)
    radius = part_radius(g, g.vertices)
    for r in range(radius + 1):
        result = exact_width_at_most(g, decomposition_class, r, caps)
        if isinstance(result, AtMost):
            return r
        if isinstance(result, Inconclusive):
            return result
    raise InternalInvariantError(
        "the single-bag decomposition must be found at the graph radius"
    )
