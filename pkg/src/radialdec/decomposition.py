"""Graph-decompositions: model a host graph on an arbitrary pattern graph.

A decomposition of a host graph ``G`` consists of a *decomposition graph*
``H`` together with one bag ``V_h`` (a set of host vertices, possibly
empty) per node ``h`` of ``H``, subject to two axioms:

* coverage: the induced parts ``G[V_h]`` jointly contain every vertex and
  every edge of ``G``;
* connectivity: for every host vertex ``v``, the set of nodes whose bag
  contains ``v`` induces a non-empty connected subgraph ``H_v`` of ``H``.

The central quality measure is the *radial width*: the largest radius of a
part ``G[V_h]``, measured inside the part (infinite when some non-empty
bag induces a disconnected part; empty bags contribute 0).  The *outer*
variant measures each bag's radius inside the whole host instead, and the
*spread* measures how widely a single host vertex smears over ``H``.

``verify`` and ``metrics`` accept an optional ``within`` vertex set so a
decomposition of an induced subgraph ``g[within]`` can keep host labels;
all distances are then taken inside ``g[within]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import FormatError, InputError, InternalInvariantError, PreconditionError
from .graph import (
    INFINITY,
    Graph,
    ball,
    check_vertex_set,
    components,
    format_graph,
    induced_distances,
    parse_graph,
    part_radius,
)


@dataclass(frozen=True)
class GraphDecomposition:
    """A decomposition graph plus one bag of host vertices per node."""

    graph: Graph
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.bags) != self.graph.n:
            raise InputError(
                f"{self.graph.n} decomposition nodes but {len(self.bags)} bags"
            )

    def nodes_with(self, v: int) -> list[int]:
        """All decomposition nodes whose bag contains host vertex ``v``."""
        return [h for h, bag in enumerate(self.bags) if v in bag]


def make_decomposition(h: Graph, bags: Iterable[Iterable[int]]) -> GraphDecomposition:
    return GraphDecomposition(h, tuple(frozenset(bag) for bag in bags))


@dataclass(frozen=True)
class VerifyReport:
    coverage_ok: bool
    connectivity_ok: bool
    violations: tuple[str, ...]
    all_bags_empty: bool

    @property
    def ok(self) -> bool:
        return self.coverage_ok and self.connectivity_ok


@dataclass(frozen=True)
class DecompositionMetrics:
    radial_width: object  # int or INFINITY
    outer_radial_width: object
    radial_spread: object
    honest: bool


def _host_members(g: Graph, within: Iterable[int] | None) -> frozenset[int]:
    if within is None:
        return frozenset(g.vertices)
    return check_vertex_set(g, within, "host restriction")


def verify(g: Graph, dec: GraphDecomposition, within: Iterable[int] | None = None) -> VerifyReport:
    """Check both decomposition axioms; structural problems (bag vertices
    outside the host) raise, axiom failures are reported."""
    members = _host_members(g, within)
    for h, bag in enumerate(dec.bags):
        for v in bag:
            if not isinstance(v, int) or v not in members:
                raise InputError(f"bag {h} contains {v!r}, not a host vertex")
    violations: list[str] = []
    covered: set[int] = set()
    for bag in dec.bags:
        covered |= bag
    for v in sorted(members - covered):
        violations.append(f"vertex {v} is in no bag")
    coverage_ok = not violations
    for u, v in g.edges:
        if u in members and v in members:
            if not any(u in bag and v in bag for bag in dec.bags):
                violations.append(f"edge {u}-{v} is in no part")
                coverage_ok = False
    connectivity_ok = True
    h_graph = dec.graph
    for v in sorted(members):
        nodes = [h for h, bag in enumerate(dec.bags) if v in bag]
        if not nodes:
            connectivity_ok = False  # already reported as uncovered
            continue
        reached = {nodes[0]}
        node_set = set(nodes)
        stack = [nodes[0]]
        while stack:
            x = stack.pop()
            for y in h_graph.neighbors(x):
                if y in node_set and y not in reached:
                    reached.add(y)
                    stack.append(y)
        if len(reached) != len(node_set):
            connectivity_ok = False
            violations.append(f"nodes holding vertex {v} are disconnected in the decomposition graph")
    return VerifyReport(
        coverage_ok=coverage_ok,
        connectivity_ok=connectivity_ok,
        violations=tuple(violations),
        all_bags_empty=all(not bag for bag in dec.bags),
    )


def metrics(g: Graph, dec: GraphDecomposition, within: Iterable[int] | None = None) -> DecompositionMetrics:
    """Radial width, outer radial width, radial spread and honesty of a
    verified decomposition (verification failures raise)."""
    report = verify(g, dec, within)
    if not report.ok:
        raise PreconditionError(
            "metrics of an invalid decomposition: " + "; ".join(report.violations[:3])
        )
    members = _host_members(g, within)
    width = 0
    for bag in dec.bags:
        r = part_radius(g, bag)
        if r > width:
            width = r
    outer = 0
    for bag in dec.bags:
        r = _outer_radius(g, members, bag)
        if r > outer:
            outer = r
    spread = 0
    h_graph = dec.graph
    spread_cache: dict = {}
    for v in sorted(members):
        nodes = frozenset(h for h, bag in enumerate(dec.bags) if v in bag)
        r = spread_cache.get(nodes)
        if r is None:
            r = _node_set_radius(h_graph, nodes)
            spread_cache[nodes] = r
        if r > spread:
            spread = r
    honest = all(
        bool(dec.bags[a] & dec.bags[b]) for a, b in h_graph.edges
    )
    return DecompositionMetrics(width, outer, spread, honest)


def _outer_radius(g: Graph, members: frozenset[int], bag: frozenset[int]):
    """Radius of ``bag`` inside the (restricted) host graph: the smallest
    ``r`` such that some host vertex reaches every bag vertex within ``r``
    (INFINITY when no single vertex reaches the whole bag)."""
    if not bag:
        return 0
    order = sorted(members)
    index = {v: i for i, v in enumerate(order)}
    size = len(order)
    if len(members) == g.n:
        adj = [g.neighbors(v) for v in order]
    else:
        adj = [
            [index[u] for u in g.neighbors(v) if u in members] for v in order
        ]

    def bfs(src: int) -> list[int]:
        dist = [-1] * size
        dist[src] = 0
        queue: deque[int] = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    bag_idx = sorted(index[x] for x in bag)
    d_first = bfs(bag_idx[0])
    for i in bag_idx:
        if d_first[i] < 0:
            return INFINITY  # the bag spans several host components
    far = bag_idx[0]
    for i in bag_idx:
        if d_first[i] > d_first[far]:
            far = i
    d_far = bfs(far)
    # A centre must reach the first anchor, so it lies in that anchor's
    # component; its eccentricity towards the bag is at least its distance
    # to either anchor, which allows an early exit on sorted candidates.
    candidates = [i for i in range(size) if d_first[i] >= 0]
    lower = {i: max(d_first[i], d_far[i]) for i in candidates}
    best = INFINITY
    for i in sorted(candidates, key=lambda i: (lower[i], i)):
        if lower[i] >= best:
            break
        dist = bfs(i)
        ecc = max(dist[x] for x in bag_idx)
        if ecc < best:
            best = ecc
    return best


def _node_set_radius(h: Graph, nodes: frozenset[int]):
    """Radius of ``h[nodes]`` inside itself (the spread of one vertex)."""
    return part_radius(h, nodes)


def radial_width(g: Graph, dec: GraphDecomposition, within: Iterable[int] | None = None):
    """Largest part radius of a verified decomposition (cheaper than
    :func:`metrics` when the outer width and spread are not needed)."""
    report = verify(g, dec, within)
    if not report.ok:
        raise PreconditionError(
            "metrics of an invalid decomposition: " + "; ".join(report.violations[:3])
        )
    width = 0
    for bag in dec.bags:
        r = part_radius(g, bag)
        if r > width:
            width = r
    return width


# ---------------------------------------------------------------------------
# bag rewrites


def enlarge_bags(g: Graph, dec: GraphDecomposition, r: int, within: Iterable[int] | None = None) -> GraphDecomposition:
    """Replace every bag by its ball of radius ``r`` (in the restricted
    host); both axioms survive the enlargement."""
    if not isinstance(r, int) or r < 0:
        raise InputError(f"enlargement radius must be a non-negative integer, got {r!r}")
    members = _host_members(g, within)
    if within is None:
        new_bags = tuple(ball(g, bag, r) for bag in dec.bags)
    else:
        new_bags = []
        for bag in dec.bags:
            if not bag:
                new_bags.append(frozenset())
                continue
            dist = induced_distances(g, members, bag)
            new_bags.append(frozenset(v for v, d in dist.items() if d <= r))
        new_bags = tuple(new_bags)
    return GraphDecomposition(dec.graph, new_bags)


def center_rebag(g: Graph, dec: GraphDecomposition, within: Iterable[int] | None = None) -> GraphDecomposition:
    """Turn small outer radius into small radial width.

    With ``k`` the decomposition's outer radial width (every bag fits in a
    ball of radius ``k``), enlarging every bag by ``k`` yields a
    decomposition of the same shape whose radial width is at most ``2k``.
    Requires the outer radial width to be finite.
    """
    mets = metrics(g, dec, within)
    k = mets.outer_radial_width
    if k is INFINITY:
        raise PreconditionError("outer radial width is infinite; cannot rebag")
    out = enlarge_bags(g, dec, k, within)
    if radial_width(g, out, within) > 2 * k:
        raise InternalInvariantError("rebagged width exceeded twice the outer width")
    return out


# ---------------------------------------------------------------------------
# transfer along a minor model


@dataclass(frozen=True)
class MinorModel:
    """Branch sets exhibiting the decomposition graph as a minor of
    ``host``: one non-empty, connected, pairwise disjoint vertex set of
    ``host`` per modelled node, with adjacent nodes joined by an edge
    between their branch sets."""

    host: Graph
    branch_sets: tuple[frozenset[int], ...]


def check_minor_model(pattern: Graph, model: MinorModel, faithful: bool = True) -> None:
    """Validate a minor model of ``pattern`` inside ``model.host``.

    With ``faithful=True`` non-adjacent pattern nodes must have no edge
    between their branch sets (the model realizes ``pattern`` exactly);
    otherwise plain subgraph-model semantics apply, which is all the
    transfer below needs.
    """
    host = model.host
    if len(model.branch_sets) != pattern.n:
        raise InputError(
            f"{pattern.n} pattern nodes but {len(model.branch_sets)} branch sets"
        )
    seen: set[int] = set()
    for i, bs in enumerate(model.branch_sets):
        bs = check_vertex_set(host, bs, f"branch set {i}")
        if not bs:
            raise InputError(f"branch set {i} is empty")
        if bs & seen:
            raise InputError(f"branch set {i} overlaps an earlier one")
        seen |= bs
        if len(components(host, bs)) != 1:
            raise InputError(f"branch set {i} is disconnected in the host")
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            crossing = any(
                host.has_edge(x, y)
                for x in model.branch_sets[i]
                for y in model.branch_sets[j]
            )
            if pattern.has_edge(i, j) and not crossing:
                raise InputError(f"adjacent nodes {i},{j} have no edge between branch sets")
            if faithful and crossing and not pattern.has_edge(i, j):
                raise InputError(
                    f"non-adjacent nodes {i},{j} have an edge between branch sets "
                    "(pass faithful=False for subgraph-model semantics)"
                )


def transfer_along_minor(
    g: Graph,
    dec: GraphDecomposition,
    model: MinorModel,
    faithful: bool = True,
) -> GraphDecomposition:
    """Re-model a decomposition on a graph that contains its decomposition
    graph as a minor.

    Every node of the larger graph inherits the bag of the node whose
    branch set contains it (an empty bag if none does).  Radial width is
    unchanged, since the parts are exact copies plus empty ones.
    """
    check_minor_model(dec.graph, model, faithful=faithful)
    owner: dict[int, int] = {}
    for node, bs in enumerate(model.branch_sets):
        for x in bs:
            owner[x] = node
    new_bags = tuple(
        dec.bags[owner[x]] if x in owner else frozenset()
        for x in model.host.vertices
    )
    out = GraphDecomposition(model.host, new_bags)
    if not verify(g, out).ok:
        raise InternalInvariantError("minor transfer produced an invalid decomposition")
    return out


# ---------------------------------------------------------------------------
# restriction to a quasi-geodesic induced subgraph


def restrict_to_quasi_geodesic(
    g: Graph,
    dec: GraphDecomposition,
    xs: Iterable[int],
    c: int,
) -> GraphDecomposition:
    """Restrict a decomposition of ``g`` to an induced ``c``-quasi-geodesic
    subgraph ``g[xs]``.

    Bags become ``B_{g[xs]}(xs & V_h, c*r)`` where ``r`` is the original
    radial width; the result is a decomposition of ``g[xs]`` (host labels
    kept, verify with ``within=xs``) of radial width at most ``3*c*r``.
    """
    from .metric import quasi_geodesic_constant  # local import to avoid a cycle

    xs = check_vertex_set(g, xs)
    if not isinstance(c, int) or c < 1:
        raise InputError(f"quasi-geodesic constant must be a positive integer, got {c!r}")
    measured = quasi_geodesic_constant(g, xs)
    if measured > c:
        raise PreconditionError(
            f"induced subgraph is not {c}-quasi-geodesic (constant {measured})"
        )
    mets = metrics(g, dec)
    r = mets.radial_width
    if r is INFINITY:
        raise PreconditionError("radial width is infinite; cannot restrict")
    new_bags = []
    for bag in dec.bags:
        inner = bag & xs
        if not inner:
            new_bags.append(frozenset())
            continue
        dist = induced_distances(g, xs, inner)
        new_bags.append(frozenset(v for v, d in dist.items() if d <= c * r))
    out = GraphDecomposition(dec.graph, tuple(new_bags))
    if not verify(g, out, within=xs).ok:
        raise InternalInvariantError("restriction produced an invalid decomposition")
    if metrics(g, out, within=xs).radial_width > 3 * c * r:
        raise InternalInvariantError("restriction exceeded the 3cr width bound")
    return out


# ---------------------------------------------------------------------------
# decomposition graph classes


def is_path_graph(h: Graph) -> bool:
    """Connected, acyclic, maximum degree two (includes a single node)."""
    if h.n == 0 or h.m != h.n - 1:
        return False
    if any(h.degree(v) > 2 for v in h.vertices):
        return False
    return len(components(h)) == 1


def is_cycle_graph(h: Graph) -> bool:
    if h.n < 3 or h.m != h.n:
        return False
    if any(h.degree(v) != 2 for v in h.vertices):
        return False
    return len(components(h)) == 1


def is_subdivided_star(h: Graph) -> bool:
    """A tree with at most one vertex of degree three or more; paths and a
    single node count as degenerate subdivided stars."""
    if h.n == 0 or h.m != h.n - 1 or len(components(h)) != 1:
        return False
    return sum(1 for v in h.vertices if h.degree(v) >= 3) <= 1


def is_tree_graph(h: Graph) -> bool:
    return h.n > 0 and h.m == h.n - 1 and len(components(h)) == 1


DECOMPOSITION_CLASSES = {
    "path": is_path_graph,
    "cycle": is_cycle_graph,
    "star": is_subdivided_star,
    "tree": is_tree_graph,
}


# ---------------------------------------------------------------------------
# certificate format
#
#   decomposition
#   <decomposition graph in graph text format>
#   bag 0: 3 5 8
#   bag 1:
#   ...


def format_decomposition(dec: GraphDecomposition) -> str:
    lines = ["decomposition"]
    lines.append(format_graph(dec.graph).rstrip("\n"))
    for h, bag in enumerate(dec.bags):
        body = " ".join(str(v) for v in sorted(bag))
        lines.append(f"bag {h}:" + (f" {body}" if body else ""))
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> GraphDecomposition:
    lines = text.splitlines()
    cleaned: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            cleaned.append((lineno, body))
    if not cleaned or cleaned[0][1] != "decomposition":
        raise FormatError("certificate must start with the line 'decomposition'", 1)
    bag_start = next(
        (idx for idx, (_, body) in enumerate(cleaned) if body.startswith("bag ")),
        len(cleaned),
    )
    graph_text = "\n".join(body for _, body in cleaned[1:bag_start])
    try:
        h = parse_graph(graph_text)
    except FormatError as exc:
        raise FormatError(f"decomposition graph: {exc}") from None
    bags: dict[int, frozenset[int]] = {}
    for lineno, body in cleaned[bag_start:]:
        if not body.startswith("bag "):
            raise FormatError(f"unexpected line {body!r} in bag section", lineno)
        head, _, rest = body.partition(":")
        try:
            node = int(head[4:])
        except ValueError:
            raise FormatError("bag line must read 'bag <node>: ...'", lineno) from None
        if not 0 <= node < h.n:
            raise FormatError(f"bag node {node} out of range", lineno)
        if node in bags:
            raise FormatError(f"duplicate bag for node {node}", lineno)
        try:
            content = [int(f) for f in rest.split()]
        except ValueError:
            raise FormatError("bag members must be integers", lineno) from None
        if any(v < 0 for v in content):
            raise FormatError("bag members must be non-negative", lineno)
        if len(set(content)) != len(content):
            raise FormatError(f"duplicate member in bag {node}", lineno)
        bags[node] = frozenset(content)
    missing = [h_node for h_node in range(h.n) if h_node not in bags]
    if missing:
        raise FormatError(f"missing bag for node {missing[0]}")
    return GraphDecomposition(h, tuple(bags[i] for i in range(h.n)))
