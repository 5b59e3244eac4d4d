"""Quasi-geodesic subgraphs and quasi-isometries.

A subgraph ``X`` of a host graph ``g`` is *c-quasi-geodesic* when the
distance inside ``X`` between any two of its vertices is at most ``c``
times their distance in ``g``; geodesic subgraphs are exactly the
1-quasi-geodesic ones.  ``quasi_geodesic_constant`` measures the best
(smallest) such ``c`` exactly, as a rational.

``certify_union`` grows a quasi-geodesic subgraph by shortest attachment
paths while certifying the constant of the result, and the remaining
functions translate between decompositions of small width and
quasi-isometries between the host and the decomposition graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .decomposition import GraphDecomposition, metrics, verify
from .errors import FormatError, InputError, InternalInvariantError, PreconditionError
from .graph import (
    INFINITY,
    Graph,
    ball,
    bfs_distances,
    check_vertex_set,
    components,
    is_connected,
    is_geodesic_path,
    is_path_in_graph,
)


# ---------------------------------------------------------------------------
# quasi-geodesic constants


def _subgraph_edges(
    g: Graph, xs: frozenset[int], edges: Iterable[tuple[int, int]] | None
) -> set[tuple[int, int]]:
    """Edge set of the subgraph on ``xs``: all induced edges by default, or
    a validated explicit subset (for subgraphs such as unions of paths that
    do not carry every induced edge)."""
    if edges is None:
        return {
            (u, v) for u, v in g.edges if u in xs and v in xs
        }
    out: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if u > v:
            u, v = v, u
        if not g.has_edge(u, v):
            raise InputError(f"subgraph edge {u}-{v} is not an edge of the host")
        if u not in xs or v not in xs:
            raise InputError(f"subgraph edge {u}-{v} has an endpoint outside the subgraph")
        out.add((u, v))
    return out


def _subgraph_distances(
    adj: dict[int, list[int]], xs: frozenset[int], source: int
) -> dict[int, object]:
    dist: dict[int, object] = {v: INFINITY for v in xs}
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in adj[x]:
            if dist[y] is INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def quasi_geodesic_constant(
    g: Graph,
    xs: Iterable[int],
    edges: Iterable[tuple[int, int]] | None = None,
):
    """Smallest rational ``c >= 1`` making the subgraph on ``xs``
    c-quasi-geodesic in ``g``; INFINITY when the subgraph is disconnected.

    By default the subgraph is the induced one; pass ``edges`` to restrict
    to an explicit subgraph (e.g. a union of paths).  Subgraphs with at
    most one vertex count as geodesic.
    """
    xs = check_vertex_set(g, xs)
    edge_set = _subgraph_edges(g, xs, edges)
    adj: dict[int, list[int]] = {v: [] for v in xs}
    for u, v in edge_set:
        adj[u].append(v)
        adj[v].append(u)
    best = Fraction(1)
    for u in sorted(xs):
        sub = _subgraph_distances(adj, xs, u)
        host = bfs_distances(g, u)
        for v in sorted(xs):
            if v <= u:
                continue
            d_sub = sub[v]
            if d_sub is INFINITY:
                return INFINITY
            ratio = Fraction(d_sub, host[v])
            if ratio > best:
                best = ratio
    return best


def is_geodesic_subgraph(g: Graph, xs: Iterable[int], edges=None) -> bool:
    return quasi_geodesic_constant(g, xs, edges) == 1


# ---------------------------------------------------------------------------
# certified unions


def _check_shortest_attachment(
    g: Graph, path: Sequence[int], targets: frozenset[int], what: str
) -> None:
    """``path`` must run from its first vertex to the target set, meet the
    set only in its last vertex, and have length dist(start, targets)."""
    if not path:
        raise InputError(f"{what} is empty")
    if not is_path_in_graph(g, path):
        raise InputError(f"{what} is not a path in the host")
    if path[-1] not in targets:
        raise PreconditionError(f"{what} does not end in the target set")
    if any(v in targets for v in path[:-1]):
        raise PreconditionError(f"{what} meets the target set before its end")
    dist = bfs_distances(g, targets)
    if len(path) - 1 != dist[path[0]]:
        raise PreconditionError(
            f"{what} has length {len(path) - 1} but the distance to the set is {dist[path[0]]}"
        )


def _path_edges(path: Sequence[int]) -> set[tuple[int, int]]:
    return {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}


def certify_union(
    g: Graph,
    x,
    attachments: Sequence[Sequence[int]],
    c: int | None = None,
    edges: Iterable[tuple[int, int]] | None = None,
) -> int:
    """Certify the quasi-geodesic constant of a subgraph extended by one or
    two shortest attachment paths.

    One attachment: ``x`` is a vertex set whose subgraph is
    ``c``-quasi-geodesic and the attachment is a shortest path from some
    vertex to that set; the union is certified ``2c+1``-quasi-geodesic.

    Two attachments: ``x`` is a geodesic path ``p_0..p_n`` (an ordered
    sequence), the first attachment ``Q`` is a shortest path from a vertex
    ``u`` to the path with endvertex ``q``, the second ``R`` a shortest
    path from a vertex ``v`` to the union of both with endvertex ``r``,
    and the endvertices must be far apart: either ``r`` lies on the path
    and ``dist(q,r) >= 4*max(dist(u,path), dist(v,path))``, or ``r`` lies
    on ``Q`` and ``dist(q,r) >= 4*max(dist(v,Q), dist(p_0,q),
    dist(p_n,q))``.  The union of all three is certified 3-quasi-geodesic.

    The certified constant is also re-verified by direct measurement; the
    preconditions guarantee it, so a measurement failure raises an
    internal invariant error.
    """
    if len(attachments) == 1:
        if c is None:
            raise InputError("one-attachment mode needs the constant c of the subgraph")
        if not isinstance(c, int) or c < 1:
            raise InputError(f"c must be a positive integer, got {c!r}")
        xs = check_vertex_set(g, x, "subgraph vertex set")
        if not xs:
            raise InputError("subgraph vertex set is empty")
        measured = quasi_geodesic_constant(g, xs, edges)
        if measured > c:
            raise PreconditionError(
                f"subgraph is not {c}-quasi-geodesic (constant {measured})"
            )
        path = list(attachments[0])
        _check_shortest_attachment(g, path, xs, "attachment path")
        union_vs = xs | set(path)
        union_edges = _subgraph_edges(g, xs, edges) | _path_edges(path)
        bound = 2 * c + 1
        got = quasi_geodesic_constant(g, union_vs, union_edges)
        if got > bound:
            raise InternalInvariantError(
                f"one-path union measured {got}, above the certified {bound}"
            )
        return bound

    if len(attachments) == 2:
        if c is not None:
            raise InputError("two-attachment mode fixes the constant; do not pass c")
        if edges is not None:
            raise InputError("two-attachment mode works on paths; do not pass edges")
        p = list(x)
        if not is_geodesic_path(g, p):
            raise PreconditionError("base sequence is not a geodesic path")
        p_set = frozenset(p)
        q_path = list(attachments[0])
        _check_shortest_attachment(g, q_path, p_set, "first attachment path")
        q = q_path[-1]
        pq_set = p_set | set(q_path)
        r_path = list(attachments[1])
        _check_shortest_attachment(g, r_path, pq_set, "second attachment path")
        r = r_path[-1]
        u, v = q_path[0], r_path[0]
        dist_u = bfs_distances(g, u)
        dist_v = bfs_distances(g, v)
        du_p = min(dist_u[t] for t in p_set)
        dv_p = min(dist_v[t] for t in p_set)
        dist_q = bfs_distances(g, q)
        d_qr = dist_q[r]
        ok = False
        if r in p_set and d_qr >= 4 * max(du_p, dv_p):
            ok = True
        if not ok and r in set(q_path):
            dv_q = min(dist_v[t] for t in q_path)
            if d_qr >= 4 * max(dv_q, dist_q[p[0]], dist_q[p[-1]]):
                ok = True
        if not ok:
            raise PreconditionError(
                f"attachment endpoints too close: dist(q,r) = {d_qr} does not "
                "dominate four times the attachment distances in either case"
            )
        union_vs = pq_set | set(r_path)
        union_edges = _path_edges(p) | _path_edges(q_path) | _path_edges(r_path)
        got = quasi_geodesic_constant(g, union_vs, union_edges)
        if got > 3:
            raise InternalInvariantError(
                f"two-path union measured {got}, above the certified 3"
            )
        return 3

    raise InputError(f"expected one or two attachment paths, got {len(attachments)}")


# ---------------------------------------------------------------------------
# quasi-isometries


@dataclass(frozen=True)
class QuasiIsometry:
    """A map from the nodes of a graph H into a graph G that distorts
    distances at most linearly in both directions and whose image is
    coarsely dense.

    ``phi[h]`` is the image of node ``h``; the defining conditions are
      (Q1)  d_H(h,h') <= m * d_G(phi h, phi h') + a        for all h, h'
      (Q2)  d_G(phi h, phi h') <= M * d_H(h,h') + A        for all h, h'
      (Q3)  every G-vertex is within distance r of the image.
    """

    phi: tuple[int, ...]
    m: int
    a: int
    M: int
    A: int
    r: int

    def __post_init__(self):
        for name in ("m", "a", "M", "A", "r"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise InputError(f"parameter {name} must be a non-negative integer, got {value!r}")
        if self.m < 1 or self.M < 1:
            raise InputError("multiplicative parameters m and M must be at least 1")
        if not all(isinstance(v, int) for v in self.phi):
            raise InputError("phi must map to integer vertices")


@dataclass(frozen=True)
class QIReport:
    q1_ok: bool
    q2_ok: bool
    q3_ok: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.q1_ok and self.q2_ok and self.q3_ok


def verify_quasi_isometry(g: Graph, h: Graph, qi: QuasiIsometry) -> QIReport:
    """Check conditions (Q1)-(Q3) of a quasi-isometry from ``h`` to ``g``."""
    if len(qi.phi) != h.n:
        raise InputError(f"phi has {len(qi.phi)} entries for {h.n} nodes")
    for node, image in enumerate(qi.phi):
        if not 0 <= image < g.n:
            raise InputError(f"phi maps node {node} to {image}, not a host vertex")
    violations: list[str] = []
    q1_ok = q2_ok = True
    dists_h = [bfs_distances(h, x) for x in h.vertices]
    dist_cache: dict[int, list] = {}
    for x in h.vertices:
        if qi.phi[x] not in dist_cache:
            dist_cache[qi.phi[x]] = bfs_distances(g, qi.phi[x])
    for x in h.vertices:
        for y in range(x + 1, h.n):
            d_h = dists_h[x][y]
            d_g = dist_cache[qi.phi[x]][qi.phi[y]]
            if d_h > qi.m * d_g + qi.a:
                q1_ok = False
                violations.append(
                    f"(Q1) nodes {x},{y}: {d_h} > {qi.m}*{d_g} + {qi.a}"
                )
            if d_g > qi.M * d_h + qi.A:
                q2_ok = False
                violations.append(
                    f"(Q2) nodes {x},{y}: {d_g} > {qi.M}*{d_h} + {qi.A}"
                )
    q3_ok = True
    if g.n > 0:
        if h.n == 0:
            q3_ok = False
            violations.append("(Q3) empty image cannot cover the host")
        else:
            from_image = bfs_distances(g, set(qi.phi))
            for v in g.vertices:
                if from_image[v] > qi.r:
                    q3_ok = False
                    violations.append(f"(Q3) vertex {v} is {from_image[v]} from the image, above {qi.r}")
    return QIReport(q1_ok, q2_ok, q3_ok, tuple(violations))


def _canonical_center(g: Graph, bag: frozenset[int]) -> int:
    """Lowest-index vertex of ``g`` whose eccentricity to ``bag`` is
    smallest (the canonical center of the bag in the host)."""
    best_v = -1
    best = INFINITY
    for v in g.vertices:
        dist = bfs_distances(g, v)
        worst = max((dist[x] for x in bag), default=0)
        if worst < best:
            best, best_v = worst, v
    return best_v


def dec_to_qi(g: Graph, dec: GraphDecomposition) -> QuasiIsometry:
    """Read a quasi-isometry off a decomposition of small width.

    Maps every decomposition node to the canonical center of its bag.
    With ``r0`` the outer radial width and ``r1`` the radial spread, the
    result is a ``(2*r1, 2*r1, 2*r0, 2*r0, r0)``-quasi-isometry from the
    decomposition graph to the host (multiplicative parameters clamped up
    to 1 when a width of 0 would make them vanish).

    Requires a verified honest decomposition of a connected non-empty
    host with a connected decomposition graph.
    """
    if g.n == 0:
        raise PreconditionError("host graph is empty")
    if not is_connected(g):
        raise PreconditionError("host graph is disconnected")
    if dec.graph.n > 0 and len(components(dec.graph)) != 1:
        raise PreconditionError("decomposition graph is disconnected")
    mets = metrics(g, dec)
    if not mets.honest:
        raise PreconditionError("decomposition is not honest (an adjacent bag pair is disjoint)")
    r0 = mets.outer_radial_width
    r1 = mets.radial_spread
    if r0 is INFINITY or r1 is INFINITY:
        raise PreconditionError("infinite outer radial width or radial spread")
    phi = tuple(_canonical_center(g, bag) for bag in dec.bags)
    qi = QuasiIsometry(
        phi=phi,
        m=max(2 * r1, 1),
        a=2 * r1,
        M=max(2 * r0, 1),
        A=2 * r0,
        r=r0,
    )
    report = verify_quasi_isometry(g, dec.graph, qi)
    if not report.ok:
        raise InternalInvariantError(
            "derived quasi-isometry failed verification: " + "; ".join(report.violations[:3])
        )
    return qi


def qi_to_dec(g: Graph, h: Graph, qi: QuasiIsometry) -> GraphDecomposition:
    """Read a decomposition off a quasi-isometry from ``h`` to ``g``.

    The bag of a node collects the balls of radius ``r`` around the images
    of all nodes within distance ``m*r + ceil((m+a)/2)`` in ``h``.  The
    result verifies, has outer radial width at most
    ``r + M*(m*r + ceil((m+a)/2)) + A`` and radial spread at most
    ``4*m*r + m + 2*a + 1``.
    """
    report = verify_quasi_isometry(g, h, qi)
    if not report.ok:
        raise PreconditionError(
            "quasi-isometry failed verification: " + "; ".join(report.violations[:3])
        )
    reach = qi.m * qi.r + (qi.m + qi.a + 1) // 2
    bags = []
    for node in h.vertices:
        near = ball(h, node, reach)
        bag: set[int] = set()
        for other in near:
            bag |= ball(g, qi.phi[other], qi.r)
        bags.append(frozenset(bag))
    dec = GraphDecomposition(h, tuple(bags))
    if not verify(g, dec).ok:
        raise InternalInvariantError("derived decomposition failed verification")
    mets = metrics(g, dec)
    outer_bound = qi.r + qi.M * reach + qi.A
    spread_bound = 4 * qi.m * qi.r + qi.m + 2 * qi.a + 1
    if mets.outer_radial_width > outer_bound:
        raise InternalInvariantError(
            f"outer radial width {mets.outer_radial_width} above bound {outer_bound}"
        )
    if mets.radial_spread > spread_bound:
        raise InternalInvariantError(
            f"radial spread {mets.radial_spread} above bound {spread_bound}"
        )
    return dec


# ---------------------------------------------------------------------------
# certificate format
#
#   qi m a M A r
#   0 -> 4
#   1 -> 7
#   ...


def format_quasi_isometry(qi: QuasiIsometry) -> str:
    lines = [f"qi {qi.m} {qi.a} {qi.M} {qi.A} {qi.r}"]
    for node, image in enumerate(qi.phi):
        lines.append(f"{node} -> {image}")
    return "\n".join(lines) + "\n"


def parse_quasi_isometry(text: str) -> QuasiIsometry:
    cleaned: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            cleaned.append((lineno, body))
    if not cleaned:
        raise FormatError("empty quasi-isometry certificate")
    lineno, header = cleaned[0]
    fields = header.split()
    if len(fields) != 6 or fields[0] != "qi":
        raise FormatError("header must read 'qi m a M A r'", lineno)
    try:
        m, a, big_m, big_a, r = (int(f) for f in fields[1:])
    except ValueError:
        raise FormatError("quasi-isometry parameters must be integers", lineno) from None
    images: dict[int, int] = {}
    for lineno, body in cleaned[1:]:
        parts = body.split()
        if len(parts) != 3 or parts[1] != "->":
            raise FormatError("map lines must read '<node> -> <vertex>'", lineno)
        try:
            node, image = int(parts[0]), int(parts[2])
        except ValueError:
            raise FormatError("map entries must be integers", lineno) from None
        if node in images:
            raise FormatError(f"duplicate image for node {node}", lineno)
        if node < 0 or image < 0:
            raise FormatError("map entries must be non-negative", lineno)
        images[node] = image
    missing = [i for i in range(len(images)) if i not in images]
    if missing:
        raise FormatError(f"missing image for node {missing[0]}")
    try:
        return QuasiIsometry(
            phi=tuple(images[i] for i in range(len(images))),
            m=m,
            a=a,
            M=big_m,
            A=big_a,
            r=r,
        )
    except InputError as exc:
        raise FormatError(str(exc)) from None
