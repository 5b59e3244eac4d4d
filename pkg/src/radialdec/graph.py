"""Core graph type and metric primitives.

Vertices are the integers ``0..n-1``; graphs are finite, simple and
undirected.  Distances are exact non-negative integers, with the
:data:`INFINITY` sentinel for unreachable pairs (no floating point is used
anywhere in this package).

Every operation that has to make a choice -- BFS visiting order, extracting
one shortest path among many, breaking ties between equally good candidates
-- resolves it toward the lowest-numbered vertex.  Repeated runs on the
same input therefore produce identical output, byte for byte.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import FormatError, InputError, InternalInvariantError, PreconditionError


class _Infinity:
    """Sentinel for infinite distance.  Compares above every integer and
    saturates under addition and multiplication."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __hash__(self):
        return hash(("radialdec", "INFINITY"))

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        return self

    __rmul__ = __mul__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

#: A distance is an exact ``int`` or :data:`INFINITY`.
Distance = object


class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``.

    Edges are stored sorted as ``(u, v)`` with ``u < v``; adjacency lists
    are sorted ascending.  Construction validates ranges and rejects loops
    and duplicate edges.
    """

    __slots__ = ("n", "edges", "_adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a non-negative integer, got {n!r}")
        normalized = []
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a pair") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge {e!r} has non-integer endpoints")
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} out of range for {n} vertices")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise InputError(f"duplicate edge {a!r}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._edge_set = frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex(g: Graph, v: object, what: str = "vertex") -> int:
    """Validate that ``v`` is a vertex of ``g`` and return it."""
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InputError(f"{what} {v!r} is not a vertex of a {g.n}-vertex graph")
    return v


def check_vertex_set(g: Graph, xs: Iterable[int], what: str = "vertex set") -> frozenset[int]:
    out = frozenset(xs)
    for v in out:
        check_vertex(g, v, f"{what} member")
    return out


# ---------------------------------------------------------------------------
# distances


def bfs_distances(g: Graph, sources: int | Iterable[int]) -> list:
    """Distances from ``sources`` (a vertex or a set of vertices) to every
    vertex; unreachable vertices map to :data:`INFINITY`."""
    if isinstance(sources, int):
        sources = (sources,)
    dist: list = [INFINITY] * g.n
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        check_vertex(g, s, "source")
        dist[s] = 0
        queue.append(s)
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.neighbors(x):
            if dist[y] is INFINITY:
                dist[y] = d
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int):
    """Exact distance between two vertices (possibly :data:`INFINITY`)."""
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        return 0
    dist = [INFINITY] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.neighbors(x):
            if dist[y] is INFINITY:
                if y == v:
                    return d
                dist[y] = d
                queue.append(y)
    return INFINITY


def all_pairs_distances(g: Graph) -> list[list]:
    """All-pairs distances as a dense ``n x n`` table (BFS per vertex)."""
    return [bfs_distances(g, v) for v in g.vertices]


def eccentricity(g: Graph, v: int):
    dist = bfs_distances(g, v)
    return max(dist, default=0)


def graph_radius(g: Graph):
    """``min_v max_u dist(v, u)``; 0 for the empty graph, INFINITY if
    disconnected."""
    if g.n == 0:
        return 0
    return min(eccentricity(g, v) for v in g.vertices)


def graph_diameter(g: Graph):
    if g.n == 0:
        return 0
    return max(eccentricity(g, v) for v in g.vertices)


def set_radius(g: Graph, xs: Iterable[int]):
    """Radius of a vertex set within ``g``: the smallest ``k`` such that
    some vertex of ``g`` (not necessarily in the set) has every member of
    the set within distance ``k``.  The empty set has radius 0."""
    xs = check_vertex_set(g, xs)
    if not xs:
        return 0
    best = INFINITY
    for v in g.vertices:
        dist = bfs_distances(g, v)
        worst = max(dist[x] for x in xs)
        if worst < best:
            best = worst
        if best == 0:
            break
    return best


# ---------------------------------------------------------------------------
# balls and parts


def ball(g: Graph, xs: int | Iterable[int], r: int) -> frozenset[int]:
    """Closed ball ``B_g(xs, r)``: all vertices within distance ``r`` of the
    vertex (or vertex set) ``xs``."""
    if not isinstance(r, int) or r < 0:
        raise InputError(f"ball radius must be a non-negative integer, got {r!r}")
    if isinstance(xs, int):
        xs = (xs,)
    xs = frozenset(xs)
    if not xs:
        return frozenset()
    dist = bfs_distances(g, xs)
    return frozenset(v for v in g.vertices if dist[v] <= r)


def ball_closure(g: Graph, xs: Iterable[int], k: int) -> frozenset[int]:
    """The ball ``B_g(xs, k)``, checked to induce a connected subgraph of
    radius at most ``3k``.

    Precondition: some member ``u`` of ``xs`` has every other member within
    distance ``2k``.  Violations raise :class:`PreconditionError` naming a
    witnessing far pair.
    """
    xs = check_vertex_set(g, xs)
    if not isinstance(k, int) or k < 0:
        raise InputError(f"radius must be a non-negative integer, got {k!r}")
    if not xs:
        return frozenset()
    first_bad: tuple[int, int] | None = None
    for u in sorted(xs):
        dist = bfs_distances(g, u)
        far = max(xs, key=lambda x: (dist[x] is INFINITY, dist[x] if dist[x] is not INFINITY else 0, x))
        if dist[far] <= 2 * k:
            result = ball(g, xs, k)
            if part_radius(g, result) > 3 * k:
                raise InternalInvariantError(
                    f"ball closure of radius {k} induced radius above {3 * k}"
                )
            return result
        if first_bad is None:
            first_bad = (u, far)
    u, far = first_bad  # type: ignore[misc]
    raise PreconditionError(
        f"no member of the set is within distance {2 * k} of all others: "
        f"vertices {u} and {far} are {bfs_distances(g, u)[far]} apart"
    )


def induced_distances(g: Graph, within: Iterable[int], sources: int | Iterable[int]) -> dict:
    """Distances inside the induced subgraph ``g[within]``, keyed by vertex
    of ``within``; unreachable members map to INFINITY."""
    members = check_vertex_set(g, within)
    if isinstance(sources, int):
        sources = (sources,)
    dist: dict = {v: INFINITY for v in members}
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        if s not in members:
            raise InputError(f"source {s} is outside the induced vertex set")
        dist[s] = 0
        queue.append(s)
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.neighbors(x):
            if y in members and dist[y] is INFINITY:
                dist[y] = d
                queue.append(y)
    return dist


def part_radius(g: Graph, xs: Iterable[int]):
    """Radius of the induced subgraph ``g[xs]`` measured inside itself:
    0 for the empty set, INFINITY if ``g[xs]`` is disconnected."""
    xs = check_vertex_set(g, xs)
    if not xs:
        return 0
    order = sorted(xs)
    index = {v: i for i, v in enumerate(order)}
    size = len(order)
    adj = [
        [index[u] for u in g.neighbors(v) if u in xs] for v in order
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

    d_first = bfs(0)
    if min(d_first) < 0:
        return INFINITY
    far = 0
    for i in range(1, size):
        if d_first[i] > d_first[far]:
            far = i
    d_far = bfs(far)
    # Any centre v has eccentricity at least its distance to either anchor,
    # so scanning candidates by that lower bound allows an early exit.
    lower = [max(d_first[i], d_far[i]) for i in range(size)]
    best = INFINITY
    for i in sorted(range(size), key=lambda i: (lower[i], i)):
        if lower[i] >= best:
            break
        ecc = max(bfs(i))
        if ecc < best:
            best = ecc
    return best


# ---------------------------------------------------------------------------
# components


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of ``g`` (or of the induced subgraph
    ``g[within]``), each sorted ascending, ordered by smallest member."""
    members = set(g.vertices) if within is None else set(check_vertex_set(g, within))
    seen: set[int] = set()
    out: list[list[int]] = []
    for start in sorted(members):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in members and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components(g)) == 1


# ---------------------------------------------------------------------------
# shortest paths (deterministic)


def path_to_set(g: Graph, v: int, targets: Iterable[int]) -> list[int] | None:
    """The lexicographically least shortest path from ``v`` to the nearest
    member of ``targets`` (inclusive), or None if unreachable."""
    check_vertex(g, v)
    targets = check_vertex_set(g, targets, "target set")
    if not targets:
        raise InputError("target set is empty")
    dist = bfs_distances(g, targets)
    if dist[v] is INFINITY:
        return None
    path = [v]
    x = v
    while dist[x] > 0:
        x = min(y for y in g.neighbors(x) if dist[y] == dist[x] - 1)
        path.append(x)
    return path


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    """The lexicographically least shortest ``u``--``v`` path."""
    return path_to_set(g, u, (v,))


def is_path_in_graph(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a simple path of ``g`` (vertices distinct,
    consecutive vertices adjacent).  A single vertex counts."""
    if len(seq) == 0 or len(set(seq)) != len(seq):
        return False
    if any(not (isinstance(v, int) and 0 <= v < g.n) for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_shortest_path(g: Graph, seq: Sequence[int]) -> bool:
    if not is_path_in_graph(g, seq):
        return False
    return distance(g, seq[0], seq[-1]) == len(seq) - 1


def is_geodesic_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a path whose every subpath is a shortest path,
    i.e. distances along the path equal distances in ``g``."""
    if not is_path_in_graph(g, seq):
        return False
    for i, u in enumerate(seq):
        dist = bfs_distances(g, u)
        for j in range(i + 1, len(seq)):
            if dist[seq[j]] != j - i:
                return False
    return True


def longest_geodesic_path(g: Graph) -> list[int]:
    """A longest geodesic (isometrically embedded) path of ``g``, i.e. a
    shortest path realizing the diameter.

    Deterministic: among all diametral pairs ``(u, v)`` with ``u < v`` the
    lexicographically least is used, and the path is the lexicographically
    least shortest path between them.  Requires ``g`` connected, non-empty.
    """
    if g.n == 0:
        raise PreconditionError("the empty graph has no geodesic path")
    ecc = [bfs_distances(g, v) for v in g.vertices]
    diam = 0
    pair = (0, 0)
    for u in g.vertices:
        for v in range(u + 1, g.n):
            d = ecc[u][v]
            if d is INFINITY:
                raise PreconditionError("graph is disconnected")
            if d > diam:
                diam = d
                pair = (u, v)
    if diam == 0:
        return [0]
    path = shortest_path(g, pair[0], pair[1])
    assert path is not None
    return path


# ---------------------------------------------------------------------------
# subgraphs


def induced_subgraph(g: Graph, xs: Iterable[int]) -> tuple[Graph, dict[int, int], list[int]]:
    """``g[xs]`` relabeled onto ``0..|xs|-1`` in ascending vertex order.

    Returns ``(subgraph, to_new, to_old)`` where ``to_new`` maps original
    labels to new ones and ``to_old[i]`` is the original label of ``i``.
    """
    to_old = sorted(check_vertex_set(g, xs))
    to_new = {v: i for i, v in enumerate(to_old)}
    edges = [
        (to_new[u], to_new[v])
        for u, v in g.edges
        if u in to_new and v in to_new
    ]
    return Graph(len(to_old), edges), to_new, to_old


# ---------------------------------------------------------------------------
# text format
#
#   # comment lines (and trailing comments) are ignored
#   n m
#   u v          (m lines, 0 <= u < v < n, sorted when written)


def parse_graph(text: str) -> Graph:
    """Parse the plain text graph format; raises :class:`FormatError` with
    a line number on any violation."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise FormatError("missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2:
        raise FormatError("header must be exactly 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError("header fields must be integers", lineno) from None
    if n < 0 or m < 0:
        raise FormatError("header fields must be non-negative", lineno)
    if len(rows) - 1 != m:
        raise FormatError(
            f"expected {m} edge lines, found {len(rows) - 1}", rows[0][0]
        )
    edges: list[tuple[int, int]] = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise FormatError("edge line must be exactly 'u v'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError("edge endpoints must be integers", lineno) from None
        if not u < v:
            raise FormatError(f"edge must satisfy u < v, got {u} {v}", lineno)
        if not (0 <= u and v < n):
            raise FormatError(f"edge {u} {v} out of range for {n} vertices", lineno)
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except InputError as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    """Canonical text form: header plus edges sorted ascending."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
