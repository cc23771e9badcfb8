"""Immutable simple graphs, canonical preset families, and degree computations.

Edge sequences are ordered: the labeling constructions hand out consecutive
labels along a graph's edge order, so the order is part of each preset's
contract, not an implementation detail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(GraphError):
    """The same unordered vertex pair appears more than once."""


class IndexOutOfRange(GraphError):
    """An edge endpoint is not a valid vertex index."""


class BadParams(GraphError):
    """Preset parameters are out of range for the requested family."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a fixed edge order.

    Edges are stored canonically as (u, v) with u < v. ``names`` is an
    optional per-vertex display name used in reports.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def name_of(self, v: int) -> str:
        if self.names is not None:
            return self.names[v]
        return str(v)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int


def make_graph(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    names: Sequence[str] | None = None,
) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Each pair is stored as (min, max); the sequence order is the input order.
    """
    if vertex_count < 0:
        raise BadParams(f"vertex_count must be non-negative, got {vertex_count}")
    canonical: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} repeated")
        seen.add(e)
        canonical.append(e)
    name_tuple: tuple[str, ...] | None = None
    if names is not None:
        name_tuple = tuple(names)
        if len(name_tuple) != vertex_count:
            raise BadParams("names length must equal vertex_count")
    return Graph(vertex_count, tuple(canonical), name_tuple)


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = [0] * g.vertex_count
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    return DegreeProfile(
        degrees=tuple(degrees),
        max_degree=max(degrees, default=0),
        min_degree=min(degrees, default=0),
    )


def incident_edges(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Edge ids incident to each vertex, in edge order."""
    inc: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(g.edges):
        inc[u].append(i)
        inc[v].append(i)
    return tuple(tuple(lst) for lst in inc)


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def pair_index(g: Graph) -> dict[tuple[int, int], int]:
    """Map each canonical vertex pair to its edge id."""
    return {e: i for i, e in enumerate(g.edges)}


PRESET_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "diamond",
    "pan",
    "spider",
)


def preset_graph(kind: str, params: Sequence[int] = ()) -> Graph:
    """Build a named preset with its canonical edge order.

    Orders: paths in traversal order; cycles, complete and complete
    bipartite graphs in lexicographic pair order; stars hub-to-leaf; the
    diamond lists its two degree-3 vertices first. pan(r) and spider(p)
    order edges so that edge i is the attachment site of block i in the
    corona constructions.
    """
    params = list(params)
    if kind == "path":
        (n,) = _expect_params(kind, params, 1)
        if n < 1:
            raise BadParams("path needs n >= 1")
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = _expect_params(kind, params, 1)
        if n < 3:
            raise BadParams("cycle needs n >= 3")
        edges = sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
        return make_graph(n, edges)
    if kind == "complete":
        (n,) = _expect_params(kind, params, 1)
        if n < 1:
            raise BadParams("complete needs n >= 1")
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "star":
        (n,) = _expect_params(kind, params, 1)
        if n < 2:
            raise BadParams("star needs n >= 2")
        return make_graph(n, [(0, i) for i in range(1, n)])
    if kind == "complete_bipartite":
        a, b = _expect_params(kind, params, 2)
        if a < 1 or b < 1:
            raise BadParams("complete_bipartite needs a, b >= 1")
        return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "diamond":
        _expect_params(kind, params, 0)
        return make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    if kind == "pan":
        (r,) = _expect_params(kind, params, 1)
        if r < 3:
            raise BadParams("pan needs r >= 3")
        edges = [(0, r), (1, 2)]
        edges += [(i, i + 2) for i in range(1, r - 1)]
        edges += [(r - 1, r)]
        names = tuple(f"u{i}" for i in range(r + 1))
        return make_graph(r + 1, edges, names)
    if kind == "spider":
        (p,) = _expect_params(kind, params, 1)
        if p < 1:
            raise BadParams("spider needs p >= 1")
        edges = []
        for t in range(1, 3 * p + 1):
            leg = (t - 1) % 3
            depth = (t - 1) // 3
            a = spider_leg_vertex(p, leg, p - depth)
            b = spider_leg_vertex(p, leg, p - depth - 1)
            edges.append((min(a, b), max(a, b)))
        names = ["v0"]
        for prefix in ("x", "y", "z"):
            names += [f"{prefix}{k}" for k in range(1, p + 1)]
        return make_graph(3 * p + 1, edges, names)
    raise BadParams(f"unknown preset kind {kind!r}")


def spider_leg_vertex(p: int, leg: int, depth: int) -> int:
    """Vertex id of the depth-th vertex on a leg (depth 0 is the center)."""
    if depth == 0:
        return 0
    return leg * p + depth


def _expect_params(kind: str, params: list[int], count: int) -> list[int]:
    if len(params) != count:
        raise BadParams(f"{kind} expects {count} parameter(s), got {len(params)}")
    return params
