"""Generalized edge corona construction over pan and spider bases.

The composite joins both endpoints of base edge i to every vertex of the
attachment placed on that edge. Every edge of the composite carries a role
tag (base, internal to a block, or cross edge).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, is_connected, make_graph, preset_graph


class CoronaError(ValueError):
    """Invalid corona instance construction."""


class WrongAttachmentCount(CoronaError):
    """Attachment count does not match the base edge count."""


class DisconnectedAttachment(CoronaError):
    """An attachment graph is not connected."""


class AttachmentTooSmall(CoronaError):
    """An attachment graph has fewer than two vertices."""


class BadBaseParam(CoronaError):
    """Base parameter outside the supported range."""


@dataclass(frozen=True)
class PanType1:
    """Pan base on vertices u0..ur with the pendant u0, r >= 3."""

    r: int


@dataclass(frozen=True)
class SpiderType2:
    """Spider base with center v0 and three legs of p vertices each."""

    p: int


BaseSpec = PanType1 | SpiderType2


@dataclass(frozen=True)
class BaseEdgeRole:
    index: int


@dataclass(frozen=True)
class InternalEdgeRole:
    block: int


@dataclass(frozen=True)
class CrossEdgeRole:
    block: int
    base_vertex: int
    attachment_index: int  # 1-based position of the attachment vertex in its block


EdgeRole = BaseEdgeRole | InternalEdgeRole | CrossEdgeRole


@dataclass(frozen=True)
class Block:
    """One attachment embedded in the composite."""

    index: int  # block id: 0..r for pan bases, 1..3p for spider bases
    graph: Graph
    vertex_start: int  # composite id of the block's first vertex
    edge_ids: tuple[int, ...]  # composite ids of the block's internal edges
    endpoints: tuple[int, int]  # composite ids of its base edge, (min, max)

    @property
    def vertex_ids(self) -> range:
        return range(self.vertex_start, self.vertex_start + self.graph.vertex_count)


@dataclass(frozen=True)
class CoronaInstance:
    base: BaseSpec
    base_graph: Graph
    attachments: tuple[Graph, ...]
    composite: Graph
    edge_roles: tuple[EdgeRole, ...]
    blocks: tuple[Block, ...]

    @property
    def kind(self) -> str:
        return "pan" if isinstance(self.base, PanType1) else "spider"

    def block(self, index: int) -> Block:
        offset = 0 if isinstance(self.base, PanType1) else 1
        return self.blocks[index - offset]

    @property
    def attachment_orders(self) -> tuple[int, ...]:
        """|V(H_i)| per block, in block order (n_i / m_i)."""
        return tuple(g.vertex_count for g in self.attachments)

    @property
    def attachment_edge_counts(self) -> tuple[int, ...]:
        """|E(H_i)| per block, in block order (q_i / h_i)."""
        return tuple(g.edge_count for g in self.attachments)


def normalize_attachments(attachments: Sequence[Graph]) -> tuple[Graph, ...]:
    """Stable sort by vertex count, non-decreasing.

    Never applied implicitly by the builders: the size ordering is a stated
    hypothesis of the labelings, and silent reordering would mask violations.
    """
    return tuple(sorted(attachments, key=lambda g: g.vertex_count))


def build_type1(r: int, attachments: Sequence[Graph]) -> CoronaInstance:
    """Corona over the pan base: block 0 sits on the pendant edge u0-ur,
    block 1 on u1-u2, block j on u(j-1)-u(j+1), block r on u(r-1)-ur.
    """
    if r < 3:
        raise BadBaseParam(f"pan base needs r >= 3, got {r}")
    base = preset_graph("pan", [r])
    _check_attachments(attachments, base.edge_count)
    return _assemble(PanType1(r), base, tuple(attachments), first_block=0)


def build_type2(p: int, attachments: Sequence[Graph]) -> CoronaInstance:
    """Corona over the spider base: blocks walk each leg from the tip toward
    the center (x, y, z interleaved), and blocks 3p-2..3p sit on the three
    center edges.
    """
    if p < 1:
        raise BadBaseParam(f"spider base needs p >= 1, got {p}")
    base = preset_graph("spider", [p])
    _check_attachments(attachments, base.edge_count)
    return _assemble(SpiderType2(p), base, tuple(attachments), first_block=1)


def _check_attachments(attachments: Sequence[Graph], expected: int) -> None:
    if len(attachments) != expected:
        raise WrongAttachmentCount(
            f"expected {expected} attachments, got {len(attachments)}"
        )
    for pos, g in enumerate(attachments):
        if g.vertex_count < 2:
            raise AttachmentTooSmall(f"attachment at position {pos} has < 2 vertices")
        if not is_connected(g):
            raise DisconnectedAttachment(f"attachment at position {pos} is disconnected")


def _assemble(
    spec: BaseSpec,
    base: Graph,
    attachments: tuple[Graph, ...],
    first_block: int,
) -> CoronaInstance:
    names = list(base.names or (str(i) for i in range(base.vertex_count)))
    edges: list[tuple[int, int]] = []
    roles: list[EdgeRole] = []
    for k, (u, v) in enumerate(base.edges):
        edges.append((u, v))
        roles.append(BaseEdgeRole(k))

    blocks: list[Block] = []
    next_vertex = base.vertex_count
    for k, h in enumerate(attachments):
        block_id = first_block + k
        start = next_vertex
        names += [f"v{block_id}_{j}" for j in range(1, h.vertex_count + 1)]
        internal_ids = []
        for a, b in h.edges:
            internal_ids.append(len(edges))
            edges.append((start + a, start + b))
            roles.append(InternalEdgeRole(block_id))
        lo, hi = base.edges[k]
        for endpoint in (lo, hi):
            for j in range(h.vertex_count):
                edges.append((min(endpoint, start + j), max(endpoint, start + j)))
                roles.append(CrossEdgeRole(block_id, endpoint, j + 1))
        blocks.append(
            Block(
                index=block_id,
                graph=h,
                vertex_start=start,
                edge_ids=tuple(internal_ids),
                endpoints=(lo, hi),
            )
        )
        next_vertex += h.vertex_count

    composite = make_graph(next_vertex, edges, names)
    total_orders = sum(g.vertex_count for g in attachments)
    total_internal = sum(g.edge_count for g in attachments)
    assert composite.vertex_count == base.vertex_count + total_orders
    assert composite.edge_count == base.edge_count + total_internal + 2 * total_orders
    assert len(roles) == composite.edge_count
    return CoronaInstance(
        base=spec,
        base_graph=base,
        attachments=attachments,
        composite=composite,
        edge_roles=tuple(roles),
        blocks=tuple(blocks),
    )
