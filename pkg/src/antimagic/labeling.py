"""Constructive antimagic labelings for pan-base and spider-base coronas.

The constructions hand out the label range {1..|E|} in contiguous blocks:
internal edges of each attachment first, then cross fans whose order is
driven by ranking vertices on their partial sums, then the remaining base
edges. Under the checked hypotheses every vertex sum lands in a strictly
increasing chain, which is what makes the result antimagic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .conditions import check_conditions
from .corona import CoronaInstance, PanType1, SpiderType2
from .graphs import Graph, pair_index


class LabelingError(ValueError):
    """Invalid labeling operation."""


class AlreadyLabeled(LabelingError):
    """An edge or a label was used twice."""


class ConditionsNotMet(LabelingError):
    """Instance fails the construction's hypotheses and force was not set."""

    def __init__(self, failed_ids: Sequence[str]):
        super().__init__(f"conditions not met: {', '.join(failed_ids)}")
        self.failed_ids = tuple(failed_ids)


class WrongBaseType(LabelingError):
    """Instance base does not match the requested construction."""


class NotUniversal(LabelingError):
    """The designated hub is not adjacent to every other vertex."""


class ConstructionFailed(LabelingError):
    """A post-verified construction produced duplicate sums."""


@dataclass(frozen=True)
class Labeling:
    """Edge labels by edge id. Constructions always emit a bijection onto
    {1..total_edges}; the verifier re-checks rather than trusting this.
    """

    labels: tuple[int, ...]
    total_edges: int


@dataclass(frozen=True)
class RankedBlock:
    """A block's vertices ordered by partial sum at ranking time, ties by id."""

    block: int
    vertices: tuple[int, ...]
    partial_sums: tuple[int, ...]


@dataclass(frozen=True)
class ChainCheck:
    """One named inequality of a construction's sum chain."""

    name: str
    left: int
    right: int
    left_sum: int
    right_sum: int

    @property
    def holds(self) -> bool:
        return self.left_sum < self.right_sum


@dataclass(frozen=True)
class LabelingRun:
    """A labeling together with the ranking and chain evidence of its run."""

    labeling: Labeling
    ranked_blocks: tuple[RankedBlock, ...]
    chain: tuple[ChainCheck, ...]
    offsets: tuple[tuple[str, int], ...]

    @property
    def chain_holds(self) -> bool:
        return all(c.holds for c in self.chain)

    def offset(self, name: str) -> int:
        return dict(self.offsets)[name]


class LabelState:
    """Mutable label assignment while a construction runs.

    Tracks per-vertex partial sums so ranking can read them directly.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.labels: list[int | None] = [None] * graph.edge_count
        self._pair = pair_index(graph)
        self._used: set[int] = set()
        self._partial = [0] * graph.vertex_count

    def assign(self, edge_id: int, label: int) -> None:
        if self.labels[edge_id] is not None:
            raise AlreadyLabeled(f"edge {edge_id} already labeled")
        if label in self._used:
            raise AlreadyLabeled(f"label {label} already used")
        if not (1 <= label <= self.graph.edge_count):
            raise LabelingError(f"label {label} outside 1..{self.graph.edge_count}")
        self.labels[edge_id] = label
        self._used.add(label)
        u, v = self.graph.edges[edge_id]
        self._partial[u] += label
        self._partial[v] += label

    def assign_pair(self, u: int, v: int, label: int) -> None:
        self.assign(self._pair[(min(u, v), max(u, v))], label)

    def partial_sum(self, v: int) -> int:
        return self._partial[v]

    def partial_sums_map(self) -> dict[int, int]:
        return {v: s for v, s in enumerate(self._partial)}

    def finish(self) -> Labeling:
        if any(lab is None for lab in self.labels):
            missing = [i for i, lab in enumerate(self.labels) if lab is None]
            raise LabelingError(f"unlabeled edges remain: {missing[:5]}...")
        return Labeling(tuple(self.labels), self.graph.edge_count)


def label_block(state: LabelState, edge_ids: Sequence[int], start: int) -> int:
    """Give the edges the consecutive labels start+1..start+len; return the
    last label used."""
    for j, edge_id in enumerate(edge_ids, start=1):
        state.assign(edge_id, start + j)
    return start + len(edge_ids)


def rank_by_partial_sums(
    vertices: Iterable[int],
    partial_sums: Mapping[int, int],
    block: int = -1,
) -> RankedBlock:
    """Order vertices by partial sum, non-decreasing; ties by ascending id."""
    ordered = sorted(vertices, key=lambda v: (partial_sums[v], v))
    return RankedBlock(
        block=block,
        vertices=tuple(ordered),
        partial_sums=tuple(partial_sums[v] for v in ordered),
    )


def label_type1(inst: CoronaInstance, *, force: bool = False) -> Labeling:
    """Pan-base construction; see run_type1 for the full run evidence."""
    return run_type1(inst, force=force).labeling


def run_type1(inst: CoronaInstance, *, force: bool = False) -> LabelingRun:
    """Label a pan-base corona.

    Stage 1 gives the pendant star 1..n0+1 (base edge u0-ur gets 1, the
    cross edges 2..n0+1 in attachment order) and every internal block a
    consecutive run. Stage 2 labels all cross fans in ranked order, block by
    block, lower base endpoint first. Stage 3 labels the rim edges.
    """
    if not isinstance(inst.base, PanType1):
        raise WrongBaseType("run_type1 needs a pan-base instance")
    _require_conditions(inst, force)
    r = inst.base.r
    blocks = inst.blocks
    n = [b.graph.vertex_count for b in blocks]
    q = [b.graph.edge_count for b in blocks]
    st = LabelState(inst.composite)
    pendant, hub = 0, r  # u0 and ur share the pendant edge

    st.assign_pair(pendant, hub, 1)
    for j, v in enumerate(blocks[0].vertex_ids, start=1):
        st.assign_pair(pendant, v, 1 + j)
    nxt = n[0] + 1
    for blk in blocks:
        nxt = label_block(st, blk.edge_ids, nxt)
    c_off = nxt
    assert c_off == n[0] + 1 + sum(q)

    ranked = tuple(
        rank_by_partial_sums(blk.vertex_ids, st.partial_sums_map(), block=blk.index)
        for blk in blocks
    )

    for i, v in enumerate(ranked[0].vertices, start=1):
        st.assign_pair(hub, v, c_off + i)
    off = c_off + n[0]
    for j in range(1, r + 1):
        lo, hi = blocks[j].endpoints
        for i, v in enumerate(ranked[j].vertices, start=1):
            st.assign_pair(lo, v, off + i)
        for i, v in enumerate(ranked[j].vertices, start=1):
            st.assign_pair(hi, v, off + n[j] + i)
        off += 2 * n[j]
    b_off = off
    assert b_off == c_off + n[0] + 2 * sum(n[1:])

    st.assign_pair(1, 2, b_off + 1)
    for i in range(1, r - 1):
        st.assign_pair(i, i + 2, b_off + i + 1)
    st.assign_pair(r - 1, r, b_off + r)
    labeling = st.finish()

    entries: list[tuple[str, int]] = [("u0", pendant)]
    for rk in ranked:
        for k, v in enumerate(rk.vertices, start=1):
            entries.append((f"a{rk.block}_{k}", v))
    entries += [(f"u{j}", j) for j in range(1, r + 1)]
    chain = _evaluate_chain(inst.composite, labeling, entries)
    return LabelingRun(
        labeling=labeling,
        ranked_blocks=ranked,
        chain=chain,
        offsets=(("c", c_off), ("b", b_off)),
    )


def label_type2(inst: CoronaInstance, *, force: bool = False) -> Labeling:
    """Spider-base construction; see run_type2 for the full run evidence."""
    return run_type2(inst, force=force).labeling


def run_type2(inst: CoronaInstance, *, force: bool = False) -> LabelingRun:
    """Label a spider-base corona.

    For p = 1 the center is universal and the hub construction applies. For
    p >= 2 the legs are consumed from the tips inward: each tip block gets
    its internal run, the tip cross fan in attachment order, then the next
    leg vertex's whole star in ranked order (which labels the outermost leg
    edge on the way). Interior blocks get internal runs, inner cross fans in
    attachment order, outer cross fans in ranked order, then the remaining
    leg edges are labeled round-robin across the legs. The three center
    blocks and the center star close out the range, again in ranked order.
    """
    if not isinstance(inst.base, SpiderType2):
        raise WrongBaseType("run_type2 needs a spider-base instance")
    _require_conditions(inst, force)
    p = inst.base.p
    if p == 1:
        labeling, hub_rank = _universal_run(inst.composite, hub=0)
        return LabelingRun(
            labeling=labeling,
            ranked_blocks=(hub_rank,),
            chain=(),
            offsets=(),
        )

    st = LabelState(inst.composite)
    block_of = {b.index: b for b in inst.blocks}
    m = {i: b.graph.vertex_count for i, b in block_of.items()}
    h = {i: b.graph.edge_count for i, b in block_of.items()}

    def leg_vertex(leg: int, depth: int) -> int:
        return 0 if depth == 0 else leg * p + depth

    ranked: dict[int, RankedBlock] = {}
    checkpoints: list[tuple[str, int]] = []
    last = 0
    # Tip blocks 1..3 on the x, y, z legs.
    for leg, t in enumerate((1, 2, 3)):
        blk = block_of[t]
        last = label_block(st, blk.edge_ids, last)
        tip = leg_vertex(leg, p)
        for i, v in enumerate(blk.vertex_ids, start=1):
            st.assign_pair(tip, v, last + i)
        last += m[t]
        rk = rank_by_partial_sums(
            [tip, *blk.vertex_ids], st.partial_sums_map(), block=t
        )
        ranked[t] = rk
        star_center = leg_vertex(leg, p - 1)
        for j, v in enumerate(rk.vertices, start=1):
            st.assign_pair(star_center, v, last + j)
        last += m[t] + 1
        if t == 1:
            checkpoints.append(("A", last))
            assert last == h[1] + 2 * m[1] + 1
        elif t == 2:
            checkpoints.append(("B", last))
            assert last == h[1] + 2 * m[1] + 1 + h[2] + 2 * m[2] + 1
    z_off = last
    checkpoints.append(("z", z_off))
    assert z_off == h[1] + 2 * m[1] + 2 + h[2] + 2 * m[2] + h[3] + 2 * m[3] + 1

    mids = list(range(4, 3 * p - 2))  # empty when p == 2

    def leg_and_depth(t: int) -> tuple[int, int]:
        return (t - 1) % 3, (t - 1) // 3

    for t in mids:
        last = label_block(st, block_of[t].edge_ids, last)
    l_off = last
    checkpoints.append(("L", l_off))
    assert l_off == z_off + sum(h[t] for t in mids)

    for t in mids:
        leg, depth = leg_and_depth(t)
        inner = leg_vertex(leg, p - depth - 1)
        for i, v in enumerate(block_of[t].vertex_ids, start=1):
            st.assign_pair(inner, v, last + i)
        last += m[t]
    n_off = last
    checkpoints.append(("N", n_off))
    assert n_off == l_off + sum(m[t] for t in mids)

    for t in mids:
        ranked[t] = rank_by_partial_sums(
            block_of[t].vertex_ids, st.partial_sums_map(), block=t
        )
    for t in mids:
        leg, depth = leg_and_depth(t)
        outer = leg_vertex(leg, p - depth)
        for i, v in enumerate(ranked[t].vertices, start=1):
            st.assign_pair(outer, v, last + i)
        last += m[t]
    s_off = last
    checkpoints.append(("S", s_off))
    assert s_off == n_off + sum(m[t] for t in mids)

    # Remaining leg edges, round-robin x, y, z from the outside in.
    for k in range(1, p - 1):
        for leg in range(3):
            st.assign_pair(
                leg_vertex(leg, p - k),
                leg_vertex(leg, p - k - 1),
                s_off + 3 * (k - 1) + leg + 1,
            )
    last = s_off + 3 * (p - 2)

    centers = (3 * p - 2, 3 * p - 1, 3 * p)
    for t in centers:
        last = label_block(st, block_of[t].edge_ids, last)
    x_off = last
    checkpoints.append(("X", x_off))
    assert x_off == s_off + (3 * p - 6) + sum(h[t] for t in centers)

    for leg, t in enumerate(centers):
        anchor = leg_vertex(leg, 1)
        for i, v in enumerate(block_of[t].vertex_ids, start=1):
            st.assign_pair(anchor, v, last + i)
        last += m[t]
    c_pool = [leg_vertex(0, 1), leg_vertex(1, 1), leg_vertex(2, 1)]
    for t in centers:
        c_pool.extend(block_of[t].vertex_ids)
    c_rank = rank_by_partial_sums(c_pool, st.partial_sums_map(), block=-1)
    checkpoints.append(("M", len(c_pool)))
    for i, v in enumerate(c_rank.vertices, start=1):
        st.assign_pair(0, v, last + i)
    labeling = st.finish()

    entries: list[tuple[str, int]] = []
    for t in (1, 2, 3, *mids):
        rk = ranked[t]
        for k, v in enumerate(rk.vertices, start=1):
            entries.append((f"a{t}_{k}", v))
    for k in range(1, p - 1):
        depth = p - k
        for leg, prefix in enumerate("xyz"):
            entries.append((f"{prefix}{depth}", leg_vertex(leg, depth)))
    for i, v in enumerate(c_rank.vertices, start=1):
        entries.append((f"c{i}", v))
    entries.append(("v0", 0))
    chain = _evaluate_chain(inst.composite, labeling, entries)
    return LabelingRun(
        labeling=labeling,
        ranked_blocks=tuple(ranked[t] for t in sorted(ranked)) + (c_rank,),
        chain=chain,
        offsets=tuple(checkpoints),
    )


def universal_vertex_labeling(g: Graph, hub: int) -> Labeling:
    """Label a graph whose hub is adjacent to every other vertex.

    Non-hub edges take 1..k in edge order; the hub star takes the remaining
    labels along the ranked partial sums of its neighbors. The result is
    post-verified and rejected if any two sums collide.
    """
    labeling, _ = _universal_run(g, hub)
    return labeling


def _universal_run(g: Graph, hub: int) -> tuple[Labeling, RankedBlock]:
    others = [v for v in range(g.vertex_count) if v != hub]
    adjacent = set()
    for u, v in g.edges:
        if u == hub:
            adjacent.add(v)
        elif v == hub:
            adjacent.add(u)
    if set(others) - adjacent:
        raise NotUniversal(f"vertex {hub} is not adjacent to every other vertex")
    st = LabelState(g)
    non_hub_edges = [i for i, (u, v) in enumerate(g.edges) if hub not in (u, v)]
    nxt = label_block(st, non_hub_edges, 0)
    rk = rank_by_partial_sums(others, st.partial_sums_map())
    for i, v in enumerate(rk.vertices, start=1):
        st.assign_pair(hub, v, nxt + i)
    labeling = st.finish()
    sums = _vertex_sums(g, labeling)
    if len(set(sums)) != g.vertex_count:
        raise ConstructionFailed("hub construction produced duplicate sums")
    return labeling, rk


def _require_conditions(inst: CoronaInstance, force: bool) -> None:
    report = check_conditions(inst)
    if not report.overall and not force:
        raise ConditionsNotMet(report.failed_ids)


def _vertex_sums(g: Graph, labeling: Labeling) -> list[int]:
    sums = [0] * g.vertex_count
    for edge_id, (u, v) in enumerate(g.edges):
        label = labeling.labels[edge_id]
        sums[u] += label
        sums[v] += label
    return sums


def _evaluate_chain(
    g: Graph,
    labeling: Labeling,
    entries: Sequence[tuple[str, int]],
) -> tuple[ChainCheck, ...]:
    sums = _vertex_sums(g, labeling)
    checks = []
    for (left_name, left), (right_name, right) in zip(entries, entries[1:]):
        checks.append(
            ChainCheck(
                name=f"w({left_name})<w({right_name})",
                left=left,
                right=right,
                left_sum=sums[left],
                right_sum=sums[right],
            )
        )
    return tuple(checks)
