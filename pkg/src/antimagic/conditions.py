"""Hypothesis checks for the constructive labelings.

Each check compares concrete degree or size quantities of a built instance
and reports a named verdict with its numeric witnesses. Condition ids follow
the stable T41/T42/T43 naming used by the JSON reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corona import CoronaInstance, PanType1
from .graphs import degree_profile


@dataclass(frozen=True)
class Condition:
    id: str
    description: str
    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class ConditionReport:
    conditions: tuple[Condition, ...]

    @property
    def overall(self) -> bool:
        return all(c.holds for c in self.conditions)

    @property
    def failed_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.conditions if not c.holds)

    def __getitem__(self, condition_id: str) -> Condition:
        for c in self.conditions:
            if c.id == condition_id:
                return c
        raise KeyError(condition_id)


def check_conditions(inst: CoronaInstance) -> ConditionReport:
    if isinstance(inst.base, PanType1):
        return _pan_conditions(inst)
    if inst.base.p == 1:
        # The single-leg spider composite has a universal center; the
        # labeling needs no hypotheses.
        return ConditionReport(conditions=())
    if inst.base.p == 2:
        return _spider_p2_conditions(inst)
    return _spider_general_conditions(inst)


def _pan_conditions(inst: CoronaInstance) -> ConditionReport:
    r = inst.base.r
    comp_deg = degree_profile(inst.composite).degrees
    att = [degree_profile(g) for g in inst.attachments]
    sizes = inst.attachment_orders
    out: list[Condition] = []
    for i in range(r):
        out.append(
            _cond(
                f"T41-size-{i}",
                f"|V(H{i})| <= |V(H{i + 1})|",
                sizes[i],
                sizes[i + 1],
            )
        )
    out.append(
        Condition(
            id="T41-h0h1",
            description="max deg H0 < min deg H1",
            lhs=att[0].max_degree,
            rhs=att[1].min_degree,
            holds=att[0].max_degree < att[1].min_degree,
        )
    )
    for i in range(1, r):
        out.append(
            _cond(
                f"T41-chain-{i}",
                f"max deg H{i} <= min deg H{i + 1}",
                att[i].max_degree,
                att[i + 1].min_degree,
            )
        )
    pendant_deg = comp_deg[0]
    for i in range(r + 1):
        out.append(
            _cond(
                f"T41-star-{i}",
                f"composite deg u0 <= min composite deg over H{i}",
                pendant_deg,
                _block_min_deg(inst, comp_deg, i),
            )
        )
    out.append(
        _cond(
            "T41-cap",
            f"max composite deg over H{r} <= composite deg u1",
            _block_max_deg(inst, comp_deg, r),
            comp_deg[1],
        )
    )
    return ConditionReport(tuple(out))


def _spider_p2_conditions(inst: CoronaInstance) -> ConditionReport:
    comp_deg = degree_profile(inst.composite).degrees
    att = {b.index: degree_profile(b.graph) for b in inst.blocks}
    sizes = {b.index: b.graph.vertex_count for b in inst.blocks}
    out: list[Condition] = []
    for i in range(1, 6):
        out.append(
            _cond(
                f"T42-size-{i}",
                f"|V(H{i})| <= |V(H{i + 1})|",
                sizes[i],
                sizes[i + 1],
            )
        )
    for i in range(1, 6):
        out.append(
            _cond(
                f"T42-chain-{i}",
                f"max deg H{i} <= min deg H{i + 1}",
                att[i].max_degree,
                att[i + 1].min_degree,
            )
        )
    # Tip vertices: x2 = 2, y2 = 4, z2 = 6 when p = 2.
    for cond_id, tip, block in (
        ("T42-deg-x2", 2, 2),
        ("T42-deg-y2", 4, 3),
        ("T42-deg-z2", 6, 4),
    ):
        out.append(
            _cond(
                cond_id,
                f"composite deg of leg tip <= min composite deg over H{block}",
                comp_deg[tip],
                _block_min_deg(inst, comp_deg, block),
            )
        )
    return ConditionReport(tuple(out))


def _spider_general_conditions(inst: CoronaInstance) -> ConditionReport:
    p = inst.base.p
    comp_deg = degree_profile(inst.composite).degrees
    att = {b.index: degree_profile(b.graph) for b in inst.blocks}
    sizes = {b.index: b.graph.vertex_count for b in inst.blocks}
    out: list[Condition] = []
    for i in range(1, 3 * p):
        out.append(
            _cond(
                f"T43-size-{i}",
                f"|V(H{i})| <= |V(H{i + 1})|",
                sizes[i],
                sizes[i + 1],
            )
        )
    for i in range(1, 3 * p):
        out.append(
            _cond(
                f"T43-i-{i}",
                f"max deg H{i} <= min deg H{i + 1}",
                att[i].max_degree,
                att[i + 1].min_degree,
            )
        )
    for cond_id, tip, block in (
        ("T43-ii-x", p, 2),
        ("T43-ii-y", 2 * p, 3),
        ("T43-ii-z", 3 * p, 4),
    ):
        out.append(
            _cond(
                cond_id,
                f"composite deg of leg tip <= min composite deg over H{block}",
                comp_deg[tip],
                _block_min_deg(inst, comp_deg, block),
            )
        )
    # The block adjacent to z1 and z2 is H(3p-3); the block adjacent to
    # x1 and v0 is H(3p-2). z2 sits at id 2p + 2.
    out.append(
        _cond(
            "T43-iii",
            f"max composite deg over H{3 * p - 3} <= |V(H4)| + 1",
            _block_max_deg(inst, comp_deg, 3 * p - 3),
            sizes[4] + 1,
        )
    )
    out.append(
        _cond(
            "T43-iv",
            f"composite deg z2 <= min composite deg over H{3 * p - 2}",
            comp_deg[2 * p + 2],
            _block_min_deg(inst, comp_deg, 3 * p - 2),
        )
    )
    return ConditionReport(tuple(out))


def _block_min_deg(inst: CoronaInstance, comp_deg: tuple[int, ...], block: int) -> int:
    return min(comp_deg[v] for v in inst.block(block).vertex_ids)


def _block_max_deg(inst: CoronaInstance, comp_deg: tuple[int, ...], block: int) -> int:
    return max(comp_deg[v] for v in inst.block(block).vertex_ids)


def _cond(cond_id: str, description: str, lhs: int, rhs: int) -> Condition:
    return Condition(id=cond_id, description=description, lhs=lhs, rhs=rhs, holds=lhs <= rhs)
