"""Corona construction: sizes, roles, attachment maps, and degrees."""

from __future__ import annotations

import pytest

from antimagic import (
    build_type1,
    build_type2,
    degree_profile,
    normalize_attachments,
)
from antimagic.corona import (
    AttachmentTooSmall,
    BadBaseParam,
    BaseEdgeRole,
    CrossEdgeRole,
    DisconnectedAttachment,
    InternalEdgeRole,
    WrongAttachmentCount,
)
from antimagic.graphs import make_graph

from .conftest import C, K, P, diamond


def test_type1_small_sizes():
    inst = build_type1(3, [K(2)] * 4)
    assert inst.composite.vertex_count == 12
    assert inst.composite.edge_count == 24


def test_type1_pan_r5_sizes(pan_r5):
    assert pan_r5.composite.vertex_count == 26
    assert pan_r5.composite.edge_count == 68


def test_type1_wrong_attachment_count():
    with pytest.raises(WrongAttachmentCount):
        build_type1(3, [K(2)] * 3)


def test_type2_sizes(spider_p2, spider_p4):
    assert spider_p2.composite.vertex_count == 27
    assert spider_p2.composite.edge_count == 71
    assert spider_p4.composite.vertex_count == 46
    assert spider_p4.composite.edge_count == 117
    p1 = build_type2(1, [K(2)] * 3)
    assert p1.composite.vertex_count == 10
    assert p1.composite.edge_count == 18


def test_attachment_validation():
    with pytest.raises(AttachmentTooSmall):
        build_type1(3, [K(1), K(2), K(2), K(2)])
    disconnected = make_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedAttachment):
        build_type1(3, [K(2), disconnected, K(2), K(2)])
    with pytest.raises(BadBaseParam):
        build_type1(2, [K(2)] * 3)
    with pytest.raises(BadBaseParam):
        build_type2(0, [])


def test_normalize_attachments_sorts_by_size():
    k4, k2, c3 = K(4), K(2), C(3)
    assert normalize_attachments([k4, k2, c3]) == (k2, c3, k4)
    assert normalize_attachments([k2, c3, c3]) == (k2, c3, c3)
    c3b = C(3)
    k3 = K(3)
    assert normalize_attachments([c3b, k3]) == (c3b, k3)


def test_type1_attachment_map(pan_r5):
    r = 5
    expected = {0: (0, r), 1: (1, 2), 2: (1, 3), 3: (2, 4), 4: (3, 5), 5: (4, 5)}
    for blk in pan_r5.blocks:
        assert blk.endpoints == expected[blk.index]


def test_type2_attachment_map(spider_p4):
    p = 4

    def leg(base, k):
        return 0 if k == 0 else base * p + k

    expected = {}
    for t in range(1, 3 * p + 1):
        s, depth = (t - 1) % 3, (t - 1) // 3
        a, b = leg(s, p - depth), leg(s, p - depth - 1)
        expected[t] = (min(a, b), max(a, b))
    for blk in spider_p4.blocks:
        assert blk.endpoints == expected[blk.index]


def test_role_partition(pan_r5):
    base = [r for r in pan_r5.edge_roles if isinstance(r, BaseEdgeRole)]
    internal = [r for r in pan_r5.edge_roles if isinstance(r, InternalEdgeRole)]
    cross = [r for r in pan_r5.edge_roles if isinstance(r, CrossEdgeRole)]
    assert len(base) == pan_r5.base_graph.edge_count
    assert len(internal) == sum(pan_r5.attachment_edge_counts)
    assert len(cross) == 2 * sum(pan_r5.attachment_orders)
    assert len(base) + len(internal) + len(cross) == pan_r5.composite.edge_count


def test_every_attachment_vertex_has_two_cross_edges(pan_r5, spider_p2):
    for inst in (pan_r5, spider_p2):
        comp_deg = degree_profile(inst.composite).degrees
        for blk in inst.blocks:
            own = degree_profile(blk.graph).degrees
            for local, v in enumerate(blk.vertex_ids):
                assert comp_deg[v] == own[local] + 2


def test_base_vertex_composite_degrees(pan_r5, spider_p4):
    deg5 = degree_profile(pan_r5.composite).degrees
    n = pan_r5.attachment_orders
    r = 5
    assert deg5[0] == n[0] + 1
    assert deg5[1] == 2 + n[1] + n[2] == 8
    assert deg5[r] == 3 + n[0] + n[r - 1] + n[r]
    deg8 = degree_profile(spider_p4.composite).degrees
    m = {b.index: b.graph.vertex_count for b in spider_p4.blocks}
    assert deg8[0] == 3 + m[10] + m[11] + m[12]


def test_composite_names(pan_r5, spider_p2):
    assert pan_r5.composite.name_of(0) == "u0"
    assert pan_r5.composite.name_of(5) == "u5"
    assert pan_r5.composite.name_of(6) == "v0_1"
    assert spider_p2.composite.name_of(0) == "v0"
    assert spider_p2.composite.name_of(2) == "x2"


def test_mixed_attachment_shapes_size_identity():
    attachments = [K(2), C(3), P(4), diamond()]
    inst = build_type1(3, attachments)
    n = sum(g.vertex_count for g in attachments)
    q = sum(g.edge_count for g in attachments)
    assert inst.composite.vertex_count == 4 + n
    assert inst.composite.edge_count == 4 + q + 2 * n
