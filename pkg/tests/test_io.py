"""Serialization round trips and descriptor parsing."""

from __future__ import annotations

import json

import pytest

from antimagic import io as aio
from antimagic import preset_graph, run_type2, vertex_sums


def test_graph_json_round_trip_is_byte_identical():
    g = preset_graph("pan", [5])
    text = aio.canonical_dumps(aio.graph_to_json(g))
    back = aio.graph_from_json(json.loads(text))
    assert back == g
    assert aio.canonical_dumps(aio.graph_to_json(back)) == text


def test_preset_descriptor_aliases():
    for obj, kind, params in [
        ({"kind": "K", "params": [4]}, "complete", [4]),
        ({"kind": "C", "params": [5]}, "cycle", [5]),
        ({"kind": "P", "params": [3]}, "path", [3]),
        ({"kind": "S", "params": [4]}, "star", [4]),
        ({"kind": "Kab", "params": [2, 3]}, "complete_bipartite", [2, 3]),
        ({"kind": "diamond", "params": []}, "diamond", []),
    ]:
        assert aio.graph_from_json(obj) == preset_graph(kind, params)


def test_explicit_descriptor():
    g = aio.graph_from_json({"vertices": 3, "edges": [[0, 1], [1, 2]]})
    assert g.edge_count == 2


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {},
        {"kind": "complete"},  # missing params is fine, but wrong arity fails
        {"vertices": 3},
        {"kind": "K", "params": 4},
    ],
)
def test_bad_graph_descriptors(obj):
    with pytest.raises(Exception):
        aio.graph_from_json(obj)


def test_instance_descriptor_round_trip(spider_p2):
    spec = {
        "base": {"type": "spider", "param": 2},
        "attachments": [
            {"kind": "K", "params": [2]},
            {"kind": "C", "params": [3]},
            {"kind": "C", "params": [3]},
            {"kind": "K", "params": [4]},
            {"kind": "K", "params": [4]},
            {"kind": "K", "params": [4]},
        ],
    }
    inst, options = aio.instance_from_json(spec)
    assert inst.composite == spider_p2.composite
    assert options == {"force": False, "normalize": False}


def test_instance_descriptor_normalize_option():
    spec = {
        "base": {"type": "spider", "param": 1},
        "attachments": [
            {"kind": "K", "params": [4]},
            {"kind": "K", "params": [2]},
            {"kind": "C", "params": [3]},
        ],
        "options": {"normalize": True},
    }
    inst, options = aio.instance_from_json(spec)
    assert options["normalize"]
    assert inst.attachment_orders == (2, 3, 4)


def test_instance_descriptor_errors():
    with pytest.raises(aio.SpecError):
        aio.instance_from_json({"base": {"type": "pan"}, "attachments": []})
    with pytest.raises(aio.SpecError):
        aio.instance_from_json({"base": {"type": "wheel", "param": 3}, "attachments": []})
    with pytest.raises(aio.SpecError):
        aio.instance_from_json({"base": {"type": "pan", "param": 3}})


def test_labeling_json_round_trip(spider_p2):
    labeling = run_type2(spider_p2).labeling
    report = vertex_sums(spider_p2.composite, labeling)
    obj = aio.labeling_to_json(spider_p2.composite, labeling, spider_p2.edge_roles, report.sums)
    text = aio.canonical_dumps(obj)
    back = aio.labeling_from_json(json.loads(text), spider_p2.composite)
    assert back == labeling
    again = aio.labeling_to_json(spider_p2.composite, back, spider_p2.edge_roles, report.sums)
    assert aio.canonical_dumps(again) == text


def test_labeling_csv_round_trip(spider_p2):
    labeling = run_type2(spider_p2).labeling
    text = aio.labeling_to_csv(spider_p2.composite, labeling)
    assert text.splitlines()[0] == "edge_u,edge_v,label"
    back = aio.labeling_from_csv(text, spider_p2.composite)
    assert back == labeling


def test_labeling_from_json_detects_mismatch():
    g = preset_graph("cycle", [3])
    with pytest.raises(aio.SpecError):
        aio.labeling_from_json({"edges": [{"u": 0, "v": 1, "label": 1}]}, g)


def test_role_strings(spider_p2):
    strings = [aio.role_to_str(r) for r in spider_p2.edge_roles]
    assert strings[0] == "base:0"
    assert any(s.startswith("internal:1") for s in strings)
    assert any(s.startswith("cross:6:") for s in strings)


def test_dot_output(spider_p2):
    labeling = run_type2(spider_p2).labeling
    report = vertex_sums(spider_p2.composite, labeling)
    dot = aio.to_dot(spider_p2.composite, labeling, report.sums)
    assert dot.startswith("graph antimagic {")
    assert 'label="v0\\nw=960"' in dot
    assert '[label="71"]' in dot


def test_sum_report_json_names(spider_p2):
    labeling = run_type2(spider_p2).labeling
    report = vertex_sums(spider_p2.composite, labeling)
    obj = aio.sum_report_to_json(spider_p2.composite, report)
    assert obj["vertex_sums"]["w(v0)"] == 960
    assert obj["is_antimagic"] is True
