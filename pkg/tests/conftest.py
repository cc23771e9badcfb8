"""Shared builders for the worked fixtures used across the suite."""

from __future__ import annotations

import pytest

from antimagic import build_type1, build_type2, preset_graph


def K(n):
    return preset_graph("complete", [n])


def C(n):
    return preset_graph("cycle", [n])


def P(n):
    return preset_graph("path", [n])


def S(n):
    return preset_graph("star", [n])


def diamond():
    return preset_graph("diamond")


@pytest.fixture
def pan_r5():
    """Pan base r=5 with (K2, C3, C3, C4, diamond, K4)."""
    return build_type1(5, [K(2), C(3), C(3), C(4), diamond(), K(4)])


@pytest.fixture
def spider_p2():
    """Spider base p=2 with (K2, C3, C3, K4, K4, K4)."""
    return build_type2(2, [K(2), C(3), C(3), K(4), K(4), K(4)])


@pytest.fixture
def spider_p4():
    """Spider base p=4 with (K2 x9, K5 x3)."""
    return build_type2(4, [K(2)] * 9 + [K(5)] * 3)


def named_sums(inst, report):
    return {inst.composite.name_of(v): s for v, s in enumerate(report.sums)}
