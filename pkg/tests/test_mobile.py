from __future__ import annotations

import json
import random
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarmobiles.mobile import (
    BLACK,
    WHITE,
    Mobile,
    MobileFormatError,
    MobileSpec,
    WellLabelledMobile,
    canonical_code,
    enumerate_mobiles,
    excess,
    mobile_from_dict,
    mobile_from_root,
    mobile_to_dict,
    mobile_to_dot,
    parse_mobile,
    serialize_mobile,
    theta,
    theta_inverse,
    validate,
)


def buds(k: int) -> Mobile:
    return mobile_from_root("b", (None,) * k)


@lru_cache(maxsize=None)
def small_mobiles(kind: str) -> tuple[Mobile, ...]:
    specs = {
        "d2": MobileSpec.d_branching(2),
        "d3": MobileSpec.d_branching(3),
        "b1": MobileSpec.b_dibranching(1),
        "typed": MobileSpec.typed(2, 2, 3),
    }
    return tuple(enumerate_mobiles(specs[kind], 4, 3))


def test_excess_of_trivial_mobiles():
    lone_white = Mobile((WHITE,), ((),), (), ())
    assert excess(lone_white) == 0
    assert excess(buds(3)) == -3


def test_three_buds_against_families():
    assert validate(buds(3), MobileSpec.d_branching(3))[0]
    ok, why = validate(buds(3), MobileSpec.d_branching(2))
    assert not ok and why


def test_enumeration_small_d3():
    one = enumerate_mobiles(MobileSpec.d_branching(3), 3, 1)
    assert [canonical_code(t) for t in one] == [canonical_code(buds(3))]
    three = [t for t in enumerate_mobiles(MobileSpec.d_branching(3), 3, 3) if len(t.black_vertices()) == 3]
    assert len(three) == 1


def test_b1_black_vertices_follow_white_leaf_rule():
    # every black vertex adjacent to l white leaves has degree 2 + 2l
    for t in small_mobiles("b1"):
        for v in t.black_vertices():
            leaves = sum(
                1
                for h in t.rotation[v]
                if t.partner[h] >= 0
                and t.colors[t.vertex_of[t.partner[h]]] == WHITE
                and len(t.rotation[t.vertex_of[t.partner[h]]]) == 1
            )
            neighbours_all_leaves = all(
                t.partner[h] < 0 or len(t.rotation[t.vertex_of[t.partner[h]]]) == 1 for h in t.rotation[v]
            )
            if neighbours_all_leaves:
                assert len(t.rotation[v]) == 2 + 2 * leaves


@pytest.mark.parametrize("kind", ["d2", "d3", "b1", "typed"])
def test_generated_mobiles_validate_and_are_distinct(kind):
    spec = {"d2": MobileSpec.d_branching(2), "d3": MobileSpec.d_branching(3), "b1": MobileSpec.b_dibranching(1), "typed": MobileSpec.typed(2, 2, 3)}[kind]
    mobiles = small_mobiles(kind)
    assert mobiles
    assert len({canonical_code(t) for t in mobiles}) == len(mobiles)
    for t in mobiles:
        ok, why = validate(t, spec)
        assert ok, why
        assert excess(t) == spec.expected_excess()


def _shuffled(t: Mobile, rng: random.Random) -> Mobile:
    data = mobile_to_dict(t)
    n = sum(len(v["rotation"]) for v in data["vertices"])
    hp = list(range(1, n + 1))
    rng.shuffle(hp)
    vp = list(range(1, len(data["vertices"]) + 1))
    rng.shuffle(vp)
    for v in data["vertices"]:
        v["id"] = vp[v["id"] - 1]
        rot = [hp[h - 1] for h in v["rotation"]]
        k = rng.randrange(len(rot)) if rot else 0
        v["rotation"] = rot[k:] + rot[:k]
    for e in data["edges"]:
        e["half_edges"] = [hp[h - 1] for h in e["half_edges"]]
    data["exposed_buds"] = [hp[h - 1] for h in data["exposed_buds"]]
    return mobile_from_dict(data)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["d2", "d3", "b1", "typed"]))
def test_canonical_code_ignores_labels(seed, kind):
    rng = random.Random(seed)
    t = rng.choice(small_mobiles(kind))
    assert canonical_code(_shuffled(t, rng)) == canonical_code(t)


def test_file_round_trip():
    for t in small_mobiles("typed")[:20]:
        back = parse_mobile(serialize_mobile(t))
        assert canonical_code(back) == canonical_code(t)
        assert back.special is not None
    text = serialize_mobile(buds(2).with_exposed({0, 1}))
    assert json.loads(text)["exposed_buds"] == [1, 2]
    assert "shape=point" in mobile_to_dot(buds(2))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        json.dumps({"vertices": [{"id": 1, "color": "green", "rotation": []}]}),
        json.dumps({"vertices": [{"id": 1, "color": "white", "rotation": [1]}], "edges": []}),
        json.dumps({"vertices": [{"id": 1, "color": "black", "rotation": [1]}], "exposed_buds": [3]}),
        json.dumps({"vertices": [{"id": 1, "color": "black", "rotation": [4]}]}),
    ],
)
def test_malformed_mobile_files(text):
    with pytest.raises(MobileFormatError):
        parse_mobile(text)


def test_theta_single_black_single_white():
    t = Mobile((BLACK, WHITE), ((0,), (1,)), (1, 0), (0, 0))
    w = WellLabelledMobile(t, frozenset(), (None, 1))
    assert w.check() is None
    out = theta(w)
    b = out.black_vertices()[0]
    assert len(out.rotation[b]) == 2
    assert len(out.buds()) == 1
    back = theta_inverse(out)
    assert back.labels[back.mobile.white_vertices()[0]] == 1


def test_theta_round_trip_on_zero_branching():
    seen = set()
    for t in enumerate_mobiles(MobileSpec.zero_branching(), 3, 2):
        w = theta_inverse(t)
        assert w.check() is None
        assert canonical_code(theta(w)) == canonical_code(t)
        assert excess(t) == 0
        seen.add(canonical_code(t))
    assert seen
