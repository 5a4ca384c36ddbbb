from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import doubled_edge, doubled_edge_annular, loop, maps_up_to, square, triangle
from planarmobiles.bijection import (
    BijectionError,
    map_to_mobile,
    mobile_to_map,
    phi,
    phi_inverse,
    rooting_counts,
)
from planarmobiles.maps import AnnularMap, canonical_code
from planarmobiles.mobile import MobileSpec, canonical_code as mobile_code, enumerate_mobiles, excess, mobile_from_root
from planarmobiles.oracle import in_class_plain
from planarmobiles.orientation import GirthSpec, ZBiorientation, suitable_orientation


def test_triangle_opens_to_three_exposed_buds():
    t = map_to_mobile(triangle(), GirthSpec.plain(3))
    assert len(t.black_vertices()) == 1 and not t.white_vertices()
    assert len(t.buds()) == 3 and len(t.exposed) == 3
    assert excess(t) == -3


def test_loop_and_doubled_edge():
    t = map_to_mobile(loop(), GirthSpec.plain(1))
    assert len(t.buds()) == 1 and len(t.exposed) == 1
    t = map_to_mobile(doubled_edge(), GirthSpec.plain(2))
    assert len(t.exposed) == 2
    assert excess(t) == -2


def test_annular_doubled_edge_has_special_vertex():
    am = doubled_edge_annular()
    t = map_to_mobile(am, GirthSpec.annular(2, 2, 2))
    assert t.special is not None
    assert t.degree(t.special) == 2
    back = mobile_to_map(t, MobileSpec.typed(2, 2, 2))
    assert isinstance(back, AnnularMap)
    assert canonical_code(back) == canonical_code(am)


def test_three_buds_close_into_triangle():
    pm = mobile_to_map(mobile_from_root("b", (None, None, None)), MobileSpec.d_branching(3))
    assert canonical_code(pm) == canonical_code(triangle())


def test_square_round_trip():
    t = map_to_mobile(square(), GirthSpec.plain(4))
    assert canonical_code(mobile_to_map(t, MobileSpec.d_branching(4))) == canonical_code(square())


def test_unsuitable_orientation_is_refused():
    pm = triangle()
    o = suitable_orientation(pm, GirthSpec.plain(3))
    # reverse every edge: the outer cycle becomes a counterclockwise circuit
    alpha = pm.base.alpha
    flipped = ZBiorientation(
        tuple(o.ingoing[alpha[h]] for h in range(6)), tuple(o.weight[alpha[h]] for h in range(6))
    )
    with pytest.raises(BijectionError):
        phi(pm, flipped)


def test_wrong_family_is_refused():
    with pytest.raises(BijectionError):
        mobile_to_map(mobile_from_root("b", (None, None, None)), MobileSpec.d_branching(2))


def _class_maps(d: int, edges: int):
    return [pm for pm in maps_up_to(edges, d) if pm.root is not None and pm.root_degree == d and in_class_plain(pm, d)]


def test_opening_is_injective_on_girth_two_maps():
    maps = _class_maps(2, 4)
    codes = {mobile_code(map_to_mobile(pm, GirthSpec.plain(2))) for pm in maps}
    assert len(codes) == len(maps) > 10


@pytest.mark.parametrize("d", [1, 2, 3])
def test_rooting_counts_match(d):
    for pm in _class_maps(d, 4):
        t = map_to_mobile(pm, GirthSpec.plain(d))
        rc = rooting_counts(pm, t)
        assert rc.consistent, (canonical_code(pm), rc)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3, 4]))
def test_map_mobile_map_round_trip(seed, d):
    maps = _class_maps(d, 5 if d > 1 else 4)
    pm = random.Random(seed).choice(maps)
    o = suitable_orientation(pm, GirthSpec.plain(d))
    back, o2 = phi_inverse(phi(pm, o))
    assert canonical_code(back) == canonical_code(pm)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_mobile_map_mobile_round_trip(seed, d):
    spec = MobileSpec.d_branching(d)
    mobiles = enumerate_mobiles(spec, 4, 3)
    t = random.Random(seed).choice(mobiles)
    pm = mobile_to_map(t, spec)
    assert mobile_code(map_to_mobile(pm, GirthSpec.plain(d))) == mobile_code(t)
