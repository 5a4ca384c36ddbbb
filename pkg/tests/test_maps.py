from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import doubled_edge, doubled_edge_annular, loop, maps_up_to, single_edge, square, tetrahedron, triangle
from planarmobiles.maps import (
    AnnularMap,
    CombinatorialMap,
    MapError,
    PlaneMap,
    RootedMap,
    annular_girths,
    c1_to_rooted,
    c2_to_edge_marked,
    canonical_code,
    dual,
    edge_marked_to_c2,
    from_cycles,
    girth,
    inner_quadrangulation,
    iso_check,
    map_from_dict,
    map_to_dict,
    parse_map,
    rooted_code,
    rooted_to_c1,
    serialize_map,
    simple_cycles,
    subdivide,
    to_dot,
    vertex_map,
)


def test_genus_one_pair_is_rejected():
    # one vertex, two interleaved loops: V - E + F = 1 - 2 + 1
    with pytest.raises(MapError, match="non-planar"):
        from_cycles([(0, 1), (2, 3)], [[0, 2, 1, 3]])


@pytest.mark.parametrize(
    "alpha, sigma, message",
    [
        ((1, 0, 2, 2), (1, 2, 3, 0), "involution"),
        ((1, 0, 3, 2), (0, 1, 2, 3), "disconnected"),
        ((1, 0), (0, 0), "permutation"),
    ],
)
def test_invalid_permutation_data(alpha, sigma, message):
    with pytest.raises(MapError, match=message):
        CombinatorialMap(alpha, sigma).validate()


def test_face_and_vertex_degrees():
    assert sorted(loop().base.face_degrees()) == [1, 1]
    assert loop().base.vertex_degrees() == [2]
    assert sorted(doubled_edge().base.face_degrees()) == [2, 2]
    assert sorted(doubled_edge().base.vertex_degrees()) == [2, 2]
    assert tetrahedron().base.face_degrees() == [3, 3, 3, 3]


def test_girth_small_maps():
    assert girth(loop().base) == 1
    assert girth(doubled_edge().base) == 2
    assert girth(triangle().base) == 3
    assert girth(single_edge().base) is None
    assert girth(tetrahedron().base) == 3


def test_annular_girths():
    assert annular_girths(doubled_edge_annular()) == (2, None)
    m = triangle().base
    inner = next(h for h in range(6) if m.face_of[h] != m.face_of[0])
    assert annular_girths(AnnularMap(m, 0, inner)) == (3, None)


def test_dual_of_triangle_is_a_theta():
    d, r = dual(triangle())
    assert len(d.vertices) == 2
    assert d.n_edges == 3
    assert girth(d) == 2
    assert r is not None


def test_doubled_edge_is_self_dual():
    pm = doubled_edge()
    d, r = dual(pm)
    assert canonical_code(PlaneMap(d, r)) == canonical_code(pm)


def test_dual_swaps_vertices_and_faces():
    # the loop has one vertex and two faces, so its dual is a single edge
    d, r = dual(loop())
    assert canonical_code(PlaneMap(d, r)) == canonical_code(single_edge())
    for pm in maps_up_to(3):
        if pm.root is None:
            continue
        d, _ = dual(pm)
        assert sorted(d.vertex_degrees()) == sorted(pm.base.face_degrees())
        assert sorted(d.face_degrees()) == sorted(pm.base.vertex_degrees())


def test_subdivision_doubles_girth():
    sub = subdivide(loop())
    assert girth(sub.plane.base) == 2
    assert len(sub.plane.base.vertices) == 2
    assert girth(subdivide(triangle()).plane.base) == 6


def test_inner_quadrangulation_of_triangle():
    iq = inner_quadrangulation(triangle())
    q = iq.q_map
    assert q.n_edges == 3
    fv = list(iq.face_vertex.values())
    assert len(fv) == 1
    assert sorted(q.vertex_degrees()) == [1, 1, 1, 3]


def test_inner_quadrangulation_of_doubled_edge():
    iq = inner_quadrangulation(doubled_edge())
    assert sorted(iq.q_map.vertex_degrees()) == [1, 1, 2]


def test_vertex_map_corner_becomes_loop():
    rm = RootedMap(PlaneMap(vertex_map(), None), None)
    pm = rooted_to_c1(rm)
    assert iso_check(pm, loop())
    back = c1_to_rooted(pm)
    assert back.plane.base.n_half == 0


def test_marked_edge_becomes_digon_root():
    pm = edge_marked_to_c2(single_edge().base, 0)
    assert pm.root_degree == 2
    assert iso_check(pm, doubled_edge())
    m, h = c2_to_edge_marked(pm)
    assert m.n_edges == 1


def test_rooted_to_c1_round_trip_on_all_small_rooted_maps():
    for pm in maps_up_to(3):
        if pm.root is None:
            continue
        for h in pm.outer_half_edges():
            rm = RootedMap(pm, h)
            back = c1_to_rooted(rooted_to_c1(rm))
            assert canonical_code(back) == canonical_code(rm)


def test_codes_distinguish_and_identify():
    assert canonical_code(loop()) != canonical_code(single_edge())
    m = square().base
    codes = {rooted_code(m, h) for h in range(m.n_half)}
    assert len(codes) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.sampled_from(range(40)))
def test_code_invariant_under_relabelling(seed, index):
    maps = [pm for pm in maps_up_to(4) if pm.root is not None]
    pm = maps[index % len(maps)]
    rng = random.Random(seed)
    perm = list(range(pm.base.n_half))
    rng.shuffle(perm)
    other = PlaneMap(pm.base.relabel(perm), perm[pm.root])
    assert canonical_code(other) == canonical_code(pm)


def test_plane_maps_are_pairwise_non_isomorphic():
    maps = maps_up_to(4)
    assert len({canonical_code(pm) for pm in maps}) == len(maps)


def test_json_round_trip_and_format():
    pm = triangle()
    text = serialize_map(pm)
    data = json.loads(text)
    assert data["half_edges"] == 6
    assert iso_check(parse_map(text), pm)
    am = doubled_edge_annular()
    back = map_from_dict(map_to_dict(am))
    assert isinstance(back, AnnularMap)
    assert canonical_code(back) == canonical_code(am)


@pytest.mark.parametrize(
    "data, message",
    [
        ({"half_edges": 2, "alpha": [[1, 2]], "sigma": [[1, 2]]}, "root"),
        ({"half_edges": 2, "alpha": [[1, 2]], "sigma": [[1, 2]], "root_half_edge": 7}, "dangling"),
        ({"half_edges": 4, "alpha": [[1, 2]], "sigma": [[1, 2]], "root_half_edge": 1}, "half_edges"),
    ],
)
def test_malformed_map_files(data, message):
    with pytest.raises(MapError, match=message):
        map_from_dict(data)


def test_simple_cycles_of_tetrahedron():
    cycles = list(simple_cycles(tetrahedron().base))
    assert sorted(len(c) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]


def test_dot_export_lists_every_edge():
    text = to_dot(triangle())
    assert text.count("--") == 3
