from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import doubled_edge, doubled_edge_annular, loop, maps_up_to, single_edge, square, triangle
from planarmobiles.maps import PlaneMap, contour_is_simple, from_cycles, girth, subdivide
from planarmobiles.oracle import OrientationSpec, enumerate_orientations, in_class_plain, suitable_orientations_bruteforce
from planarmobiles.orientation import (
    AlphaBetaSpec,
    GirthSpec,
    GirthViolation,
    ZBiorientation,
    check_constraints,
    classify,
    double,
    find_alpha_beta,
    geodesic_biorientation,
    halve,
    has_ccw_circuit,
    make_minimal,
    make_minimal_by_push,
    rightmost_bfs_orientation,
    suitable_orientation,
    tau_inverse,
    tau_map,
    violating_set_bruteforce,
)


def square_with_diagonal() -> PlaneMap:
    # outer 4-cycle with a chord inside: two triangular inner faces
    for pm in maps_up_to(5, 4):
        if pm.root is not None and pm.root_degree == 4 and sorted(pm.base.face_degrees()) == [3, 3, 4]:
            if contour_is_simple(pm):
                return pm
    raise AssertionError("not found")


def test_triangle_orientation_is_the_unique_suitable_one():
    pm = triangle()
    o = suitable_orientation(pm, GirthSpec.plain(3))
    assert classify(pm, o).suitable
    ok, why = check_constraints(pm, o, GirthSpec.plain(3))
    assert ok, why
    found = suitable_orientations_bruteforce(pm, OrientationSpec("plain", 3))
    assert found == [(o.ingoing, o.weight)]
    # every outer edge is 1-way with weights 0 and 1
    assert sorted(o.weight) == [0, 0, 0, 1, 1, 1]


def test_doubled_edge_orientation():
    pm = doubled_edge()
    o = suitable_orientation(pm, GirthSpec.plain(2))
    ok, _ = check_constraints(pm, o, GirthSpec.plain(2))
    assert ok
    assert o.face_weights(pm.base)[next(f for f in pm.inner_faces())] == 0


def test_girth_violation_for_short_cycle():
    pm = square_with_diagonal()
    assert pm.root_degree == 4 and girth(pm.base) == 3
    with pytest.raises(GirthViolation):
        suitable_orientation(pm, GirthSpec.plain(4))
    assert enumerate_orientations(pm, OrientationSpec("plain", 4)) == []


def test_root_degree_mismatch_is_rejected():
    with pytest.raises(ValueError):
        suitable_orientation(triangle(), GirthSpec.plain(4))


def test_annular_doubled_edge_inner_weight_zero():
    am = doubled_edge_annular()
    o = suitable_orientation(am, GirthSpec.annular(2, 2, 2))
    assert o.face_weights(am.base)[am.inner_root_face] == 0


def test_alpha_beta_triangle_feasible():
    m = triangle().base
    w = find_alpha_beta(m, AlphaBetaSpec((1, 1, 1), (1, 1, 1)))
    for v, orb in enumerate(m.vertices):
        assert sum(w[h] for h in orb) == 1
    for h, a in m.edges:
        assert w[h] + w[a] == 1


def test_alpha_beta_path_into_middle():
    m = from_cycles([(0, 1), (2, 3)], [[0], [1, 2], [3]])
    mid = m.vertex_of[1]
    alpha = [0, 0, 0]
    alpha[mid] = 2
    w = find_alpha_beta(m, AlphaBetaSpec(tuple(alpha), (1, 1)))
    assert w[1] == 1 and w[2] == 1 and w[0] == 0 and w[3] == 0


def test_alpha_beta_infeasible_certificate():
    m = triangle().base
    spec = AlphaBetaSpec((3, 0, 0), (1, 1, 1))
    with pytest.raises(GirthViolation) as info:
        find_alpha_beta(m, spec)
    cert = info.value.certificate
    inside = sum(spec.beta[i] for i, (h, a) in enumerate(m.edges) if m.vertex_of[h] in cert and m.vertex_of[a] in cert)
    assert sum(spec.alpha[v] for v in cert) < inside
    assert violating_set_bruteforce(m, spec) is not None


def _random_weights(pm: PlaneMap, rng: random.Random) -> list[int]:
    m = pm.base
    w = [0] * m.n_half
    for h, a in m.edges:
        total = rng.randint(0, 3)
        w[h] = rng.randint(0, total)
        w[a] = total - w[h]
    return w


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_minimalization_two_routes_agree(seed):
    rng = random.Random(seed)
    maps = [pm for pm in maps_up_to(4) if pm.root is not None]
    pm = rng.choice(maps)
    w = _random_weights(pm, rng)
    a = make_minimal(pm, w)
    b = make_minimal_by_push(pm, w)
    assert a == b
    m = pm.base
    for v, orb in enumerate(m.vertices):
        assert sum(a[h] for h in orb) == sum(w[h] for h in orb)
    o = ZBiorientation.from_weights(a)
    assert not has_ccw_circuit(pm, o, "potential")
    assert not has_ccw_circuit(pm, o, "cycles")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_ccw_circuit_detection_two_routes_agree(seed):
    rng = random.Random(seed)
    maps = [pm for pm in maps_up_to(4) if pm.root is not None]
    pm = rng.choice(maps)
    o = ZBiorientation.from_weights(_random_weights(pm, rng))
    assert has_ccw_circuit(pm, o, "potential") == has_ccw_circuit(pm, o, "cycles")


def test_halve_doubled_edge_and_square():
    pm = doubled_edge()
    o2 = suitable_orientation(pm, GirthSpec.plain(2))
    o1 = suitable_orientation(pm, GirthSpec.bipartite(1))
    assert halve(pm, o2) == o1
    assert double(pm, o1) == o2
    sq = square()
    assert halve(sq, suitable_orientation(sq, GirthSpec.plain(4))) == suitable_orientation(sq, GirthSpec.bipartite(2))


def test_tau_on_triangle():
    pm = triangle()
    sub = subdivide(pm)
    ob = suitable_orientation(sub.plane, GirthSpec.bipartite(3))
    o = tau_map(sub, ob, 3)
    assert o == suitable_orientation(pm, GirthSpec.plain(3))
    assert tau_inverse(sub, o, 3) == ob


def test_geodesic_single_edge():
    m = single_edge().base
    o = geodesic_biorientation(m, 0)
    h = m.vertices[0][0]
    assert (o.weight[h], o.weight[m.alpha[h]]) == (-2, 0)
    assert o.ingoing[m.alpha[h]] and not o.ingoing[h]


def test_geodesic_triangle_and_doubled_edge():
    m = triangle().base
    o = geodesic_biorientation(m, 0)
    zero_way = [(h, a) for h, a in m.edges if not o.ingoing[h] and not o.ingoing[a]]
    assert len(zero_way) == 1
    h, a = zero_way[0]
    assert 0 not in (m.vertex_of[h], m.vertex_of[a])
    m = doubled_edge().base
    o = geodesic_biorientation(m, 0)
    assert all(o.ingoing[h] for h in m.vertices[1])


def test_rightmost_bfs_on_loop_and_small_c1_maps():
    pm = loop()
    assert rightmost_bfs_orientation(pm) == suitable_orientation(pm, GirthSpec.plain(1))
    for pm in maps_up_to(3, 1):
        if in_class_plain(pm, 1):
            assert rightmost_bfs_orientation(pm) == suitable_orientation(pm, GirthSpec.plain(1))


def test_orientation_records_round_trip():
    o = suitable_orientation(triangle(), GirthSpec.plain(3))
    recs = o.to_records()
    assert [r["half_edge"] for r in recs] == list(range(1, 7))
    assert ZBiorientation.from_records(reversed(recs)) == o


def test_annular_outer_degree_below_girth_bound_is_rejected():
    with pytest.raises(ValueError, match="below the girth bound"):
        suitable_orientation(doubled_edge_annular(), GirthSpec.annular(3, 2, 2))
