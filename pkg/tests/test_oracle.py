from __future__ import annotations

from collections import Counter

import pytest

from helpers import doubled_edge, maps_up_to, triangle
from planarmobiles.maps import canonical_code, is_bipartite, rooted_code
from planarmobiles.oracle import (
    BoundExceeded,
    MapBounds,
    OrientationSpec,
    count_annular_class,
    count_plane_class,
    count_rooted_by_profile,
    enumerate_rooted_maps,
    is_simple,
    suitable_orientations_bruteforce,
    zero_suitable_bruteforce,
)
from planarmobiles.orientation import geodesic_biorientation


def by_edges(rows) -> list[int]:
    c = Counter(m.n_edges for m, _ in rows)
    return [c[k] for k in range(max(c) + 1)]


@pytest.mark.parametrize("strategy", ["insertion", "permutations"])
def test_rooted_maps_by_edges(strategy):
    assert by_edges(enumerate_rooted_maps(4, strategy)) == [1, 2, 9, 54, 378]


def test_strategies_agree_on_codes():
    a = {rooted_code(m, r) for m, r in enumerate_rooted_maps(3) if r is not None}
    b = {rooted_code(m, r) for m, r in enumerate_rooted_maps(3, "permutations") if r is not None}
    assert a == b


def test_insertion_reaches_five_edges():
    assert by_edges(enumerate_rooted_maps(5))[5] == 2916


def test_permutation_guard():
    with pytest.raises(BoundExceeded):
        enumerate_rooted_maps(5, "permutations")
    with pytest.raises(ValueError):
        enumerate_rooted_maps(2, "nope")


def test_bounds_restrict_root_degree():
    rows = enumerate_rooted_maps(4, bounds=MapBounds(max_edges=4, max_root_degree=2))
    assert all(len(m.faces[m.face_of[r]]) <= 2 for m, r in rows if r is not None)


def test_plane_class_tables():
    assert dict(count_plane_class(3, 3, 4)) == {(3,): 1, (3, 3, 3): 1, (3, 4): 3, (3, 4, 4): 12}


def test_annular_class_table():
    assert dict(count_annular_class(2, 2, 2, 2, 1, 3)) == {(): 2, (2,): 4}


def test_bipartite_profiles():
    table = count_rooted_by_profile(3, is_bipartite)
    assert dict(table) == {(2,): 1, (2, 2): 1, (2, 2, 2): 1, (2, 4): 6, (4,): 2, (6,): 5}


def test_simple_maps_up_to_three_edges():
    table = count_rooted_by_profile(3, is_simple)
    # trees are simple: 1, 2 and 5 rooted trees with 1, 2 and 3 edges
    assert table[(2,)] == 1 and table[(4,)] == 2 and table[(6,)] == 5
    assert table[(3, 3)] == 1


def test_triangle_and_digon_have_one_suitable_orientation():
    assert len(suitable_orientations_bruteforce(triangle(), OrientationSpec("plain", 3))) == 1
    assert len(suitable_orientations_bruteforce(doubled_edge(), OrientationSpec("plain", 2))) == 1


def test_zero_orientation_is_unique_and_geodesic():
    for pm in maps_up_to(3):
        m = pm.base
        if m.n_edges == 0:
            continue
        for v in range(len(m.vertices)):
            found = zero_suitable_bruteforce(m, v)
            assert len(found) == 1, canonical_code(pm)
            o = geodesic_biorientation(m, v)
            assert found[0] == (o.ingoing, o.weight)
