"""Small hand-built maps shared by the tests (0-based half-edge ids)."""

from __future__ import annotations

from functools import lru_cache

from planarmobiles.maps import AnnularMap, PlaneMap, from_cycles
from planarmobiles.oracle import MapBounds, plane_maps


def loop() -> PlaneMap:
    return PlaneMap(from_cycles([(0, 1)], [[0, 1]]), 0)


def single_edge() -> PlaneMap:
    return PlaneMap(from_cycles([(0, 1)], [[0], [1]]), 0)


def doubled_edge() -> PlaneMap:
    return PlaneMap(from_cycles([(0, 1), (2, 3)], [[0, 2], [1, 3]]), 0)


def doubled_edge_annular() -> AnnularMap:
    m = doubled_edge().base
    inner = next(h for h in range(4) if m.face_of[h] != m.face_of[0])
    return AnnularMap(m, 0, inner)


def triangle() -> PlaneMap:
    return PlaneMap(from_cycles([(0, 1), (2, 3), (4, 5)], [[0, 5], [1, 2], [3, 4]]), 0)


def square() -> PlaneMap:
    return PlaneMap(from_cycles([(0, 1), (2, 3), (4, 5), (6, 7)], [[0, 7], [1, 2], [3, 4], [5, 6]]), 0)


def tetrahedron() -> PlaneMap:
    # outer triangle a, b, c around a central vertex d
    pairs = [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)]
    rot = [[0, 6, 5], [2, 8, 1], [4, 10, 3], [7, 9, 11]]
    return PlaneMap(from_cycles(pairs, rot), 0)


def with_root_face_degree(pm: PlaneMap, degree: int) -> PlaneMap:
    m = pm.base
    h = next(h for h in range(m.n_half) if len(m.faces[m.face_of[h]]) == degree)
    return PlaneMap(m, h)


@lru_cache(maxsize=None)
def maps_up_to(edges: int, max_root_degree: int | None = None) -> tuple[PlaneMap, ...]:
    bounds = MapBounds(max_edges=edges, max_root_degree=max_root_degree)
    return tuple(plane_maps(edges, bounds))
