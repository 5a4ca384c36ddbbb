"""Brute-force enumeration used as the reference for every count and bijection.

Rooted maps are generated by the root-edge decomposition: a rooted map with
at least one edge is either two rooted maps joined by a bridge, or a smaller
rooted map with an extra edge drawn inside its root face.  Every rooted map
arises exactly once.  Faces other than the root face never change after
their creation, which makes face-degree pruning exact.

A second, independent generator runs over all permutation pairs for tiny
sizes; the two are cross-checked in the tests.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .maps import (
    AnnularMap,
    CombinatorialMap,
    PlaneMap,
    annular_girths,
    canonical_code,
    cycle_left_is_interior,
    girth,
    is_bipartite,
    rooted_code,
    simple_cycles,
)


class BoundExceeded(RuntimeError):
    """Raised when a brute-force request exceeds its resource guard."""


@dataclass(frozen=True)
class MapBounds:
    """Constraints applied during generation.

    ``face_degrees`` restricts the degrees of non-root faces (``None`` means
    any degree up to ``max_face_degree``).  ``max_root_degree`` bounds the
    final root face degree and drives pruning.
    """

    max_edges: int
    max_faces: int | None = None  # non-root faces
    max_face_degree: int | None = None
    face_degrees: frozenset[int] | None = None
    max_root_degree: int | None = None
    exact_edges: bool = False
    limit: int = 2_000_000


@dataclass(frozen=True)
class _Rooted:
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]
    root: int  # -1 for the vertex map
    root_degree: int
    inner: tuple[int, ...]  # sorted degrees of non-root faces


def _face_degree_of(alpha: Sequence[int], sigma: Sequence[int], h: int) -> int:
    k = 1
    g = sigma[alpha[h]]
    while g != h:
        g = sigma[alpha[g]]
        k += 1
    return k


def _root_face_walk(alpha: Sequence[int], sigma: Sequence[int], r: int) -> list[int]:
    out = [r]
    g = sigma[alpha[r]]
    while g != r:
        out.append(g)
        g = sigma[alpha[g]]
    return out


def _bridge(a: _Rooted, b: _Rooted) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    n1 = len(a.alpha)
    n2 = len(b.alpha)
    x, y = n1 + n2, n1 + n2 + 1
    alpha = list(a.alpha) + [h + n1 for h in b.alpha] + [y, x]
    sigma = list(a.sigma) + [h + n1 for h in b.sigma] + [x, y]
    inv = {g: h for h, g in enumerate(sigma)}
    if a.root >= 0:
        p = inv[a.root]
        sigma[p], sigma[x] = x, a.root
    if b.root >= 0:
        r2 = b.root + n1
        p = inv[r2]
        sigma[p], sigma[y] = y, r2
    return tuple(alpha), tuple(sigma), x


def _extensions(m: _Rooted) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int, int]]:
    """Add a non-bridge root edge inside the root face of ``m``.

    Yields (alpha, sigma, new root, degree of the newly closed face).
    """
    n = len(m.alpha)
    x, y = n, n + 1
    if m.root < 0:
        yield m.alpha + (y, x), m.sigma + (y, x), x, 1
        return
    walk = _root_face_walk(m.alpha, m.sigma, m.root)
    inv = {g: h for h, g in enumerate(m.sigma)}
    r = m.root
    for i, g in enumerate(walk):
        if i == 0:
            # both ends in the root corner: two orders, each a loop
            for first, second in ((x, y), (y, x)):
                sigma = list(m.sigma) + [0, 0]
                p = inv[r]
                sigma[p], sigma[first], sigma[second] = first, second, r
                alpha = m.alpha + (y, x)
                yield alpha, tuple(sigma), x, _face_degree_of(alpha, sigma, y)
            continue
        sigma = list(m.sigma) + [0, 0]
        p = inv[r]
        sigma[p], sigma[x] = x, r
        q = inv[g]
        if q == p:
            q = x
        sigma[q], sigma[y] = y, g
        alpha = m.alpha + (y, x)
        yield alpha, tuple(sigma), x, _face_degree_of(alpha, sigma, y)


class RootedMapGenerator:
    """Layered generator of rooted maps by number of edges, with pruning."""

    def __init__(self, bounds: MapBounds):
        self.bounds = bounds
        self.layers: list[list[_Rooted]] = []
        self.count = 0

    def _face_ok(self, deg: int) -> bool:
        b = self.bounds
        if b.face_degrees is not None and deg not in b.face_degrees:
            return False
        if b.max_face_degree is not None and deg > b.max_face_degree:
            return False
        return True

    def _keep(self, root_degree: int, inner: tuple[int, ...], edges: int) -> bool:
        b = self.bounds
        if b.max_faces is not None and len(inner) > b.max_faces:
            return False
        if b.max_root_degree is not None:
            left = None if b.max_faces is None else b.max_faces - len(inner)
            dmax = b.max_face_degree
            if b.face_degrees is not None:
                dmax = max(b.face_degrees) if dmax is None else min(dmax, max(b.face_degrees))
            if left is not None and dmax is not None:
                # each new face lowers the root degree by at most dmax - 2
                if root_degree - max(dmax - 2, 0) * left > b.max_root_degree:
                    return False
        # total half-edges bound: the final map has 2E <= root + sum(inner)
        if b.max_faces is not None and b.max_root_degree is not None:
            dmax = b.max_face_degree or (max(b.face_degrees) if b.face_degrees else None)
            if dmax is not None:
                cap = b.max_root_degree + dmax * b.max_faces
                if 2 * edges > cap:
                    return False
        return True

    def run(self) -> list[list[_Rooted]]:
        b = self.bounds
        self.layers = [[_Rooted((), (), -1, 0, ())]]
        for e in range(1, b.max_edges + 1):
            layer: list[_Rooted] = []
            # bridges
            for e1 in range(e):
                e2 = e - 1 - e1
                for m1 in self.layers[e1]:
                    for m2 in self.layers[e2]:
                        inner = tuple(sorted(m1.inner + m2.inner))
                        rd = m1.root_degree + m2.root_degree + 2
                        if not self._keep(rd, inner, e):
                            continue
                        alpha, sigma, x = _bridge(m1, m2)
                        layer.append(_Rooted(alpha, sigma, x, rd, inner))
            for m in self.layers[e - 1]:
                for alpha, sigma, x, newdeg in _extensions(m):
                    if not self._face_ok(newdeg):
                        continue
                    inner = tuple(sorted(m.inner + (newdeg,)))
                    rd = m.root_degree + 2 - newdeg
                    if not self._keep(rd, inner, e):
                        continue
                    layer.append(_Rooted(alpha, sigma, x, rd, inner))
            self.count += len(layer)
            if self.count > b.limit:
                raise BoundExceeded(f"more than {b.limit} intermediate rooted maps")
            self.layers.append(layer)
        return self.layers

    def maps(self) -> Iterator[tuple[CombinatorialMap, int | None]]:
        if not self.layers:
            self.run()
        b = self.bounds
        for e, layer in enumerate(self.layers):
            if b.exact_edges and e != b.max_edges:
                continue
            for m in layer:
                if b.max_root_degree is not None and m.root_degree > b.max_root_degree:
                    continue
                yield CombinatorialMap(m.alpha, m.sigma), (None if m.root < 0 else m.root)


def enumerate_rooted_maps(
    max_edges: int, strategy: str = "insertion", bounds: MapBounds | None = None
) -> list[tuple[CombinatorialMap, int | None]]:
    """All rooted planar maps with at most ``max_edges`` edges.

    A rooted map is ``(map, h)``; its root corner is ``c(h)`` and its root
    face is ``face(h)``.  ``h`` is ``None`` for the vertex map.
    """
    if strategy == "permutations":
        return list(_by_permutations(max_edges))
    if strategy != "insertion":
        raise ValueError(f"unknown strategy {strategy!r}")
    gen = RootedMapGenerator(bounds or MapBounds(max_edges=max_edges))
    return list(gen.maps())


def _by_permutations(max_edges: int) -> Iterator[tuple[CombinatorialMap, int | None]]:
    if max_edges > 4:
        raise BoundExceeded("permutation strategy is limited to 4 edges")
    yield CombinatorialMap((), ()), None
    for e in range(1, max_edges + 1):
        n = 2 * e
        alpha = tuple(h ^ 1 for h in range(n))
        seen: set[tuple[int, ...]] = set()
        for sigma in itertools.permutations(range(n)):
            m = CombinatorialMap(alpha, sigma)
            if not _transitive(alpha, sigma):
                continue
            if len(m.vertices) - e + len(m.faces) != 2:
                continue
            for r in range(n):
                code = rooted_code(m, r)
                if code not in seen:
                    seen.add(code)
                    yield m, r


def _transitive(alpha: Sequence[int], sigma: Sequence[int]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        h = stack.pop()
        for g in (alpha[h], sigma[h]):
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return len(seen) == len(alpha)


# ---------------------------------------------------------------------------
# plane maps and class membership


def plane_maps(max_edges: int, bounds: MapBounds | None = None) -> list[PlaneMap]:
    """Plane maps (root face marked, no marked corner) up to isomorphism."""
    out = {}
    for m, r in enumerate_rooted_maps(max_edges, bounds=bounds):
        pm = PlaneMap(m, r)
        out.setdefault(canonical_code(pm), pm)
    return list(out.values())


def in_class_plain(pm: PlaneMap, d: int) -> bool:
    """Plane map of girth d and root face degree d."""
    return pm.root is not None and pm.root_degree == d and girth(pm.base) == d


def in_class_bipartite(pm: PlaneMap, b: int) -> bool:
    m = pm.base
    return pm.root is not None and pm.root_degree == 2 * b and is_bipartite(m) and girth(m) == 2 * b


def in_class_annular(am: AnnularMap, d: int, p: int, q: int) -> bool:
    """Type (p, q), non-separating girth at least d, separating girth p."""
    if am.root_degree != p or am.inner_root_degree != q:
        return False
    sep, non = annular_girths(am)
    return sep == p and (non is None or non >= d)


def in_class_annular_girths(am: AnnularMap, d: int, e: int) -> bool:
    sep, non = annular_girths(am)
    return (sep is not None and sep >= e) and (non is None or non >= d)


# ---------------------------------------------------------------------------
# counting tables


def count_plane_class(
    d: int,
    max_faces: int,
    max_face_degree: int,
    face_degrees: Iterable[int] | None = None,
) -> Counter:
    """Rooted maps of girth d and outer degree d by sorted inner-face degrees."""
    allowed = frozenset(face_degrees) if face_degrees is not None else frozenset(range(d, max_face_degree + 1))
    bounds = MapBounds(
        max_edges=(d + max_face_degree * max_faces) // 2,
        max_faces=max_faces,
        max_face_degree=max_face_degree,
        face_degrees=allowed,
        max_root_degree=d,
    )
    table: Counter = Counter()
    for m, r in RootedMapGenerator(bounds).maps():
        if r is None:
            continue
        pm = PlaneMap(m, r)
        if pm.root_degree == d and girth(m) == d:
            table[tuple(sorted(len(f) for i, f in enumerate(m.faces) if i != pm.root_face))] += 1
    return table


def count_annular_class(
    d: int, e: int, p: int, q: int, max_faces: int, max_face_degree: int
) -> Counter:
    """Rooted annular maps of type (p, q) with the two girth bounds.

    Keys are sorted degrees of the faces other than the two root faces.
    A rooted annular map is a rooted plane map plus a corner in an inner face
    of degree q; rooted plane maps have no symmetry, so each choice counts.
    """
    dmax = max(max_face_degree, q)
    bounds = MapBounds(
        max_edges=(p + q + max_face_degree * max_faces) // 2,
        max_faces=max_faces + 1,
        max_face_degree=dmax,
        max_root_degree=p,
    )
    table: Counter = Counter()
    for m, r in RootedMapGenerator(bounds).maps():
        if r is None:
            continue
        rf = m.face_of[r]
        if len(m.faces[rf]) != p:
            continue
        for f, orb in enumerate(m.faces):
            if f == rf or len(orb) != q:
                continue
            rest = sorted(len(g) for i, g in enumerate(m.faces) if i not in (f, rf))
            if len(rest) > max_faces or any(k > max_face_degree for k in rest):
                continue
            am = AnnularMap(m, r, orb[0])
            if in_class_annular_girths(am, d, e):
                table[tuple(rest)] += q
    return table


def count_rooted_by_profile(max_edges: int, predicate) -> Counter:
    """Rooted maps accepted by ``predicate`` keyed by sorted degrees of all faces."""
    table: Counter = Counter()
    for m, r in enumerate_rooted_maps(max_edges):
        if r is None:
            continue
        if predicate(m):
            table[tuple(sorted(len(f) for f in m.faces))] += 1
    return table


def is_simple(m: CombinatorialMap) -> bool:
    g = girth(m)
    return g is None or g >= 3


# ---------------------------------------------------------------------------
# exhaustive orientations


@dataclass(frozen=True)
class OrientationSpec:
    """Which weighted biorientations to enumerate.

    kind: ``"plain"`` (d/(d-2)), ``"bipartite"`` (b/(b-1)), ``"annular"``
    (d/(d-2) of type (p, q)) or ``"annular_bipartite"`` (b/(b-1) of type
    (2r, 2s), with ``d, p, q`` holding ``b, r, s``).
    """

    kind: str
    d: int = 0
    p: int = 0
    q: int = 0


def _splits(spec: OrientationSpec) -> list[tuple[int, int]]:
    if spec.kind in ("plain", "annular"):
        total, lo, hi = spec.d - 2, -2, spec.d
    elif spec.kind in ("bipartite", "annular_bipartite"):
        total, lo, hi = spec.d - 1, -1, spec.d
    else:
        raise ValueError(spec.kind)
    out = []
    for a in range(lo, hi + 1):
        b = total - a
        if lo <= b <= hi:
            out.append((a, b))
    return out


def _simple_contour(pm: PlaneMap) -> bool:
    m = pm.base
    walk = m.faces[pm.root_face]
    verts = {m.vertex_of[h] for h in walk}
    return len(verts) == len(walk) and not any(m.alpha[h] in set(walk) for h in walk)


def enumerate_orientations(pm: PlaneMap, spec: OrientationSpec) -> list[tuple[tuple[bool, ...], tuple[int, ...]]]:
    """All weighted biorientations meeting the vertex, edge and face conditions.

    Outer edges are clockwise 1-way with weights 0/1 and inner half-edges at
    outer vertices are outgoing.  Returns (ingoing flags, weights).
    """
    m = pm.base
    n = m.n_half
    if spec.kind == "zero":
        raise ValueError("use enumerate_zero_orientations")
    if pm.root is None or not _simple_contour(pm):
        return []
    outer = pm.outer_edge_halves()
    outer_vertices = pm.outer_vertices()
    root_side = set(pm.outer_half_edges())
    ingoing = [False] * n
    weight = [0] * n
    for h in root_side:
        ingoing[m.alpha[h]] = True
        weight[m.alpha[h]] = 1
    inner_edges = [(h, a) for h, a in m.edges if h not in outer]
    splits = _splits(spec)

    vtarget = d = spec.d

    # order edges so that vertices complete early
    remaining = Counter()
    for h, a in inner_edges:
        remaining[m.vertex_of[h]] += 1
        remaining[m.vertex_of[a]] += 1
    vsum = Counter()
    results = []

    def face_ok() -> bool:
        fw = [0] * len(m.faces)
        for h in range(n):
            if not ingoing[h]:
                fw[m.face_of[m.alpha[h]]] += weight[h]
        for f, orb in enumerate(m.faces):
            if f == pm.root_face:
                continue
            deg = len(orb)
            if isinstance(pm, AnnularMap) and f == pm.inner_root_face:
                if spec.kind == "annular":
                    if deg != spec.q or fw[f] != spec.p - spec.q:
                        return False
                elif spec.kind == "annular_bipartite":
                    if deg != 2 * spec.q or fw[f] != spec.p - spec.q:
                        return False
                continue
            if spec.kind in ("plain", "annular"):
                if deg + fw[f] != d:
                    return False
            else:
                if deg % 2 or deg // 2 + fw[f] != d:
                    return False
        return True

    def rec(i: int) -> None:
        if i == len(inner_edges):
            if face_ok():
                results.append((tuple(ingoing), tuple(weight)))
            return
        h, a = inner_edges[i]
        u, v = m.vertex_of[h], m.vertex_of[a]
        for wa, wb in splits:
            ih, ia = wa >= 1, wb >= 1
            if u in outer_vertices and ih:
                continue
            if v in outer_vertices and ia:
                continue
            ingoing[h], ingoing[a] = ih, ia
            weight[h], weight[a] = wa, wb
            vsum[u] += wa if ih else 0
            vsum[v] += wb if ia else 0
            remaining[u] -= 1
            remaining[v] -= 1
            ok = True
            for x in {u, v}:
                if x in outer_vertices:
                    continue
                if vsum[x] > vtarget or (remaining[x] == 0 and vsum[x] != vtarget):
                    ok = False
            if ok:
                rec(i + 1)
            remaining[u] += 1
            remaining[v] += 1
            vsum[u] -= wa if ih else 0
            vsum[v] -= wb if ia else 0
        ingoing[h] = ingoing[a] = False
        weight[h] = weight[a] = 0

    # isolated inner vertices (no inner edges) must already satisfy the target
    for x in range(len(m.vertices)):
        if x not in outer_vertices and remaining[x] == 0 and vtarget != 0:
            return []
    rec(0)
    return results


def enumerate_zero_orientations(m: CombinatorialMap, marked_vertex: int) -> list[tuple[tuple[bool, ...], tuple[int, ...]]]:
    """0/(-2)-orientations of a vertex-marked map, by exhaustive search.

    Every edge has weight -2: either 0-way (-1, -1) or 1-way with -2 on the
    outgoing and 0 on the ingoing half-edge.  Half-edges at the marked vertex
    are outgoing and every face satisfies deg(f) + w(f) = 0.
    """
    results = []
    options = ((-1, -1, False, False), (-2, 0, False, True), (0, -2, True, False))
    for pick in itertools.product(options, repeat=m.n_edges):
        ingoing = [False] * m.n_half
        weight = [0] * m.n_half
        for (h, a), (wh, wa, ih, ia) in zip(m.edges, pick):
            ingoing[h], ingoing[a] = ih, ia
            weight[h], weight[a] = wh, wa
        if any(ingoing[h] for h in m.vertices[marked_vertex]):
            continue
        fw = [0] * len(m.faces)
        for h in range(m.n_half):
            if not ingoing[h]:
                fw[m.face_of[m.alpha[h]]] += weight[h]
        if all(len(orb) + fw[f] == 0 for f, orb in enumerate(m.faces)):
            results.append((tuple(ingoing), tuple(weight)))
    return results


def zero_suitable_bruteforce(m: CombinatorialMap, marked_vertex: int) -> list[tuple[tuple[bool, ...], tuple[int, ...]]]:
    """Enumerated 0/(-2)-orientations that are minimal and accessible.

    Minimal here means every circuit has the marked vertex strictly on its
    left.
    """
    from .maps import face_components

    cycles = _directed_cycles(m)
    out = []
    for ingoing, weight in enumerate_zero_orientations(m, marked_vertex):
        ok = True
        for cyc in cycles:
            if not all(ingoing[m.alpha[h]] for h in cyc):
                continue
            if any(m.vertex_of[h] == marked_vertex for h in cyc):
                ok = False
                break
            comp = face_components(m, (m.edge_of[h] for h in cyc))
            if comp[m.face_of[m.vertices[marked_vertex][0]]] != comp[m.face_of[cyc[0]]]:
                ok = False
                break
        if not ok:
            continue
        seen = {marked_vertex}
        stack = [marked_vertex]
        while stack:
            u = stack.pop()
            for h in m.vertices[u]:
                w = m.vertex_of[m.alpha[h]]
                if ingoing[m.alpha[h]] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == len(m.vertices):
            out.append((ingoing, weight))
    return out


def _directed_cycles(m: CombinatorialMap) -> list[tuple[int, ...]]:
    out = []
    for cyc in simple_cycles(m):
        out.append(cyc)
        out.append(tuple(m.alpha[h] for h in reversed(cyc)))
    return out


def is_suitable_bruteforce(pm: PlaneMap, ingoing: Sequence[bool], cycles: list[tuple[int, ...]] | None = None) -> bool:
    """Minimal and accessible, checked from the definitions.

    A circuit is counterclockwise when its interior (the side without the
    root face) lies on its left.
    """
    m = pm.base
    if cycles is None:
        cycles = _directed_cycles(m)
    for cyc in cycles:
        if all(ingoing[m.alpha[h]] for h in cyc) and cycle_left_is_interior(m, cyc, pm.root_face):
            return False
    for s in pm.outer_vertices():
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for h in m.vertices[u]:
                if ingoing[m.alpha[h]]:
                    w = m.vertex_of[m.alpha[h]]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        if len(seen) != len(m.vertices):
            return False
    return True


def suitable_orientations_bruteforce(pm: PlaneMap, spec: OrientationSpec):
    """All enumerated orientations that are minimal and accessible."""
    cycles = _directed_cycles(pm.base)
    return [(i, w) for i, w in enumerate_orientations(pm, spec) if is_suitable_bruteforce(pm, i, cycles)]


def profile_table(rows: Iterable[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    table: dict[tuple[int, ...], int] = defaultdict(int)
    for r in rows:
        table[r] += 1
    return dict(table)
