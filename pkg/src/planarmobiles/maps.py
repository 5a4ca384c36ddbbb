"""Combinatorial planar maps encoded by a pair of permutations on half-edges.

Half-edges are dense integers ``0..2E-1`` internally (the text format is
1-based).  ``alpha`` pairs the two halves of an edge and ``sigma`` gives the
clockwise successor of a half-edge around its vertex.  Faces are the orbits of
``phi = sigma o alpha`` and ``face(h)`` is the face lying to the left of ``h``
when ``h`` is traversed away from its vertex.  The corner ``c(h)`` is the pair
``(sigma^-1(h), h)``; it belongs to ``face(h)``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class MapError(ValueError):
    """Raised when a permutation pair does not encode a planar map."""


@dataclass(frozen=True, eq=False)
class CombinatorialMap:
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "sigma", tuple(self.sigma))

    @property
    def n_half(self) -> int:
        return len(self.alpha)

    @property
    def n_edges(self) -> int:
        return len(self.alpha) // 2

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        inv = [0] * self.n_half
        for h, g in enumerate(self.sigma):
            inv[g] = h
        return tuple(inv)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return tuple(self.sigma[a] for a in self.alpha)

    @cached_property
    def phi_inv(self) -> tuple[int, ...]:
        inv = [0] * self.n_half
        for h, g in enumerate(self.phi):
            inv[g] = h
        return tuple(inv)

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        if self.n_half == 0:
            return ((),)
        return _orbits(self.sigma)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        if self.n_half == 0:
            return ((),)
        return _orbits(self.phi)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _orbit_index(self.vertices, self.n_half)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _orbit_index(self.faces, self.n_half)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((h, a) for h, a in enumerate(self.alpha) if h < a)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        out = [0] * self.n_half
        for i, (h, a) in enumerate(self.edges):
            out[h] = out[a] = i
        return tuple(out)

    def vertex_degrees(self) -> list[int]:
        return [len(v) for v in self.vertices]

    def face_degrees(self) -> list[int]:
        return [len(f) for f in self.faces]

    def endpoints(self, h: int) -> tuple[int, int]:
        return self.vertex_of[h], self.vertex_of[self.alpha[h]]

    def validate(self) -> None:
        """Check involution, permutation, connectivity and genus 0."""
        n = self.n_half
        if len(self.sigma) != n:
            raise MapError("alpha and sigma act on different sets")
        if n % 2:
            raise MapError("odd number of half-edges")
        if sorted(self.sigma) != list(range(n)):
            raise MapError("sigma is not a permutation")
        for h, a in enumerate(self.alpha):
            if not 0 <= a < n or a == h or self.alpha[a] != h:
                raise MapError("alpha is not a fixed-point-free involution")
        if n and not _connected(self.alpha, self.sigma):
            raise MapError("disconnected")
        if euler_characteristic(self) != 2:
            raise MapError("non-planar: Euler characteristic is not 2")

    def relabel(self, perm: Sequence[int]) -> CombinatorialMap:
        """Return the map with half-edge ``h`` renamed ``perm[h]``."""
        n = self.n_half
        alpha = [0] * n
        sigma = [0] * n
        for h in range(n):
            alpha[perm[h]] = perm[self.alpha[h]]
            sigma[perm[h]] = perm[self.sigma[h]]
        return CombinatorialMap(tuple(alpha), tuple(sigma))


def _orbits(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        orb = []
        h = s
        while not seen[h]:
            seen[h] = True
            orb.append(h)
            h = perm[h]
        out.append(tuple(orb))
    return tuple(out)


def _orbit_index(orbits: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    out = [0] * n
    for i, orb in enumerate(orbits):
        for h in orb:
            out[h] = i
    return tuple(out)


def _connected(alpha: Sequence[int], sigma: Sequence[int]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        h = stack.pop()
        for g in (alpha[h], sigma[h]):
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return len(seen) == len(alpha)


def euler_characteristic(m: CombinatorialMap) -> int:
    return len(m.vertices) - m.n_edges + len(m.faces)


def vertex_map() -> CombinatorialMap:
    """The map with one vertex and no edge."""
    return CombinatorialMap((), ())


def from_cycles(alpha_pairs: Iterable[Sequence[int]], sigma_cycles: Iterable[Sequence[int]]) -> CombinatorialMap:
    """Build a map from 0-based edge pairs and clockwise vertex cycles."""
    pairs = [tuple(p) for p in alpha_pairs]
    n = 2 * len(pairs)
    alpha = [-1] * n
    sigma = [-1] * n
    for a, b in pairs:
        alpha[a], alpha[b] = b, a
    for cyc in sigma_cycles:
        for i, h in enumerate(cyc):
            sigma[h] = cyc[(i + 1) % len(cyc)]
    if -1 in alpha or -1 in sigma:
        raise MapError("incomplete permutation data")
    m = CombinatorialMap(tuple(alpha), tuple(sigma))
    m.validate()
    return m


# ---------------------------------------------------------------------------
# plane, annular and rooted maps


@dataclass(frozen=True, eq=False)
class PlaneMap:
    """A map with a root face, given by a half-edge lying on its left.

    ``root`` is ``None`` only for the vertex map, whose unique face is the
    root face.
    """

    base: CombinatorialMap
    root: int | None

    @property
    def root_face(self) -> int:
        return 0 if self.root is None else self.base.face_of[self.root]

    @property
    def root_degree(self) -> int:
        return len(self.base.faces[self.root_face])

    def inner_faces(self) -> list[int]:
        return [f for f in range(len(self.base.faces)) if f != self.root_face]

    def outer_half_edges(self) -> tuple[int, ...]:
        """Half-edges whose left face is the root face."""
        if self.root is None:
            return ()
        return self.base.faces[self.root_face]

    def outer_edge_halves(self) -> set[int]:
        out = set()
        for h in self.outer_half_edges():
            out.add(h)
            out.add(self.base.alpha[h])
        return out

    def outer_vertices(self) -> set[int]:
        if self.root is None:
            return {0}
        return {self.base.vertex_of[h] for h in self.outer_half_edges()}


@dataclass(frozen=True, eq=False)
class AnnularMap(PlaneMap):
    inner_root: int = -1

    @property
    def inner_root_face(self) -> int:
        return self.base.face_of[self.inner_root]

    @property
    def inner_root_degree(self) -> int:
        return len(self.base.faces[self.inner_root_face])

    def check(self) -> None:
        if self.root is None or self.inner_root_face == self.root_face:
            raise MapError("the two root faces must be distinct")


@dataclass(frozen=True, eq=False)
class RootedMap:
    """A plane (or annular) map with a marked corner in each root face.

    Corners are encoded by half-edges: ``c(h)`` belongs to ``face(h)``.
    """

    plane: PlaneMap
    corner: int | None
    inner_corner: int | None = None

    def check(self) -> None:
        m = self.plane.base
        if self.corner is not None and m.face_of[self.corner] != self.plane.root_face:
            raise MapError("root corner not incident to the root face")
        if self.inner_corner is not None:
            assert isinstance(self.plane, AnnularMap)
            if m.face_of[self.inner_corner] != self.plane.inner_root_face:
                raise MapError("inner root corner not incident to the inner root face")


# ---------------------------------------------------------------------------
# text format


def parse_map(text: str) -> PlaneMap | AnnularMap:
    """Parse the JSON map format (1-based half-edge ids).

    Fields: ``half_edges``, ``alpha`` (pairs), ``sigma`` (clockwise vertex
    cycles), ``root_half_edge`` and optionally ``inner_root_half_edge``.
    """
    data = json.loads(text)
    return map_from_dict(data)


def map_from_dict(data: dict) -> PlaneMap | AnnularMap:
    n = int(data.get("half_edges", 0))
    pairs = [(a - 1, b - 1) for a, b in data.get("alpha", [])]
    cycles = [[h - 1 for h in cyc] for cyc in data.get("sigma", [])]
    if 2 * len(pairs) != n:
        raise MapError("half_edges does not match the number of alpha pairs")
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise MapError("alpha refers to an unknown half-edge")
    seen = sorted(h for p in pairs for h in p)
    if seen != list(range(n)):
        raise MapError("alpha is not a fixed-point-free involution")
    m = from_cycles(pairs, cycles) if n else vertex_map()
    root = data.get("root_half_edge")
    if n and root is None:
        raise MapError("missing root_half_edge")
    if root is not None and not 1 <= root <= n:
        raise MapError("dangling root reference")
    r = None if root is None else root - 1
    inner = data.get("inner_root_half_edge")
    if inner is None:
        return PlaneMap(m, r)
    if not 1 <= inner <= n:
        raise MapError("dangling inner root reference")
    am = AnnularMap(m, r, inner - 1)
    am.check()
    return am


def map_to_dict(pm: PlaneMap) -> dict:
    m = pm.base
    out: dict = {
        "half_edges": m.n_half,
        "alpha": [[a + 1, b + 1] for a, b in m.edges],
        "sigma": sorted(_rotate_min([h + 1 for h in v]) for v in m.vertices if v),
    }
    if pm.root is not None:
        out["root_half_edge"] = pm.root + 1
    if isinstance(pm, AnnularMap):
        out["inner_root_half_edge"] = pm.inner_root + 1
    return out


def serialize_map(pm: PlaneMap) -> str:
    return json.dumps(map_to_dict(pm), sort_keys=True)


def _rotate_min(cyc: list[int]) -> list[int]:
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


def to_dot(pm: PlaneMap, weights: Sequence[int] | None = None) -> str:
    m = pm.base
    lines = ["graph map {"]
    for v in range(len(m.vertices)):
        lines.append(f"  v{v};")
    for h, a in m.edges:
        label = "" if weights is None else f' [label="{weights[h]}:{weights[a]}"]'
        lines.append(f"  v{m.vertex_of[h]} -- v{m.vertex_of[a]}{label};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# girth and cycles


def girth(m: CombinatorialMap) -> int | None:
    """Length of a shortest cycle, or ``None`` for a tree."""
    if any(m.vertex_of[h] == m.vertex_of[a] for h, a in m.edges):
        return 1
    pairs = set()
    for h, a in m.edges:
        key = tuple(sorted(m.endpoints(h)))
        if key in pairs:
            return 2
        pairs.add(key)
    adj: list[set[int]] = [set() for _ in m.vertices]
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    best = None
    for s in range(len(adj)):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


def simple_cycles(m: CombinatorialMap, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle once, as a closed walk of half-edges.

    The walk ``(h_1, ..., h_k)`` leaves ``vertex(h_i)`` and arrives at
    ``vertex(h_{i+1})``.  Orientation of the yielded walk is arbitrary.
    """
    seen: set[frozenset[int]] = set()
    nv = len(m.vertices)
    for s in range(nv):
        on_path = [False] * nv
        on_path[s] = True
        path: list[int] = []

        def dfs(u: int) -> Iterator[tuple[int, ...]]:
            if max_len is not None and len(path) >= max_len:
                return
            for h in m.vertices[u]:
                w = m.vertex_of[m.alpha[h]]
                if path and m.edge_of[h] == m.edge_of[path[-1]]:
                    continue
                if w == s:
                    cyc = tuple(path) + (h,)
                    key = frozenset(m.edge_of[g] for g in cyc)
                    if key not in seen:
                        seen.add(key)
                        yield cyc
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(h)
                    yield from dfs(w)
                    path.pop()
                    on_path[w] = False

        yield from dfs(s)


def face_components(m: CombinatorialMap, cut_edges: Iterable[int]) -> list[int]:
    """Label faces by connected region after removing the given edges."""
    cut = set(cut_edges)
    parent = list(range(len(m.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (h, a) in enumerate(m.edges):
        if i not in cut:
            x, y = find(m.face_of[h]), find(m.face_of[a])
            if x != y:
                parent[x] = y
    return [find(f) for f in range(len(m.faces))]


def cycle_left_is_interior(m: CombinatorialMap, cycle: Sequence[int], root_face: int) -> bool:
    """True when the faces left of the walk are on the side without the root face."""
    comp = face_components(m, (m.edge_of[h] for h in cycle))
    return comp[m.face_of[cycle[0]]] != comp[root_face]


def annular_girths(am: AnnularMap) -> tuple[int | None, int | None]:
    """(separating girth, non-separating girth); ``None`` when no such cycle."""
    m = am.base
    sep = non = None
    for cyc in simple_cycles(m):
        comp = face_components(m, (m.edge_of[h] for h in cyc))
        k = len(cyc)
        if comp[am.root_face] != comp[am.inner_root_face]:
            if sep is None or k < sep:
                sep = k
        elif non is None or k < non:
            non = k
    return sep, non


def is_bipartite(m: CombinatorialMap) -> bool:
    color = [-1] * len(m.vertices)
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for h in m.vertices[u]:
            w = m.vertex_of[m.alpha[h]]
            if color[w] < 0:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return False
    return True


def contour_is_simple(pm: PlaneMap) -> bool:
    """True when the root-face contour is a simple cycle."""
    if pm.root is None:
        return False
    m = pm.base
    walk = m.faces[pm.root_face]
    halves = set(walk)
    if any(m.alpha[h] in halves for h in walk):
        return False
    verts = [m.vertex_of[h] for h in walk]
    return len(set(verts)) == len(verts)


# ---------------------------------------------------------------------------
# derived maps


def dual(pm: PlaneMap) -> tuple[CombinatorialMap, int | None]:
    """Dual map and a half-edge at the vertex dual to the root face.

    Dual half-edge ``h`` sits at the vertex dual to ``face(h)``.
    """
    m = pm.base
    d = CombinatorialMap(m.alpha, m.phi_inv)
    return d, pm.root


@dataclass(frozen=True, eq=False)
class Subdivision:
    plane: PlaneMap
    # edge index of the original map -> (edge-vertex half toward h, toward alpha(h))
    edge_vertex: tuple[tuple[int, int], ...]
    n_original: int


def subdivide(pm: PlaneMap) -> Subdivision:
    """Insert an edge-vertex in the middle of every edge.

    Original half-edges keep their ids; edge ``i = (h, a)`` gains half-edges
    ``n + 2i`` (paired with ``h``) and ``n + 2i + 1`` (paired with ``a``).
    """
    m = pm.base
    n = m.n_half
    alpha = list(m.alpha) + [0] * n
    sigma = list(m.sigma) + [0] * n
    ev = []
    for i, (h, a) in enumerate(m.edges):
        x, y = n + 2 * i, n + 2 * i + 1
        alpha[h], alpha[x] = x, h
        alpha[a], alpha[y] = y, a
        sigma[x], sigma[y] = y, x
        ev.append((x, y))
    sm = CombinatorialMap(tuple(alpha), tuple(sigma))
    if isinstance(pm, AnnularMap):
        out: PlaneMap = AnnularMap(sm, pm.root, pm.inner_root)
    else:
        out = PlaneMap(sm, pm.root)
    return Subdivision(out, tuple(ev), n)


@dataclass(frozen=True, eq=False)
class InnerQuadrangulation:
    """Superimposition of a map with its inner quadrangulation.

    ``base`` contains every half-edge of the original map (same ids) plus one
    Q-edge per inner corner.  ``q_at_vertex[h]`` is the Q half-edge inserted
    in corner ``c(h)`` and ``m_half[q]`` is ``h``: the edge of ``h`` follows
    the Q-edge clockwise around the vertex.
    """

    base: CombinatorialMap
    n_original: int
    face_vertex: dict[int, int]  # inner face of M -> vertex of Q_M
    q_at_vertex: dict[int, int]
    q_at_face: dict[int, int]
    m_half: dict[int, int]
    special_face: int | None
    q_map: CombinatorialMap = field(repr=False)


def inner_quadrangulation(pm: PlaneMap) -> InnerQuadrangulation:
    m = pm.base
    n = m.n_half
    rf = pm.root_face
    inner = [h for h in range(n) if m.face_of[h] != rf]
    q_v = {h: n + 2 * i for i, h in enumerate(inner)}
    q_f = {h: n + 2 * i + 1 for i, h in enumerate(inner)}
    total = n + 2 * len(inner)
    alpha = list(m.alpha) + [0] * (2 * len(inner))
    sigma = [0] * total
    for h in inner:
        alpha[q_v[h]], alpha[q_f[h]] = q_f[h], q_v[h]
    for v in m.vertices:
        seq: list[int] = []
        for h in v:
            if h in q_v:
                seq.append(q_v[h])
            seq.append(h)
        for i, g in enumerate(seq):
            sigma[g] = seq[(i + 1) % len(seq)]
    face_vertex = {}
    for f in range(len(m.faces)):
        if f == rf:
            continue
        orb = m.faces[f]
        # clockwise around the face-vertex follows phi^-1
        for h in orb:
            sigma[q_f[h]] = q_f[m.phi_inv[h]]
        face_vertex[f] = -1
    qm = CombinatorialMap(tuple(alpha), tuple(sigma))
    for f in face_vertex:
        face_vertex[f] = qm.vertex_of[q_f[m.faces[f][0]]]
    # Q alone: drop the M edges
    keep = sorted(set(range(n, total)))
    pos = {h: i for i, h in enumerate(keep)}
    qa = [pos[alpha[h]] for h in keep]
    qs = []
    for h in keep:
        g = sigma[h]
        while g < n:
            g = sigma[g]
        qs.append(pos[g])
    special = pm.inner_root_face if isinstance(pm, AnnularMap) else None
    return InnerQuadrangulation(
        qm, n, face_vertex, q_v, q_f, {q_v[h]: h for h in inner}, special, CombinatorialMap(tuple(qa), tuple(qs))
    )


# ---------------------------------------------------------------------------
# root conversions


def rooted_to_c1(rm: RootedMap) -> PlaneMap:
    """Insert a loop in the root corner; its inside becomes the root face."""
    m = rm.plane.base
    n = m.n_half
    x, y = n, n + 1
    alpha = list(m.alpha) + [y, x]
    sigma = list(m.sigma) + [0, 0]
    if rm.corner is None:
        sigma[x], sigma[y] = y, x
    else:
        r = rm.corner
        p = m.sigma_inv[r]
        sigma[p], sigma[x], sigma[y] = x, y, r
        if p == r:
            sigma[r] = x
    out = CombinatorialMap(tuple(alpha), tuple(sigma))
    return PlaneMap(out, y)


def c1_to_rooted(pm: PlaneMap) -> RootedMap:
    m = pm.base
    if pm.root is None or len(m.faces[pm.root_face]) != 1:
        raise MapError("root face is not a loop face")
    y = pm.root
    x = m.alpha[y]
    keep = [h for h in range(m.n_half) if h not in (x, y)]
    if not keep:
        return RootedMap(PlaneMap(vertex_map(), None), None)
    pos = {h: i for i, h in enumerate(keep)}

    def nxt(h: int) -> int:
        g = m.sigma[h]
        while g in (x, y):
            g = m.sigma[g]
        return g

    alpha = [pos[m.alpha[h]] for h in keep]
    sigma = [pos[nxt(h)] for h in keep]
    out = CombinatorialMap(tuple(alpha), tuple(sigma))
    r = pos[nxt(y)]
    return RootedMap(PlaneMap(out, r), r)


def edge_marked_to_c2(m: CombinatorialMap, edge_half: int) -> PlaneMap:
    """Double the marked edge; the digon between the copies is the root face."""
    n = m.n_half
    a, b = edge_half, m.alpha[edge_half]
    x, y = n, n + 1
    alpha = list(m.alpha) + [y, x]
    sigma = list(m.sigma) + [0, 0]
    pb = m.sigma_inv[b]
    sa = m.sigma[a]
    sigma[a], sigma[x] = x, sa
    if pb == a:
        pb = x
    sigma[pb], sigma[y] = y, b
    out = CombinatorialMap(tuple(alpha), tuple(sigma))
    return PlaneMap(out, x)


def c2_to_edge_marked(pm: PlaneMap) -> tuple[CombinatorialMap, int]:
    m = pm.base
    if pm.root is None or len(m.faces[pm.root_face]) != 2:
        raise MapError("root face is not a digon")
    x = pm.root
    y = m.alpha[x]
    other = m.phi[x]
    keep = [h for h in range(m.n_half) if h not in (x, y)]
    pos = {h: i for i, h in enumerate(keep)}

    def nxt(h: int) -> int:
        g = m.sigma[h]
        while g in (x, y):
            g = m.sigma[g]
        return g

    out = CombinatorialMap(tuple(pos[m.alpha[h]] for h in keep), tuple(pos[nxt(h)] for h in keep))
    return out, pos[other]


# ---------------------------------------------------------------------------
# canonical codes


def rooted_code(m: CombinatorialMap, root: int | None) -> tuple[int, ...]:
    """Code of the map relabelled by breadth-first search from ``root``."""
    if root is None or m.n_half == 0:
        return ()
    n = m.n_half
    lab = [-1] * n
    lab[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        for g in (m.sigma[h], m.alpha[h]):
            if lab[g] < 0:
                lab[g] = len(order)
                order.append(g)
    return tuple(lab[m.sigma[h]] for h in order) + tuple(lab[m.alpha[h]] for h in order)


def _labels_from(m: CombinatorialMap, root: int) -> list[int]:
    lab = [-1] * m.n_half
    lab[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        for g in (m.sigma[h], m.alpha[h]):
            if lab[g] < 0:
                lab[g] = len(order)
                order.append(g)
    return lab


def canonical_code(obj: PlaneMap | RootedMap | CombinatorialMap, root: int | None = None) -> tuple:
    """Isomorphism invariant code.

    * ``CombinatorialMap`` with ``root``: rooted code.
    * ``RootedMap``: rooted code, plus the inner corner label when present.
    * ``PlaneMap``: minimum over outer corners; annular maps add the least
      label of the inner root face.
    """
    if isinstance(obj, CombinatorialMap):
        return rooted_code(obj, root)
    if isinstance(obj, RootedMap):
        m = obj.plane.base
        code = rooted_code(m, obj.corner)
        if obj.inner_corner is not None:
            lab = _labels_from(m, obj.corner)
            code = code + (-1, lab[obj.inner_corner])
        return code
    m = obj.base
    if obj.root is None:
        return ()
    best = None
    for h in m.faces[obj.root_face]:
        code = rooted_code(m, h)
        if isinstance(obj, AnnularMap):
            lab = _labels_from(m, h)
            code = code + (-1, min(lab[g] for g in m.faces[obj.inner_root_face]))
        if best is None or code < best:
            best = code
    return best


def iso_check(a, b) -> bool:
    return canonical_code(a) == canonical_code(b)


def random_relabel(m: CombinatorialMap, rng) -> tuple[CombinatorialMap, list[int]]:
    perm = list(range(m.n_half))
    rng.shuffle(perm)
    return m.relabel(perm), perm
