"""Weighted biorientations of plane maps and the canonical girth orientations.

A biorientation assigns to every half-edge a direction (ingoing or outgoing
at its vertex) and an integer weight.  The face to the right of a half-edge
``h`` is ``face(alpha(h))``; the weight of a face sums the outgoing
half-edges having it on their right.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .maps import (
    AnnularMap,
    CombinatorialMap,
    PlaneMap,
    contour_is_simple,
    cycle_left_is_interior,
    face_components,
    inner_quadrangulation,
    simple_cycles,
    subdivide,
)


class OrientationError(ValueError):
    """Invalid orientation data (sign invariant, incoherent input, ...)."""


class GirthViolation(ValueError):
    """The map is outside the class; ``certificate`` explains why."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class ZBiorientation:
    ingoing: tuple[bool, ...]
    weight: tuple[int, ...]

    @classmethod
    def from_weights(cls, weights: Sequence[int]) -> ZBiorientation:
        """Directions read off the signs: positive means ingoing."""
        return cls(tuple(w >= 1 for w in weights), tuple(weights))

    def check_signs(self, allow_zero_ingoing: bool = False) -> None:
        for h, (i, w) in enumerate(zip(self.ingoing, self.weight)):
            if i and w < (0 if allow_zero_ingoing else 1):
                raise OrientationError(f"ingoing half-edge {h} has weight {w}")
            if not i and w > 0:
                raise OrientationError(f"outgoing half-edge {h} has weight {w}")

    def edge_type(self, m: CombinatorialMap, h: int) -> int:
        return int(self.ingoing[h]) + int(self.ingoing[m.alpha[h]])

    def vertex_weight(self, m: CombinatorialMap, v: int) -> int:
        return sum(self.weight[h] for h in m.vertices[v] if self.ingoing[h])

    def face_weights(self, m: CombinatorialMap) -> list[int]:
        fw = [0] * len(m.faces)
        for h in range(m.n_half):
            if not self.ingoing[h]:
                fw[m.face_of[m.alpha[h]]] += self.weight[h]
        return fw

    def to_records(self) -> list[dict]:
        return [
            {"half_edge": h + 1, "direction": "in" if i else "out", "weight": w}
            for h, (i, w) in enumerate(zip(self.ingoing, self.weight))
        ]

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> ZBiorientation:
        rows = sorted(records, key=lambda r: r["half_edge"])
        return cls(tuple(r["direction"] == "in" for r in rows), tuple(int(r["weight"]) for r in rows))


@dataclass(frozen=True)
class GirthSpec:
    """Orientation family.

    ``plain(d)``, ``bipartite(b)``, ``annular(d, p, q)``,
    ``annular_bipartite(b, r, s)`` or ``zero()``.  For the bipartite kinds
    the fields ``d, p, q`` hold ``b, r, s``.
    """

    kind: str
    d: int = 0
    p: int = 0
    q: int = 0

    @classmethod
    def plain(cls, d: int) -> GirthSpec:
        if d < 1:
            raise ValueError("d must be positive")
        return cls("plain", d, d, d)

    @classmethod
    def bipartite(cls, b: int) -> GirthSpec:
        if b < 1:
            raise ValueError("b must be positive")
        return cls("bipartite", b, b, b)

    @classmethod
    def annular(cls, d: int, p: int, q: int) -> GirthSpec:
        if min(d, p, q) < 1 or p > q:
            raise ValueError("need positive d, p <= q")
        return cls("annular", d, p, q)

    @classmethod
    def annular_bipartite(cls, b: int, r: int, s: int) -> GirthSpec:
        if min(b, r, s) < 1 or r > s:
            raise ValueError("need positive b, r <= s")
        return cls("annular_bipartite", b, r, s)

    @classmethod
    def zero(cls) -> GirthSpec:
        return cls("zero")

    @property
    def is_bipartite(self) -> bool:
        return self.kind in ("bipartite", "annular_bipartite")

    @property
    def is_annular(self) -> bool:
        return self.kind in ("annular", "annular_bipartite")

    def outer_degree(self) -> int:
        return 2 * self.p if self.is_bipartite else self.p


@dataclass(frozen=True)
class Flags:
    admissible: bool
    minimal: bool
    accessible: bool
    reason: str = ""

    @property
    def suitable(self) -> bool:
        return self.admissible and self.minimal and self.accessible


# ---------------------------------------------------------------------------
# classification


def admissibility_problem(pm: PlaneMap, o: ZBiorientation) -> str | None:
    m = pm.base
    if not contour_is_simple(pm):
        return "root face contour is not a simple cycle"
    outer = pm.outer_edge_halves()
    for h in pm.outer_half_edges():
        a = m.alpha[h]
        if o.ingoing[h] or o.weight[h] != 0 or not o.ingoing[a] or o.weight[a] != 1:
            return f"outer edge at half-edge {h} is not clockwise 1-way with weights 0/1"
    for v in pm.outer_vertices():
        for h in m.vertices[v]:
            if h not in outer and o.ingoing[h]:
                return f"inner half-edge {h} at an outer vertex is ingoing"
    return None


def face_potentials(pm: PlaneMap, capacity: Sequence[int]) -> list[int]:
    """Largest face potential with the root face at 0.

    For every half-edge ``x`` the potential may rise by at most
    ``capacity[x]`` from ``face(x)`` to ``face(alpha(x))``.  This is a
    shortest-path computation from the root face; capacities are >= 0.
    """
    m = pm.base
    nf = len(m.faces)
    arcs: list[list[tuple[int, int]]] = [[] for _ in range(nf)]
    for x in range(m.n_half):
        arcs[m.face_of[x]].append((m.face_of[m.alpha[x]], capacity[x]))
    inf = float("inf")
    dist = [inf] * nf
    src = pm.root_face
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        dv, f = heapq.heappop(heap)
        if dv > dist[f]:
            continue
        for g, c in arcs[f]:
            nd = dv + c
            if nd < dist[g]:
                dist[g] = nd
                heapq.heappush(heap, (nd, g))
    return [int(x) for x in dist]


def has_ccw_circuit(pm: PlaneMap, o: ZBiorientation, method: str = "potential") -> bool:
    """Detect a circuit whose interior (side without the root face) is on its left."""
    if method == "potential":
        cap = [1 if i else 0 for i in o.ingoing]
        return max(face_potentials(pm, cap)) > 0
    if method == "cycles":
        return find_ccw_circuit(pm, o) is not None
    raise ValueError(method)


def find_ccw_circuit(pm: PlaneMap, o: ZBiorientation) -> tuple[int, ...] | None:
    m = pm.base
    for cyc in simple_cycles(m):
        for walk in (cyc, tuple(m.alpha[h] for h in reversed(cyc))):
            if all(o.ingoing[m.alpha[h]] for h in walk) and cycle_left_is_interior(m, walk, pm.root_face):
                return walk
    return None


def reachable(m: CombinatorialMap, o: ZBiorientation, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for h in m.vertices[u]:
            if o.ingoing[m.alpha[h]]:
                w = m.vertex_of[m.alpha[h]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


def classify(pm: PlaneMap, o: ZBiorientation, method: str = "potential") -> Flags:
    o.check_signs()
    m = pm.base
    if len(o.weight) != m.n_half:
        raise OrientationError("orientation does not cover the map")
    problem = admissibility_problem(pm, o)
    minimal = not has_ccw_circuit(pm, o, method)
    nv = len(m.vertices)
    accessible = all(len(reachable(m, o, v)) == nv for v in pm.outer_vertices())
    return Flags(problem is None, minimal, accessible, problem or "")


def check_constraints(pm: PlaneMap, o: ZBiorientation, spec: GirthSpec) -> tuple[bool, str]:
    """Weight conditions of the orientation family; returns (ok, first violation)."""
    m = pm.base
    outer = pm.outer_edge_halves()
    outer_v = pm.outer_vertices()
    bip = spec.is_bipartite
    lo = -1 if bip else -2
    edge_w = spec.d - 1 if bip else spec.d - 2
    if pm.root_degree != spec.outer_degree():
        return False, f"root face degree {pm.root_degree} != {spec.outer_degree()}"
    for h in range(m.n_half):
        if not o.ingoing[h] and not lo <= o.weight[h] <= 0:
            return False, f"outgoing weight {o.weight[h]} at half-edge {h} out of range"
    for h, a in m.edges:
        if h in outer:
            continue
        if o.weight[h] + o.weight[a] != edge_w:
            return False, f"inner edge ({h},{a}) has weight {o.weight[h] + o.weight[a]}"
    for v in range(len(m.vertices)):
        if v not in outer_v and o.vertex_weight(m, v) != spec.d:
            return False, f"inner vertex {v} has weight {o.vertex_weight(m, v)}"
    fw = o.face_weights(m)
    inner_root = pm.inner_root_face if isinstance(pm, AnnularMap) and spec.is_annular else None
    for f, orb in enumerate(m.faces):
        if f == pm.root_face:
            continue
        deg = len(orb)
        if f == inner_root:
            want_deg = 2 * spec.q if bip else spec.q
            if deg != want_deg or fw[f] != spec.p - spec.q:
                return False, f"inner root face has degree {deg} and weight {fw[f]}"
            continue
        if bip:
            if deg % 2 or deg // 2 + fw[f] != spec.d:
                return False, f"face {f} has degree {deg} and weight {fw[f]}"
        elif deg + fw[f] != spec.d:
            return False, f"face {f} has degree {deg} and weight {fw[f]}"
    return True, ""


# ---------------------------------------------------------------------------
# alpha/beta orientations


@dataclass(frozen=True)
class AlphaBetaSpec:
    alpha: tuple[int, ...]  # per vertex
    beta: tuple[int, ...]  # per edge (index in map.edges)


def find_alpha_beta(m: CombinatorialMap, spec: AlphaBetaSpec) -> tuple[int, ...]:
    """Non-negative half-edge weights with the prescribed vertex and edge sums.

    Max-flow from edge nodes (supply beta) to vertex nodes (demand alpha).
    Raises ``GirthViolation`` with a violating vertex set when infeasible.
    """
    total_a = sum(spec.alpha)
    total_b = sum(spec.beta)
    if total_a != total_b:
        cert = set(range(len(m.vertices))) if total_a < total_b else None
        raise GirthViolation(f"totals mismatch: sum alpha {total_a} != sum beta {total_b}", cert)
    g = nx.DiGraph()
    g.add_node("s")
    g.add_node("t")
    for i, (h, a) in enumerate(m.edges):
        if spec.beta[i] == 0:
            continue
        g.add_edge("s", ("e", i), capacity=spec.beta[i])
        for x in {m.vertex_of[h], m.vertex_of[a]}:
            g.add_edge(("e", i), ("v", x))  # unbounded
    for v, c in enumerate(spec.alpha):
        if c:
            g.add_edge(("v", v), "t", capacity=c)
    value, flow = nx.maximum_flow(g, "s", "t")
    if value != total_b:
        _, (side, _) = nx.minimum_cut(g, "s", "t")
        cert = {n[1] for n in side if isinstance(n, tuple) and n[0] == "v"}
        raise GirthViolation("no alpha/beta-orientation exists", cert)
    w = [0] * m.n_half
    for i, (h, a) in enumerate(m.edges):
        if spec.beta[i] == 0:
            continue
        fh = flow[("e", i)].get(("v", m.vertex_of[h]), 0)
        if m.vertex_of[h] == m.vertex_of[a]:
            w[h] = fh
        else:
            w[h] = fh
            w[a] = flow[("e", i)].get(("v", m.vertex_of[a]), 0)
    return tuple(w)


def violating_set_bruteforce(m: CombinatorialMap, spec: AlphaBetaSpec) -> set[int] | None:
    """Exhaustive Hall-type check over vertex subsets (small maps only)."""
    nv = len(m.vertices)
    for k in range(1, nv + 1):
        for s in itertools.combinations(range(nv), k):
            ss = set(s)
            inside = sum(spec.beta[i] for i, (h, a) in enumerate(m.edges) if m.vertex_of[h] in ss and m.vertex_of[a] in ss)
            if sum(spec.alpha[v] for v in ss) < inside:
                return ss
    return None


def make_minimal(pm: PlaneMap, weights: Sequence[int]) -> tuple[int, ...]:
    """The unique minimal orientation with the same vertex and edge weights.

    Input and output are N-biorientations given by weights (0 = outgoing).
    """
    m = pm.base
    p = face_potentials(pm, weights)
    return tuple(weights[x] - (p[m.face_of[m.alpha[x]]] - p[m.face_of[x]]) for x in range(m.n_half))


def push_circuit(m: CombinatorialMap, weights: list[int], walk: Sequence[int]) -> None:
    """Reverse one unit along a circuit traversed by ``walk``."""
    for h in walk:
        a = m.alpha[h]
        weights[a] -= 1
        weights[h] += 1


def make_minimal_by_push(pm: PlaneMap, weights: Sequence[int], max_steps: int = 100_000) -> tuple[int, ...]:
    """Same result as ``make_minimal``, by repeatedly pushing ccw circuits."""
    w = list(weights)
    for _ in range(max_steps):
        o = ZBiorientation.from_weights(w)
        walk = find_ccw_circuit(pm, o)
        if walk is None:
            return tuple(w)
        push_circuit(pm.base, w, walk)
    raise RuntimeError("push did not terminate")


# ---------------------------------------------------------------------------
# the pipeline


def _bipartite_core(pm: PlaneMap, b: int, r: int) -> ZBiorientation:
    """Suitable b/(b-1)-orientation for b >= 2 (outer degree 2r)."""
    if not contour_is_simple(pm):
        raise GirthViolation("root face contour is not a simple cycle")
    m = pm.base
    n = m.n_half
    iq = inner_quadrangulation(pm)
    q = iq.base
    qpm = PlaneMap(q, pm.root)
    outer = pm.outer_edge_halves()
    outer_vertices = {q.vertex_of[h] for h in pm.outer_half_edges()}
    alpha = [0] * len(q.vertices)
    for v, orb in enumerate(q.vertices):
        if v in outer_vertices:
            continue
        alpha[v] = b
    for f, fv in iq.face_vertex.items():
        deg = len(m.faces[f])
        if deg % 2:
            raise GirthViolation(f"face {f} has odd degree {deg}")
        alpha[fv] = deg // 2 + (r if f == iq.special_face else b)
    beta = []
    for h, a in q.edges:
        if h < n:
            beta.append(0 if h in outer else b - 1)
        else:
            beta.append(1)
    w = list(find_alpha_beta(q, AlphaBetaSpec(tuple(alpha), tuple(beta))))
    for h in pm.outer_half_edges():
        w[h], w[m.alpha[h]] = 0, 1
    w = list(make_minimal(qpm, w))
    return sigma_map(pm, iq, w, b)


def sigma_map(pm: PlaneMap, iq, qweights: Sequence[int], b: int) -> ZBiorientation:
    """Transfer a coherent regular orientation of Q_M to M."""
    m = pm.base
    w = list(qweights[: m.n_half])
    for qv, h in iq.m_half.items():
        if qweights[qv] >= 1:
            a = m.alpha[h]
            if not (w[h] == b - 1 and w[a] == 0 and b - 1 >= 1):
                raise OrientationError("regular orientation is not coherent")
            w[h], w[a] = b, -1
    return ZBiorientation.from_weights(w)


def sigma_inverse(pm: PlaneMap, iq, o: ZBiorientation, b: int) -> tuple[int, ...]:
    """Regular orientation of Q_M (weights) from a b/(b-1)-orientation of M."""
    m = pm.base
    q = iq.base
    w = [0] * q.n_half
    for h in range(m.n_half):
        w[h] = o.weight[h]
    for qv, h in iq.m_half.items():
        qf = q.alpha[qv]
        if o.weight[m.alpha[h]] == -1:
            w[h], w[m.alpha[h]] = b - 1, 0
            w[qv], w[qf] = 1, 0
        else:
            w[qv], w[qf] = 0, 1
    return tuple(w)


def tau_map(sub, o: ZBiorientation, d: int) -> ZBiorientation:
    """Contract edge-vertices of a d/(d-1)-orientation of the subdivision."""
    n = sub.n_original
    w = [0] * n
    for h in range(n):
        w[h] = o.weight[h]
    m = sub.plane.base
    outer = sub.plane.outer_edge_halves()
    for x, y in sub.edge_vertex:
        h, a = m.alpha[x], m.alpha[y]
        if h in outer:
            continue
        wi, wj = w[h], w[a]
        if {wi, wj} == {-1, d}:
            if wi == -1:
                w[h] = -2
            else:
                w[a] = -2
        elif wi + wj != d - 2:
            raise OrientationError(f"contracted weights {wi},{wj} outside the allowed pattern")
    return ZBiorientation.from_weights(w)


def tau_inverse(sub, o: ZBiorientation, d: int) -> ZBiorientation:
    n = sub.n_original
    m = sub.plane.base
    outer = sub.plane.outer_edge_halves()
    w = list(o.weight) + [0] * (m.n_half - n)
    for x, y in sub.edge_vertex:
        h, a = m.alpha[x], m.alpha[y]
        wi, wj = o.weight[h], o.weight[a]
        if h in outer:
            # clockwise outer edge split into two clockwise outer edges
            w[x], w[y] = (1, 0) if wi == 0 else (0, 1)
            continue
        if wi == -2:
            wi = -1
        if wj == -2:
            wj = -1
        w[h], w[a] = wi, wj
        w[x], w[y] = d - 1 - wi, d - 1 - wj
    return ZBiorientation.from_weights(w)


def halve(pm: PlaneMap, o: ZBiorientation) -> ZBiorientation:
    outer = pm.outer_edge_halves()
    w = list(o.weight)
    for h in range(len(w)):
        if h in outer:
            continue
        if w[h] % 2:
            raise OrientationError(f"odd inner weight {w[h]} at half-edge {h}")
        w[h] //= 2
    return ZBiorientation.from_weights(w)


def double(pm: PlaneMap, o: ZBiorientation) -> ZBiorientation:
    outer = pm.outer_edge_halves()
    return ZBiorientation.from_weights([w if h in outer else 2 * w for h, w in enumerate(o.weight)])


def halve_or_double(pm: PlaneMap, o: ZBiorientation, direction: str) -> ZBiorientation:
    if direction == "halve":
        return halve(pm, o)
    if direction == "double":
        return double(pm, o)
    raise ValueError(direction)


def _check_type(pm: PlaneMap, spec: GirthSpec) -> None:
    if pm.root is None:
        raise GirthViolation("the vertex map has no root face contour")
    if pm.root_degree != spec.outer_degree():
        raise ValueError(f"root face degree {pm.root_degree} does not match {spec}")
    if spec.is_annular:
        if not isinstance(pm, AnnularMap):
            raise ValueError("annular spec needs an annular map")
        want = 2 * spec.q if spec.is_bipartite else spec.q
        if pm.inner_root_degree != want:
            raise ValueError(f"inner root face degree {pm.inner_root_degree} does not match {spec}")
        if spec.p < spec.d:
            # the characterization needs every face, root faces included, of degree >= d
            raise ValueError(f"outer degree below the girth bound in {spec}")


def _pipeline(pm: PlaneMap, spec: GirthSpec) -> ZBiorientation:
    kind = spec.kind
    if kind in ("bipartite", "annular_bipartite"):
        b, r = spec.d, spec.p
        if b >= 2:
            return _bipartite_core(pm, b, r)
        inner = GirthSpec.annular(2, 2 * r, 2 * spec.q) if spec.is_annular else GirthSpec.plain(2)
        return halve(pm, _pipeline(pm, inner))
    if kind in ("plain", "annular"):
        d = spec.d
        sub = subdivide(pm)
        if d >= 2:
            o = _bipartite_core(sub.plane, d, spec.p)
        else:
            inner = GirthSpec.annular_bipartite(1, spec.p, spec.q) if spec.is_annular else GirthSpec.bipartite(1)
            o = _pipeline(sub.plane, inner)
        return tau_map(sub, o, d)
    raise ValueError(f"no pipeline for {kind}")


def suitable_orientation(pm: PlaneMap, spec: GirthSpec, verify: bool = True) -> ZBiorientation:
    """The unique suitable orientation of the family, or ``GirthViolation``."""
    if spec.kind == "zero":
        raise ValueError("use geodesic_biorientation for d = 0")
    _check_type(pm, spec)
    o = _pipeline(pm, spec)
    if verify:
        flags = classify(pm, o)
        ok, why = check_constraints(pm, o, spec)
        if not (flags.suitable and ok):
            raise OrientationError(f"pipeline output failed verification: {flags} {why}")
    return o


# ---------------------------------------------------------------------------
# d = 0 and d = 1 special constructions


def distances(m: CombinatorialMap, start: int) -> list[int]:
    dist = [-1] * len(m.vertices)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for h in m.vertices[u]:
            w = m.vertex_of[m.alpha[h]]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def geodesic_biorientation(m: CombinatorialMap, marked_vertex: int) -> ZBiorientation:
    """Edges between equal distances are 0-way (-1, -1); others point away (-2, 0)."""
    dist = distances(m, marked_vertex)
    ingoing = [False] * m.n_half
    weight = [0] * m.n_half
    for h, a in m.edges:
        du, dv = dist[m.vertex_of[h]], dist[m.vertex_of[a]]
        if du == dv:
            weight[h] = weight[a] = -1
        elif du < dv:
            weight[h], weight[a] = -2, 0
            ingoing[a] = True
        else:
            weight[a], weight[h] = -2, 0
            ingoing[h] = True
    return ZBiorientation(tuple(ingoing), tuple(weight))


def classify_zero(m: CombinatorialMap, marked_vertex: int, o: ZBiorientation) -> Flags:
    """Suitability for outer degree 0: the marked vertex plays the outer face."""
    o.check_signs(allow_zero_ingoing=True)
    admissible = not any(o.ingoing[h] for h in m.vertices[marked_vertex])
    minimal = True
    for cyc in simple_cycles(m):
        for walk in (cyc, tuple(m.alpha[h] for h in reversed(cyc))):
            if not all(o.ingoing[m.alpha[h]] for h in walk):
                continue
            if any(m.vertex_of[h] == marked_vertex for h in walk):
                minimal = False
                break
            comp = face_components(m, (m.edge_of[h] for h in walk))
            if comp[m.face_of[m.vertices[marked_vertex][0]]] != comp[m.face_of[walk[0]]]:
                minimal = False
                break
        if not minimal:
            break
    accessible = len(reachable(m, o, marked_vertex)) == len(m.vertices)
    return Flags(admissible, minimal, accessible)


def check_zero_constraints(m: CombinatorialMap, o: ZBiorientation) -> bool:
    for h, a in m.edges:
        if o.weight[h] + o.weight[a] != -2:
            return False
    for h in range(m.n_half):
        if o.ingoing[h] and o.weight[h] != 0:
            return False
    fw = o.face_weights(m)
    return all(len(orb) + fw[f] == 0 for f, orb in enumerate(m.faces))


def _bfs_trees(m: CombinatorialMap, root: int, dist: list[int], limit: int) -> list[dict[int, int]]:
    """All BFS trees as maps vertex -> half-edge at the vertex toward its parent."""
    choices = []
    for v in range(len(m.vertices)):
        if v == root:
            continue
        cand = [h for h in m.vertices[v] if dist[m.vertex_of[m.alpha[h]]] == dist[v] - 1]
        choices.append((v, cand))
    total = 1
    for _, c in choices:
        total *= len(c)
    if total > limit:
        raise RuntimeError(f"{total} BFS trees exceed the limit {limit}")
    out = []
    for pick in itertools.product(*(c for _, c in choices)):
        out.append({v: h for (v, _), h in zip(choices, pick)})
    return out


def rightmost_bfs_orientation(pm: PlaneMap, limit: int = 200_000) -> ZBiorientation:
    """1/(-1)-orientation of a map whose root face is a loop.

    Finds the BFS tree along which root-distance never decreases on non-tree
    edges read left-to-right (root face region on the left), then assigns
    tree edges (-2 at the parent, 1 at the child) and non-tree inner edges
    0-way with weight 0 on the left half when both ends are equidistant and
    on the right half otherwise.
    """
    m = pm.base
    if pm.root is None or pm.root_degree != 1:
        raise ValueError("the root face must be a loop face")
    root_v = m.vertex_of[pm.root]
    dist = distances(m, root_v)
    outer = pm.outer_edge_halves()
    found = None
    for tree in _bfs_trees(m, root_v, dist, limit):
        tree_edges = {m.edge_of[h] for h in tree.values()}
        parent_half = {v: h for v, h in tree.items()}
        left_half: dict[int, int] = {}
        ok = True
        for i, (h, a) in enumerate(m.edges):
            if i in tree_edges or h in outer:
                continue
            walk = _fundamental_walk(m, h, parent_half)
            lh = h if not cycle_left_is_interior(m, walk, pm.root_face) else a
            u, v = m.vertex_of[lh], m.vertex_of[m.alpha[lh]]
            if dist[v] < dist[u]:
                ok = False
                break
            left_half[i] = lh
        if ok:
            if found is not None:
                raise RuntimeError("rightmost BFS tree is not unique")
            found = (tree, left_half)
    if found is None:
        raise RuntimeError("no rightmost BFS tree")
    tree, left_half = found
    w = [0] * m.n_half
    for h in pm.outer_half_edges():
        w[h], w[m.alpha[h]] = 0, 1
    for v, h in tree.items():
        w[h], w[m.alpha[h]] = 1, -2
    for i, lh in left_half.items():
        rh = m.alpha[lh]
        if dist[m.vertex_of[lh]] == dist[m.vertex_of[rh]]:
            w[lh], w[rh] = 0, -1
        else:
            w[lh], w[rh] = -1, 0
    return ZBiorientation.from_weights(w)


def _fundamental_walk(m: CombinatorialMap, h: int, parent_half: dict[int, int]) -> tuple[int, ...]:
    """Closed walk: h from u to v, then the tree path from v back to u."""
    u, v = m.vertex_of[h], m.vertex_of[m.alpha[h]]

    def up(x: int) -> list[int]:
        path = [x]
        while x in parent_half:
            x = m.vertex_of[m.alpha[parent_half[x]]]
            path.append(x)
        return path

    pu, pv = up(u), up(v)
    su = set(pu)
    lca = next(x for x in pv if x in su)
    walk = [h]
    x = v
    while x != lca:  # climb from v toward the common ancestor
        g = parent_half[x]
        walk.append(g)
        x = m.vertex_of[m.alpha[g]]
    down = []
    x = u
    while x != lca:
        g = parent_half[x]
        down.append(m.alpha[g])
        x = m.vertex_of[m.alpha[g]]
    walk.extend(reversed(down))
    return tuple(walk)
