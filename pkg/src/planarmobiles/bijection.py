"""Opening of suitably oriented plane maps into mobiles, and its inverse.

``phi`` turns a plane map with a suitable orientation into a mobile: one
black vertex per inner face, one white vertex per inner vertex.  ``psi``
closes a mobile of negative excess into a vertex-rooted map whose dual is
the original map; ``phi_inverse`` performs that dualization and recovers the
orientation from the half-edge weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maps import AnnularMap, CombinatorialMap, PlaneMap, rooted_code, _labels_from
from .mobile import BLACK, WHITE, Mobile, MobileSpec, code_from, excess, validate
from .orientation import (
    GirthSpec,
    ZBiorientation,
    check_constraints,
    classify,
    suitable_orientation,
)


class BijectionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# opening


def phi(pm: PlaneMap, o: ZBiorientation, check: bool = True) -> Mobile:
    """Open a suitably oriented plane map into a mobile.

    Exposed buds are the images of the outer edges.  For an annular map the
    black vertex of the inner root face is marked special.
    """
    if check:
        flags = classify(pm, o)
        if not flags.suitable:
            raise BijectionError(f"orientation is not suitable: {flags.reason}")
    m = pm.base
    f0 = pm.root_face
    outer = set(pm.outer_half_edges())
    outer_v = pm.outer_vertices()
    ing = o.ingoing

    colors: list[str] = []
    black_of: dict[int, int] = {}
    white_of: dict[int, int] = {}
    for f in range(len(m.faces)):
        if f != f0:
            black_of[f] = len(colors)
            colors.append(BLACK)
    for v in range(len(m.vertices)):
        if v not in outer_v:
            white_of[v] = len(colors)
            colors.append(WHITE)

    # slot keys -> mobile half-edge ids
    ids: dict[tuple, int] = {}

    def hid(key: tuple) -> int:
        if key not in ids:
            ids[key] = len(ids)
        return ids[key]

    partner: dict[int, int] = {}
    weight: dict[int, int] = {}
    exposed: set[int] = set()
    corner_item: dict[int, int] = {}  # h -> id of the item at b_face(h) in corner c(h)
    edge_item: dict[int, int] = {}  # h -> id of the black-black half at b_face(h) across edge(h)
    white_corner: dict[int, int] = {}  # h -> id of the white half in corner c(h)
    white_edge: dict[int, int] = {}  # h -> id of the white-white half h

    def white_at(h: int) -> None:
        if m.vertex_of[h] in outer_v:
            raise BijectionError("an inner edge points into an outer vertex")

    def black_at(h: int) -> None:
        if m.face_of[h] == f0:
            raise BijectionError("an inner edge touches the root face")

    for h, a in m.edges:
        if h in outer or a in outer:
            inner_half = a if h in outer else h
            if m.face_of[inner_half] == f0:
                raise BijectionError("outer contour is not a simple cycle")
            b = hid(("c", inner_half))
            corner_item[inner_half] = b
            partner[b] = -1
            weight[b] = 0
            exposed.add(b)
            continue
        ih, ia = ing[h], ing[a]
        if not ih and not ia:
            black_at(h)
            black_at(a)
            x, y = hid(("e", h)), hid(("e", a))
            edge_item[h], edge_item[a] = x, y
            partner[x], partner[y] = y, x
            weight[x], weight[y] = o.weight[a], o.weight[h]
        elif ih and ia:
            for g in (h, a):
                white_at(g)
                black_at(g)
                b = hid(("c", g))
                corner_item[g] = b
                partner[b] = -1
                weight[b] = 0
                wh = hid(("w", g))
                white_edge[g] = wh
                weight[wh] = o.weight[g]
            partner[white_edge[h]], partner[white_edge[a]] = white_edge[a], white_edge[h]
        else:
            i, u = (h, a) if ih else (a, h)
            white_at(i)
            black_at(i)
            black_at(u)
            x, y = hid(("c", i)), hid(("wc", i))
            corner_item[i], white_corner[i] = x, y
            partner[x], partner[y] = y, x
            weight[x], weight[y] = o.weight[u], o.weight[i]
            b = hid(("c", u))
            corner_item[u] = b
            partner[b] = -1
            weight[b] = 0

    rotation: list[list[int]] = [[] for _ in colors]
    for f, bv in black_of.items():
        face = m.faces[f]
        # clockwise around b_f visits the face boundary backwards
        for h in reversed(face):
            if h in edge_item:
                rotation[bv].append(edge_item[h])
            if h in corner_item:
                rotation[bv].append(corner_item[h])
    for v, wv in white_of.items():
        for h in m.vertices[v]:
            if h in white_corner:
                rotation[wv].append(white_corner[h])
            if h in white_edge:
                rotation[wv].append(white_edge[h])

    n = len(ids)
    special = None
    if isinstance(pm, AnnularMap):
        special = black_of[pm.inner_root_face]
    return Mobile(
        tuple(colors),
        tuple(tuple(r) for r in rotation),
        tuple(partner[i] for i in range(n)),
        tuple(weight[i] for i in range(n)),
        special,
        frozenset(exposed),
    )


# ---------------------------------------------------------------------------
# closure


@dataclass(frozen=True, eq=False)
class Closure:
    """Complete closure of a mobile.

    ``base`` is the vertex-rooted map (fake vertices erased); ``root_vertex``
    its added vertex.  ``weight``/``ingoing`` give, for each half-edge ``x``
    of ``base``, the orientation data of the half-edge ``x`` of the dual map.
    ``origin`` records which mobile item each half-edge comes from.
    """

    base: CombinatorialMap
    root_vertex: int
    weight: tuple[int, ...]
    ingoing: tuple[bool, ...]
    origin: tuple[tuple, ...]
    special_vertex: int | None


def _blossoming(t: Mobile):
    """Fully blossoming mobile: stems before black-white edges, fakes on
    white-white edges.  Returns (rotations, partner, kind, info)."""
    rot: list[list[int]] = []
    partner: list[int] = []
    kind: list[str] = []  # "bud", "stem", "bb", "bw", "wb", "ww", "fake"
    info: list[object] = []
    colors: list[str] = []

    def new(k: str, inf: object = None) -> int:
        partner.append(-1)
        kind.append(k)
        info.append(inf)
        return len(partner) - 1

    hmap: dict[int, int] = {}
    for h in range(len(t.partner)):
        hmap[h] = new("tmp")
    for v, c in enumerate(t.colors):
        colors.append(c)
        r: list[int] = []
        for h in t.rotation[v]:
            g = t.partner[h]
            x = hmap[h]
            if g < 0:
                kind[x] = "bud"
                info[x] = h
                r.append(x)
                continue
            other = t.colors[t.vertex_of[g]]
            if c == BLACK and other == BLACK:
                kind[x], info[x] = "bb", h
            elif c == BLACK:
                s = new("stem", h)  # stem of the black-white edge at h
                r.append(s)
                kind[x], info[x] = "bw", h
            elif other == BLACK:
                kind[x], info[x] = "wb", h
            else:
                kind[x], info[x] = "ww", h
            r.append(x)
        rot.append(r)
    for h, g in t.edges():
        x, y = hmap[h], hmap[g]
        if kind[x] == "ww":
            colors.append(BLACK)
            # half toward the white end of h, and toward the white end of g
            fx, fy = new("fake", h), new("fake", g)
            sx, sy = new("stem", ("fake", h)), new("stem", ("fake", g))
            rot.append([sx, fx, sy, fy])
            partner[fx], partner[x] = x, fx
            partner[fy], partner[y] = y, fy
        else:
            partner[x], partner[y] = y, x
    return rot, partner, kind, info, colors


def _contour(rot, partner, direction: int) -> list[int]:
    """Dangling half-edges in contour order (direction +1 cw, -1 ccw)."""
    pos = {}
    owner = {}
    for v, r in enumerate(rot):
        for i, h in enumerate(r):
            pos[h] = i
            owner[h] = v
    n = len(partner)
    if n == 0:
        return []
    start = 0
    out = []
    h = start
    steps = 0
    while True:
        g = partner[h]
        if g < 0:
            out.append(h)
            at = h
        else:
            at = g
        r = rot[owner[at]]
        h = r[(pos[at] + direction) % len(r)]
        steps += 1
        if h == start or steps > 4 * n + 4:
            break
    return out


def psi(t: Mobile) -> Closure:
    """Complete closure of a mobile of negative excess.

    Buds are matched along the counterclockwise contour; unmatched buds are
    attached around the root vertex in the order they remain on the stack.
    """
    ex = excess(t)
    if ex >= 0:
        raise BijectionError(f"excess {ex} is not negative")
    rot, partner, kind, info, colors = _blossoming(t)
    seq = _contour(rot, partner, -1)
    # each bud matches the next free stem along the walk
    level = 0
    lowest, start = 0, 0
    for i, h in enumerate(seq):
        level += 1 if kind[h] == "bud" else -1
        if level < lowest:
            lowest, start = level, i + 1
    seq = seq[start:] + seq[:start]
    stack: list[int] = []
    match: dict[int, int] = {}
    for h in seq:
        if kind[h] == "bud":
            stack.append(h)
        else:
            b = stack.pop()
            match[b], match[h] = h, b
    unmatched = stack
    black_ids = [v for v, c in enumerate(colors) if c == BLACK]

    fake_stems = {h for h in range(len(partner)) if kind[h] == "stem" and isinstance(info[h], tuple)}

    # fake vertices are erased by merging their two closure edges
    alpha: dict[int, int] = {}
    for h in range(len(partner)):
        k = kind[h]
        if k == "bb":
            alpha[h] = partner[h]
        elif k == "bud" and h in match:
            s = match[h]
            if s in fake_stems:
                fv = [x for x in rot[_owner(rot, s)] if kind[x] == "stem"]
                other = fv[1] if fv[0] == s else fv[0]
                alpha[h] = match[other]
            else:
                alpha[h] = s
        elif k == "stem" and h not in fake_stems:
            alpha[h] = match[h]
    next_id = len(partner)
    root_rot = []
    for b in unmatched:
        x = next_id
        next_id += 1
        alpha[b], alpha[x] = x, b
        root_rot.append(x)

    used = sorted(alpha)
    relabel = {h: i for i, h in enumerate(used)}
    n = len(used)
    new_alpha = [0] * n
    for h, g in alpha.items():
        new_alpha[relabel[h]] = relabel[g]
    new_sigma = [0] * n
    vertex_rot: list[list[int]] = []
    for v in black_ids:
        if v >= len(t.colors):
            continue  # fake vertex
        r = [relabel[h] for h in rot[v] if h in relabel]
        vertex_rot.append(r)
    vertex_rot.append([relabel[x] for x in root_rot])
    for r in vertex_rot:
        for i, h in enumerate(r):
            new_sigma[h] = r[(i + 1) % len(r)]

    w = [0] * n
    ing = [False] * n
    origin: list[tuple] = [()] * n
    for h, i in relabel.items():
        if h >= len(partner):
            w[i], ing[i] = 1, True
            origin[i] = ("root",)
            continue
        k = kind[h]
        if k == "bb":
            w[i] = t.weight[info[h]]
            origin[i] = ("bb", info[h])
        elif k == "stem":
            bh = info[h]
            w[i] = t.weight[bh]
            origin[i] = ("stem", bh)
        elif k == "bud":
            if h not in match:
                w[i] = 0
                origin[i] = ("exposed", info[h])
                continue
            s = match[h]
            if s in fake_stems:
                th = info[s][1]  # white half-edge on the stem's side
                w[i], ing[i] = t.weight[th], True
                origin[i] = ("ww", th)
            else:
                w[i], ing[i] = t.weight[t.partner[info[s]]], True
                origin[i] = ("bud", info[h])
    vertex_count = len(vertex_rot)
    base = CombinatorialMap(tuple(new_alpha), tuple(new_sigma))
    # vertices of ``base`` are numbered by orbit; find the root vertex orbit
    rv = base.vertex_of[relabel[next_id - 1]] if root_rot else vertex_count - 1
    sv = None
    if t.special is not None:
        some = next(relabel[h] for h in rot[t.special] if h in relabel)
        sv = base.vertex_of[some]
    return Closure(base, rv, tuple(w), tuple(ing), tuple(origin), sv)


def _owner(rot, h: int) -> int:
    for v, r in enumerate(rot):
        if h in r:
            return v
    raise KeyError(h)


def phi_inverse(t: Mobile, check: bool = True) -> tuple[PlaneMap, ZBiorientation]:
    """Map and suitable orientation whose opening is ``t``."""
    cl = psi(t)
    m = CombinatorialMap(cl.base.alpha, cl.base.phi_inv)
    root = cl.base.vertices[cl.root_vertex][0]
    # the dual half-edge x lies in the face dual to the vertex of alpha(x)
    root = cl.base.alpha[root]
    if cl.special_vertex is not None:
        inner = cl.base.alpha[cl.base.vertices[cl.special_vertex][0]]
        pm: PlaneMap = AnnularMap(m, root, inner)
    else:
        pm = PlaneMap(m, root)
    o = ZBiorientation(cl.ingoing, cl.weight)
    if check:
        m.validate()
        flags = classify(pm, o)
        if not flags.suitable:
            raise BijectionError(f"reconstructed orientation is not suitable: {flags.reason}")
    return pm, o


# ---------------------------------------------------------------------------
# girth classes


def mobile_spec_for(spec: GirthSpec) -> MobileSpec:
    if spec.kind == "plain":
        return MobileSpec.d_branching(spec.d)
    if spec.kind == "bipartite":
        return MobileSpec.b_dibranching(spec.d)
    if spec.kind == "annular":
        return MobileSpec.typed(spec.d, spec.p, spec.q)
    if spec.kind == "annular_bipartite":
        return MobileSpec.typed_bipartite(spec.d, spec.p, spec.q)
    raise ValueError(f"no mobile family for {spec.kind}")


def girth_spec_for(spec: MobileSpec) -> GirthSpec:
    if spec.kind == "d_branching":
        return GirthSpec.plain(spec.d)
    if spec.kind == "b_dibranching":
        return GirthSpec.bipartite(spec.d)
    if spec.kind == "typed":
        return GirthSpec.annular(spec.d, spec.p, spec.q)
    if spec.kind == "typed_bipartite":
        return GirthSpec.annular_bipartite(spec.d, spec.p, spec.q)
    raise ValueError(f"no map class for {spec.kind}")


def map_to_mobile(pm: PlaneMap, spec: GirthSpec) -> Mobile:
    """Mobile of a map in the girth class of ``spec``."""
    o = suitable_orientation(pm, spec)
    t = phi(pm, o, check=False)
    ok, why = validate(t, mobile_spec_for(spec))
    if not ok:
        raise BijectionError(f"opening is not a mobile of the family: {why}")
    return t


def mobile_to_map(t: Mobile, spec: MobileSpec) -> PlaneMap:
    ok, why = validate(t, spec)
    if not ok:
        raise BijectionError(f"not a mobile of the family: {why}")
    pm, o = phi_inverse(t)
    ok, why = check_constraints(pm, o, girth_spec_for(spec))
    if not ok:
        raise BijectionError(f"reconstructed orientation violates the family: {why}")
    return pm


# ---------------------------------------------------------------------------
# rootings


@dataclass(frozen=True)
class RootingCounts:
    outer_corners: int
    exposed_buds: int
    non_exposed_buds: int
    white_half_edges: int

    @property
    def consistent(self) -> bool:
        return self.outer_corners == self.exposed_buds and self.non_exposed_buds == self.white_half_edges


def _corner_code(pm: PlaneMap, h: int) -> tuple:
    m = pm.base
    code = rooted_code(m, h)
    if isinstance(pm, AnnularMap):
        lab = _labels_from(m, h)
        code = code + (-1, min(lab[g] for g in m.faces[pm.inner_root_face]))
    return code


def rooting_counts(pm: PlaneMap, t: Mobile) -> RootingCounts:
    """Distinct rootings on both sides, compared through canonical codes."""
    corners = {_corner_code(pm, h) for h in pm.outer_half_edges()}
    buds = t.buds()
    exposed = {code_from(t, b) for b in buds if b in t.exposed}
    hidden = {code_from(t, b) for b in buds if b not in t.exposed}
    white = {
        code_from(t, h) for v in t.white_vertices() for h in t.rotation[v]
    }
    return RootingCounts(len(corners), len(exposed), len(hidden), len(white))
