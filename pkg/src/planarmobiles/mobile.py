"""Mobiles: bicolored plane trees with buds and signed half-edge weights.

A mobile stores, per vertex, its color and the clockwise list of incident
half-edges.  A half-edge is either a bud (dangling, only at black vertices)
or one side of an edge; ``partner`` is ``-1`` for buds.  Weights of buds are
stored as 0 and never read.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True, eq=False)
class Mobile:
    colors: tuple[str, ...]
    rotation: tuple[tuple[int, ...], ...]
    partner: tuple[int, ...]
    weight: tuple[int, ...]
    special: int | None = None
    exposed: frozenset[int] = field(default_factory=frozenset)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * len(self.partner)
        for v, rot in enumerate(self.rotation):
            for h in rot:
                out[h] = v
        return tuple(out)

    @cached_property
    def position(self) -> tuple[int, ...]:
        out = [0] * len(self.partner)
        for rot in self.rotation:
            for i, h in enumerate(rot):
                out[h] = i
        return tuple(out)

    def is_bud(self, h: int) -> bool:
        return self.partner[h] < 0

    def buds(self) -> list[int]:
        return [h for h in range(len(self.partner)) if self.partner[h] < 0]

    def edges(self) -> list[tuple[int, int]]:
        return [(h, g) for h, g in enumerate(self.partner) if g > h]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def vertex_weight(self, v: int) -> int:
        return sum(self.weight[h] for h in self.rotation[v] if self.partner[h] >= 0)

    def black_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == BLACK]

    def white_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == WHITE]

    def next_in_rotation(self, h: int) -> int:
        rot = self.rotation[self.vertex_of[h]]
        return rot[(self.position[h] + 1) % len(rot)]

    def prev_in_rotation(self, h: int) -> int:
        rot = self.rotation[self.vertex_of[h]]
        return rot[(self.position[h] - 1) % len(rot)]

    def with_exposed(self, exposed) -> Mobile:
        return Mobile(self.colors, self.rotation, self.partner, self.weight, self.special, frozenset(exposed))


def excess(t: Mobile) -> int:
    """Half-edges at white vertices minus buds."""
    white = sum(len(t.rotation[v]) for v in t.white_vertices())
    return white - len(t.buds())


# ---------------------------------------------------------------------------
# canonical codes

_BUD, _OPEN, _CLOSE = 10, 11, 12
_OFF = 1000


def _vertex_token(t: Mobile, v: int) -> int:
    if t.special == v:
        return 3
    return 1 if t.colors[v] == WHITE else 2


def code_from(t: Mobile, start: int) -> tuple[int, ...]:
    """Traversal code of the mobile rooted at half-edge ``start``."""
    out: list[int] = []

    def visit(v: int, first: int, skip: bool) -> None:
        out.append(_vertex_token(t, v))
        rot = t.rotation[v]
        i0 = t.position[first]
        k = len(rot)
        for s in range(1 if skip else 0, k):
            h = rot[(i0 + s) % k]
            g = t.partner[h]
            if g < 0:
                out.append(_BUD)
                continue
            out.extend((_OPEN, t.weight[h] + _OFF, t.weight[g] + _OFF))
            visit(t.vertex_of[g], g, True)
            out.append(_CLOSE)

    visit(t.vertex_of[start], start, False)
    return tuple(out)


def canonical_code(t: Mobile) -> tuple[int, ...]:
    if not t.partner:
        return tuple(_vertex_token(t, v) for v in range(len(t.colors)))
    return min(code_from(t, h) for h in range(len(t.partner)))


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class MobileSpec:
    """Mobile family: ``d_branching(d)``, ``b_dibranching(b)``,
    ``typed(d, p, q)``, ``typed_bipartite(b, r, s)`` or ``zero_branching()``.

    For the bipartite kinds ``d, p, q`` hold ``b, r, s``.
    """

    kind: str
    d: int = 0
    p: int = 0
    q: int = 0

    @classmethod
    def d_branching(cls, d: int) -> MobileSpec:
        return cls("d_branching", d, d, d)

    @classmethod
    def b_dibranching(cls, b: int) -> MobileSpec:
        return cls("b_dibranching", b, b, b)

    @classmethod
    def typed(cls, d: int, p: int, q: int) -> MobileSpec:
        if p > q:
            raise ValueError("need p <= q")
        return cls("typed", d, p, q)

    @classmethod
    def typed_bipartite(cls, b: int, r: int, s: int) -> MobileSpec:
        if r > s:
            raise ValueError("need r <= s")
        return cls("typed_bipartite", b, r, s)

    @classmethod
    def zero_branching(cls) -> MobileSpec:
        return cls("zero_branching")

    @property
    def is_bipartite(self) -> bool:
        return self.kind in ("b_dibranching", "typed_bipartite")

    @property
    def is_typed(self) -> bool:
        return self.kind in ("typed", "typed_bipartite")

    def expected_excess(self) -> int:
        if self.kind == "zero_branching":
            return 0
        return -2 * self.p if self.is_bipartite else -self.p


def check_structure(t: Mobile) -> str | None:
    n = len(t.partner)
    nv = len(t.colors)
    if sorted(h for rot in t.rotation for h in rot) != list(range(n)):
        return "rotation lists do not partition the half-edges"
    for h, g in enumerate(t.partner):
        if g >= 0 and (g >= n or t.partner[g] != h or g == h):
            return "partner is not an involution"
        if g < 0 and t.colors[t.vertex_of[h]] != BLACK:
            return f"bud {h} at a white vertex"
    ne = len(t.edges())
    if ne != nv - 1:
        return "not a tree: wrong number of edges"
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for h in t.rotation[v]:
            g = t.partner[h]
            if g >= 0:
                w = t.vertex_of[g]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    if len(seen) != nv:
        return "not connected"
    if t.special is not None and t.colors[t.special] != BLACK:
        return "special vertex is not black"
    return None


def validate(t: Mobile, spec: MobileSpec) -> tuple[bool, str]:
    """Check the family conditions; returns (ok, first violation)."""
    problem = check_structure(t)
    if problem:
        return False, problem
    if spec.kind == "zero_branching":
        return _validate_zero(t)
    bip = spec.is_bipartite
    lo = -1 if bip else -2
    edge_w = spec.d - 1 if bip else spec.d - 2
    if spec.is_typed and t.special is None:
        return False, "typed mobile without special vertex"
    if not spec.is_typed and t.special is not None:
        return False, "unexpected special vertex"
    for h, g in enumerate(t.partner):
        if g < 0:
            continue
        v = t.vertex_of[h]
        w = t.weight[h]
        if t.colors[v] == WHITE and w < 1:
            return False, f"white half-edge {h} has weight {w}"
        if t.colors[v] == BLACK and not lo <= w <= 0:
            return False, f"black half-edge {h} has weight {w}"
        if h < g and w + t.weight[g] != edge_w:
            return False, f"edge ({h},{g}) has weight {w + t.weight[g]}"
    for v, c in enumerate(t.colors):
        deg = t.degree(v)
        wv = t.vertex_weight(v)
        if c == WHITE:
            if wv != spec.d:
                return False, f"white vertex {v} has weight {wv}"
            continue
        if v == t.special:
            want = 2 * spec.q if bip else spec.q
            if deg != want or wv != spec.p - spec.q:
                return False, f"special vertex has degree {deg} and weight {wv}"
            continue
        if bip:
            if deg % 2 or deg // 2 + wv != spec.d:
                return False, f"black vertex {v} has degree {deg} and weight {wv}"
        elif deg + wv != spec.d:
            return False, f"black vertex {v} has degree {deg} and weight {wv}"
    ex = excess(t)
    if ex != spec.expected_excess():
        return False, f"excess {ex} != {spec.expected_excess()}"
    return True, ""


def _validate_zero(t: Mobile) -> tuple[bool, str]:
    for h, g in t.edges():
        cu, cv = t.colors[t.vertex_of[h]], t.colors[t.vertex_of[g]]
        if cu == WHITE and cv == WHITE:
            return False, "white-white edge"
        if cu == BLACK and cv == BLACK:
            if (t.weight[h], t.weight[g]) != (-1, -1):
                return False, "black-black edge weights must be -1/-1"
        else:
            b, w = (h, g) if cu == BLACK else (g, h)
            if (t.weight[b], t.weight[w]) != (-2, 0):
                return False, "black-white edge weights must be -2/0"
    for v in t.black_vertices():
        if t.degree(v) + t.vertex_weight(v) != 0:
            return False, f"black vertex {v} has degree {t.degree(v)} and weight {t.vertex_weight(v)}"
    if excess(t) != 0:
        return False, "excess is not 0"
    return True, ""


def white_leaf_count(t: Mobile, v: int) -> int:
    return sum(
        1
        for h in t.rotation[v]
        if t.partner[h] >= 0
        and t.colors[t.vertex_of[t.partner[h]]] == WHITE
        and t.degree(t.vertex_of[t.partner[h]]) == 1
    )


# ---------------------------------------------------------------------------
# building mobiles from planted trees
#
# A planted tree is ("w" | "b", items); an item is None for a bud or
# (weight_here, weight_there, subtree) for an edge to a child.


class _Builder:
    def __init__(self) -> None:
        self.colors: list[str] = []
        self.rot: list[list[int]] = []
        self.partner: list[int] = []
        self.weight: list[int] = []

    def vertex(self, color: str) -> int:
        self.colors.append(color)
        self.rot.append([])
        return len(self.colors) - 1

    def half(self, v: int, w: int = 0) -> int:
        h = len(self.partner)
        self.partner.append(-1)
        self.weight.append(w)
        self.rot[v].append(h)
        return h

    def link(self, a: int, b: int) -> None:
        self.partner[a], self.partner[b] = b, a

    def items(self, v: int, items) -> None:
        for it in items:
            if it is None:
                self.half(v)
                continue
            wh, wt, sub = it
            h = self.half(v, wh)
            color, sub_items = sub
            c = self.vertex(WHITE if color == "w" else BLACK)
            g = self.half(c, wt)
            self.link(h, g)
            self.items(c, sub_items)

    def build(self, special: int | None = None) -> Mobile:
        return Mobile(
            tuple(self.colors),
            tuple(tuple(r) for r in self.rot),
            tuple(self.partner),
            tuple(self.weight),
            special,
        )


def mobile_from_root(color: str, items, special: bool = False) -> Mobile:
    b = _Builder()
    v = b.vertex(WHITE if color == "w" else BLACK)
    b.items(v, items)
    return b.build(v if special else None)


def _compositions(total: int, parts_min: int = 1) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(parts_min, total + 1):
        for rest in _compositions(total - first, parts_min):
            yield (first,) + rest


def _splits(n: int, k: int, mins: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Ways to write n as an ordered sum of k parts with lower bounds."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(mins[0], n - sum(mins[1:]) + 1):
        for rest in _splits(n - first, k - 1, mins[1:]):
            yield (first,) + rest


class PlantedGrammar:
    """Planted mobiles of a family, by exact number of black vertices.

    ``branching`` families use children weights in {0, -1, -2} at black
    vertices, ``dibranching`` families {0, -1}.
    """

    def __init__(self, d: int, bipartite: bool, max_black_degree: int):
        self.d = d
        self.bip = bipartite
        self.D = max_black_degree
        self._memo: dict[tuple[int, int], list] = {}

    def dangling(self, j: int) -> int:
        return self.d - 1 - j if self.bip else self.d - 2 - j

    def edge_weight(self) -> int:
        return self.d - 1 if self.bip else self.d - 2

    def min_black(self, j: int) -> int:
        # every planted tree except the white leaf contains a black vertex
        return 0 if self.dangling(j) == self.d else 1

    def planted(self, j: int, nb: int) -> list:
        key = (j, nb)
        if key in self._memo:
            return self._memo[key]
        out: list = []
        dw = self.dangling(j)
        ew = self.edge_weight()
        if dw < (-1 if self.bip else -2):
            pass
        elif dw >= 1:
            # white root: children weights alpha >= 1 summing to d - dw
            for comp in _compositions(self.d - dw):
                kids = list(comp)  # the child of weight a is indexed by a
                for split in _splits(nb, len(comp), [self.min_black(c) for c in kids]):
                    for subs in product(*(self.planted(c, s) for c, s in zip(kids, split))):
                        out.append(("w", tuple((a, ew - a, sub) for a, sub in zip(comp, subs))))
        elif nb >= 1:
            choices = (0, -1) if self.bip else (0, -1, -2)
            for deg in range(1, self.D + 1):
                if self.bip and deg % 2:
                    continue
                target = (self.d - deg // 2 if self.bip else self.d - deg) - dw
                out.extend(self._black_items(deg - 1, target, nb - 1, choices))
            out = [("b", items) for items in out]
        self._memo[key] = out
        return out

    def _black_items(self, k: int, target: int, nb: int, choices) -> list:
        """Sequences of k items (bud or child) with weights summing to target."""
        res: list = []
        for kinds in product((None,) + tuple(choices), repeat=k):
            if sum(a for a in kinds if a is not None) != target:
                continue
            kids = [(a, self.edge_weight() - a) for a in kinds if a is not None]
            js = [self._index_for_dangling(self.edge_weight() - a) for a in kinds if a is not None]
            for split in _splits(nb, len(js), [self.min_black(j) for j in js]):
                for subs in product(*(self.planted(j, s) for j, s in zip(js, split))):
                    it = iter(zip(kids, subs))
                    items = []
                    for a in kinds:
                        if a is None:
                            items.append(None)
                        else:
                            (wa, wb), sub = next(it)
                            items.append((wa, wb, sub))
                    res.append(tuple(items))
        return res

    def _index_for_dangling(self, w: int) -> int:
        return (self.d - 1 - w) if self.bip else (self.d - 2 - w)

    def special_items(self, k: int, target: int, nb: int) -> list:
        choices = (0, -1) if self.bip else (0, -1, -2)
        return self._black_items(k, target, nb, choices)


def _zero_planted_black(parent_white: bool, nb: int, D: int, memo: dict) -> list:
    """Planted black vertices of 0-branching mobiles with exactly nb blacks."""
    key = ("b", parent_white, nb)
    if key in memo:
        return memo[key]
    out = []
    if nb >= 1:
        for k in range(0, D):  # items besides the parent edge
            for kinds in product(("bud", "w", "b"), repeat=k):
                nw = kinds.count("w") + (1 if parent_white else 0)
                if kinds.count("bud") != nw:
                    continue
                out.extend(_zero_fill(kinds, nb - 1, D, memo))
    memo[key] = out
    return out


def _zero_planted_white(nb: int, D: int, memo: dict) -> list:
    key = ("w", nb)
    if key in memo:
        return memo[key]
    out = []
    if nb == 0:
        out.append(("w", ()))
    else:
        for k in range(1, nb + 1):
            for split in _splits(nb, k, [1] * k):
                for subs in product(*(_zero_planted_black(True, s, D, memo) for s in split)):
                    out.append(("w", tuple((0, -2, sub) for sub in subs)))
    memo[key] = out
    return out


def _zero_fill(kinds, nb: int, D: int, memo: dict) -> list:
    kids = [k for k in kinds if k != "bud"]
    mins = [1 if k == "b" else 0 for k in kids]
    res = []
    for split in _splits(nb, len(kids), mins):
        pools = []
        for k, s in zip(kids, split):
            if k == "w":
                pools.append([(-2, 0, sub) for sub in _zero_planted_white(s, D, memo)])
            else:
                pools.append([(-1, -1, sub) for sub in _zero_planted_black(False, s, D, memo)])
        for subs in product(*pools):
            it = iter(subs)
            items = tuple(None if k == "bud" else next(it) for k in kinds)
            res.append(("b", items))
    return res


def enumerate_mobiles(spec: MobileSpec, max_black_degree: int, max_black_count: int) -> list[Mobile]:
    """All mobiles of the family within the bounds, up to isomorphism.

    The degree bound applies to non-special black vertices; the special
    vertex of typed families counts toward ``max_black_count``.
    """
    found: dict[tuple, Mobile] = {}
    D = max_black_degree
    if spec.kind == "zero_branching":
        memo: dict = {}
        for nb in range(1, max_black_count + 1):
            for k in range(0, D + 1):
                for kinds in product(("bud", "w", "b"), repeat=k):
                    if kinds.count("bud") != kinds.count("w"):
                        continue
                    for _, items in _zero_fill(kinds, nb - 1, D, memo):
                        t = mobile_from_root("b", items)
                        found.setdefault(canonical_code(t), t)
        return _sorted(found)
    g = PlantedGrammar(spec.d, spec.is_bipartite, D)
    if not spec.is_typed:
        j = spec.d - 1 if spec.is_bipartite else spec.d - 2
        for nb in range(1, max_black_count + 1):
            for color, items in g.planted(j, nb):
                t = mobile_from_root(color, (None,) + items)
                found.setdefault(canonical_code(t), t)
        return _sorted(found)
    k = 2 * spec.q if spec.is_bipartite else spec.q
    target = spec.p - spec.q
    for nb in range(1, max_black_count + 1):
        for items in g.special_items(k, target, nb - 1):
            t = mobile_from_root("b", items, special=True)
            found.setdefault(canonical_code(t), t)
    return _sorted(found)


def _sorted(found: dict) -> list[Mobile]:
    return [
        found[c]
        for c in sorted(found, key=lambda c: (len(found[c].black_vertices()), c))
    ]


def marked_bud_trees(spec: MobileSpec, max_black_degree: int, max_black_count: int) -> list[Mobile]:
    """Mobiles with a marked bud, one per planted tree (the bud comes first)."""
    g = PlantedGrammar(spec.d, spec.is_bipartite, max_black_degree)
    j = spec.d - 1 if spec.is_bipartite else spec.d - 2
    out = []
    for nb in range(1, max_black_count + 1):
        for color, items in g.planted(j, nb):
            out.append(mobile_from_root(color, (None,) + items))
    return out


# ---------------------------------------------------------------------------
# well-labelled mobiles (outer degree 0)


@dataclass(frozen=True, eq=False)
class WellLabelledMobile:
    """Mobile without buds or white-white edges; fake whites sit on former
    black-black edges; labels are stored per vertex (``None`` for black)."""

    mobile: Mobile
    fake: frozenset[int]
    labels: tuple[int | None, ...]

    def check(self) -> str | None:
        t = self.mobile
        if t.buds():
            return "buds are not allowed"
        for h, g in t.edges():
            if t.colors[t.vertex_of[h]] == WHITE and t.colors[t.vertex_of[g]] == WHITE:
                return "white-white edge"
        for v in t.white_vertices():
            lab = self.labels[v]
            if lab is None or lab < (0 if v in self.fake else 1):
                return f"bad label at vertex {v}"
        if t.white_vertices():
            if not any(
                (self.labels[v] == 0 if v in self.fake else self.labels[v] == 1) for v in t.white_vertices()
            ):
                return "no real vertex labelled 1 and no fake vertex labelled 0"
        for b in t.black_vertices():
            for delta in _jumps(self, b):
                if delta < 0:
                    return "negative jump"
        return None


def _jumps(w: WellLabelledMobile, b: int) -> list[int]:
    t = w.mobile
    rot = t.rotation[b]
    k = len(rot)
    out = []
    for i in range(k):
        v1 = t.vertex_of[t.partner[rot[i]]]
        v2 = t.vertex_of[t.partner[rot[(i + 1) % k]]]
        out.append(w.labels[v1] - w.labels[v2] + (0 if v2 in w.fake else 1))
    return out


def theta(w: WellLabelledMobile) -> Mobile:
    """Insert jump-many buds in each black corner, then drop fake vertices."""
    problem = w.check()
    if problem:
        raise ValueError(problem)
    t = w.mobile
    b = _Builder()
    vmap = {}
    for v, c in enumerate(t.colors):
        if v not in w.fake:
            vmap[v] = b.vertex(c)
    hmap: dict[int, int] = {}
    # white half-edges first, black ones with buds interleaved
    for v in range(len(t.colors)):
        if v in w.fake:
            continue
        if t.colors[v] == WHITE:
            for h in t.rotation[v]:
                hmap[h] = b.half(vmap[v], 0)
            continue
        jumps = _jumps(w, v)
        for h, delta in zip(t.rotation[v], jumps):
            other = t.vertex_of[t.partner[h]]
            hmap[h] = b.half(vmap[v], -1 if other in w.fake else -2)
            for _ in range(delta):
                b.half(vmap[v])
    for h, g in t.edges():
        vh, vg = t.vertex_of[h], t.vertex_of[g]
        if vh in w.fake or vg in w.fake:
            continue
        b.link(hmap[h], hmap[g])
    for f in w.fake:
        x, y = (t.partner[h] for h in t.rotation[f])
        b.link(hmap[x], hmap[y])
    return b.build()


def theta_inverse(t: Mobile) -> WellLabelledMobile:
    """Rebuild fake vertices and labels from bud counts."""
    ok, why = _validate_zero(t)
    if not ok:
        raise ValueError(why)
    b = _Builder()
    vmap = {v: b.vertex(c) for v, c in enumerate(t.colors)}
    hmap: dict[int, int] = {}
    fake = []
    corner_buds: dict[int, list[int]] = {}
    for v, c in enumerate(t.colors):
        rot = t.rotation[v]
        if c == WHITE:
            for h in rot:
                hmap[h] = b.half(vmap[v])
            continue
        real = [h for h in rot if t.partner[h] >= 0]
        if not real:
            continue
        start = rot.index(real[0])
        counts = []
        for s in range(len(rot)):
            h = rot[(start + s) % len(rot)]
            if t.partner[h] >= 0:
                hmap[h] = b.half(vmap[v])
                counts.append(0)
            else:
                counts[-1] += 1
        corner_buds[v] = counts
    for h, g in t.edges():
        if t.colors[t.vertex_of[h]] == BLACK and t.colors[t.vertex_of[g]] == BLACK:
            f = b.vertex(WHITE)
            fake.append(f)
            x, y = b.half(f), b.half(f)
            b.link(hmap[h], x)
            b.link(hmap[g], y)
        else:
            b.link(hmap[h], hmap[g])
    lm = b.build()
    fake_set = frozenset(fake)
    labels: list[int | None] = [None] * len(lm.colors)
    whites = lm.white_vertices()
    if whites:
        labels[whites[0]] = 0
        stack = [whites[0]]
        while stack:
            v = stack.pop()
            for h in lm.rotation[v]:
                bl = lm.vertex_of[lm.partner[h]]
                rot = lm.rotation[bl]
                counts = corner_buds[bl]
                i0 = lm.position[lm.partner[h]]
                lab = labels[v]
                for s in range(1, len(rot)):
                    delta = counts[(i0 + s - 1) % len(rot)]
                    u = lm.vertex_of[lm.partner[rot[(i0 + s) % len(rot)]]]
                    lab = lab - delta + (0 if u in fake_set else 1)
                    if labels[u] is None:
                        labels[u] = lab
                        stack.append(u)
        shift = min(
            min((labels[v] - 1 for v in whites if v not in fake_set), default=10**9),
            min((labels[v] for v in whites if v in fake_set), default=10**9),
        )
        labels = [None if x is None else x - shift for x in labels]
    return WellLabelledMobile(lm, fake_set, tuple(labels))


def labelled_code(w: WellLabelledMobile) -> tuple:
    """Canonical code of a well-labelled mobile including labels and fakes."""
    t = w.mobile
    if not t.partner:
        return (len(t.colors),)
    best = None
    for start in range(len(t.partner)):
        seq = list(code_from(t, start))
        # append labels in traversal order for an unambiguous comparison
        order = _traversal_vertices(t, start)
        seq.append(-1)
        for v in order:
            seq.append(-2 if v in w.fake else -3)
            seq.append(-9 if w.labels[v] is None else w.labels[v])
        c = tuple(seq)
        if best is None or c < best:
            best = c
    return best


def _traversal_vertices(t: Mobile, start: int) -> list[int]:
    out = []

    def visit(v: int, first: int, skip: bool) -> None:
        out.append(v)
        rot = t.rotation[v]
        i0 = t.position[first]
        for s in range(1 if skip else 0, len(rot)):
            h = rot[(i0 + s) % len(rot)]
            g = t.partner[h]
            if g >= 0:
                visit(t.vertex_of[g], g, True)

    visit(t.vertex_of[start], start, False)
    return out


# ---------------------------------------------------------------------------
# file format (1-based ids, deterministic ordering)


class MobileFormatError(ValueError):
    pass


def mobile_to_dict(t: Mobile) -> dict:
    return {
        "vertices": [
            {"id": v + 1, "color": c, "special": t.special == v, "rotation": [h + 1 for h in t.rotation[v]]}
            for v, c in enumerate(t.colors)
        ],
        "edges": [{"half_edges": [h + 1, g + 1], "weights": [t.weight[h], t.weight[g]]} for h, g in t.edges()],
        "exposed_buds": sorted(h + 1 for h in t.exposed),
    }


def mobile_from_dict(data: dict) -> Mobile:
    try:
        verts = sorted(data["vertices"], key=lambda r: r["id"])
        colors = tuple(str(r["color"]) for r in verts)
        rotation = tuple(tuple(int(h) - 1 for h in r["rotation"]) for r in verts)
        n = sum(len(r) for r in rotation)
        if sorted(h for r in rotation for h in r) != list(range(n)):
            raise MobileFormatError("half-edge ids must be exactly 1..n")
        partner = [-1] * n
        weight = [0] * n
        for e in data.get("edges", []):
            h, g = (int(x) - 1 for x in e["half_edges"])
            partner[h], partner[g] = g, h
            weight[h], weight[g] = (int(x) for x in e["weights"])
        specials = [i for i, r in enumerate(verts) if r.get("special")]
        exposed = frozenset(int(h) - 1 for h in data.get("exposed_buds", []))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MobileFormatError(f"malformed mobile: {exc!r}") from exc
    if any(c not in (BLACK, WHITE) for c in colors):
        raise MobileFormatError("vertex colors must be 'black' or 'white'")
    if len(specials) > 1:
        raise MobileFormatError("more than one special vertex")
    t = Mobile(colors, rotation, tuple(partner), tuple(weight), specials[0] if specials else None, exposed)
    problem = check_structure(t)
    if problem:
        raise MobileFormatError(problem)
    if any(not 0 <= h < n or not t.is_bud(h) for h in exposed):
        raise MobileFormatError("an exposed bud is not a bud")
    return t


def serialize_mobile(t: Mobile) -> str:
    return json.dumps(mobile_to_dict(t), sort_keys=True)


def parse_mobile(text: str) -> Mobile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MobileFormatError(f"not JSON: {exc}") from exc
    return mobile_from_dict(data)


def mobile_to_dot(t: Mobile) -> str:
    lines = ["graph mobile {"]
    for v, c in enumerate(t.colors):
        style = "filled" if c == BLACK else "solid"
        shape = "doublecircle" if t.special == v else "circle"
        lines.append(f'  v{v} [shape={shape}, style={style}, label=""];')
    for h, g in t.edges():
        lines.append(f'  v{t.vertex_of[h]} -- v{t.vertex_of[g]} [label="{t.weight[h]}:{t.weight[g]}"];')
    for h in t.buds():
        lines.append(f"  b{h} [shape=point];")
        arrow = ", color=red" if h in t.exposed else ""
        lines.append(f"  v{t.vertex_of[h]} -- b{h} [style=dashed{arrow}];")
    lines.append("}")
    return "\n".join(lines)
