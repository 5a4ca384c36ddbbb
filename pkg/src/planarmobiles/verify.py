"""Verification suites comparing the bijections and series against brute force.

Each suite returns a list of :class:`Check` records.  A failing check keeps
the smallest counterexample, ordered by canonical code, so reports are
deterministic.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .bijection import map_to_mobile, mobile_spec_for, mobile_to_map, phi, phi_inverse
from .maps import (
    AnnularMap,
    PlaneMap,
    canonical_code,
    girth,
    iso_check,
    serialize_map,
    subdivide,
)
from .mobile import (
    MobileSpec,
    code_from,
    enumerate_mobiles,
    excess,
    labelled_code,
    serialize_mobile,
    theta,
    theta_inverse,
    validate,
)
from .mobile import canonical_code as mobile_code
from .oracle import (
    MapBounds,
    OrientationSpec,
    count_annular_class,
    count_plane_class,
    count_rooted_by_profile,
    enumerate_orientations,
    enumerate_rooted_maps,
    in_class_annular,
    in_class_bipartite,
    in_class_plain,
    is_simple,
    plane_maps,
    suitable_orientations_bruteforce,
    zero_suitable_bruteforce,
)
from .orientation import (
    GirthSpec,
    double,
    geodesic_biorientation,
    halve,
    rightmost_bfs_orientation,
    suitable_orientation,
    tau_inverse,
    tau_map,
)
from .series import (
    B_annular_from,
    F_d,
    F_d_t,
    G_annular_from,
    G_sep_equals_outer_from,
    count_bipartite,
    count_loopless,
    count_simple_bipartite,
    even_specialization,
    loopless_series,
    solve_V_and_E,
    solve_W,
    verify_loopless_reduction,
)
from .maps import is_bipartite


@dataclass
class Check:
    name: str
    passed: bool = True
    checked: int = 0
    failures: int = 0
    counterexample: str | None = None
    detail: str = ""
    _key: tuple | None = field(default=None, repr=False)

    def ok(self) -> None:
        self.checked += 1

    def fail(self, key: tuple, dump: Callable[[], str]) -> None:
        self.checked += 1
        self.failures += 1
        self.passed = False
        if self._key is None or key < self._key:
            self._key = key
            self.counterexample = dump()

    def record(self, good: bool, key: tuple, dump: Callable[[], str]) -> None:
        if good:
            self.ok()
        else:
            self.fail(key, dump)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("_key")
        return d


SUITES = ("roundtrip", "orientations", "counts", "annular", "formulas", "loopless", "special-cases")


def _annular_versions(pm: PlaneMap) -> Iterable[AnnularMap]:
    m = pm.base
    for f in pm.inner_faces():
        yield AnnularMap(m, pm.root, m.faces[f][0])


def _profile(degrees: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(degrees))


def _series_table(F, delta: list[int]) -> dict[tuple[int, ...], int]:
    return {
        _profile(k for k, c in zip(delta, e) for _ in range(c)): v for e, v in F.terms.items()
    }


def _compare_tables(check: Check, got: dict, want: dict, label: str) -> None:
    for key in sorted(set(got) | set(want)):
        a, b = got.get(key, 0), want.get(key, 0)
        check.record(a == b, (len(key), key), lambda: f"{label} profile {list(key)}: {a} != {b}")


# ---------------------------------------------------------------------------
# round trips


def _roundtrip_one(check: Check, x: PlaneMap, spec: GirthSpec) -> None:
    key = canonical_code(x)
    try:
        t = map_to_mobile(x, spec)
        ok, why = validate(t, mobile_spec_for(spec))
        back = mobile_to_map(t, mobile_spec_for(spec))
        same = iso_check(x, back) and isinstance(back, AnnularMap) == isinstance(x, AnnularMap)
        m = x.base
        skip = {x.root_face}
        if isinstance(x, AnnularMap):
            skip.add(x.inner_root_face)
        faces = _profile(len(o) for f, o in enumerate(m.faces) if f not in skip)
        blacks = _profile(len(t.rotation[v]) for v in t.black_vertices() if v != t.special)
        good = ok and same and faces == blacks
        why = why if not ok else ("not isomorphic" if not same else "degree multisets differ")
    except Exception as exc:  # report, do not abort the sweep
        good, why = False, f"{type(exc).__name__}: {exc}"
    check.record(good, key, lambda: f"{why}; map {serialize_map(x)}")


def suite_roundtrip(
    max_edges: int = 6,
    ds: Iterable[int] = (1, 2, 3, 4),
    bs: Iterable[int] = (1, 2),
    annular_max_edges: int = 4,
) -> list[Check]:
    out = []
    for d in ds:
        c = Check(f"roundtrip plain d={d} (<= {max_edges} edges)")
        for pm in plane_maps(max_edges, MapBounds(max_edges=max_edges, max_root_degree=d)):
            if in_class_plain(pm, d):
                _roundtrip_one(c, pm, GirthSpec.plain(d))
        out.append(c)
    for b in bs:
        c = Check(f"roundtrip bipartite b={b} (<= {max_edges} edges)")
        for pm in plane_maps(max_edges, MapBounds(max_edges=max_edges, max_root_degree=2 * b)):
            if in_class_bipartite(pm, b):
                _roundtrip_one(c, pm, GirthSpec.bipartite(b))
        out.append(c)
    if annular_max_edges:
        c = Check(f"roundtrip annular (<= {annular_max_edges} edges)")
        for pm in plane_maps(annular_max_edges):
            if pm.root is None:
                continue
            for am in _annular_versions(pm):
                p, q = am.root_degree, am.inner_root_degree
                if p > q:
                    continue
                for d in range(1, p + 1):
                    if in_class_annular(am, d, p, q):
                        _roundtrip_one(c, am, GirthSpec.annular(d, p, q))
                if p % 2 == 0 and q % 2 == 0 and is_bipartite(am.base):
                    for b in range(1, p // 2 + 1):
                        if in_class_annular(am, 2 * b, p, q):
                            _roundtrip_one(c, am, GirthSpec.annular_bipartite(b, p // 2, q // 2))
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# orientations


def _orientation_case(check: Check, x: PlaneMap, ospec: OrientationSpec, gspec: GirthSpec, member: bool) -> None:
    key = canonical_code(x)
    found = enumerate_orientations(x, ospec)
    if bool(found) != member:
        check.fail(key, lambda: f"existence {bool(found)} but membership {member}; map {serialize_map(x)}")
        return
    if not member:
        check.ok()
        return
    suitable = suitable_orientations_bruteforce(x, ospec)
    o = suitable_orientation(x, gspec)
    good = len(suitable) == 1 and suitable[0] == (o.ingoing, o.weight)
    check.record(good, key, lambda: f"{len(suitable)} suitable orientations; map {serialize_map(x)}")


def suite_orientations(
    max_edges: int = 5, ds: Iterable[int] = (1, 2, 3), bs: Iterable[int] = (1, 2), annular_max_edges: int = 4
) -> list[Check]:
    out = []
    for d in ds:
        c = Check(f"orientations plain d={d} (<= {max_edges} edges)")
        for pm in plane_maps(max_edges, MapBounds(max_edges=max_edges, max_root_degree=d)):
            if pm.root is None or pm.root_degree != d:
                continue
            _orientation_case(c, pm, OrientationSpec("plain", d), GirthSpec.plain(d), girth(pm.base) == d)
        out.append(c)
    for b in bs:
        c = Check(f"orientations bipartite b={b} (<= {max_edges} edges)")
        for pm in plane_maps(max_edges, MapBounds(max_edges=max_edges, max_root_degree=2 * b)):
            if pm.root is None or pm.root_degree != 2 * b:
                continue
            _orientation_case(c, pm, OrientationSpec("bipartite", b), GirthSpec.bipartite(b), in_class_bipartite(pm, b))
        out.append(c)
    if annular_max_edges:
        c = Check(f"orientations annular (<= {annular_max_edges} edges)")
        for pm in plane_maps(annular_max_edges):
            if pm.root is None:
                continue
            for am in _annular_versions(pm):
                p, q = am.root_degree, am.inner_root_degree
                if p > q:
                    continue
                for d in range(1, p + 1):
                    _orientation_case(
                        c, am, OrientationSpec("annular", d, p, q), GirthSpec.annular(d, p, q), in_class_annular(am, d, p, q)
                    )
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# plane counts and mobile-side counts


def suite_counts(
    ds: Iterable[int] = (1, 2, 3),
    max_degree: int = 5,
    max_faces: int = 4,
    mobile_degree: int = 4,
    mobile_blacks: int = 3,
) -> list[Check]:
    out = []
    ds = list(ds)
    for d in ds:
        c = Check(f"F_{d} vs oracle (degrees {d}..{max_degree}, <= {max_faces} faces)")
        delta = list(range(d, max_degree + 1))
        _compare_tables(c, _series_table(F_d(d, delta, max_faces), delta), dict(count_plane_class(d, max_faces, max_degree)), f"d={d}")
        out.append(c)
    c = Check("F_3 over triangles vs oracle (<= 5 faces)")
    _compare_tables(c, _series_table(F_d(3, [3], 5), [3]), dict(count_plane_class(3, 5, 3, face_degrees=[3])), "d=3 triangles")
    c.detail = "coefficients of x3, x3^3, x3^5: " + ", ".join(str(F_d(3, [3], 5).coefficient((k,))) for k in (1, 3, 5))
    out.append(c)
    c = Check("F_1 under x_k = t^k")
    F1 = F_d_t(1, 5)
    vals = [F1.coefficient((k,)) for k in (1, 3, 5)]
    c.record(vals == [1, 2, 9], (0,), lambda: f"[t, t^3, t^5] = {vals}")
    c.detail = f"[t, t^3, t^5] = {vals}"
    out.append(c)
    out.extend(suite_mobile_counts(ds, mobile_degree, mobile_blacks))
    return out


def exposed_rootings(t) -> int:
    """Distinct rootings at exposed buds, with exposed buds found by closing."""
    pm, o = phi_inverse(t)
    t2 = phi(pm, o, check=False)
    return len({code_from(t2, b) for b in t2.exposed})


def tree_rootings(t) -> int:
    """Distinct bud rootings minus distinct white half-edge rootings."""
    buds = {code_from(t, b) for b in t.buds()}
    white = {code_from(t, h) for v in t.white_vertices() for h in t.rotation[v]}
    return len(buds) - len(white)


def suite_mobile_counts(ds: Iterable[int] = (1, 2, 3), max_degree: int = 4, max_blacks: int = 3) -> list[Check]:
    out = []
    for d in ds:
        c = Check(f"d-branching mobiles vs rooted maps d={d} (degree <= {max_degree}, <= {max_blacks} black)")
        closed: Counter = Counter()
        tree: Counter = Counter()
        mobiles = enumerate_mobiles(MobileSpec.d_branching(d), max_degree, max_blacks)
        for t in mobiles:
            key = _profile(len(t.rotation[v]) for v in t.black_vertices())
            closed[key] += exposed_rootings(t)
            tree[key] += tree_rootings(t)
        oracle = dict(count_plane_class(d, max_blacks, max_degree))
        oracle = {k: v for k, v in oracle.items() if k}
        _compare_tables(c, dict(closed), oracle, f"d={d} closure")
        _compare_tables(c, dict(tree), oracle, f"d={d} tree")
        c.detail = f"{len(mobiles)} mobiles, {sum(oracle.values())} rooted maps"
        out.append(c)
    c = Check("excess of generated mobiles")
    families = [MobileSpec.d_branching(d) for d in (1, 2, 3, 4)]
    families += [MobileSpec.b_dibranching(b) for b in (1, 2)]
    families += [MobileSpec.typed(d, p, q) for d in (1, 2, 3) for p in range(d, 4) for q in range(p, 4)]
    families += [MobileSpec.typed_bipartite(b, r, s) for b in (1, 2) for r in range(b, 3) for s in range(r, 3)]
    for spec in families:
        for t in enumerate_mobiles(spec, 4, 2):
            ok, why = validate(t, spec)
            good = ok and excess(t) == spec.expected_excess()
            c.record(good, mobile_code(t), lambda: f"{spec}: excess {excess(t)} ({why}); {serialize_mobile(t)}")
    out.append(c)
    return out


# ---------------------------------------------------------------------------
# annular series


def suite_annular(max_pq: int = 4, max_faces: int = 2, max_degree: int = 4, max_bc: int = 2) -> list[Check]:
    within = Check(f"G vs oracle, e >= d (p, q <= {max_pq}, <= {max_faces} faces of degree <= {max_degree})")
    below = Check(f"G vs oracle, e < d (p, q <= {max_pq}, <= {max_faces} faces of degree <= {max_degree})")
    sols = {d: solve_W(d, range(d, max_degree + 1), max_faces) for d in range(1, max_pq + 1)}
    for d, e, p, q in itertools.product(range(1, max_pq + 1), repeat=4):
        delta = list(range(d, max_degree + 1))
        got = _series_table(G_annular_from(sols[d], e, p, q), delta)
        want = dict(count_annular_class(d, e, p, q, max_faces, max_degree))
        target = within if e >= d else below
        for key in sorted(set(got) | set(want)):
            a, b = got.get(key, 0), want.get(key, 0)
            target.record(
                a == b,
                (d, e, p, q, len(key), key),
                lambda: f"d={d} e={e} p={p} q={q} profile {list(key)}: series {a}, oracle {b}",
            )
    out = [within, below]
    c = Check("separating girth equal to the outer degree: two expressions agree")
    for d in range(1, max_pq + 1):
        for p in range(1, max_pq + 1):
            for q in range(p, max_pq + 1):
                a = G_annular_from(sols[d], p, p, q)
                b = G_sep_equals_outer_from(sols[d], p, q)
                c.record(a == b, (d, p, q), lambda: f"d={d} p={p} q={q}: {a} != {b}")
    out.append(c)
    c = Check(f"B equals G under even specialization (b, c, r, s <= {max_bc})")
    for b in range(1, max_bc + 1):
        delta = list(range(2 * b, 2 * max_degree + 1, 2))
        vsol, _ = solve_V_and_E(b, delta, max_faces)
        wsol = even_specialization(2 * b, delta, max_faces)
        for cc, r, s in itertools.product(range(1, max_bc + 1), repeat=3):
            lhs = B_annular_from(vsol, cc, r, s)
            rhs = G_annular_from(wsol, 2 * cc, 2 * r, 2 * s)
            c.record(lhs == rhs, (b, cc, r, s), lambda: f"b={b} c={cc} r={r} s={s}: {lhs} != {rhs}")
    out.append(c)
    c = Check("constant term of G_{2,2}^{(2,2)}")
    const = G_annular_from(sols[2], 2, 2, 2).constant_term()
    c.record(const == 2, (0,), lambda: f"constant term {const}")
    c.detail = f"constant term {const}"
    out.append(c)
    return out


# ---------------------------------------------------------------------------
# closed formulas


def _profiles_for_edges(e: int, smallest: int) -> Iterable[tuple[int, ...]]:
    """Face-count vectors n (index i means half-degree smallest + i) with sum i*n_i = e."""
    halves = list(range(smallest, e + 1))

    def rec(i: int, left: int) -> Iterable[tuple[int, ...]]:
        if i == len(halves):
            if left == 0:
                yield ()
            return
        for c in range(left // halves[i] + 1):
            for rest in rec(i + 1, left - c * halves[i]):
                yield (c,) + rest

    for n in rec(0, e):
        while n and n[-1] == 0:
            n = n[:-1]
        if n:
            yield n


def suite_formulas(max_e: int = 5) -> list[Check]:
    bip = count_rooted_by_profile(max_e, is_bipartite)
    simple = count_rooted_by_profile(max_e, lambda m: is_bipartite(m) and is_simple(m))
    out = []
    c = Check(f"bipartite closed formula vs oracle (<= {max_e} edges)")
    for e in range(1, max_e + 1):
        for n in _profiles_for_edges(e, 1):
            key = _profile(2 * (i + 1) for i, k in enumerate(n) for _ in range(k))
            a, b = count_bipartite(*n), bip.get(key, 0)
            c.record(a == b, (e, key), lambda: f"profile {list(key)}: formula {a}, oracle {b}")
    out.append(c)
    c = Check(f"simple bipartite closed formula vs oracle (<= {max_e} edges)")
    for e in range(2, max_e + 1):
        for n in _profiles_for_edges(e, 2):
            key = _profile(2 * (i + 2) for i, k in enumerate(n) for _ in range(k))
            a, b = count_simple_bipartite(*n), simple.get(key, 0)
            c.record(a == b, (e, key), lambda: f"profile {list(key)}: formula {a}, oracle {b}")
    c.detail = "single-face values " + ", ".join(
        str(count_simple_bipartite(*([0] * (i - 2) + [1]))) for i in (2, 3)
    ) + f"; two squares {count_simple_bipartite(2)}"
    out.append(c)
    return out


# ---------------------------------------------------------------------------
# loopless maps


def loopless_routes(max_n: int) -> dict[str, list[int]]:
    closed = [count_loopless(n) for n in range(max_n + 1)]
    series = loopless_series(max_n).coefficients()[: max_n + 1]
    F2 = F_d_t(2, 2 * max_n)
    special = [1] + [F2.coefficient((2 * n,)) for n in range(1, max_n + 1)]
    brute = [0] * (max_n + 1)
    for m, r in enumerate_rooted_maps(max_n):
        g = girth(m)
        if g is None or g >= 2:
            brute[m.n_edges] += 1
    return {"closed formula": closed, "alpha equation": series, "F_2 specialization": special, "brute force": brute}


def suite_loopless(max_n: int = 4, motzkin_order: int = 20) -> list[Check]:
    routes = loopless_routes(max_n)
    c = Check(f"loopless counts, n = 0..{max_n}")
    ref = routes["closed formula"]
    for name, vals in routes.items():
        c.record(vals == ref, (name,), lambda: f"{name} {vals} != closed formula {ref}")
    c.detail = "; ".join(f"{k}: {v}" for k, v in routes.items())
    out = [c]
    rep = verify_loopless_reduction(motzkin_order)
    c = Check(f"Motzkin path identities to order {motzkin_order}")
    for name, good in rep.checks.items():
        c.record(good, (name,), lambda: name)
    out.append(c)
    return out


# ---------------------------------------------------------------------------
# special cases


def suite_special_cases(max_edges: int = 4, max_blacks: int = 3) -> list[Check]:
    out = []
    c = Check(f"rightmost BFS orientation equals the d=1 pipeline (<= {max_edges} edges)")
    for pm in plane_maps(max_edges, MapBounds(max_edges=max_edges, max_root_degree=1)):
        if in_class_plain(pm, 1):
            a = rightmost_bfs_orientation(pm)
            b = suitable_orientation(pm, GirthSpec.plain(1))
            c.record(a == b, canonical_code(pm), lambda: f"map {serialize_map(pm)}")
    out.append(c)

    c = Check(f"halve and double are inverse (<= {max_edges + 1} edges)")
    for pm in plane_maps(max_edges + 1, MapBounds(max_edges=max_edges + 1, max_root_degree=2)):
        if in_class_bipartite(pm, 1):
            o2 = suitable_orientation(pm, GirthSpec.plain(2))
            o1 = suitable_orientation(pm, GirthSpec.bipartite(1))
            good = halve(pm, o2) == o1 and double(pm, o1) == o2 and double(pm, halve(pm, o2)) == o2
            c.record(good, canonical_code(pm), lambda: f"map {serialize_map(pm)}")
    out.append(c)

    c = Check(f"edge-vertex contraction round trip (<= {max_edges + 1} edges)")
    for d in (1, 2, 3, 4):
        for pm in plane_maps(max_edges + 1, MapBounds(max_edges=max_edges + 1, max_root_degree=d)):
            if not in_class_plain(pm, d):
                continue
            sub = subdivide(pm)
            ob = suitable_orientation(sub.plane, GirthSpec.bipartite(d))
            o = tau_map(sub, ob, d)
            good = o == suitable_orientation(pm, GirthSpec.plain(d)) and tau_inverse(sub, o, d) == ob
            c.record(good, (d,) + canonical_code(pm), lambda: f"d={d} map {serialize_map(pm)}")
    out.append(c)

    c = Check(f"geodesic biorientation is the unique suitable 0/(-2)-orientation (<= {max_edges} edges)")
    for pm in plane_maps(max_edges):
        m = pm.base
        for v in range(len(m.vertices)):
            g = geodesic_biorientation(m, v)
            found = zero_suitable_bruteforce(m, v)
            good = found == [(g.ingoing, g.weight)]
            c.record(good, canonical_code(pm) + (v,), lambda: f"vertex {v} of map {serialize_map(pm)}: {len(found)} found")
    out.append(c)

    c = Check(f"theta is a bijection on 0-branching mobiles (<= {max_blacks} black vertices)")
    seen: dict = {}
    for t in enumerate_mobiles(MobileSpec.zero_branching(), 4, max_blacks):
        key = mobile_code(t)
        try:
            w = theta_inverse(t)
            problem = w.check()
            back = theta(w)
            lc = labelled_code(w)
            w2 = theta_inverse(back)
            good = problem is None and mobile_code(back) == key and labelled_code(w2) == lc and lc not in seen
            seen[lc] = key
        except Exception as exc:
            good, problem = False, f"{type(exc).__name__}: {exc}"
        c.record(good, key, lambda: f"{problem}; mobile {serialize_mobile(t)}")
    c.detail = f"{len(seen)} mobiles"
    out.append(c)
    return out


def run_suite(name: str, **bounds) -> list[Check]:
    table = {
        "roundtrip": suite_roundtrip,
        "orientations": suite_orientations,
        "counts": suite_counts,
        "annular": suite_annular,
        "formulas": suite_formulas,
        "loopless": suite_loopless,
        "special-cases": suite_special_cases,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    return table[name](**bounds)
