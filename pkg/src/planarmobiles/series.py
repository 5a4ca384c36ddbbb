"""Exact truncated power series and the counting systems built on them.

Series live in a ``Ring``: a finite list of variable names and a bound on
the total degree.  Coefficients are Python integers; every division in a
closed formula is checked to be exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class Ring:
    names: tuple[str, ...]
    bound: int

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries(self, {})

    def one(self) -> TruncatedSeries:
        return self.const(1)

    def const(self, c: int) -> TruncatedSeries:
        return TruncatedSeries(self, {(0,) * self.nvars: c} if c else {})

    def var(self, i: int, power: int = 1) -> TruncatedSeries:
        e = [0] * self.nvars
        e[i] = power
        if power > self.bound:
            return self.zero()
        return TruncatedSeries(self, {tuple(e): 1})


def x_ring(degrees: Iterable[int], bound: int) -> Ring:
    """Ring with one variable ``x_k`` per face degree ``k``."""
    return Ring(tuple(f"x{k}" for k in sorted(degrees)), bound)


def t_ring(bound: int) -> Ring:
    return Ring(("t",), bound)


class TruncatedSeries:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], int]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c and sum(e) <= ring.bound}

    # -- access
    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def __getitem__(self, exps) -> int:
        if isinstance(exps, int):
            exps = (exps,)
        return self.coefficient(exps)

    def coefficients(self) -> list[int]:
        """Dense coefficient list of a univariate series."""
        if self.ring.nvars != 1:
            raise ValueError("coefficients() needs a univariate ring")
        return [self.terms.get((k,), 0) for k in range(self.ring.bound + 1)]

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic
    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.ring != self.ring:
                raise ValueError("series from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        bound = self.ring.bound
        out: dict[tuple[int, ...], int] = {}
        b_items = [(e, sum(e), c) for e, c in other.terms.items()]
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, d2, c2 in b_items:
                if d1 + d2 > bound:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedSeries(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, k: int) -> TruncatedSeries:
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {k}")
            out[e] = q
        return TruncatedSeries(self.ring, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                n if p == 1 else f"{n}^{p}" for n, p in zip(self.ring.names, e) if p
            )
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts)


def specialize_t(s: TruncatedSeries, degrees: Sequence[int], ring: Ring) -> TruncatedSeries:
    """Substitute ``x_k = t^k`` for the ``k`` listed in ``degrees``."""
    out: dict[tuple[int, ...], int] = {}
    for e, c in s.terms.items():
        k = sum(a * d for a, d in zip(e, degrees))
        out[(k,)] = out.get((k,), 0) + c
    return TruncatedSeries(ring, out)


# ---------------------------------------------------------------------------
# compositions


def compositions(j: int) -> Iterable[tuple[int, ...]]:
    if j == 0:
        yield ()
        return
    for first in range(1, j + 1):
        for rest in compositions(j - first):
            yield (first,) + rest


def h_poly(j: int, args: Mapping[int, TruncatedSeries] | Sequence[TruncatedSeries], ring: Ring | None = None) -> TruncatedSeries:
    """Sum over compositions of ``j`` of the products of ``args[part]``.

    ``args`` is indexed from 1 (a mapping, or a sequence whose first entry is
    ``w_1``).  Missing parts count as zero.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    if not isinstance(args, Mapping):
        args = {i + 1: a for i, a in enumerate(args)}
    if ring is None:
        ring = next(iter(args.values())).ring
    # h_j = sum_{i=1..j} w_i h_{j-i}
    h = [ring.one()]
    for k in range(1, j + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            if i in args and not args[i].is_zero():
                acc = acc + args[i] * h[k - i]
        h.append(acc)
    return h[j]


def multinomial(n: int, *ks: int) -> int:
    if min(ks, default=0) < 0 or sum(ks) > n:
        return 0
    out = factorial(n)
    for k in ks:
        out //= factorial(k)
    return out // factorial(n - sum(ks))


def laurent_extract(n: int, k: int, A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """``[u^-k] (A + u^-1 B + u^-2)^n`` computed as a sum over ``a + 2c = k``."""
    ring = A.ring
    out = ring.zero()
    if k < 0:
        return out
    for c in range(k // 2 + 1):
        a = k - 2 * c
        if a + c > n:
            continue
        coef = multinomial(n, a, c)
        if coef:
            out = out + (A ** (n - a - c)) * (B ** a) * coef
    return out


# ---------------------------------------------------------------------------
# plane maps of girth d


@dataclass
class WSystemSolution:
    d: int
    ring: Ring
    xs: dict[int, TruncatedSeries]
    W: dict[int, TruncatedSeries] = field(default_factory=dict)

    def rhs(self, j: int, W: Mapping[int, TruncatedSeries] | None = None) -> TruncatedSeries:
        W = self.W if W is None else W
        d = self.d
        if j <= d - 3:
            return h_poly(j + 2, {i: W[i] for i in range(1, d)}, self.ring)
        A = W[0] + 1
        B = W[-1]
        out = self.ring.zero()
        for i, x in self.xs.items():
            if i < d or x.is_zero():
                continue
            out = out + x * laurent_extract(i - 1, i - j - 2, A, B)
        return out

    def residuals(self) -> dict[int, TruncatedSeries]:
        return {j: self.W[j] - self.rhs(j) for j in range(-2, self.d + 1)}

    def F(self) -> TruncatedSeries:
        d = self.d
        out = self.W[d - 2]
        for j in range(-2, d - 2):
            out = out - self.W[j] * self.W[d - 2 - j]
        return out


def solve_W_in(d: int, xs: Mapping[int, TruncatedSeries], ring: Ring) -> WSystemSolution:
    """Solve the planted-mobile system with face variables ``xs[k]``."""
    if d < 1:
        raise ValueError("d must be positive")
    sol = WSystemSolution(d, ring, dict(xs))
    W = {j: ring.zero() for j in range(-2, d + 1)}
    W[-2] = ring.one()
    sol.W = W
    limit = (ring.bound + 2) * (d + 3) + 5
    for _ in range(limit):
        changed = False
        for j in range(-1, d + 1):
            new = sol.rhs(j)
            if new != W[j]:
                W[j] = new
                changed = True
        if not changed:
            return sol
    raise RuntimeError("fixed-point iteration did not stabilize")


def solve_W(d: int, delta: Iterable[int], N: int) -> WSystemSolution:
    """Multivariate solution: one variable per degree in ``delta``."""
    delta = sorted(set(delta))
    if any(k < d for k in delta):
        raise ValueError("face degrees must be at least d")
    ring = x_ring(delta, N)
    xs = {k: ring.var(i) for i, k in enumerate(delta)}
    return solve_W_in(d, xs, ring)


def F_d(d: int, delta: Iterable[int], N: int) -> TruncatedSeries:
    """Rooted maps of girth d and outer degree d, by inner-face degrees."""
    return solve_W(d, delta, N).F()


def solve_W_t(d: int, N: int, max_degree: int | None = None) -> WSystemSolution:
    """Solution under ``x_k = t^k`` for all ``d <= k <= max_degree``."""
    ring = t_ring(N)
    top = N if max_degree is None else max_degree
    xs = {k: ring.var(0, k) for k in range(d, top + 1)}
    return solve_W_in(d, xs, ring)


def F_d_t(d: int, N: int, max_degree: int | None = None) -> TruncatedSeries:
    return solve_W_t(d, N, max_degree).F()


# ---------------------------------------------------------------------------
# bipartite maps of girth 2b


@dataclass
class VSystemSolution:
    b: int
    ring: Ring
    xs: dict[int, TruncatedSeries]  # keyed by face degree 2i
    V: dict[int, TruncatedSeries] = field(default_factory=dict)

    def rhs(self, j: int, V: Mapping[int, TruncatedSeries] | None = None) -> TruncatedSeries:
        V = self.V if V is None else V
        b = self.b
        if j <= b - 2:
            return h_poly(j + 1, {i: V[i] for i in range(1, b)}, self.ring)
        R = V[0] + 1
        out = self.ring.zero()
        for deg, x in self.xs.items():
            i = deg // 2
            if i < b or x.is_zero():
                continue
            c = comb(2 * i - 1, i - j - 1) if 0 <= i - j - 1 <= 2 * i - 1 else 0
            if c:
                out = out + x * (R ** (i + j)) * c
        return out

    def residuals(self) -> dict[int, TruncatedSeries]:
        return {j: self.V[j] - self.rhs(j) for j in range(-1, self.b + 1)}

    def E(self) -> TruncatedSeries:
        b = self.b
        out = self.V[b - 1]
        for j in range(-1, b - 1):
            out = out - self.V[j] * self.V[b - j - 1]
        return out


def solve_V_in(b: int, xs: Mapping[int, TruncatedSeries], ring: Ring) -> VSystemSolution:
    if b < 1:
        raise ValueError("b must be positive")
    if any(k % 2 for k in xs):
        raise ValueError("bipartite systems use even face degrees only")
    sol = VSystemSolution(b, ring, dict(xs))
    V = {j: ring.zero() for j in range(-1, b + 1)}
    V[-1] = ring.one()
    sol.V = V
    limit = (ring.bound + 2) * (b + 3) + 5
    for _ in range(limit):
        changed = False
        for j in range(0, b + 1):
            new = sol.rhs(j)
            if new != V[j]:
                V[j] = new
                changed = True
        if not changed:
            return sol
    raise RuntimeError("fixed-point iteration did not stabilize")


def solve_V_and_E(b: int, delta_even: Iterable[int], N: int) -> tuple[VSystemSolution, TruncatedSeries]:
    delta = sorted(set(delta_even))
    if any(k % 2 or k < 2 * b for k in delta):
        raise ValueError("degrees must be even and at least 2b")
    ring = x_ring(delta, N)
    xs = {k: ring.var(i) for i, k in enumerate(delta)}
    sol = solve_V_in(b, xs, ring)
    return sol, sol.E()


def even_specialization(d: int, delta: Iterable[int], N: int) -> WSystemSolution:
    """W system in the ring of ``delta`` with odd-degree variables set to 0."""
    delta = sorted(set(delta))
    ring = x_ring(delta, N)
    xs = {k: (ring.var(i) if k % 2 == 0 else ring.zero()) for i, k in enumerate(delta)}
    return solve_W_in(d, xs, ring)


# ---------------------------------------------------------------------------
# annular maps


def beta_coeff(p: int, i: int, e: int) -> int:
    if not 0 <= i <= p - e:
        raise ValueError(f"need 0 <= i <= p - e, got p={p} i={i} e={e}")
    return factorial(p) // (
        factorial(i) * factorial((p - i - e) // 2) * factorial((p - i + e - 1) // 2)
    )


def gamma_coeff(p: int, i: int, a: int) -> int:
    if (p - i - a) % 2 or p - i - a < 0 or i < 0:
        return 0
    return factorial(p) // (factorial(i) * factorial((p - i - a) // 2) * factorial((p - i + a) // 2))


def telescoping_identity(p: int, q: int, i: int, j: int, e: int) -> tuple[Fraction, Fraction]:
    """Both sides of the summation identity over the separating length a."""
    lhs = sum(a * gamma_coeff(p, i, a) * gamma_coeff(q, j, a) for a in range(e, min(p - i, q - j) + 1))
    if (i + j - p - q) % 2:
        rhs = Fraction(0)
    else:
        rhs = Fraction(2 * beta_coeff(p, i, e) * beta_coeff(q, j, e), p + q - i - j)
    return Fraction(lhs), rhs


def G_annular_from(sol: WSystemSolution, e: int, p: int, q: int) -> TruncatedSeries:
    ring = sol.ring
    A = sol.W[0] + 1
    B = sol.W[-1]
    out = ring.zero()
    for i in range(0, p - e + 1):
        for j in range(0, q - e + 1):
            if (i + j - p - q) % 2:
                continue
            num = 2 * beta_coeff(p, i, e) * beta_coeff(q, j, e)
            den = p + q - i - j
            if num % den:
                raise ArithmeticError(f"inexact coefficient {num}/{den}")
            out = out + (A ** ((p + q - i - j) // 2)) * (B ** (i + j)) * (num // den)
    return out


def G_annular(d: int, e: int, p: int, q: int, delta: Iterable[int], N: int) -> TruncatedSeries:
    """Rooted annular maps of type (p, q), non-separating girth >= d and
    separating girth >= e, by non-root face degrees."""
    return G_annular_from(solve_W(d, delta, N), e, p, q)


def G_sep_equals_outer_from(sol: WSystemSolution, p: int, q: int) -> TruncatedSeries:
    A = sol.W[0] + 1
    return laurent_extract(q, q - p, A, sol.W[-1]) * p


def G_sep_equals_outer(d: int, p: int, q: int, delta: Iterable[int], N: int) -> TruncatedSeries:
    """The separating-girth-p series through the special-vertex extraction."""
    if p > q:
        raise ValueError("need p <= q")
    return G_sep_equals_outer_from(solve_W(d, delta, N), p, q)


def B_annular_from(sol: VSystemSolution, c: int, r: int, s: int) -> TruncatedSeries:
    ring = sol.ring
    if r - c < 0 or s - c < 0:
        return ring.zero()
    num = 4 * r * s * comb(2 * r - 1, r - c) * comb(2 * s - 1, s - c)
    if num % (r + s):
        raise ArithmeticError(f"inexact coefficient {num}/{r + s}")
    return ((sol.V[0] + 1) ** (r + s)) * (num // (r + s))


def B_annular(b: int, c: int, r: int, s: int, delta_even: Iterable[int], N: int) -> TruncatedSeries:
    sol, _ = solve_V_and_E(b, delta_even, N)
    return B_annular_from(sol, c, r, s)


# ---------------------------------------------------------------------------
# closed formulas


def count_loopless(n: int) -> int:
    num = 2 * factorial(4 * n + 1)
    den = factorial(n + 1) * factorial(3 * n + 2)
    if num % den:
        raise ArithmeticError("inexact loopless count")
    return num // den


def alpha_series(N: int, step: int = 1) -> TruncatedSeries:
    """The series with ``alpha = 1 + t^step alpha^4``."""
    ring = t_ring(N)
    a = ring.one()
    ts = ring.var(0, step)
    for _ in range(N + 2):
        nxt = ts * a ** 4 + 1
        if nxt == a:
            break
        a = nxt
    return a


def loopless_series(N: int) -> TruncatedSeries:
    """``alpha^2 (2 - alpha)``: rooted loopless maps by edges."""
    a = alpha_series(N)
    return a * a * (2 - a)


def count_simple_bipartite(*n: int) -> int:
    """Rooted simple bipartite maps with ``n[k]`` faces of degree ``2(k+2)``."""
    counts = {i + 2: c for i, c in enumerate(n)}
    if not any(counts.values()) or min(counts.values()) < 0:
        raise ValueError("need non-negative face counts, not all zero")
    nf = sum(counts.values())
    e = sum(i * c for i, c in counts.items())
    val = Fraction(2 * factorial(e + nf - 3), factorial(e - 1))
    for i, c in counts.items():
        val *= Fraction(comb(2 * i - 1, i - 2) ** c, factorial(c))
    if val.denominator != 1:
        raise ArithmeticError("inexact simple bipartite count")
    return int(val)


def count_bipartite(*n: int) -> int:
    """Rooted bipartite maps with ``n[k]`` faces of degree ``2(k+1)``."""
    counts = {i + 1: c for i, c in enumerate(n)}
    if not any(counts.values()) or min(counts.values()) < 0:
        raise ValueError("need non-negative face counts, not all zero")
    e = sum(i * c for i, c in counts.items())
    v = 2 + e - sum(counts.values())
    val = Fraction(2 * factorial(e), factorial(v))
    for i, c in counts.items():
        val *= Fraction(comb(2 * i - 1, i - 1) ** c, factorial(c))
    if val.denominator != 1:
        raise ArithmeticError("inexact bipartite count")
    return int(val)


def lagrange_Ra(a: int, exps: Mapping[int, int]) -> int:
    """Coefficient of ``prod x_{2i}^{n_i}`` in ``R^a`` where
    ``R = 1 + sum_{i>=2} x_{2i} C(2i-1, i-2) R^{i+1}``; keys of ``exps`` are i."""
    if a < 1:
        raise ValueError("a must be positive")
    top = sum((i + 1) * c for i, c in exps.items()) + a - 1
    bottom = sum(i * c for i, c in exps.items()) + a
    val = Fraction(a * factorial(top), factorial(bottom))
    for i, c in exps.items():
        if i < 2:
            raise ValueError("indices start at 2")
        val *= Fraction(comb(2 * i - 1, i - 2) ** c, factorial(c))
    if val.denominator != 1:
        raise ArithmeticError("inexact Lagrange coefficient")
    return int(val)


def R_series(half_degrees: Iterable[int], N: int) -> tuple[Ring, TruncatedSeries]:
    """Direct fixed-point expansion of R, one variable per half-degree i."""
    idx = sorted(set(half_degrees))
    ring = Ring(tuple(f"x{2 * i}" for i in idx), N)
    R = ring.one()
    for _ in range(N + 2):
        nxt = ring.one()
        for k, i in enumerate(idx):
            nxt = nxt + ring.var(k) * (R ** (i + 1)) * comb(2 * i - 1, i - 2)
        if nxt == R:
            break
        R = nxt
    return ring, R


# ---------------------------------------------------------------------------
# loopless maps through Motzkin paths


@dataclass
class LooplessReport:
    N: int
    checks: dict[str, bool]
    R: TruncatedSeries
    S: TruncatedSeries
    M: TruncatedSeries
    B0: TruncatedSeries

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def motzkin_series(R: TruncatedSeries, S: TruncatedSeries, max_height: int) -> tuple[dict[int, TruncatedSeries], TruncatedSeries]:
    """Bridges ending at each height and excursions, by dynamic programming
    over path length; steps up/flat/down weigh tR, tS, t."""
    ring = R.ring
    t = ring.var(0)
    up, flat, down = t * R, t * S, t
    N = ring.bound
    bridges: dict[int, TruncatedSeries] = {}
    layer = {0: ring.one()}
    exc = {0: ring.one()}
    M = ring.one()
    for h, s in layer.items():
        bridges[h] = bridges.get(h, ring.zero()) + s
    for _ in range(N):
        nxt: dict[int, TruncatedSeries] = {}
        for h, s in layer.items():
            for dh, wgt in ((1, up), (0, flat), (-1, down)):
                term = s * wgt
                if not term.is_zero():
                    nxt[h + dh] = nxt.get(h + dh, ring.zero()) + term
        layer = {h: s for h, s in nxt.items() if not s.is_zero()}
        for h, s in layer.items():
            bridges[h] = bridges.get(h, ring.zero()) + s
        nexc: dict[int, TruncatedSeries] = {}
        for h, s in exc.items():
            for dh, wgt in ((1, up), (0, flat), (-1, down)):
                if h + dh < 0:
                    continue
                term = s * wgt
                if not term.is_zero():
                    nexc[h + dh] = nexc.get(h + dh, ring.zero()) + term
        exc = {h: s for h, s in nexc.items() if not s.is_zero()}
        M = M + exc.get(0, ring.zero())
    return {k: bridges.get(k, ring.zero()) for k in range(-max_height, max_height + 1)}, M


def verify_loopless_reduction(N: int) -> LooplessReport:
    """Check the Motzkin-path reduction of the d = 2 system to ``alpha``."""
    ring = t_ring(N)
    t = ring.var(0)
    R, S = ring.one(), ring.zero()
    for _ in range(N + 3):
        bridges, M = motzkin_series(R, S, 3)
        nR = t * bridges[1] + 1
        nS = t * bridges[2]
        if nR == R and nS == S:
            break
        R, S = nR, nS
    bridges, M = motzkin_series(R, S, 3)
    B0 = bridges[0]
    tRM = t * R * M
    checks: dict[str, bool] = {}
    checks["(i) B_k = B_0 (tRM)^k"] = all(bridges[k] == B0 * tRM ** k for k in range(0, 4))
    checks["(ii) M = 1 + tSM + t^2RM^2"] = M == 1 + t * S * M + t * t * R * M * M
    checks["(iii) B_0 = 1 + tSB_0 + 2t^2RMB_0"] = B0 == 1 + t * S * B0 + 2 * t * t * R * M * B0
    checks["(iv) R = 1 + t^2B_0MR"] = R == 1 + t * t * B0 * M * R
    checks["(v) S = t^3B_0M^2R^2"] = S == t ** 3 * B0 * M * M * R * R
    a = alpha_series(N, step=2)
    checks["solution M = alpha"] = M == a
    checks["solution B_0 = alpha^2"] = B0 == a * a
    checks["solution R = alpha"] = R == a
    checks["solution S = t^3 alpha^6"] = S == t ** 3 * a ** 6
    F2 = F_d_t(2, N)
    via_paths = R - 1 - S * S - t * bridges[3]
    checks["F_2 from the path system"] = F2 == via_paths
    checks["F_2 = alpha^2(2 - alpha) - 1"] = F2 == a * a * (2 - a) - 1
    return LooplessReport(N, checks, R, S, M, B0)
