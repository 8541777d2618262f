"""Levine-Tristram signatures and the signature integral, exactly.

Circle points are parametrized as w(u) = (1 - iu)/(1 + iu) for rational u
(with u = None standing for w = -1), so every signature evaluation happens
in Gaussian-rational arithmetic; the signature itself comes from an exact
congruence-based inertia count, never from numerical eigenvalues.

Jump locations are the unit-circle roots of the Alexander polynomial.  With
x = w + w^{-1} they become the real roots in (-2, 2) of a rational
polynomial; those are isolated by Sturm sequences, and roots of cyclotomic
factors are recognized exactly as angles k/n (against the minimal
polynomials of 2cos(2*pi/n) for n up to a configurable bound).  Jump sizes
are differences of arc values sampled at rational parameters on both sides,
never derivative heuristics.

The signature integral over the circle (normalized to length one) is a
finite sum of jump * arc-length terms: an exact rational when every jump
angle is rational, otherwise a certified interval.  Irrational angles are
enclosed by bisection with certified comparisons against outward-rounded
interval cosines (mpmath.iv); Niven's theorem guarantees every comparison
resolves.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .polyalg import LaurentPoly, cyclotomic, factor_laurent
from .seifert import SeifertMatrix, alexander_polynomial

DEFAULT_ANGLE_DENOMINATOR_BOUND = 120
PRECISION_ENV = "RHOSLICE_PRECISION"
_DEFAULT_BUDGET = Fraction(1, 10 ** 6)


class SignatureError(ValueError):
    pass


def precision_budget() -> Fraction:
    """Interval width bound for the signature integral, from the environment
    (default 1/10^6)."""
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return _DEFAULT_BUDGET
    try:
        budget = Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise SignatureError(f"bad {PRECISION_ENV} value {raw!r}") from exc
    if budget <= 0:
        raise SignatureError(f"{PRECISION_ENV} must be positive")
    return budget


# ---------------------------------------------------------------------------
# Gaussian rationals and exact hermitian inertia
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i)."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, o):
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return GaussianRational(self.re * o, self.im * o)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


def circle_point(u: Fraction | None) -> GaussianRational:
    """w(u) = (1 - iu)/(1 + iu) on the unit circle; u = None gives w = -1."""
    if u is None:
        return GaussianRational.of(-1, 0)
    u = Fraction(u)
    d = 1 + u * u
    return GaussianRational((1 - u * u) / d, Fraction(-2) * u / d)


def _gauss_pow(w: GaussianRational, n: int) -> GaussianRational:
    out = GaussianRational.of(1)
    base = w
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def eval_gaussian(p: LaurentPoly, w: GaussianRational) -> GaussianRational:
    acc = GaussianRational.of(0)
    winv = None
    for e, c in p.items():
        if e >= 0:
            term = _gauss_pow(w, e)
        else:
            if winv is None:
                winv = w.inverse()
            term = _gauss_pow(winv, -e)
        acc = acc + term * c
    return acc


def hermitian_inertia(H: list[list[GaussianRational]]) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a hermitian Gaussian-rational matrix by
    exact congruence reduction (Sylvester's law of inertia)."""
    n = len(H)
    A = [[H[i][j] for j in range(n)] for i in range(n)]
    active = list(range(n))
    pos = neg = zero = 0
    imag_unit = GaussianRational.of(0, 1)
    while active:
        k = next((i for i in active if not A[i][i].is_zero()), None)
        if k is None:
            pair = None
            for i in active:
                for j in active:
                    if i != j and not A[i][j].is_zero():
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            h = A[i][j]
            lam = GaussianRational.of(1) if h.re != 0 else imag_unit
            # congruence with T = I + lam E_ij makes A[i][i] = 2 Re(conj(lam) h) != 0
            for m in active:
                A[i][m] = A[i][m] + lam * A[j][m]
            for m in active:
                A[m][i] = A[m][i] + lam.conj() * A[m][j]
            continue
        a = A[k][k]
        assert a.im == 0, "hermitian matrix must have real diagonal"
        if a.re > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        inv = Fraction(1) / a.re
        col = {i: A[i][k] for i in active}
        for i in active:
            if col[i].is_zero():
                continue
            for j in active:
                A[i][j] = A[i][j] - col[i] * col[j].conj() * inv
    return pos, neg, zero


def lt_signature_at(V: SeifertMatrix, u: Fraction | None) -> int:
    """Signature of (1-w)V + (1-conj(w))V^T at w = w(u), exactly.

    u = 0 (w = 1) is rejected, as is any w where the Alexander polynomial
    vanishes (a jump point).
    """
    if u is not None and Fraction(u) == 0:
        raise SignatureError("w = 1 is excluded")
    if V.dim == 0:
        return 0
    w = circle_point(u)
    delta = alexander_polynomial(V)
    if eval_gaussian(delta, w).is_zero():
        raise SignatureError(
            "w is a root of the Alexander polynomial (jump point)")
    n = V.dim
    one = GaussianRational.of(1)
    f = one - w
    g = one - w.conj()
    H = [[f * V[i, j] + g * V[j, i] for j in range(n)] for i in range(n)]
    pos, negc, nil = hermitian_inertia(H)
    assert nil == 0, "form is nonsingular away from jump points"
    return pos - negc


# ---------------------------------------------------------------------------
# Dense rational polynomials and Sturm isolation
# ---------------------------------------------------------------------------


def _dpoly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _dpoly_deriv(p: list[Fraction]) -> list[Fraction]:
    return [c * k for k, c in enumerate(p)][1:] or [Fraction(0)]


def _dpoly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        while a and a[-1] == 0:
            a.pop()
    return a or [Fraction(0)]


def sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [p, _dpoly_deriv(p)]
    while any(chain[-1]) and len(chain[-1]) > 1:
        r = _dpoly_rem(chain[-2], chain[-1])
        chain.append([-c for c in r])
    if not any(chain[-1]):
        chain.pop()
    return chain


def _sign_changes(vals: list[Fraction]) -> int:
    signs = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_count(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    at_lo = _sign_changes([_dpoly_eval(q, lo) for q in chain])
    at_hi = _sign_changes([_dpoly_eval(q, hi) for q in chain])
    return at_lo - at_hi


def isolate_roots(p: list[Fraction], lo: Fraction, hi: Fraction):
    """Disjoint isolating intervals for the distinct roots of a square-free
    p in (lo, hi].

    Rational roots come back as degenerate point intervals (r, r); all other
    intervals (a, b) have non-root rational endpoints and the root strictly
    inside.
    """
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    if len(p) == 2:
        r = -p[0] / p[1]
        return [(r, r)] if lo < r <= hi else []
    chain = sturm_chain(p)
    out = []

    def split_point(a, b):
        # a rational in (a, b) that is not a root; p has at most deg roots,
        # so one of deg+1 distinct candidates works
        for k in range(2, len(p) + 3):
            cand = a + (b - a) / k
            if _dpoly_eval(p, cand) != 0:
                return cand
        raise SignatureError("could not find a non-root split point")

    def rec(a, b):
        n = sturm_count(chain, a, b)
        if n == 0:
            return
        if n == 1:
            out.append((b, b) if _dpoly_eval(p, b) == 0 else (a, b))
            return
        mid = split_point(a, b)
        rec(a, mid)
        rec(mid, b)

    rec(Fraction(lo), Fraction(hi))
    return sorted(out)


def refine_interval(p: list[Fraction], interval, width: Fraction):
    """Shrink an isolating interval of p below `width` by Sturm bisection."""
    a, b = interval
    if a == b:
        return interval
    chain = sturm_chain(p)
    while b - a > width:
        mid = (a + b) / 2
        if _dpoly_eval(p, mid) == 0:
            return (mid, mid)
        if sturm_count(chain, a, mid) == 1:
            b = mid
        else:
            a = mid
    return (a, b)


# ---------------------------------------------------------------------------
# The symmetrized variable x = w + 1/w
# ---------------------------------------------------------------------------


def circle_polynomial(delta: LaurentPoly) -> LaurentPoly:
    """q with q(w + w^{-1}) = delta(w)/w^m for a palindromic delta of even
    span 2m; unit-circle roots of delta away from ±1 correspond 2:1 to roots
    of q in (-2, 2)."""
    coeffs = delta.shift(-delta.low).poly_coeffs()
    deg = len(coeffs) - 1
    if deg % 2 != 0 or any(coeffs[k] != coeffs[deg - k] for k in range(deg // 2 + 1)):
        raise SignatureError("expected an even-degree palindromic polynomial")
    m = deg // 2
    var = delta.variable
    # C_k(x) = w^k + w^{-k}: C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
    x = LaurentPoly.var(var)
    c_prev = LaurentPoly.constant(2, var)
    c_cur = x
    q = LaurentPoly.constant(coeffs[m], var)
    for k in range(1, m + 1):
        q = q + coeffs[m + k] * c_cur
        c_prev, c_cur = c_cur, x * c_cur - c_prev
    return q


@lru_cache(maxsize=None)
def cos_minimal_polynomial(n: int) -> LaurentPoly:
    """Minimal polynomial of 2cos(2*pi/n) over Q (monic, in variable 't').

    This is an ordinary polynomial (x = 0 is a meaningful root for n = 4),
    so normalization divides by the leading coefficient without shifting.
    """
    if n == 1:
        return LaurentPoly({1: 1, 0: -2})
    if n == 2:
        return LaurentPoly({1: 1, 0: 2})
    q = circle_polynomial(cyclotomic(n))
    return q * (Fraction(1) / q.leading())


@lru_cache(maxsize=None)
def _cyclotomic_x_table(bound: int) -> dict[LaurentPoly, int]:
    return {cos_minimal_polynomial(n): n for n in range(3, bound + 1)}


# ---------------------------------------------------------------------------
# Signature function
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleRoot:
    """A jump location: theta in (0, 1/2) normalized-circle units.

    `angle` is the exact rational theta = k/n for recognized cyclotomic
    roots, else None; `x_interval` is an exact isolating interval (point
    interval for exact-x roots) for x = 2cos(2*pi*theta); `factor` the dense
    coefficients of the irreducible factor of the circle polynomial whose
    root this is; `jump` the change of the signature as theta crosses the
    location upward."""

    angle: Fraction | None
    x_interval: tuple[Fraction, Fraction]
    factor: tuple[Fraction, ...]
    jump: int


@dataclass(frozen=True)
class SignatureFunction:
    """Piecewise-constant signature over theta in (0, 1), symmetric under
    theta -> 1 - theta, zero near 0 and 1.

    `roots` are the jumps in (0, 1/2) sorted by increasing theta;
    `arc_values` are the values on the theta-arcs (0, t_1), (t_1, t_2), ...,
    (t_r, 1/2], one more entry than roots."""

    roots: tuple[CircleRoot, ...]
    arc_values: tuple[int, ...]

    def __post_init__(self):
        if len(self.arc_values) != len(self.roots) + 1:
            raise SignatureError("arc/jump count mismatch")
        if self.arc_values and self.arc_values[0] != 0:
            raise SignatureError("signature must vanish near w = 1")
        if any(v % 2 for v in self.arc_values):
            raise SignatureError("signature values must be even")

    def jumps(self) -> list[tuple[object, int]]:
        """Full-circle jump list: (location descriptor, jump), ascending.

        Locations are exact Fractions or x-isolating intervals (a, b) for
        irrational angles; the mirror jumps at 1 - theta carry opposite
        signs.
        """
        first = [(r.angle if r.angle is not None else r.x_interval, r.jump)
                 for r in self.roots]
        mirrored = [((1 - r.angle) if r.angle is not None else
                     ("mirror", r.x_interval), -r.jump)
                    for r in reversed(self.roots)]
        return first + mirrored

    def value_at_angle(self, theta: Fraction) -> int:
        """Value at an exact rational angle strictly inside (0, 1), assuming
        theta is not a jump location; irrational-root arcs are located via
        their x-intervals."""
        theta = Fraction(theta)
        if not 0 < theta < 1:
            raise SignatureError("angle must be in (0, 1)")
        if theta > Fraction(1, 2):
            theta = 1 - theta
        idx = 0
        for r in self.roots:
            if r.angle is not None:
                if r.angle == theta:
                    raise SignatureError("angle is a jump location")
                if r.angle < theta:
                    idx += 1
            else:
                # compare via x = 2cos(2 pi theta): theta above the root iff
                # x below the whole isolating interval; undecided -> refine
                a, b = r.x_interval
                x_lo, x_hi = _cos_enclosure(theta)
                steps = 0
                while not (x_hi < a or x_lo > b):
                    a, b = refine_interval(list(r.factor), (a, b), (b - a) / 4)
                    x_lo, x_hi = _cos_enclosure(theta, extra=steps)
                    steps += 1
                    if steps > 60:
                        raise SignatureError("cannot separate angle from jump")
                if x_hi < a:
                    idx += 1
        return self.arc_values[idx]

    def is_zero(self) -> bool:
        return not self.roots and all(v == 0 for v in self.arc_values)

    def negate(self) -> "SignatureFunction":
        return SignatureFunction(
            tuple(CircleRoot(r.angle, r.x_interval, r.factor, -r.jump)
                  for r in self.roots),
            tuple(-v for v in self.arc_values))

    def to_json(self) -> dict:
        jump_rows = []
        for r in self.roots:
            row = {"jump": r.jump}
            if r.angle is not None:
                row["theta"] = str(r.angle)
            else:
                row["x_interval"] = [str(r.x_interval[0]), str(r.x_interval[1])]
            jump_rows.append(row)
        return {"jumps": jump_rows, "arc_values": list(self.arc_values)}


def _fraction_to_iv(x: Fraction):
    return mpmath.iv.mpf(x.numerator) / x.denominator


def _iv_to_fractions(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an mpmath interval (endpoints are dyadic)."""

    def conv(raw) -> Fraction:
        sign, man, exp, bc = raw
        if man == 0:
            if bc == 0:
                return Fraction(0)
            raise SignatureError("non-finite interval endpoint")
        v = Fraction(int(man)) * (Fraction(2) ** int(exp))
        return -v if sign else v

    lo_raw, hi_raw = x._mpi_
    return conv(lo_raw), conv(hi_raw)


# 2cos(2*pi*t) is rational for rational t in (0, 1/2) only at these angles
# (Niven), which makes the certified comparison below terminate.
_NIVEN_X = {Fraction(1, 6): Fraction(1), Fraction(1, 4): Fraction(0),
            Fraction(1, 3): Fraction(-1)}


def _cos_cmp(t: Fraction, x: Fraction) -> int:
    """Certified sign of 2cos(2*pi*t) - x for t in (0, 1/2), rational x."""
    exact = _NIVEN_X.get(t)
    if exact is not None:
        return (exact > x) - (exact < x)
    if x >= 2:
        return -1
    if x <= -2:
        return 1
    for k in range(40):
        lo, hi = _cos_enclosure(t, extra=k)
        if lo > x:
            return 1
        if hi < x:
            return -1
    raise SignatureError("certified cosine comparison did not resolve")


def _theta_enclosure(a: Fraction, b: Fraction,
                     iters: int = 40) -> tuple[Fraction, Fraction]:
    """Certified rational t1 <= theta <= t2 for the angle theta in (0, 1/2)
    of any root x* in [a, b] (with -2 < a <= b < 2), via bisection with
    certified cosine comparisons; 2cos(2*pi*theta) is decreasing there."""

    def locate(x: Fraction) -> tuple[Fraction, Fraction]:
        lo, hi = Fraction(0), Fraction(1, 2)
        for _ in range(iters):
            mid = (lo + hi) / 2
            s = _cos_cmp(mid, x)
            if s > 0:
                lo = mid
            elif s < 0:
                hi = mid
            else:
                return mid, mid
        return lo, hi

    t1 = locate(b)[0]
    t2 = locate(a)[1]
    return t1, t2


@lru_cache(maxsize=None)
def _cos_enclosure(theta: Fraction, extra: int = 0) -> tuple[Fraction, Fraction]:
    """Certified enclosure of 2cos(2*pi*theta)."""
    old = mpmath.iv.prec
    try:
        mpmath.iv.prec = 80 + 20 * extra
        th = _fraction_to_iv(theta)
        val = 2 * mpmath.iv.cos(2 * mpmath.iv.pi * th)
        return _iv_to_fractions(val)
    finally:
        mpmath.iv.prec = old


def _sample_u_for_x_range(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational u > 0 with x(u) = 2(1-u^2)/(1+u^2) strictly inside (lo, hi).

    x(u) is a decreasing bijection of u in (0, inf) onto (-2, 2), so the
    target is u^2 in ((2-hi)/(2+hi), (2-lo)/(2+lo)); found by exact
    bisection on u."""
    if not (-2 <= lo < hi <= 2):
        raise SignatureError("bad x range")
    w1 = (2 - hi) / (2 + hi)
    if lo == -2:
        return Fraction(math.isqrt(int(w1)) + 1)
    w2 = (2 - lo) / (2 + lo)
    lo_u = Fraction(0)
    hi_u = Fraction(1)
    while hi_u * hi_u < w2:
        hi_u *= 2
    while True:
        mid = (lo_u + hi_u) / 2
        m2 = mid * mid
        if m2 <= w1:
            lo_u = mid
        elif m2 >= w2:
            hi_u = mid
        else:
            return mid


def signature_function(V: SeifertMatrix,
                       angle_bound: int = DEFAULT_ANGLE_DENOMINATOR_BOUND) -> SignatureFunction:
    """Complete step data of the Levine-Tristram signature of V."""
    delta = alexander_polynomial(V)
    if V.dim == 0 or delta.span == 0:
        return SignatureFunction((), (0,))
    q = circle_polynomial(delta)
    if q.span == 0:
        val = lt_signature_at(V, None)
        if val != 0:
            raise SignatureError("no jumps but nonzero value: inconsistent")
        return SignatureFunction((), (0,))
    if q[0] == 0:
        # a root at x = 0 would need t^2+1 to divide the Alexander
        # polynomial, which its value ±1 at t = 1 forbids
        raise SignatureError("unit-circle root data inconsistent with a "
                             "valid Seifert matrix")

    table = _cyclotomic_x_table(angle_bound)
    records: list[tuple[Fraction | None, tuple[Fraction, Fraction], tuple[Fraction, ...]]] = []
    two = Fraction(2)
    for psi, _mult in factor_laurent(q):
        dense = tuple(psi.shift(-psi.low).poly_coeffs())
        n = table.get(psi.monic())
        intervals = isolate_roots(list(dense), -two, two)
        if n is not None:
            ks = sorted((k for k in range(1, n // 2 + 1) if math.gcd(k, n) == 1),
                        reverse=True)
            if len(ks) != len(intervals):
                raise SignatureError("cyclotomic root bookkeeping failed")
            # x ascending <-> theta = k/n descending
            for (a, b), k in zip(intervals, ks):
                records.append((Fraction(k, n), (a, b), dense))
        else:
            for (a, b) in intervals:
                records.append((None, (a, b), dense))

    # refine until isolating intervals are strictly separated and stay away
    # from the endpoints ±2
    def separated(recs):
        recs = sorted(recs, key=lambda r: r[1])
        if recs and recs[0][1][0] <= -2:
            return False
        if recs and recs[-1][1][1] >= 2:
            return False
        for (_, (a1, b1), _), (_, (a2, b2), _) in zip(recs, recs[1:]):
            if not b1 < a2:
                return False
        return True

    width = Fraction(1, 4)
    for _ in range(80):
        if separated(records):
            break
        records = [(ang, refine_interval(list(f), iv, width), f)
                   for ang, iv, f in records]
        width /= 2
    else:
        raise SignatureError("could not separate jump locations")

    records.sort(key=lambda r: r[1])  # ascending x
    # boundaries of the root-free gaps on the x axis
    gaps = []
    prev_hi = Fraction(-2)
    for _, (a, b), _ in records:
        gaps.append((prev_hi, a))
        prev_hi = b
    gaps.append((prev_hi, Fraction(2)))
    values_x = []
    for glo, ghi in gaps:
        u = _sample_u_for_x_range(glo, ghi)
        values_x.append(lt_signature_at(V, u))
    if values_x[-1] != 0:
        raise SignatureError("signature does not vanish near w = 1")

    # theta ascending = x descending; jump when crossing theta upward is
    # (value on the smaller-x side) - (value on the larger-x side)
    roots = []
    for j in range(len(records) - 1, -1, -1):
        ang, x_iv, fac = records[j]
        jump = values_x[j] - values_x[j + 1]
        roots.append(CircleRoot(ang, x_iv, fac, jump))
    arc_values = tuple(values_x[::-1])
    return SignatureFunction(tuple(roots), arc_values)


# ---------------------------------------------------------------------------
# The signature integral
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rho0Value:
    """Integral of the signature over the normalized circle: an exact
    rational, a certified interval, or an opaque symbol."""

    kind: str  # "exact" | "interval" | "symbol"
    exact: Fraction | None = None
    interval: tuple[Fraction, Fraction] | None = None
    symbol: str | None = None

    @classmethod
    def of_exact(cls, v) -> "Rho0Value":
        return cls("exact", exact=Fraction(v))

    @classmethod
    def of_interval(cls, lo, hi) -> "Rho0Value":
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise SignatureError("empty interval")
        return cls("interval", interval=(lo, hi))

    @classmethod
    def of_symbol(cls, name: str) -> "Rho0Value":
        return cls("symbol", symbol=name)

    def negate(self) -> "Rho0Value":
        if self.kind == "exact":
            return Rho0Value.of_exact(-self.exact)
        if self.kind == "interval":
            return Rho0Value.of_interval(-self.interval[1], -self.interval[0])
        raise SignatureError("cannot negate a symbol numerically")

    def is_numeric(self) -> bool:
        return self.kind in ("exact", "interval")

    def __str__(self):
        if self.kind == "exact":
            return str(self.exact)
        if self.kind == "interval":
            return f"[{self.interval[0]}, {self.interval[1]}]"
        return self.symbol

    def to_json(self):
        if self.kind == "exact":
            return {"exact": str(self.exact)}
        if self.kind == "interval":
            return {"interval": [str(self.interval[0]), str(self.interval[1])]}
        return {"symbol": self.symbol}


def rho0(V: SeifertMatrix, budget: Fraction | None = None,
         angle_bound: int = DEFAULT_ANGLE_DENOMINATOR_BOUND) -> Rho0Value:
    """Integral of the Levine-Tristram signature over the circle of length 1.

    Equal to sum_j jump_j * (1 - 2 theta_j) over the jumps in (0, 1/2).
    Exact when all jump angles are rational; otherwise a certified interval
    of width at most `budget` (default from RHOSLICE_PRECISION or 1/10^6).
    """
    sf = signature_function(V, angle_bound)
    return rho0_from_signature(sf, budget)


def rho0_from_signature(sf: SignatureFunction,
                        budget: Fraction | None = None) -> Rho0Value:
    if all(r.angle is not None for r in sf.roots):
        total = sum((Fraction(r.jump) * (1 - 2 * r.angle) for r in sf.roots),
                    Fraction(0))
        return Rho0Value.of_exact(total)
    budget = budget if budget is not None else precision_budget()
    roots = list(sf.roots)
    iters = 30
    for _ in range(60):
        lo_sum, hi_sum = Fraction(0), Fraction(0)
        for r in roots:
            if r.angle is not None:
                c = Fraction(r.jump) * (1 - 2 * r.angle)
                lo_sum += c
                hi_sum += c
                continue
            th_lo, th_hi = _theta_enclosure(r.x_interval[0], r.x_interval[1],
                                            iters)
            c_lo = r.jump * (1 - 2 * (th_hi if r.jump > 0 else th_lo))
            c_hi = r.jump * (1 - 2 * (th_lo if r.jump > 0 else th_hi))
            lo_sum += c_lo
            hi_sum += c_hi
        if hi_sum - lo_sum <= budget:
            return Rho0Value.of_interval(lo_sum, hi_sum)
        roots = [CircleRoot(r.angle,
                            refine_interval(list(r.factor), r.x_interval,
                                            (r.x_interval[1] - r.x_interval[0]) / 4
                                            if r.x_interval[1] > r.x_interval[0]
                                            else Fraction(1)),
                            r.factor, r.jump)
                 for r in roots]
        iters += 10
    raise SignatureError(
        f"cannot certify the signature integral to width {budget}")
