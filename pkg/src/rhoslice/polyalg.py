"""Exact arithmetic in the Laurent polynomial ring Q[t^{±1}].

A Laurent polynomial is stored as a map from integer exponents to nonzero
rational coefficients (`fractions.Fraction`); the empty map is zero.  The
unit group of the ring is {q*t^k : q in Q, q != 0}, and "equal up to units"
always means equality modulo exactly that set.  The canonical representative
of a nonzero polynomial is monic with lowest exponent 0.

The quotient Q(t)/Q[t^{±1}] is represented by `FracCoset`: a reduced
fraction num/den with deg(num) < deg(den), den an integer-primitive
ordinary polynomial with positive leading coefficient.  Canonical
representatives are unique, so coset equality is plain `==`.

Factorization into irreducibles over Q is supported up to degree 8
(square-free split, rational roots, binomial criterion, Kronecker
interpolation); binomials a*t^n - b are decided at any degree.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


class PolyalgError(ValueError):
    """Domain errors: zero denominators, variable mismatch, factor degree cap."""


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class LaurentPoly:
    """An element of Q[v^{±1}] for a variable tag v (usually 's' or 't')."""

    __slots__ = ("coeffs", "variable", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None, variable: str = "t"):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = as_fraction(c)
                if c != 0:
                    clean[int(exp)] = c
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variable: str = "t") -> "LaurentPoly":
        return cls({}, variable)

    @classmethod
    def one(cls, variable: str = "t") -> "LaurentPoly":
        return cls({0: 1}, variable)

    @classmethod
    def constant(cls, value, variable: str = "t") -> "LaurentPoly":
        return cls({0: as_fraction(value)}, variable)

    @classmethod
    def monomial(cls, exp: int, coeff=1, variable: str = "t") -> "LaurentPoly":
        return cls({exp: as_fraction(coeff)}, variable)

    @classmethod
    def var(cls, variable: str = "t") -> "LaurentPoly":
        return cls({1: 1}, variable)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, variable: str = "t") -> "LaurentPoly":
        """Build from a dense list [a0, a1, ...] of coefficients of v^0, v^1, ..."""
        return cls({i: as_fraction(c) for i, c in enumerate(coeffs)}, variable)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_one(self) -> bool:
        return self.coeffs == {0: Fraction(1)}

    @property
    def degree(self) -> int:
        """Highest exponent; raises on zero."""
        if not self.coeffs:
            raise PolyalgError("zero polynomial has no degree")
        return max(self.coeffs)

    @property
    def low(self) -> int:
        if not self.coeffs:
            raise PolyalgError("zero polynomial has no lowest exponent")
        return min(self.coeffs)

    @property
    def span(self) -> int:
        """degree - low; the degree of the exponent-0 normalization."""
        return self.degree - self.low

    def leading(self) -> Fraction:
        return self.coeffs[self.degree]

    def __getitem__(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self.coeffs.items())

    # -- ring operations ---------------------------------------------------

    def _check_var(self, other: "LaurentPoly") -> None:
        if self.variable != other.variable:
            raise PolyalgError(
                f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_var(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out, self.variable)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, self.variable)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            if q == 0:
                return LaurentPoly.zero(self.variable)
            return LaurentPoly({e: c * q for e, c in self.coeffs.items()}, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_var(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out, self.variable)

    __rmul__ = __mul__

    def inverse_unit(self) -> "LaurentPoly":
        if not self.is_unit():
            raise PolyalgError("not a unit of the Laurent ring")
        ((e, c),) = self.coeffs.items()
        return LaurentPoly({-e: Fraction(1) / c}, self.variable)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse_unit() ** (-n)
        result = LaurentPoly.one(self.variable)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()}, self.variable)

    def subs_power(self, c: int, variable: str | None = None) -> "LaurentPoly":
        """Substitute v -> w^c (the base-change map on coefficients)."""
        if c <= 0:
            raise PolyalgError("substitution exponent must be positive")
        return LaurentPoly({e * c: q for e, q in self.coeffs.items()},
                           variable or self.variable)

    def conj(self) -> "LaurentPoly":
        """Substitute v -> v^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()}, self.variable)

    def rename(self, variable: str) -> "LaurentPoly":
        return LaurentPoly(self.coeffs, variable)

    def evaluate(self, x) -> Fraction:
        x = as_fraction(x)
        if x == 0:
            if self.coeffs and self.low < 0:
                raise PolyalgError("cannot evaluate negative exponents at 0")
            return self[0]
        return sum((c * x ** e for e, c in self.coeffs.items()), Fraction(0))

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: c * e for e, c in self.coeffs.items() if e != 0},
                           self.variable)

    # -- normalization -----------------------------------------------------

    def unit_normal(self) -> tuple["LaurentPoly", Fraction, int]:
        """Split self = q * v^k * m with m monic of lowest exponent 0.

        Returns (m, q, k); for zero returns (0, 1, 0).
        """
        if not self.coeffs:
            return self, Fraction(1), 0
        k = self.low
        q = self.coeffs[self.degree]
        m = LaurentPoly({e - k: c / q for e, c in self.coeffs.items()}, self.variable)
        return m, q, k

    def monic(self) -> "LaurentPoly":
        return self.unit_normal()[0]

    def poly_coeffs(self) -> list[Fraction]:
        """Dense coefficient list a0..adeg; requires lowest exponent >= 0."""
        if not self.coeffs:
            return []
        if self.low < 0:
            raise PolyalgError("not an ordinary polynomial")
        out = [Fraction(0)] * (self.degree + 1)
        for e, c in self.coeffs.items():
            out[e] = c
        return out

    # -- comparison / hashing / rendering ----------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variable == other.variable and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.variable, tuple(sorted(self.coeffs.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        v = self.variable
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            if e == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sgn = "-" if c < 0 else ""
                pw = v if e == 1 else f"{v}^{e}"
                term = f"{sgn}{mag}{pw}"
            if parts:
                parts.append(f"- {term[1:]}" if term.startswith("-") else f"+ {term}")
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "variable": self.variable,
            "coefficients": {str(e): str(c) for e, c in self.items()},
        }

    @classmethod
    def from_json(cls, data, variable: str = "t") -> "LaurentPoly":
        if isinstance(data, (str, int)):
            return cls.constant(Fraction(data), variable)
        if not isinstance(data, dict):
            raise PolyalgError(f"cannot parse polynomial from {data!r}")
        coeffs = {int(e): Fraction(c) for e, c in data.get("coefficients", {}).items()}
        return cls(coeffs, data.get("variable", variable))


def equal_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> bool:
    """Equality modulo the unit group {q*v^k}."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a.monic() == b.monic()


# ---------------------------------------------------------------------------
# Euclidean arithmetic
# ---------------------------------------------------------------------------


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder for ordinary polynomials (lowest exponents >= 0)."""
    if b.is_zero():
        raise PolyalgError("division by zero polynomial")
    a._check_var(b)
    if (not a.is_zero() and a.low < 0) or b.low < 0:
        raise PolyalgError("divmod requires ordinary polynomials")
    var = a.variable
    rem = dict(a.coeffs)
    quo: dict[int, Fraction] = {}
    db = b.degree
    lb = b.leading()
    while rem and max(rem) >= db:
        e = max(rem)
        q = rem[e] / lb
        quo[e - db] = q
        for eb, cb in b.coeffs.items():
            k = e - db + eb
            val = rem.get(k, Fraction(0)) - q * cb
            if val:
                rem[k] = val
            else:
                rem.pop(k, None)
    return LaurentPoly(quo, var), LaurentPoly(rem, var)


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division in the Laurent ring; raises if b does not divide a."""
    if b.is_zero():
        raise PolyalgError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.variable)
    a._check_var(b)
    am, aq, ak = a.unit_normal()
    bm, bq, bk = b.unit_normal()
    q, r = poly_divmod(am, bm)
    if not r.is_zero():
        raise PolyalgError(f"({a}) is not divisible by ({b})")
    return q.shift(ak - bk) * (aq / bq)


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    """True iff b | a in Q[v^{±1}]."""
    if b.is_zero():
        return a.is_zero()
    if a.is_zero():
        return True
    return poly_divmod(a.monic(), b.monic())[1].is_zero()


def gcd_laurent(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic-normalized generator of the ideal (a, b); 1 when coprime."""
    a._check_var(b)
    x, y = a.monic(), b.monic()
    while not y.is_zero():
        x, y = y, poly_divmod(x, y)[1]
    return x.monic()


def _poly_xgcd(a: LaurentPoly, b: LaurentPoly):
    """Extended Euclid on ordinary polynomials; witnesses are ordinary.

    Returns (g, u, v) with u*a + v*b = g and g monic (or zero).
    """
    var = a.variable
    zero, one = LaurentPoly.zero(var), LaurentPoly.one(var)
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return zero, zero, zero
    lead = r0.leading()
    return r0 * (Fraction(1) / lead), u0 * (Fraction(1) / lead), v0 * (Fraction(1) / lead)


def xgcd_laurent(a: LaurentPoly, b: LaurentPoly):
    """Extended Euclid in the Laurent ring.

    Returns (g, u, v) with u*a + v*b = g and g the monic exp-0 gcd; u, v are
    Laurent polynomials.
    """
    a._check_var(b)
    var = a.variable
    zero = LaurentPoly.zero(var)
    if a.is_zero() and b.is_zero():
        return zero, zero, zero
    if a.is_zero():
        bm, bq, bk = b.unit_normal()
        return bm, zero, LaurentPoly.monomial(-bk, Fraction(1) / bq, var)
    if b.is_zero():
        am, aq, ak = a.unit_normal()
        return am, LaurentPoly.monomial(-ak, Fraction(1) / aq, var), zero
    am, aq, ak = a.unit_normal()
    bm, bq, bk = b.unit_normal()
    g, u0, v0 = _poly_xgcd(am, bm)
    u = u0 * LaurentPoly.monomial(-ak, Fraction(1) / aq, var)
    v = v0 * LaurentPoly.monomial(-bk, Fraction(1) / bq, var)
    return g, u, v


def reduce_mod(a: LaurentPoly, m: LaurentPoly) -> LaurentPoly:
    """Reduce a modulo m into the window 0 <= exponents, deg < deg(m).

    Negative exponents are cleared via the inverse of v modulo m, which
    exists whenever m has a nonzero constant term.
    """
    mm = m.monic()
    if mm.is_zero():
        return a
    if mm.is_one():
        return LaurentPoly.zero(a.variable)
    if a.is_zero():
        return a
    var = a.variable
    if a.low < 0:
        if mm[0] == 0:
            raise PolyalgError("v is not invertible modulo a multiple of v")
        g, u, _ = _poly_xgcd(LaurentPoly.var(var), mm)
        if not g.is_one():
            raise PolyalgError("v is not invertible modulo m")
        tinv = poly_divmod(u, mm)[1]
        k = -a.low
        a = poly_divmod(a.shift(k), mm)[1]
        for _ in range(k):
            a = poly_divmod(a * tinv, mm)[1]
        return a
    return poly_divmod(a, mm)[1]


def inverse_mod(f: LaurentPoly, m: LaurentPoly) -> LaurentPoly:
    """Inverse of f modulo m; raises if gcd(f, m) != 1."""
    mm = m.monic()
    fr = reduce_mod(f, mm)
    g, u, _ = _poly_xgcd(fr, mm)
    if not g.is_one():
        raise PolyalgError(f"({f}) is not invertible modulo ({m})")
    return poly_divmod(u, mm)[1]


# ---------------------------------------------------------------------------
# Factorization over Q
# ---------------------------------------------------------------------------

FACTOR_DEGREE_CAP = 8
_KRONECKER_COMBO_CAP = 500_000


def _int_content_primitive(p: LaurentPoly) -> list[int]:
    """Integer-primitive dense coefficients of the exp-0 normalization,
    with positive leading coefficient."""
    coeffs = p.shift(-p.low).poly_coeffs()
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*(abs(c) for c in ints))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _rational_root_candidates(ints: list[int]) -> Iterator[Fraction]:
    """All ±p/q with p | constant term, q | leading coefficient."""
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if math.gcd(p, q) == 1:
                yield Fraction(p, q)
                yield Fraction(-p, q)


def _int_poly_eval(ints: list[int], x: int) -> int:
    acc = 0
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _nth_root_exact(n: int, r: int) -> int | None:
    """Integer r-th root of n >= 0 if exact, else None."""
    if n < 0:
        return None
    if n == 0:
        return 0
    root = round(n ** (1.0 / r))
    for cand in (root - 1, root, root + 1):
        if cand >= 0 and cand ** r == n:
            return cand
    return None


def _rational_power_root(q: Fraction, r: int) -> Fraction | None:
    """w with w^r = q, if one exists in Q."""
    if q < 0:
        if r % 2 == 0:
            return None
        w = _rational_power_root(-q, r)
        return -w if w is not None else None
    num = _nth_root_exact(q.numerator, r)
    den = _nth_root_exact(q.denominator, r)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _binomial_split(p: LaurentPoly) -> list[LaurentPoly] | None:
    """Decide a two-term polynomial a*v^n + b (n >= 2).

    Returns a nontrivial factorization [f, g] if reducible, [] if
    irreducible, None if p is not of this shape.  This is the classical
    binomial irreducibility criterion: v^n - q is irreducible over Q unless
    q is an r-th power for a prime r | n, or 4 | n and q = -4 w^4.
    """
    c = p.shift(-p.low)
    items = c.items()
    if len(items) != 2 or items[0][0] != 0:
        return None
    n = c.degree
    if n < 2:
        return None
    var = p.variable
    q = -c[0] / c[n]  # c = lc * (v^n - q)
    for r in sorted(_prime_factors(n)):
        w = _rational_power_root(q, r)
        if w is not None:
            m = n // r
            # v^n - w^r = (v^m - w) * sum_{k<r} w^k v^{m(r-1-k)}
            first = LaurentPoly({m: 1, 0: -w}, var)
            second = LaurentPoly({m * (r - 1 - k): w ** k for k in range(r)}, var)
            return [first, second]
    if n % 4 == 0:
        w4 = _rational_power_root(-q / 4, 4)
        if w4 is not None:
            m = n // 4
            # v^n + 4w^4 = (v^{2m} + 2w v^m + 2w^2)(v^{2m} - 2w v^m + 2w^2)
            f1 = LaurentPoly({2 * m: 1, m: 2 * w4, 0: 2 * w4 ** 2}, var)
            f2 = LaurentPoly({2 * m: 1, m: -2 * w4, 0: 2 * w4 ** 2}, var)
            return [f1, f2]
    return []


def _dense_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _lagrange_int(xs: list[int], ys: list[int], deg: int) -> list[int] | None:
    """Integer dense coefficients of the interpolating polynomial, or None."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        num = [Fraction(1)]
        den = Fraction(1)
        for j in range(n):
            if i == j:
                continue
            num = _dense_mul(num, [Fraction(-xs[j]), Fraction(1)])
            den *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / den
        for k in range(len(num)):
            coeffs[k] += num[k] * scale
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        return None
    out = [int(c) for c in coeffs]
    if len(out) - 1 != deg or out[-1] == 0:
        return None
    return out


def _kronecker_factor(ints: list[int]) -> list[int] | None:
    """Nontrivial integer factor of a primitive, root-free integer polynomial
    by Kronecker interpolation, or None if irreducible."""
    deg = len(ints) - 1
    pool = sorted(range(-8, 9),
                  key=lambda x: (len(_divisors(_int_poly_eval(ints, x))), abs(x)))
    for d in range(2, deg // 2 + 1):
        points = pool[: d + 1]
        values = [_int_poly_eval(ints, x) for x in points]
        choice_sets: list[list[int]] = [_divisors(values[0])]
        total = len(choice_sets[0])
        for v in values[1:]:
            dv = _divisors(v)
            choice_sets.append([s * w for w in dv for s in (1, -1)])
            total *= 2 * len(dv)
        if total > _KRONECKER_COMBO_CAP:
            raise PolyalgError(
                "factorization cap: Kronecker search space too large for "
                f"degree-{deg} input")
        for combo in itertools.product(*choice_sets):
            cand = _lagrange_int(points, list(combo), d)
            if cand is None:
                continue
            candpoly = LaurentPoly.from_coeffs(cand)
            target = LaurentPoly.from_coeffs(ints)
            if poly_divmod(target, candpoly)[1].is_zero():
                return cand
    return None


def _squarefree_parts(p: LaurentPoly) -> list[tuple[LaurentPoly, int]]:
    """Square-free decomposition p = prod f_i^i of a monic exp-0 polynomial.

    Returns [(f_i, i)] for the nonconstant f_i.
    """
    out = []
    g = gcd_laurent(p, p.derivative())
    w = div_exact(p, g).monic()  # radical of p
    i = 1
    while w.span > 0:
        y = gcd_laurent(w, g)
        piece = div_exact(w, y).monic()
        if piece.span > 0:
            out.append((piece, i))
        w = y
        g = div_exact(g, y).monic() if not g.is_zero() else g
        i += 1
    return out


CYCLOTOMIC_SEARCH_BOUND = 120


def _euler_phi(n: int) -> int:
    out = n
    for p in _prime_factors(n):
        out = out // p * (p - 1)
    return out


def _cyclotomic_divisor(f: LaurentPoly) -> LaurentPoly | None:
    """A cyclotomic factor of f with index up to the search bound, if any.

    Cyclotomics are the factors that arise from base-changing cyclotomic
    annihilators, so this keeps such inputs factorable above the Kronecker
    degree cap.
    """
    span = f.span
    mono = f.monic()
    for n in range(3, CYCLOTOMIC_SEARCH_BOUND + 1):
        if _euler_phi(n) > span:
            continue
        cand = cyclotomic(n, f.variable)
        if cand.span <= span and poly_divmod(mono, cand)[1].is_zero():
            return cand
    return None


def _factor_squarefree(p: LaurentPoly) -> list[LaurentPoly]:
    """Irreducible monic factors of a monic square-free exp-0 polynomial."""
    var = p.variable
    factors: list[LaurentPoly] = []
    work = [p]
    while work:
        f = work.pop()
        if f.span == 0:
            continue
        if f.span == 1:
            factors.append(f.monic())
            continue
        ints = _int_content_primitive(f)
        root = next((r for r in _rational_root_candidates(ints)
                     if f.evaluate(r) == 0), None)
        if root is not None:
            lin = LaurentPoly({1: 1, 0: -root}, var)
            work.append(lin)
            work.append(div_exact(f, lin).monic())
            continue
        if f.span <= 3:
            # no rational root: degrees 2 and 3 are irreducible
            factors.append(f.monic())
            continue
        split = _binomial_split(f)
        if split is not None:
            if split:
                work.extend(x.monic() for x in split)
            else:
                factors.append(f.monic())
            continue
        if f.span > FACTOR_DEGREE_CAP:
            cyc = _cyclotomic_divisor(f)
            if cyc is not None:
                factors.append(cyc)
                work.append(div_exact(f, cyc).monic())
                continue
            raise PolyalgError(
                f"factorization cap: degree {f.span} exceeds {FACTOR_DEGREE_CAP} "
                "and the polynomial is neither a binomial nor divisible by a "
                "small cyclotomic")
        g = _kronecker_factor(_int_content_primitive(f))
        if g is None:
            factors.append(f.monic())
        else:
            gp = LaurentPoly.from_coeffs(g, var).monic()
            work.append(gp)
            work.append(div_exact(f, gp).monic())
    return factors


def _poly_sort_key(p: LaurentPoly):
    return (p.span, tuple(p.shift(-p.low).poly_coeffs()))


def factor_laurent(p: LaurentPoly) -> list[tuple[LaurentPoly, int]]:
    """Factor into monic irreducibles over Q, up to a unit.

    Returns [(irreducible, multiplicity), ...] sorted by (degree,
    coefficient tuple); the product of the factors equals p up to a unit
    q*v^k.  Units factor as [].
    """
    if p.is_zero():
        raise PolyalgError("cannot factor the zero polynomial")
    m = p.monic()
    counts: dict[LaurentPoly, int] = {}
    for sqfree, mult in _squarefree_parts(m):
        for f in _factor_squarefree(sqfree):
            counts[f] = counts.get(f, 0) + mult
    return sorted(counts.items(), key=lambda kv: _poly_sort_key(kv[0]))


def is_irreducible(p: LaurentPoly) -> bool:
    if p.is_zero() or p.is_unit():
        return False
    fac = factor_laurent(p)
    return len(fac) == 1 and fac[0][1] == 1


@lru_cache(maxsize=None)
def _cyclotomic_int(n: int) -> tuple[int, ...]:
    """Dense integer coefficients of the n-th cyclotomic polynomial,
    computed by exact synthetic division of v^n - 1 (cyclotomics are monic,
    so the quotients stay integral)."""
    rem = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        div = _cyclotomic_int(d)
        dd = len(div) - 1
        quo = [0] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            quo[top - dd] = c
            for i, dc in enumerate(div):
                rem[top - dd + i] -= c * dc
        rem = quo
    return tuple(rem)


def cyclotomic(n: int, variable: str = "t") -> LaurentPoly:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise PolyalgError("cyclotomic index must be positive")
    return LaurentPoly.from_coeffs(_cyclotomic_int(n), variable)


# ---------------------------------------------------------------------------
# Cosets in Q(t)/Q[t^{±1}]
# ---------------------------------------------------------------------------


def _den_canonical(d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Normalize a denominator to integer-primitive, exp-0, positive leading
    coefficient.  Returns (canonical_d, unit) with d = unit * canonical_d."""
    ints = _int_content_primitive(d)
    canon = LaurentPoly.from_coeffs(ints, d.variable)
    unit = div_exact(d, canon)
    return canon, unit


def _coset_canonicalize(n: LaurentPoly, d: LaurentPoly):
    var = n.variable
    zero = LaurentPoly.zero(var), LaurentPoly.one(var)
    if n.is_zero():
        return zero
    g = gcd_laurent(n, d)
    if g.span > 0:
        n, d = div_exact(n, g), div_exact(d, g)
    d, unit = _den_canonical(d)
    n = div_exact(n, unit)
    if d.span == 0:
        return zero
    n = reduce_mod(n, d)
    if n.is_zero():
        return zero
    # reduction cannot introduce a common factor when gcd was already 1,
    # but guard against a non-reduced constructor call
    g = gcd_laurent(n, d)
    if g.span > 0:
        n, d = div_exact(n, g), div_exact(d, g)
        d, unit = _den_canonical(d)
        n = reduce_mod(div_exact(n, unit), d)
        if n.is_zero():
            return zero
    return n, d


class FracCoset:
    """Canonical representative of an element of Q(v)/Q[v^{±1}]."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, *, _canonical=False):
        if den.is_zero():
            raise PolyalgError("zero denominator")
        num._check_var(den)
        if not _canonical:
            num, den = _coset_canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("FracCoset is immutable")

    @classmethod
    def zero(cls, variable: str = "t") -> "FracCoset":
        return cls(LaurentPoly.zero(variable), LaurentPoly.one(variable),
                   _canonical=True)

    @property
    def variable(self) -> str:
        return self.den.variable

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def scale(self, f) -> "FracCoset":
        """Multiply by a ring element (cosets form a Q[v^{±1}]-module)."""
        if isinstance(f, (int, Fraction)):
            f = LaurentPoly.constant(f, self.variable)
        return FracCoset(self.num * f, self.den)

    def __add__(self, other):
        if not isinstance(other, FracCoset):
            return NotImplemented
        return FracCoset(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    def __neg__(self):
        return FracCoset(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def conj(self) -> "FracCoset":
        """Apply v -> v^{-1}."""
        return FracCoset(self.num.conj(), self.den.conj())

    def subs_power(self, c: int, variable: str | None = None) -> "FracCoset":
        """The map induced by v -> w^c on the quotient."""
        return FracCoset(self.num.subs_power(c, variable),
                         self.den.subs_power(c, variable))

    def __eq__(self, other):
        if not isinstance(other, FracCoset):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_zero():
            return "0"
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"FracCoset('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "FracCoset":
        return cls(LaurentPoly.from_json(data["num"]),
                   LaurentPoly.from_json(data["den"]))


def coset_reduce(n: LaurentPoly, d: LaurentPoly) -> FracCoset:
    """Canonical representative of n/d in Q(v)/Q[v^{±1}]."""
    return FracCoset(n, d)
