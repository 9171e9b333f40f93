"""Exact arithmetic carriers: polynomials in t with rational exponents,
integer polynomials in q, truncated exponential generating series, and a
small cyclotomic helper used by the trace computations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

DEFAULT_NMAX = 10


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def fmt_fraction(x: Fraction) -> str:
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# FracPoly


@dataclass(frozen=True)
class FracPoly:
    """Finite sum of c * t^e with rational e >= 0 and rational c.

    Stored as a sorted tuple of (exponent, coefficient) with no zero
    coefficients, so equality and hashing are structural."""

    terms: tuple = ()

    @staticmethod
    def from_dict(d: Mapping) -> "FracPoly":
        items = []
        for e, c in d.items():
            e, c = as_fraction(e), as_fraction(c)
            if e < 0:
                raise ValueError("negative exponent")
            if c != 0:
                items.append((e, c))
        items.sort()
        return FracPoly(tuple(items))

    @staticmethod
    def monomial(exp=0, coeff=1) -> "FracPoly":
        return FracPoly.from_dict({exp: coeff})

    @staticmethod
    def from_coeffs(coeffs: Iterable, step=1, shift=0) -> "FracPoly":
        """coeffs[k] becomes the coefficient of t^(shift + k*step)."""
        step, shift = as_fraction(step), as_fraction(shift)
        return FracPoly.from_dict({shift + k * step: c for k, c in enumerate(coeffs) if c})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other):
        other = _lift(other)
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return FracPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return FracPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        return fracpoly_mul(self, _lift(other))

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def shift(self, exp) -> "FracPoly":
        exp = as_fraction(exp)
        return FracPoly.from_dict({e + exp: c for e, c in self.terms})

    def scale_exponents(self, k) -> "FracPoly":
        """Substitute t -> t^k."""
        k = as_fraction(k)
        return FracPoly.from_dict({e * k: c for e, c in self.terms})

    def at_one(self) -> Fraction:
        return sum((c for _, c in self.terms), Fraction(0))

    def coeff(self, exp) -> Fraction:
        return self.as_dict().get(as_fraction(exp), Fraction(0))

    def exponents(self):
        return [e for e, _ in self.terms]

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for _, c in self.terms)

    def serialize(self) -> list:
        return [[e.numerator, e.denominator, c.numerator, c.denominator] for e, c in self.terms]

    @staticmethod
    def deserialize(rows) -> "FracPoly":
        return FracPoly.from_dict({Fraction(a, b): Fraction(c, d) for a, b, c, d in rows})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "t"
            elif e.denominator == 1:
                mono = f"t^{e.numerator}"
            else:
                mono = f"t^{{{e.numerator}/{e.denominator}}}"
            if mono == "":
                body = fmt_fraction(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = fmt_fraction(c) + mono
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    __repr__ = __str__


def _lift(x) -> FracPoly:
    if isinstance(x, FracPoly):
        return x
    return FracPoly.monomial(0, x)


ZERO = FracPoly()
ONE = FracPoly.monomial(0, 1)


def fracpoly_mul(a: FracPoly, b: FracPoly) -> FracPoly:
    d: dict = {}
    for e1, c1 in a.terms:
        for e2, c2 in b.terms:
            d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
    return FracPoly.from_dict(d)


def fracpoly_diff(a: FracPoly, b: FracPoly) -> dict:
    """Exponent -> (computed, expected) for every exponent where they differ."""
    da, db = a.as_dict(), b.as_dict()
    out = {}
    for e in sorted(set(da) | set(db)):
        x, y = da.get(e, Fraction(0)), db.get(e, Fraction(0))
        if x != y:
            out[e] = (x, y)
    return out


# ---------------------------------------------------------------------------
# QPolynomial


@dataclass(frozen=True)
class QPolynomial:
    """Integer (or rational, transiently) polynomial in q; coeffs[k] is the q^k coefficient."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @staticmethod
    def const(c) -> "QPolynomial":
        return QPolynomial((c,))

    @staticmethod
    def q() -> "QPolynomial":
        return QPolynomial((0, 1))

    def __add__(self, other):
        other = _qlift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return QPolynomial(tuple(a))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_qlift(other))

    def __rsub__(self, other):
        return _qlift(other) - self

    def __mul__(self, other):
        other = _qlift(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, m: int) -> "QPolynomial":
        """Substitute q -> q^m."""
        if m == 1:
            return self
        out = [0] * (m * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return QPolynomial(tuple(out))

    def divmod(self, other: "QPolynomial"):
        num = [Fraction(c) for c in self.coeffs]
        den = other.coeffs
        if not den:
            raise ZeroDivisionError
        if len(num) < len(den):
            return QPolynomial(()), self
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            coef = num[k + len(den) - 1] / den[-1]
            quot[k] = coef
            for j, d in enumerate(den):
                num[k + j] -= coef * d
        return QPolynomial(tuple(_intify(quot))), QPolynomial(tuple(_intify(num)))

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        quot, rem = self.divmod(other)
        if rem.coeffs:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quot

    def __str__(self):
        return " + ".join(f"{c}q^{i}" for i, c in enumerate(self.coeffs) if c) or "0"


def _intify(xs):
    return [int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in xs]


def _qlift(x) -> QPolynomial:
    return x if isinstance(x, QPolynomial) else QPolynomial.const(x)


def interpolate(points) -> QPolynomial:
    """Lagrange interpolation through (x, y) pairs; result must be integral."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    total = [Fraction(0)] * len(pts)
    for i, (xi, yi) in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            total[k] += yi * b / denom
    if any(c.denominator != 1 for c in total):
        raise ArithmeticError("interpolated polynomial is not integral")
    return QPolynomial(tuple(int(c) for c in total))


# ---------------------------------------------------------------------------
# TruncatedEGF


@dataclass(frozen=True)
class TruncatedEGF:
    """sum_n coeffs[n] s^n / n!, known up to order_bound inclusive."""

    order_bound: int
    coeffs: tuple = field(default=())

    def __post_init__(self):
        c = [_lift(x) for x in self.coeffs][: self.order_bound + 1]
        c += [ZERO] * (self.order_bound + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @staticmethod
    def constant(value, order_bound=DEFAULT_NMAX) -> "TruncatedEGF":
        return TruncatedEGF(order_bound, (_lift(value),))

    @staticmethod
    def from_values(values, order_bound=DEFAULT_NMAX) -> "TruncatedEGF":
        return TruncatedEGF(order_bound, tuple(values))

    def __getitem__(self, n):
        return self.coeffs[n]

    def values(self):
        """Ungraded coefficients (each FracPoly evaluated at t = 1)."""
        return [c.at_one() for c in self.coeffs]

    def __add__(self, other):
        other = self._match(other)
        return TruncatedEGF(self.order_bound, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedEGF(self.order_bound, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._match(other))

    def __rsub__(self, other):
        return self._match(other) - self

    def __mul__(self, other):
        if isinstance(other, TruncatedEGF):
            return egf_mul(self, other)
        return TruncatedEGF(self.order_bound, tuple(a * _lift(other) for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncatedEGF.constant(1, self.order_bound)
        for _ in range(k):
            out = egf_mul(out, self)
        return out

    def _match(self, other) -> "TruncatedEGF":
        if isinstance(other, TruncatedEGF):
            if other.order_bound != self.order_bound:
                raise ValueError("order_bound mismatch")
            return other
        return TruncatedEGF.constant(other, self.order_bound)

    def truncate(self, order_bound: int) -> "TruncatedEGF":
        return TruncatedEGF(order_bound, self.coeffs[: order_bound + 1])

    def serialize(self) -> list:
        return [c.serialize() for c in self.coeffs]


def egf_mul(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    if a.order_bound != b.order_bound:
        raise ValueError(f"order_bound mismatch: {a.order_bound} vs {b.order_bound}")
    n_max = a.order_bound
    out = []
    for n in range(n_max + 1):
        acc = ZERO
        for k in range(n + 1):
            if a.coeffs[k] and b.coeffs[n - k]:
                acc = acc + fracpoly_mul(a.coeffs[k], b.coeffs[n - k]) * comb(n, k)
        out.append(acc)
    return TruncatedEGF(n_max, tuple(out))


def egf_derivative(a: TruncatedEGF) -> TruncatedEGF:
    return TruncatedEGF(a.order_bound - 1, a.coeffs[1:])


def egf_divided_power(a: TruncatedEGF, k: int) -> TruncatedEGF:
    """a^k / k!"""
    return a ** k * Fraction(1, factorial(k))


# ---------------------------------------------------------------------------
# Q[x]/Phi_N: exact sums of N-th roots of unity


def _poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    while len(num) >= len(den) and len(num) > 0:
        if num[-1] == 0:
            num.pop()
            continue
        coef = num[-1] / den[-1]
        shift = len(num) - len(den)
        for j, d in enumerate(den):
            num[shift + j] -= coef * d
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


_CYCLO_CACHE: dict = {}


def cyclotomic_polynomial(n: int) -> list:
    """Coefficient list (low degree first) of the n-th cyclotomic polynomial."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q = cyclotomic_polynomial(d)
            quot = [Fraction(0)] * (len(poly) - len(q) + 1)
            rem = list(poly)
            for k in range(len(quot) - 1, -1, -1):
                c = rem[k + len(q) - 1] / q[-1]
                quot[k] = c
                for j, qc in enumerate(q):
                    rem[k + j] -= c * qc
            poly = quot
    _CYCLO_CACHE[n] = [Fraction(c) for c in poly]
    return _CYCLO_CACHE[n]


@dataclass(frozen=True)
class CyclotomicElement:
    """Element of Q(zeta_N) written in the group-ring basis zeta^0..zeta^(N-1)."""

    N: int
    coeffs: tuple

    @staticmethod
    def zeta_power(N: int, k: int, coeff=1) -> "CyclotomicElement":
        c = [Fraction(0)] * N
        c[k % N] = Fraction(coeff)
        return CyclotomicElement(N, tuple(c))

    @staticmethod
    def zero(N: int) -> "CyclotomicElement":
        return CyclotomicElement(N, tuple([Fraction(0)] * N))

    def __add__(self, other):
        return CyclotomicElement(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, CyclotomicElement):
            return CyclotomicElement(self.N, tuple(a * other for a in self.coeffs))
        out = [Fraction(0)] * self.N
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % self.N] += a * b
        return CyclotomicElement(self.N, tuple(out))

    __rmul__ = __mul__

    def reduced(self) -> list:
        return _poly_divmod(list(self.coeffs), cyclotomic_polynomial(self.N))

    def rational_value(self) -> Fraction:
        r = self.reduced()
        if len(r) > 1:
            raise ArithmeticError("element is not rational")
        return r[0] if r else Fraction(0)
