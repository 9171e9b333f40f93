"""Correction generating series, closed-form evaluation and comparisons.

Series are exponential in s: c_n is the total cohomology of all twisted
sectors of the n-pointed space (graded: as a polynomial in t with each
sector shifted by its age).  Closed forms are polynomials in the input
series P0, P0' and P1' with rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .admissible import enumerate_sectors
from .ages import point_weight
from .algebra import ONE, ZERO, FracPoly, TruncatedEGF, fmt_fraction
from .catalog import enumerate_boundary, full_catalog, rt_entries, sector_cohomology, sector_weights, tail_poly
from .genus0 import compact_betti_by_recursion
from .genus1 import genus1_betti

SPACES = ("smooth", "rt", "stable")
SYMBOLS = ("P0", "P0'", "P1'")
EXPLICIT_RT_MAX = 6
CASES = ("rt", "1", "2", "3", "4")


# ---------------------------------------------------------------------------
# Input series


def _q0(n: int, graded: bool) -> FracPoly:
    """Cohomology of the compactified (n+1)-pointed genus-0 space, with
    Q0(0) = 0 and Q0(1) = 1."""
    if n == 0:
        return ZERO
    return FracPoly.from_coeffs(compact_betti_by_recursion(n + 1)) if graded else FracPoly.from_coeffs(
        [sum(compact_betti_by_recursion(n + 1))])


def p0_series(order_bound: int, graded: bool = False) -> TruncatedEGF:
    return TruncatedEGF(order_bound, tuple(_q0(n, graded) for n in range(order_bound + 1)))


def p0_prime_series(order_bound: int, graded: bool = False) -> TruncatedEGF:
    return TruncatedEGF(order_bound, tuple(_q0(n + 1, graded) for n in range(order_bound + 1)))


def p1_prime_series(order_bound: int, graded: bool = False) -> TruncatedEGF:
    """From the shipped genus-1 Betti table; never recomputed here."""
    vals = []
    for n in range(order_bound + 1):
        betti = genus1_betti(n + 1)
        vals.append(FracPoly.from_coeffs(betti) if graded else FracPoly.from_coeffs([sum(betti)]))
    return TruncatedEGF(order_bound, tuple(vals))


def input_series(order_bound: int, with_p1: bool = True) -> dict:
    out = {"P0": p0_series(order_bound), "P0'": p0_prime_series(order_bound)}
    if with_p1:
        out["P1'"] = p1_prime_series(order_bound)
    return out


# ---------------------------------------------------------------------------
# Closed forms


@dataclass(frozen=True)
class ClosedForm:
    """sum of coeff * P0^i * P0'^j * P1'^k, stored as ((i, j, k), coeff)."""

    terms: tuple = field(default=())

    @staticmethod
    def from_dict(d: dict) -> "ClosedForm":
        clean = {k: Fraction(v) for k, v in d.items() if v}
        return ClosedForm(tuple(sorted(clean.items())))

    @staticmethod
    def p0_poly(numerators, times: str = "") -> "ClosedForm":
        """sum_k numerators[k] P0^k / k!, optionally times P0' or P1'."""
        j = 1 if times == "P0'" else 0
        k = 1 if times == "P1'" else 0
        return ClosedForm.from_dict({(i, j, k): Fraction(c, factorial(i)) for i, c in enumerate(numerators)})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "ClosedForm") -> "ClosedForm":
        out = self.as_dict()
        for key, c in other.terms:
            out[key] = out.get(key, Fraction(0)) + c
        return ClosedForm.from_dict(out)

    def __neg__(self) -> "ClosedForm":
        return ClosedForm(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "ClosedForm") -> "ClosedForm":
        return self + (-other)

    def constant(self) -> Fraction:
        return self.as_dict().get((0, 0, 0), Fraction(0))

    def numerators(self, j: int = 0, k: int = 0) -> list:
        """Coefficients times i! of the P0^i terms multiplying P0'^j P1'^k."""
        d = {i: c * factorial(i) for (i, jj, kk), c in self.terms if (jj, kk) == (j, k)}
        top = max(d, default=-1)
        return [d.get(i, Fraction(0)) for i in range(top + 1)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in self.terms:
            mono = "*".join(s + (f"^{e}" if e > 1 else "") for s, e in zip(SYMBOLS, (i, j, k)) if e)
            parts.append(fmt_fraction(c) + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def closed_form_eval(expr: ClosedForm, inputs: dict) -> TruncatedEGF:
    """Substitute truncated series for the symbols; all inputs must share
    one order bound."""
    bounds = {v.order_bound for v in inputs.values()}
    if len(bounds) != 1:
        raise ValueError("inputs must be truncated at the same order")
    bound = bounds.pop()
    powers: dict = {}

    def power(sym, e):
        if e == 0:
            return TruncatedEGF.constant(1, bound)
        if (sym, e) not in powers:
            if sym not in inputs:
                raise KeyError(f"missing input series {sym}")
            powers[(sym, e)] = power(sym, e - 1) * inputs[sym]
        return powers[(sym, e)]

    acc = TruncatedEGF.constant(0, bound)
    for exps, c in expr.terms:
        term = TruncatedEGF.constant(c, bound)
        for sym, e in zip(SYMBOLS, exps):
            if e:
                term = term * power(sym, e)
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# Computed series


def rt_correction(n: int, graded: bool = False) -> FracPoly:
    """Total twisted cohomology of the rational-tails space without listing
    entries: sectors are summed over ordered set partitions of the labels,
    divided by k! (the sector list is closed under relabelling points)."""
    if n == 0:
        sectors = enumerate_sectors(2, 0)
        acc = ZERO
        for s in sectors:
            coh = sector_cohomology(s)
            acc = acc + (coh.shift(sum(sector_weights(s), Fraction(0))) if graded else coh)
        return acc if graded else FracPoly.from_coeffs([acc.at_one()])
    acc = ZERO
    for k in range(1, min(n, 6) + 1):
        sectors = enumerate_sectors(2, k)
        for sizes in _compositions(n, k):
            ways = factorial(n)
            tails = ONE
            for b in sizes:
                ways //= factorial(b)
                tails = tails * tail_poly(b)
            for s in sectors:
                coh = sector_cohomology(s) * tails
                if graded:
                    extra = sum((point_weight(i, s.N) for i, b in zip(s.alpha, sizes) if b >= 2), Fraction(0))
                    coh = coh.shift(sum(sector_weights(s), Fraction(0)) + extra)
                acc = acc + coh * Fraction(ways, factorial(k))
    return acc if graded else FracPoly.from_coeffs([acc.at_one()])


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _entries_total(entries, graded: bool) -> FracPoly:
    acc = ZERO
    for e in entries:
        acc = acc + (e.graded if graded else e.cohomology)
    return acc if graded else FracPoly.from_coeffs([acc.at_one()])


def correction_coefficient(space: str, n: int, graded: bool = False, node_rule: str = "product") -> FracPoly:
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}")
    if space == "rt" and n > EXPLICIT_RT_MAX:
        return rt_correction(n, graded)
    return _entries_total(full_catalog(space, n, node_rule), graded)


def correction_series(space: str, max_n: int, graded: bool = False, node_rule: str = "product") -> TruncatedEGF:
    return TruncatedEGF(max_n, tuple(correction_coefficient(space, n, graded, node_rule) for n in range(max_n + 1)))


def partial_coefficient(case: str, n: int, graded: bool = False, node_rule: str = "product") -> FracPoly:
    """Stable-space contribution of one family: "rt" for the compactified
    smooth-type sectors with tails, "1".."4" for the boundary cases."""
    if case == "rt":
        return _entries_total(rt_entries(n, compact=True), graded)
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}")
    return _entries_total([e for e in enumerate_boundary(n, node_rule) if e.case == case], graded)


def partial_series(case: str, max_n: int, graded: bool = False, node_rule: str = "product") -> TruncatedEGF:
    return TruncatedEGF(max_n, tuple(partial_coefficient(case, n, graded, node_rule) for n in range(max_n + 1)))


def orbifold_poincare(space: str, n: int, node_rule: str = "product", ordinary: FracPoly | None = None) -> FracPoly:
    """Graded twisted part, plus the untwisted Poincare polynomial when given."""
    twisted = correction_coefficient(space, n, graded=True, node_rule=node_rule)
    return twisted + ordinary if ordinary is not None else twisted


# ---------------------------------------------------------------------------
# Comparison reports


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    exponent: Fraction | None
    computed: Fraction
    expected: Fraction
    key: str = ""

    @property
    def match(self) -> bool:
        return self.computed == self.expected

    def record(self) -> dict:
        return {
            "key": self.key,
            "n": self.n,
            "exponent": None if self.exponent is None else fmt_fraction(self.exponent),
            "computed": fmt_fraction(self.computed),
            "expected": fmt_fraction(self.expected),
            "match": self.match,
        }


@dataclass(frozen=True)
class ComparisonReport:
    label: str
    rows: tuple

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def mismatches(self) -> list:
        return [r for r in self.rows if not r.match]

    def record(self) -> dict:
        return {"label": self.label, "pass": self.passed, "rows": [r.record() for r in self.rows]}

    def format(self) -> str:
        lines = [f"{self.label}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.rows:
            where = r.key or f"n={r.n}" + ("" if r.exponent is None else " " + monomial_str(r.exponent))
            mark = "ok" if r.match else "MISMATCH"
            lines.append(f"  {where}: computed {fmt_fraction(r.computed)} expected {fmt_fraction(r.expected)} {mark}")
        return "\n".join(lines)


def monomial_str(e: Fraction) -> str:
    return f"t^{e.numerator}" if e.denominator == 1 else f"t^{{{e.numerator}/{e.denominator}}}"


def compare_series(label: str, computed: TruncatedEGF, expected: TruncatedEGF, graded: bool = False,
                   max_n: int | None = None) -> ComparisonReport:
    top = min(computed.order_bound, expected.order_bound) if max_n is None else max_n
    rows = []
    for n in range(top + 1):
        a, b = computed[n], expected[n]
        if graded:
            exps = sorted({e for e, _ in a.terms} | {e for e, _ in b.terms})
            rows += [ComparisonRow(n, e, a.coeff(e), b.coeff(e)) for e in exps]
        else:
            rows.append(ComparisonRow(n, None, a.at_one(), b.at_one()))
    return ComparisonReport(label, tuple(rows))


def compare_polys(label: str, computed: FracPoly, expected: FracPoly, n: int = 0) -> ComparisonReport:
    exps = sorted({e for e, _ in computed.terms} | {e for e, _ in expected.terms})
    return ComparisonReport(label, tuple(ComparisonRow(n, e, computed.coeff(e), expected.coeff(e)) for e in exps))


def compare_forms(label: str, computed: ClosedForm, expected: ClosedForm) -> ComparisonReport:
    """Symbolic comparison, one row per monomial (n encodes the monomial index)."""
    a, b = computed.as_dict(), expected.as_dict()
    rows = []
    for idx, key in enumerate(sorted(set(a) | set(b))):
        rows.append(ComparisonRow(idx, None, a.get(key, Fraction(0)), b.get(key, Fraction(0))))
    return ComparisonReport(label, tuple(rows))
