"""Admissible branch data of cyclic covers and the twisted sectors they label."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial, gcd
from typing import Iterator


@dataclass(frozen=True, order=True)
class AdmissibleDatum:
    N: int
    g_quotient: int
    d: tuple
    a: tuple

    @property
    def dim(self) -> int:
        return 3 * self.g_quotient - 3 + sum(self.d)

    @property
    def n(self) -> int:
        return sum(self.a)

    def genus(self) -> int:
        """Genus of the cover, from Riemann-Hurwitz."""
        N = self.N
        ram = sum(di * (N - gcd(i, N)) for i, di in enumerate(self.d, start=1))
        two_g_minus_2 = N * (2 * self.g_quotient - 2) + ram
        return two_g_minus_2 // 2 + 1

    def connected(self) -> bool:
        if self.g_quotient > 0:
            return True
        g = self.N
        for i, di in enumerate(self.d, start=1):
            if di:
                g = gcd(g, i)
        return g == 1

    def unmarked(self) -> "AdmissibleDatum":
        return AdmissibleDatum(self.N, self.g_quotient, self.d, tuple(0 for _ in self.a))

    def symmetry_order(self) -> int:
        out = 1
        for di, ai in zip(self.d, self.a):
            out *= factorial(di - ai)
        return out


def check_datum(datum: AdmissibleDatum, g: int, n: int) -> list:
    """Return the list of violated conditions (empty when admissible)."""
    N, d, a = datum.N, datum.d, datum.a
    bad = []
    if N < 2 or len(d) != N - 1 or len(a) != N - 1:
        bad.append("shape")
        return bad
    ram = sum(di * gcd(i, N) * (N // gcd(i, N) - 1) for i, di in enumerate(d, start=1))
    if 2 * g - 2 != N * (2 * datum.g_quotient - 2) + ram:
        bad.append("riemann-hurwitz")
    if sum(i * di for i, di in enumerate(d, start=1)) % N:
        bad.append("monodromy")
    if sum(a) != n:
        bad.append("marked-count")
    if any(ai > di for ai, di in zip(a, d)):
        bad.append("a<=d")
    if any(ai and gcd(i, N) != 1 for i, ai in enumerate(a, start=1)):
        bad.append("marked-type")
    return bad


def _max_order(g: int) -> int:
    return 6 if g == 1 else 4 * g + 2


def _compositions(weights, target) -> Iterator[tuple]:
    """Vectors x >= 0 with sum(w_i x_i) == target."""
    if not weights:
        if target == 0:
            yield ()
        return
    w = weights[0]
    for x in range(target // w + 1):
        for rest in _compositions(weights[1:], target - w * x):
            yield (x,) + rest


def _bounded_vectors(bounds, total) -> Iterator[tuple]:
    if not bounds:
        if total == 0:
            yield ()
        return
    for x in range(min(bounds[0], total) + 1):
        for rest in _bounded_vectors(bounds[1:], total - x):
            yield (x,) + rest


def enumerate_data(g: int, n: int) -> list:
    """All (g, n)-admissible data with N up to the cyclic-order bound, sorted."""
    if g < 1:
        return []
    out = []
    for N in range(2, _max_order(g) + 1):
        weights = [N - gcd(i, N) for i in range(1, N)]
        gq = 0
        while N * (2 * gq - 2) <= 2 * g - 2:
            budget = 2 * g - 2 - N * (2 * gq - 2)
            for d in _compositions(weights, budget):
                if sum(i * di for i, di in enumerate(d, start=1)) % N:
                    continue
                if 3 * gq - 3 + sum(d) < 0:
                    continue
                bounds = [di if gcd(i, N) == 1 else 0 for i, di in enumerate(d, start=1)]
                for a in _bounded_vectors(bounds, n):
                    out.append(AdmissibleDatum(N, gq, tuple(d), tuple(a)))
            gq += 1
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Sectors and names

BASE_NAMES = {
    (0, 2, (6,)): "τ",
    (0, 3, (2, 2)): "III",
    (0, 4, (1, 2, 1)): "IV",
    (0, 5, (2, 0, 1, 0)): "X.4",
    (0, 5, (0, 1, 0, 2)): "X.6",
    (0, 5, (1, 2, 0, 0)): "X.2",
    (0, 5, (0, 0, 2, 1)): "X.8",
    (0, 6, (2, 0, 0, 1, 0)): "V.1",
    (0, 6, (0, 1, 0, 0, 2)): "V.2",
    (0, 6, (0, 1, 2, 1, 0)): "VI",
    (0, 8, (1, 0, 1, 1, 0, 0, 0)): "VIII.1",
    (0, 8, (0, 0, 0, 1, 1, 0, 1)): "VIII.2",
    (0, 10, (0, 1, 1, 0, 1, 0, 0, 0, 0)): "X.7",
    (0, 10, (0, 0, 0, 0, 1, 0, 1, 1, 0)): "X.3",
    (0, 10, (1, 0, 0, 1, 1, 0, 0, 0, 0)): "X.1",
    (0, 10, (0, 0, 0, 0, 1, 1, 0, 0, 1)): "X.9",
    (1, 2, (2,)): "II",
}


@dataclass(frozen=True, order=True)
class Sector:
    datum: AdmissibleDatum
    alpha: tuple

    @property
    def dim(self) -> int:
        return self.datum.dim

    @property
    def N(self) -> int:
        return self.datum.N

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def name(self) -> str:
        return canonical_name(self)


def _alphas(datum: AdmissibleDatum) -> list:
    """All labelings j -> type with multiplicities a_i, lexicographic."""
    n = datum.n
    types = [i for i, ai in enumerate(datum.a, start=1) for _ in range(ai)]
    seen = set()
    out = []
    if n > 8:
        raise ValueError("too many marked points")
    for perm in permutations(types):
        if perm not in seen:
            seen.add(perm)
            out.append(perm)
    out.sort()
    return out


def enumerate_sectors(g: int, n: int) -> list:
    out = [Sector(datum, alpha) for datum in enumerate_data(g, n) for alpha in _alphas(datum)]
    out.sort()
    return out


def involution(s: Sector) -> Sector:
    """Sector of the inverse automorphism: type i becomes type N - i."""
    N = s.N
    datum = s.datum
    inv = AdmissibleDatum(N, datum.g_quotient, tuple(reversed(datum.d)), tuple(reversed(datum.a)))
    return Sector(inv, tuple(N - i for i in s.alpha))


def base_name(datum: AdmissibleDatum) -> str:
    key = (datum.g_quotient, datum.N, tuple(datum.d))
    if key not in BASE_NAMES:
        raise KeyError(f"no genus-2 name for datum {key}")
    return BASE_NAMES[key]


def canonical_name(s: Sector) -> str:
    if s.datum.genus() != 2:
        raise ValueError("names are defined for genus 2 only")
    base = base_name(s.datum)
    if not s.alpha:
        return base
    sub = "".join(str(i) for i in s.alpha)
    return f"{base}_{sub}" if len(s.alpha) == 1 else f"{base}_{{{sub}}}"


def symmetry_group_generators(datum: AdmissibleDatum, alpha: tuple = ()) -> tuple:
    """Generators of S_A acting on the sum(d) branch points.

    Branch points are numbered block by block (type 1 first); within the
    block of type i the first a_i points carry the marked labels, so S_A
    permutes only the remaining d_i - a_i points.  Returns (size, gens) with
    permutations as 0-indexed image tuples."""
    size = sum(datum.d)
    gens = []
    start = 0
    for di, ai in zip(datum.d, datum.a):
        free = list(range(start + ai, start + di))
        for x, y in zip(free, free[1:]):
            p = list(range(size))
            p[x], p[y] = p[y], p[x]
            gens.append(tuple(p))
        start += di
    return size, gens


def sector_record(s: Sector) -> dict:
    d = s.datum
    return {
        "name": s.name,
        "gq": d.g_quotient,
        "N": d.N,
        "d": list(d.d),
        "a": list(d.a),
        "alpha": list(s.alpha),
        "dim": s.dim,
    }


def datum_records(g: int, n: int) -> list:
    rows = []
    for d in enumerate_data(g, n):
        rows.append({"gq": d.g_quotient, "N": d.N, "d": list(d.d), "a": list(d.a), "connected": d.connected()})
    return rows

