"""Genus-1 input data: Betti numbers of compactified genus-1 moduli spaces and
the twisted building blocks used to assemble boundary sectors in genus 2.

Betti numbers are shipped as a small JSON table.  `betti_by_point_count`
regenerates them: the stacky F_p point count of the compactified space is a
sum over genus-1 stable graphs, the open stratum being counted through short
Weierstrass models, and the resulting counts are fitted to a polynomial in p
(all these spaces have Tate-type cohomology in the range used here).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

from .admissible import enumerate_sectors, symmetry_group_generators
from .ages import character, theta_of_root
from .algebra import FracPoly, QPolynomial, interpolate
from .genus0 import compact_count, invariant_poincare, open_count

DATA_ENV = "CRGENUS2_DATA"
TABLE_NAME = "genus1_betti.json"


def data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    return Path(env) if env else Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def _load_table(path: str) -> dict:
    with open(path) as fh:
        raw = json.load(fh)
    return {int(k): tuple(v) for k, v in raw["betti"].items()}


def genus1_betti(n: int) -> tuple:
    """Even Betti numbers of the compactified n-pointed genus-1 space."""
    path = data_dir() / TABLE_NAME
    table = _load_table(str(path))
    if n not in table:
        raise KeyError(f"{TABLE_NAME} has no row for n={n}; regenerate it with scripts/make_genus1_table.py")
    return table[n]


def genus1_total(n: int) -> int:
    return sum(genus1_betti(n))


# ---------------------------------------------------------------------------
# Point-count oracle


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


@lru_cache(maxsize=None)
def _weierstrass_point_counts(p: int) -> tuple:
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    out = []
    for a in range(p):
        for b in range(p):
            if (4 * a ** 3 + 27 * b ** 2) % p == 0:
                continue
            n = 1 + sum(squares[(x ** 3 + a * x + b) % p] for x in range(p))
            out.append(n)
    return tuple(out)


def open_genus1_count(k: int, p: int) -> Fraction:
    """Stacky count of the open k-pointed genus-1 space over F_p (p > 3)."""
    total = 0
    for n in _weierstrass_point_counts(p):
        falling = 1
        for j in range(1, k):
            falling *= n - j
        total += falling
    return Fraction(total, p - 1)


def _m0(k: int, q: int) -> int:
    return open_count((1,) * k)(q)


def _m0_swapped(k: int, q: int) -> int:
    return open_count((2,) + (1,) * (k - 2))(q)


def _m0bar(k: int, q: int) -> int:
    if k == 2:
        return 1
    return compact_count(k, tuple(range(k)))(q)


def compact_genus1_count(n: int, q: int) -> Fraction:
    """Stacky count of the compactified n-pointed genus-1 space over F_q."""
    labels = list(range(n))

    def tails(blocks):
        out = 1
        for b in blocks:
            out *= _m0bar(len(b) + 1, q)
        return out

    def cycle_vertex(size, swapped):
        acc = 0
        for part in _set_partitions(list(range(size))):
            f = _m0_swapped if swapped else _m0
            acc += f(2 + len(part), q) * tails(part)
        return acc

    total = Fraction(0)
    # a smooth genus-1 vertex with rational trees
    for part in _set_partitions(labels):
        total += open_genus1_count(len(part), q) * tails(part)
    # a cycle of m rational vertices
    for part in _set_partitions(labels):
        m = len(part)
        vs = [cycle_vertex(len(b), False) for b in part]
        plain = 1
        for v in vs:
            plain *= v
        if m == 1:
            total += Fraction(plain + cycle_vertex(n, True), 2)
        elif m == 2:
            ws = [cycle_vertex(len(b), True) for b in part]
            total += Fraction(plain + ws[0] * ws[1], 2)
        else:
            total += Fraction(plain * factorial(m - 1), 2)
    return total


PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31)


def betti_by_point_count(n: int, primes=PRIMES) -> tuple:
    """Fit the point count to a degree-n polynomial and check it on the
    remaining primes."""
    if len(primes) < n + 2:
        raise ValueError("need at least n+2 primes")
    pts = [(p, compact_genus1_count(n, p)) for p in primes]
    poly = interpolate(pts[: n + 1])
    for p, c in pts[n + 1:]:
        if poly(p) != c:
            raise ArithmeticError(f"point count at p={p} is off the fitted polynomial")
    return tuple(poly.coeffs)


# ---------------------------------------------------------------------------
# Building blocks


@dataclass(frozen=True)
class Block:
    """A twisted genus-1 piece with its special points.

    c is the derivative at fixed points, as a rational x meaning exp(2 pi i x).
    `dots` counts the fixed special points that must carry marked points or
    tails; `thetas` lists the age weights of the block's own deformations.
    """

    family: str
    name: str
    c: Fraction
    dots: int
    cohomology: FracPoly
    thetas: tuple

    @property
    def age(self) -> Fraction:
        return sum(self.thetas, Fraction(0))

    @property
    def h(self) -> int:
        return int(self.cohomology.at_one())


def _sector_cohomology(datum, compact: bool = True) -> FracPoly:
    size, gens = symmetry_group_generators(datum)
    poly = invariant_poincare(size, gens or [tuple(range(size))], compact=compact)
    return FracPoly.from_coeffs(poly)


_C_NAMES = {
    Fraction(1, 2): "-1",
    Fraction(1, 4): "i",
    Fraction(3, 4): "-i",
    Fraction(1, 6): "e",
    Fraction(1, 3): "e2",
    Fraction(2, 3): "e4",
    Fraction(5, 6): "e5",
    Fraction(0): "1",
}


def c_label(c: Fraction) -> str:
    return _C_NAMES[Fraction(c) % 1]


@lru_cache(maxsize=None)
def fixed_blocks(k: int) -> tuple:
    """T_k: twisted sectors of the k-pointed genus-1 space with all points
    fixed.  Point 1 is the attaching point, the other k-1 are dots."""
    out = []
    for s in enumerate_sectors(1, k):
        d = s.datum
        # derivative at the marked points: every marked point has the same type
        i = s.alpha[0]
        c = Fraction(pow(i, -1, d.N), d.N)
        ch = character(d, genus=1)
        thetas = []
        for j, mult in enumerate(ch.m):
            thetas += [theta_of_root(Fraction(j, d.N))] * mult
        out.append(Block("T", f"T{k}[{c_label(c)}]", c, k - 1, _sector_cohomology(d), tuple(sorted(thetas))))
    return tuple(sorted(out, key=lambda b: (b.c, b.name)))


def _remove_one(values, target):
    values = list(values)
    for idx, v in enumerate(values):
        if Fraction(v) % 1 == Fraction(target) % 1:
            del values[idx]
            return values
    raise ValueError("translation weight not found")


def affine_weights(c: Fraction, orbit_sizes) -> tuple:
    raw = [2 * c]
    for size in orbit_sizes:
        raw += [c + Fraction(j, size) for j in range(size)]
    raw = _remove_one(raw, c)
    return tuple(sorted(theta_of_root(x) for x in raw))


SWAP_CS = {2: (Fraction(1, 4), Fraction(3, 4), Fraction(1, 6), Fraction(5, 6)),
           3: (Fraction(1, 4), Fraction(3, 4), Fraction(1, 6), Fraction(5, 6)),
           4: (Fraction(1, 4), Fraction(3, 4))}


@lru_cache(maxsize=None)
def swap_blocks(k: int) -> tuple:
    """T_k^rho: an automorphism exchanging two special points p, q (to be
    glued or bridged) and fixing k-2 dots, with non-smoothable square."""
    out = []
    for c in SWAP_CS.get(k, ()):
        thetas = affine_weights(c, [2] + [1] * (k - 2))
        out.append(Block("Trho", f"T{k}rho[{c_label(c)}]", c, k - 2, FracPoly.monomial(0, 1), thetas))
    return tuple(out)


def twisted_one_pointed() -> tuple:
    return fixed_blocks(1)


def fixed_block_total(k: int) -> int:
    return sum(b.h for b in fixed_blocks(k))
