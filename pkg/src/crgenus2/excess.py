"""Excess-bundle ranks and top Chern classes over double twisted sectors.

A double sector is modelled by its normal directions: each direction
carries the three age weights of (g, h, (gh)^-1).  A direction enters the
excess bundle exactly when its weights sum to 2; summing over directions
recovers the rank formula a1 + a2 + a3 - codim(Y).  Each excess line is
tagged with what its first Chern class is on the component:

* "trivial": a line over a zero-dimensional base (class 0);
* "III": the cokernel line of the III/VI family, class (1/9) p;
* "point": the dual cotangent line of a marked point on the IV family,
  class -(1/8) p;
* "tail": the dual cotangent line at a tail attachment, class -psi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from .admissible import Sector, base_name, enumerate_sectors, involution
from .ages import base_age, character, codim, point_weight, theta, theta_of_root
from .algebra import fmt_fraction
from .catalog import full_catalog, set_partitions
from .genus0 import invariant_poincare, permute_combo, verify_keel_relation
from .genus1 import c_label, fixed_blocks
from .reference import (ANTICANONICAL_DEGREE, CANONICAL_COEFFS, COKERNEL_DEGREE, DELTA1_DEGREE_III,
                        FIBER_PRODUCTS, III_CLASS_COEFF, IV_CLASS_COEFF, LAMBDA_DEGREE_III, PSI_DEGREE_IV,
                        TANGENT_DEGREE, TANGENT_DEGREES)
from .series import ComparisonReport, ComparisonRow

IDENTITY = "e"


def excess_rank(ages, codim_y) -> int:
    total = sum((Fraction(a) for a in ages), Fraction(0)) - Fraction(codim_y)
    if total.denominator != 1 or total < 0:
        raise ValueError(f"excess rank {fmt_fraction(total)} is not a nonnegative integer")
    return int(total)


@dataclass(frozen=True)
class Direction:
    weights: tuple
    kind: str = "trivial"
    label: str = ""

    @property
    def normal(self) -> bool:
        return any(self.weights)

    @property
    def in_excess(self) -> bool:
        return sum(self.weights, Fraction(0)) == 2


@dataclass(frozen=True)
class SymbolicClass:
    coefficient: Fraction
    factors: tuple

    def __str__(self) -> str:
        return fmt_fraction(self.coefficient) + "".join(f"*{f}" for f in self.factors)


@dataclass(frozen=True)
class DoubleSector:
    """Slots (X1, X2, X3) with g1 g2 g3 = 1, on the n-pointed stable space."""

    family: str
    slots: tuple
    n: int
    dim_y: int
    directions: tuple = field(default=())
    tails: tuple = field(default=())

    @property
    def ambient_dim(self) -> int:
        return 3 + self.n

    @property
    def codim_y(self) -> int:
        return self.ambient_dim - self.dim_y

    def slot_ages(self) -> tuple:
        return tuple(sum((d.weights[k] for d in self.directions), Fraction(0)) for k in range(3))

    def slot_codims(self) -> tuple:
        return tuple(sum(1 for d in self.directions if d.weights[k]) for k in range(3))

    @property
    def rank(self) -> int:
        return excess_rank(self.slot_ages(), self.codim_y)

    def excess_lines(self) -> list:
        return [d for d in self.directions if d.in_excess]

    def inverse(self) -> "DoubleSector":
        dirs = tuple(Direction(tuple((1 - w) if w else w for w in d.weights), d.kind, d.label)
                     for d in self.directions)
        slots = tuple(s + "^-1" if s != IDENTITY else s for s in self.slots)
        return DoubleSector(self.family, slots, self.n, self.dim_y, dirs, self.tails)

    def record(self) -> dict:
        cls = classify_class(self)
        return {
            "family": self.family,
            "slots": list(self.slots),
            "n": self.n,
            "dim_y": self.dim_y,
            "ages": [fmt_fraction(a) for a in self.slot_ages()],
            "rank": self.rank,
            "class": cls if isinstance(cls, str) else str(cls),
        }


def dual_rank_check(d: DoubleSector) -> bool:
    """rk(inverse) = sum codim(X_i) - 2 codim(Y) - rk(d)."""
    inv = d.inverse()
    if d.codim_y != sum(1 for x in d.directions if x.normal):
        return False
    return inv.rank == sum(d.slot_codims()) - 2 * d.codim_y - d.rank


def classify_class(d: DoubleSector):
    """"One", "Zero" or a SymbolicClass."""
    lines = d.excess_lines()
    if len(lines) != d.rank:
        raise ArithmeticError("excess lines do not match the rank formula")
    if not lines:
        return "One"
    if len(lines) > d.dim_y:
        return "Zero"
    coeff = Fraction(1)
    factors = []
    for line in lines:
        if line.kind == "trivial":
            return "Zero"
        if line.kind == "III":
            coeff *= III_CLASS_COEFF
            factors.append("p")
        elif line.kind == "point":
            coeff *= IV_CLASS_COEFF
            factors.append("p")
        elif line.kind == "tail":
            coeff *= -1
            factors.append(f"psi_{line.label}")
        else:
            raise ValueError(f"unknown line kind {line.kind!r}")
    if factors.count("p") > 1:
        return "Zero"  # p^2 = 0 on a one-dimensional component
    return SymbolicClass(coeff, tuple(sorted(factors)))


# ---------------------------------------------------------------------------
# Double catalog


def identity_triples(n: int) -> list:
    """(X, iota X, e) and its rotations, for every entry of the stable catalog."""
    out = []
    for e in full_catalog("stable", n):
        dirs = tuple(Direction((w, 1 - w, Fraction(0))) for w in e.weights)
        for rot in range(3):
            w = tuple(Direction(tuple(d.weights[(k - rot) % 3] for k in range(3))) for d in dirs)
            slots = (e.name, e.name + "^-1", IDENTITY)
            slots = tuple(slots[(k - rot) % 3] for k in range(3))
            out.append(DoubleSector("identity", slots, n, e.dim, w))
    return out


def _sector_directions(s: Sector, powers: tuple, kinds=("trivial", "trivial")) -> list:
    """Directions of the deformation space of s for the triple
    (g^p1, g^p2, g^p3), p1 + p2 + p3 = 0 mod N; marked points last."""
    N = s.N
    ch = character(s.datum.unmarked())
    dirs = []
    base_kind, point_kind = kinds
    for j, mult in enumerate(ch.m):
        for _ in range(mult):
            dirs.append(Direction(tuple(theta(p * j, N) for p in powers), base_kind))
    for idx, i in enumerate(s.alpha, start=1):
        lam = pow(i, -1, N)
        dirs.append(Direction(tuple(theta(p * lam, N) for p in powers), point_kind, f"{idx}"))
    return dirs


def _tail_directions(s: Sector, powers: tuple, blocks) -> list:
    N = s.N
    out = []
    for i, b in zip(s.alpha, blocks):
        if len(b) >= 2:
            lam = pow(i, -1, N)
            out.append(Direction(tuple(theta(p * lam, N) for p in powers), "tail",
                                 "*{" + ",".join(map(str, b)) + "}"))
    return out


def _tail_dims(blocks) -> int:
    return sum(len(b) - 2 for b in blocks if len(b) >= 2)


def _blocks_for(n: int, k: int):
    """Set partitions of 1..n into k blocks, sorted by least element."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for part in set_partitions(range(1, n + 1)):
        if len(part) == k:
            yield tuple(sorted((tuple(sorted(b)) for b in part), key=min))


def cyclic_triples(n: int) -> list:
    """Triples (g^a, g^b, g^-(a+b)) generating <g>, over zero-dimensional
    unmarked bases, with marked points and tails added."""
    out = []
    for k in range(0, n + 1):
        for s in enumerate_sectors(2, k):
            if s.datum.dim != 0:
                continue
            N = s.N
            for a, b in product(range(1, N), repeat=2):
                c = (-a - b) % N
                if c == 0 or gcd(gcd(a, b), N) != 1:
                    continue
                powers = (a, b, c)
                for blocks in _blocks_for(n, k):
                    dirs = _sector_directions(s, powers) + _tail_directions(s, powers, blocks)
                    slots = tuple(f"{s.name}^{p}" for p in powers)
                    if blocks:
                        slots = tuple(x + _fmt_blocks(blocks) for x in slots)
                    out.append(DoubleSector("zero-dim", slots, n, _tail_dims(blocks), tuple(dirs), blocks))
    return out


def _fmt_blocks(blocks) -> str:
    return "".join("[" + ",".join(map(str, b)) + "]" for b in blocks)


# Named one-dimensional families: (family, base, exponents of the generator,
# line kinds for base directions and marked points).
FAMILIES = (
    ("III", "III", (1, 1, 1), ("III", "trivial")),
    ("III", "VI", (2, 5, 5), ("III", "trivial")),
    ("III", "VI", (1, 1, 4), ("III", "trivial")),
    ("IV", "IV", (1, 1, 2), ("trivial", "point")),
)


def named_triples(n: int) -> list:
    out = []
    for family, base, powers, kinds in FAMILIES:
        for k in range(0, n + 1):
            for s in enumerate_sectors(2, k):
                if s.datum.g_quotient != 0 or base_name(s.datum) != base:
                    continue
                for blocks in _blocks_for(n, k):
                    dirs = _sector_directions(s, powers, kinds) + _tail_directions(s, powers, blocks)
                    slots = tuple(_power_name(s, p) + _fmt_blocks(blocks) for p in powers)
                    out.append(DoubleSector(family, slots, n, 1 + _tail_dims(blocks), tuple(dirs), blocks))
    return out


_POWER_NAMES = {("III", 1): "III", ("VI", 1): "VI", ("VI", 5): "VI", ("VI", 2): "III", ("VI", 4): "III",
                ("IV", 1): "IV", ("IV", 3): "IV", ("IV", 2): "τ"}


def _power_name(s: Sector, p: int) -> str:
    """Sector name of g^p for g in s (marked points keep their labels)."""
    base = _POWER_NAMES[(base_name(s.datum), p % s.N)]
    if not s.alpha:
        return base
    N = s.N
    order = N // gcd(p, N)
    types = []
    for i in s.alpha:
        weight = pow(i, -1, N) * p % N  # tangent weight of g^p in units of 1/N
        types.append(pow(weight * order // N, -1, order))
    sub = "".join(map(str, types))
    return f"{base}_{sub}" if len(sub) == 1 else f"{base}_{{{sub}}}"


# Elliptic curves with extra automorphisms: the order of the cyclic group.
ELLIPTIC_GROUPS = (4, 6)


def genus1_triples(n: int) -> list:
    """Pairs in Aut of a special elliptic tail, not both in {1, -1}, glued at
    its origin to an untwisted genus-1 component carrying all n points."""
    out = []
    if n < 1:
        return out
    legs = ",".join(map(str, range(1, n + 1)))
    for N in ELLIPTIC_GROUPS:
        for a, b in product(range(1, N), repeat=2):
            c = (-a - b) % N
            if c == 0 or (2 * a % N == 0 and 2 * b % N == 0):
                continue  # inside {1, -1}: the tail is not rigid
            cs = [Fraction(p, N) for p in (a, b, c)]
            dirs = (Direction(tuple(theta_of_root(2 * x) for x in cs), "trivial", "E"),
                    Direction(tuple(theta_of_root(x) for x in cs), "tail", "node"))
            slots = tuple(f"1a:T1[{c_label(x)}]|1_{{{legs}}}" for x in cs)
            out.append(DoubleSector("genus1", slots, n, n + 1, dirs))
    return out


def double_catalog(n: int) -> list:
    return identity_triples(n) + cyclic_triples(n) + named_triples(n) + genus1_triples(n)


# ---------------------------------------------------------------------------
# Consistency data


def degree_consistency() -> ComparisonReport:
    k_lambda, k_delta = CANONICAL_COEFFS
    anti = -(k_lambda * LAMBDA_DEGREE_III + k_delta * DELTA1_DEGREE_III)
    tangent = sum(TANGENT_DEGREES, Fraction(0))
    coker = (anti - tangent) / 2
    rows = (
        ComparisonRow(0, None, anti, ANTICANONICAL_DEGREE, "anticanonical degree on III"),
        ComparisonRow(1, None, tangent, TANGENT_DEGREE, "tangent degree of III"),
        ComparisonRow(2, None, coker, COKERNEL_DEGREE, "cokernel line degree"),
        ComparisonRow(3, None, coker, III_CLASS_COEFF, "III family class coefficient"),
        ComparisonRow(4, None, -PSI_DEGREE_IV, IV_CLASS_COEFF, "IV family class coefficient"),
    )
    return ComparisonReport("degree consistency", rows)


def _contains_tau(s: Sector) -> bool:
    """Whether g^(N/2) is the hyperelliptic involution (six fixed points)."""
    N = s.N
    if N % 2:
        return False
    fixed = sum(di * gcd(i, N) for i, di in enumerate(s.datum.d, start=1) if (N // 2) % gcd(i, N) == 0)
    return fixed == 6


def check_fiber_products() -> ComparisonReport:
    """tau is central and acts trivially on deformations, so tau*g has the
    same age and dimension as g; its order follows from whether tau lies in <g>."""
    by_name = {s.name: s for s in enumerate_sectors(2, 0)}
    rows = []
    for idx, ((t, x), y) in enumerate(sorted(FIBER_PRODUCTS.items())):
        sx, sy = by_name[x], by_name[y]
        N = sx.N
        order = N // gcd(N // 2 + 1, N) if _contains_tau(sx) else N * 2 // gcd(2, N)
        ok = base_age(sx.datum) == base_age(sy.datum) and sx.dim == sy.dim and sy.N == order
        rows.append(ComparisonRow(idx, None, Fraction(int(ok)), Fraction(1), f"{t} x {x} = {y}"))
    return ComparisonReport("fiber products", tuple(rows))


def keel_classes() -> dict:
    """Pullbacks of the classes A, B, C, D to the 5-pointed genus-0 space."""
    return {
        "A": {(1, 2): 2, (1, 3): 2, (2, 3): 2},
        "B": {(1, 4): 1, (2, 4): 1, (3, 4): 1},
        "C": {(1, 5): 1, (2, 5): 1, (3, 5): 1},
        "D": {(4, 5): 1},
    }


def _combine(*pairs) -> dict:
    out: dict = {}
    for coeff, combo in pairs:
        for k, v in combo.items():
            out[k] = out.get(k, 0) + coeff * v
    return {k: v for k, v in out.items() if v}


def keel_relation_combo() -> dict:
    """6D + A - 2B - 2C."""
    c = keel_classes()
    return _combine((6, c["D"]), (1, c["A"]), (-2, c["B"]), (-2, c["C"]))


def special_class() -> dict:
    c = keel_classes()
    return _combine((1, c["B"]), (-1, c["C"]))


def keel_checks() -> dict:
    swap = {4: 5, 5: 4}
    s = special_class()
    swapped = permute_combo(s, swap)
    neg = {k: -v for k, v in s.items()}
    c = keel_classes()
    sym_s3 = [(1, 0, 2, 3, 4), (1, 2, 0, 3, 4)]
    return {
        "relation": verify_keel_relation(keel_relation_combo()),
        "antisymmetry": verify_keel_relation(_combine((1, swapped), (-1, neg))),
        "S nonzero": not verify_keel_relation(s),
        "A invariant": verify_keel_relation(_combine((1, permute_combo(c["A"], swap)), (-1, c["A"]))),
        "D invariant": verify_keel_relation(_combine((1, permute_combo(c["D"], swap)), (-1, c["D"]))),
        "S3 invariants": tuple(invariant_poincare(5, sym_s3, compact=True)),
        "S3xS2 invariants": tuple(invariant_poincare(5, sym_s3 + [(0, 1, 2, 4, 3)], compact=True)),
    }
