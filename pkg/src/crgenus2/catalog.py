"""Twisted-sector catalogs of the genus-2 moduli spaces.

Three spaces are modelled: the open space M_{2,n} ("smooth"), the
rational-tails space ("rt") and the stable compactification ("stable").
Every entry carries an age and a cohomology polynomial in t, graded so
that a class of Hodge weight 2k sits at t^k; the age shift is applied by
`CatalogEntry.graded`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .admissible import Sector, enumerate_sectors, involution, symmetry_group_generators
from .ages import character, codim, marked_age, point_weight, theta, theta_of_root
from .algebra import ONE, FracPoly
from .genus0 import compact_betti, compact_betti_by_recursion, invariant_poincare, transposition_trace_compact
from .genus1 import fixed_blocks, genus1_betti, swap_blocks

# The bielliptic sector is a quotient of the 5-pointed genus-0 space by S3
# permuting three of the points.
BIELLIPTIC_S3 = ((1, 0, 2, 3, 4), (1, 2, 0, 3, 4))

# Ordinary Poincare polynomial of the unpointed stable genus-2 space.
STABLE_GENUS2_POINCARE = FracPoly.from_coeffs([1, 2, 2, 1])

HALF = Fraction(1, 2)
NODE_RULES = ("product", "single")


@dataclass(frozen=True)
class CatalogEntry:
    """`weights` lists the age weights of the non-invariant deformation
    directions; the age is their sum."""

    kind: str
    name: str
    weights: tuple
    cohomology: FracPoly
    moduli: str = ""
    legs: tuple = field(default=())
    case: str = ""

    @property
    def age(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def inverse_age(self) -> Fraction:
        return sum((1 - w for w in self.weights), Fraction(0))

    @property
    def codim(self) -> int:
        return len(self.weights)

    @property
    def dim(self) -> int:
        return int(self.cohomology.terms[-1][0])

    @property
    def graded(self) -> FracPoly:
        return self.cohomology.shift(self.age)

    @property
    def h(self) -> int:
        return int(self.cohomology.at_one())

    def record(self) -> dict:
        return {
            "kind": self.kind,
            "case": self.case,
            "name": self.name,
            "age": {"num": self.age.numerator, "den": self.age.denominator},
            "weights": [[w.numerator, w.denominator] for w in self.weights],
            "cohomology": self.cohomology.serialize(),
            "moduli": self.moduli,
            "legs": [list(b) for b in self.legs],
        }


def _poly(coeffs) -> FracPoly:
    return FracPoly.from_coeffs(coeffs)


def tail_poly(size: int) -> FracPoly:
    """Cohomology of the compactified (size+1)-pointed genus-0 space."""
    return _poly(compact_betti_by_recursion(size + 1))


# ---------------------------------------------------------------------------
# Smooth-type sectors


@lru_cache(maxsize=None)
def _g0_sector_cohomology(datum, compact: bool) -> FracPoly:
    size, gens = symmetry_group_generators(datum)
    return _poly(invariant_poincare(size, gens or [tuple(range(size))], compact=compact))


def _nonzero(ws) -> tuple:
    return tuple(sorted(Fraction(w) for w in ws if w))


@lru_cache(maxsize=None)
def sector_weights(s: Sector) -> tuple:
    ch = character(s.datum)
    return _nonzero(theta(j, s.N) for j, mult in enumerate(ch.m) for _ in range(mult))


@lru_cache(maxsize=None)
def bielliptic_cohomology(compact: bool = False) -> FracPoly:
    return FracPoly.from_coeffs(invariant_poincare(5, BIELLIPTIC_S3, compact=compact))


def sector_cohomology(s: Sector, compact: bool = False) -> FracPoly:
    if s.datum.g_quotient == 1:
        return bielliptic_cohomology(compact)
    return _g0_sector_cohomology(s.datum, compact)


def smooth_entries(n: int, compact: bool = False) -> list:
    out = []
    for s in enumerate_sectors(2, n):
        desc = "coarse space of M_{0,5}/S3" if s.datum.g_quotient == 1 else f"M_{{0,{sum(s.datum.d)}}}/S_A"
        out.append(CatalogEntry("smooth-type", s.name, sector_weights(s), sector_cohomology(s, compact), desc))
    return out


# ---------------------------------------------------------------------------
# Rational tails


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def add_rational_tails(sectors, n: int, compact: bool = False) -> list:
    """Entries of the rt space: a sector with k marked points and a set
    partition of {1..n} into k blocks, blocks ordered by least element and
    attached to marked points 1..k."""
    by_k: dict = {}
    for s in sectors:
        by_k.setdefault(s.n, []).append(s)
    out = []
    for part in set_partitions(range(1, n + 1)):
        blocks = sorted((tuple(sorted(b)) for b in part), key=min)
        for s in by_k.get(len(blocks), []):
            coh = sector_cohomology(s, compact)
            for b in blocks:
                coh = coh * tail_poly(len(b))
            label = s.name + "".join("[" + ",".join(map(str, b)) + "]" for b in blocks)
            # a tail of two or more points adds the smoothing direction of its node
            ws = sector_weights(s) + tuple(point_weight(i, s.N) for i, b in zip(s.alpha, blocks) if len(b) >= 2)
            out.append(CatalogEntry("smooth-type", label, _nonzero(ws), coh, "", tuple(blocks)))
    return out


def rt_entries(n: int, compact: bool = False) -> list:
    sectors = [s for k in range(0, min(n, 6) + 1) for s in enumerate_sectors(2, k)]
    if n == 0:
        return smooth_entries(0, compact)
    return add_rational_tails(sectors, n, compact)


# ---------------------------------------------------------------------------
# Boundary sectors


def smoothable(weight_sum: Fraction) -> bool:
    """A node (or node orbit, through its square) is smoothable exactly when
    the smoothing character is trivial."""
    return Fraction(weight_sum) % 1 == 0


def _orbit2(theta: Fraction) -> list:
    """Age weights of a length-2 orbit whose square has weight theta."""
    return [theta / 2, (theta + 1) / 2]


def _slot_fillings(labels, groups, middle: bool, middle_nonempty: bool):
    """Distribute labels over slot groups (each slot non-empty, slots within
    a group unordered) and, if `middle`, a middle set.

    Yields (list of tuples of blocks per group, middle tuple)."""
    nslots = sum(groups)
    targets = list(range(nslots)) + (["M"] if middle else [])
    labels = list(labels)
    seen = set()
    for assignment in product(targets, repeat=len(labels)):
        blocks = [[] for _ in range(nslots)]
        mid = []
        for lab, t in zip(labels, assignment):
            (mid if t == "M" else blocks[t]).append(lab)
        if any(not b for b in blocks):
            continue
        if middle and middle_nonempty and not mid:
            continue
        grouped = []
        start = 0
        for size in groups:
            grp = tuple(sorted(tuple(b) for b in blocks[start:start + size]))
            grouped.append(grp)
            start += size
        key = (tuple(grouped), tuple(mid))
        if key in seen:
            continue
        seen.add(key)
        yield grouped, tuple(mid)


def _tails(blocks, c: Fraction):
    """Cohomology and age weights contributed by blocks sitting at dots with
    derivative c (a singleton is the marked point itself)."""
    coh = ONE
    ws = []
    for b in blocks:
        coh = coh * tail_poly(len(b))
        if len(b) >= 2:
            ws.append(theta_of_root(c))
    return coh, ws


def _fmt_blocks(grouped) -> str:
    return "".join("{" + ",".join(map(str, b)) + "}" for grp in grouped for b in grp)


def _all_fixed_blocks():
    return [b for k in range(1, 5) for b in fixed_blocks(k)]


def case1(n: int) -> list:
    """Two genus-1 components, each mapped to itself."""
    labels = list(range(1, n + 1))
    out = []
    # (a) a twisted block attached to an untwisted genus-1 component with legs L
    for X in _all_fixed_blocks():
        for grouped, mid in _slot_fillings(labels, [X.dots], True, False):
            coh, tw = _tails(grouped[0] if grouped else (), X.c)
            coh = X.cohomology * _poly(genus1_betti(len(mid) + 1)) * coh
            ws = X.thetas + (theta_of_root(X.c),) + tuple(tw)
            name = f"1a:{X.name}|1_{{{','.join(map(str, mid))}}}" + _fmt_blocks(grouped)
            out.append(CatalogEntry("boundary", name, _nonzero(ws), coh, "T x M_{1,L+1}", case="1"))
    # (b) two twisted blocks, joined directly or through a rational bridge
    blocks = _all_fixed_blocks()
    for ix, X in enumerate(blocks):
        for Y in blocks[ix:]:
            same = X == Y
            for grouped, mid in _slot_fillings(labels, [X.dots, Y.dots], True, False):
                bx = grouped[0] if X.dots else ()
                by = grouped[1] if Y.dots else ()
                if same and X.dots and bx > by:
                    continue  # the swap of the two sides identifies these
                direct = not mid
                if direct and smoothable(X.c + Y.c):
                    continue
                cx, wx = _tails(bx, X.c)
                cy, wy = _tails(by, Y.c)
                r = len(mid) + 2
                if same and not X.dots:
                    # unordered pair of identical blocks: symmetric square
                    # twisted by the swap of the bridge's attaching points
                    px = X.cohomology
                    rp = _poly(compact_betti(r))
                    rt = _poly(transposition_trace_compact(r))
                    coh = (px * px * rp + px.scale_exponents(2) * rt) * HALF
                else:
                    coh = X.cohomology * Y.cohomology * _poly(compact_betti(r))
                coh = coh * cx * cy
                nodes = (theta_of_root(X.c + Y.c),) if direct else (theta_of_root(X.c), theta_of_root(Y.c))
                ws = X.thetas + Y.thetas + nodes + tuple(wx) + tuple(wy)
                name = f"1b:{X.name}|{Y.name}|0_{{{','.join(map(str, mid))}}}" + _fmt_blocks(grouped)
                out.append(CatalogEntry("boundary", name, _nonzero(ws), coh, "T x T x M_{0,L+2}", case="1"))
    return out


def case2(n: int) -> list:
    """Two genus-1 components exchanged."""
    labels = list(range(1, n + 1))
    out = []
    for X in fixed_blocks(1):
        c = X.c
        if smoothable(c):
            continue
        base = _orbit2(theta_of_root(2 * c))
        if n == 0:
            ws = base + [theta_of_root(c)]
            out.append(CatalogEntry("boundary", f"2:{X.name}", _nonzero(ws), X.cohomology, "T1", case="2"))
        # through 0_1^* (one dot) or 0_2^* (two symmetric dots); the dots of
        # the involution on the bridge have derivative -1
        for ndots, bridge in ((1, []), (2, [HALF])):
            for grouped, _ in _slot_fillings(labels, [ndots], False, False):
                coh, tw = _tails(grouped[0], HALF)
                ws = base + _orbit2(theta_of_root(c)) + bridge + tw
                name = f"2:{X.name}|0_{ndots}*" + _fmt_blocks(grouped)
                out.append(CatalogEntry("boundary", name, _nonzero(ws), X.cohomology * coh, "T1", case="2"))
    return out


def case3(n: int, node_rule: str = "product") -> list:
    """A genus-1 component with a non-separating node (or rational bridge),
    both branches fixed."""
    labels = list(range(1, n + 1))
    out = []
    for k in (2, 3, 4):
        for X in fixed_blocks(k):
            ndots = k - 2
            for grouped, mid in _slot_fillings(labels, [ndots], True, False):
                bx = grouped[0] if ndots else ()
                coh, tw = _tails(bx, X.c)
                # the block's own weights count both glued points as marked
                if not mid:
                    # membership always uses the product of the two branch
                    # derivatives; the "single" rule only changes the weight
                    if smoothable(2 * X.c):
                        continue
                    nodes = [theta_of_root(2 * X.c if node_rule == "product" else X.c)]
                    r_inv = ONE
                else:
                    nodes = [theta_of_root(X.c)] * 2
                    r_inv = _swap_invariants(len(mid) + 2)
                ws = X.thetas + tuple(nodes) + tuple(tw)
                name = f"3:{X.name}|0_{{{','.join(map(str, mid))}}}" + _fmt_blocks(grouped)
                out.append(CatalogEntry("boundary", name, _nonzero(ws), X.cohomology * r_inv * coh, "T~ x M_{0,L+2}^S2", case="3"))
    return out


def _swap_invariants(r: int) -> FracPoly:
    tot = compact_betti(r)
    tr = transposition_trace_compact(r)
    return _poly([(a + b) // 2 for a, b in zip(tot, tr)])


def case4(n: int, node_rule: str = "product") -> list:
    """A genus-1 component whose two node branches are exchanged."""
    labels = list(range(1, n + 1))
    out = []
    for k in (2, 3, 4):
        for X in swap_blocks(k):
            w_self = 2 * X.c if node_rule == "product" else X.c
            options = [("loop", 0, []), ("0_1*", 1, []), ("0_2*", 2, [HALF])]
            for kind, rdots, bridge in options:
                if kind == "loop" and smoothable(2 * X.c):
                    continue
                for grouped, _ in _slot_fillings(labels, [X.dots, rdots], False, False):
                    bx = grouped[0] if X.dots else ()
                    br = grouped[1] if rdots else ()
                    cx, wx = _tails(bx, X.c)
                    cr, wr = _tails(br, HALF)
                    if kind == "loop":
                        nodes = [theta_of_root(w_self)]
                    else:
                        nodes = _orbit2(theta_of_root(2 * X.c))
                    ws = list(X.thetas) + nodes + bridge + wx + wr
                    name = f"4:{X.name}|{kind}" + _fmt_blocks(grouped)
                    out.append(CatalogEntry("boundary", name, _nonzero(ws), cx * cr, "point", case="4"))
    return out


def enumerate_boundary(n: int, node_rule: str = "product") -> list:
    if node_rule not in NODE_RULES:
        raise ValueError(node_rule)
    return case1(n) + case2(n) + case3(n, node_rule) + case4(n, node_rule)


def full_catalog(space: str, n: int, node_rule: str = "product") -> list:
    if space == "smooth":
        return smooth_entries(n)
    if space == "rt":
        return rt_entries(n)
    if space == "stable":
        return rt_entries(n, compact=True) + enumerate_boundary(n, node_rule)
    raise ValueError(f"unknown space {space!r}")


def sector_ages_table(n: int) -> list:
    rows = []
    for s in enumerate_sectors(2, n):
        rows.append({"name": s.name, "dim": s.dim, "codim": codim(s), "age": marked_age(s),
                     "dual": involution(s).name})
    return rows
