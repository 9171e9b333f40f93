"""Permutation traces on the cohomology of genus-0 moduli spaces.

Two independent engines:

* an Orlik-Solomon engine for the open space M_{0,n}, realised as the
  kernel of the boundary map inside the OS algebra of the braid arrangement
  on n-1 points (the n-th point sits at infinity);
* Frobenius-twisted point counts, for both the open space and (through a
  sum over invariant stable trees) the compactification.

Permutations are 0-indexed image tuples internally; the public functions
also accept 1-indexed tuples through `Permutation`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .algebra import QPolynomial

MAX_OPEN = 8
MAX_COMPACT = 7


@dataclass(frozen=True)
class Permutation:
    """images[j-1] = sigma(j) on {1..n}."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                img[x - 1] = y
        return Permutation(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def zero_based(self) -> tuple:
        return tuple(i - 1 for i in self.images)


def _zb(sigma) -> tuple:
    if isinstance(sigma, Permutation):
        return sigma.zero_based()
    return tuple(sigma)


def cycle_type(perm: tuple) -> tuple:
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def compose(p: tuple, q: tuple) -> tuple:
    """(p o q)(i) = p[q[i]]"""
    return tuple(p[i] for i in q)


def generate_group(n: int, gens) -> list:
    ident = tuple(range(n))
    gens = [_zb(g) for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def canonical_perm(ctype: tuple) -> tuple:
    """A fixed 0-indexed permutation with the given cycle type."""
    img = []
    start = 0
    for length in ctype:
        for k in range(length):
            img.append(start + (k + 1) % length)
        start += length
    return tuple(img)


def partitions_of(n: int, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - k, k):
            yield (k,) + rest


# ---------------------------------------------------------------------------
# Orlik-Solomon engine
#
# A degree-k monomial in the nbc basis of the braid arrangement on m points
# is encoded by a tuple `par` of length m with par[j] in {-1} u {0..j-1}:
# the factor w_{par[j], j} is present when par[j] >= 0, and factors are
# ordered by increasing j.


@lru_cache(maxsize=None)
def _mul_edge(mono: tuple, a: int, b: int) -> tuple:
    """Normal form of mono * w_ab (a < b) as a tuple of (mono, coeff)."""
    later = sum(1 for j in range(b + 1, len(mono)) if mono[j] >= 0)
    sign = -1 if later % 2 else 1
    c = mono[b]
    if c < 0:
        new = list(mono)
        new[b] = a
        return ((tuple(new), sign),)
    if c == a:
        return ()
    # prefix P (factors with j < b), then w_cb w_ab, then suffix
    if c < a:
        # w_cb w_ab = w_ca w_ab - w_ca w_cb
        terms = [((c, a), a, 1), ((c, a), c, -1)]
    else:
        # w_cb w_ab = -w_ac w_cb + w_ac w_ab
        terms = [((a, c), c, -1), ((a, c), a, 1)]
    prefix = tuple(mono[j] if j < b else -1 for j in range(len(mono)))
    out: dict = {}
    for (x, y), z, coef in terms:
        for m2, c2 in _mul_edge(prefix, x, y):
            new = list(m2)
            new[b] = z
            for j in range(b + 1, len(mono)):
                new[j] = mono[j]
            key = tuple(new)
            out[key] = out.get(key, 0) + sign * coef * c2
    return tuple((k, v) for k, v in out.items() if v)


def _mul_form(elem: dict, form: dict) -> dict:
    out: dict = {}
    for mono, c in elem.items():
        for (a, b), f in form.items():
            for m2, c2 in _mul_edge(mono, a, b):
                out[m2] = out.get(m2, 0) + c * f * c2
    return {k: v for k, v in out.items() if v}


def _act_on_form(form: dict, perm: tuple, m: int) -> dict:
    """Image under perm (on n = m+1 points, infinity = m) of a balanced
    one-form sum c_ab w_ab on the finite points."""
    inf = m
    lifted: dict = dict(form)
    for a in range(m):
        s = sum(c for (x, y), c in form.items() if a in (x, y))
        if s:
            lifted[(a, inf)] = lifted.get((a, inf), 0) - s
    out: dict = {}
    for (x, y), c in lifted.items():
        u, v = perm[x], perm[y]
        if inf in (u, v):
            continue
        key = (min(u, v), max(u, v))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def graded_trace_open(n: int, sigma) -> tuple:
    """Trace of sigma on H^k(M_{0,n}) for k = 0..n-3, as a coefficient tuple."""
    if not 3 <= n <= MAX_OPEN:
        raise ValueError(f"open traces are supported for 3 <= n <= {MAX_OPEN}")
    perm = _zb(sigma)
    if len(perm) != n:
        raise ValueError("permutation size mismatch")
    return _open_trace_cached(n, perm)


@lru_cache(maxsize=None)
def _open_trace_cached(n: int, perm: tuple) -> tuple:
    m = n - 1
    images = {}
    for j in range(2, m):
        for i in range(j):
            images[(i, j)] = _act_on_form({(i, j): 1, (0, 1): -1}, perm, m)
    trace = [0] * (n - 2)
    empty = tuple([-1] * m)

    def dfs(j, par, img, deg):
        if j == m:
            trace[deg] += img.get(par, 0)
            return
        dfs(j + 1, par, img, deg)
        for i in range(j):
            new = list(par)
            new[j] = i
            dfs(j + 1, tuple(new), _mul_form(img, images[(i, j)]), deg + 1)

    dfs(2, empty, {empty: 1}, 0)
    return tuple(trace)


# ---------------------------------------------------------------------------
# Twisted point counts


def _mobius(n: int) -> int:
    out, k, x = 1, 2, n
    while k * k <= x:
        if x % k == 0:
            x //= k
            if x % k == 0:
                return 0
            out = -out
        k += 1
    if x > 1:
        out = -out
    return out


def exact_degree_points(ell: int) -> QPolynomial:
    """Number of points of P^1 with residue degree exactly ell, times ell."""
    acc = QPolynomial(())
    for d in range(1, ell + 1):
        if ell % d == 0:
            mu = _mobius(ell // d)
            if mu:
                acc = acc + QPolynomial(tuple([1] + [0] * (d - 1) + [1])) * mu
    return acc


@lru_cache(maxsize=None)
def configuration_count(ctype: tuple) -> QPolynomial:
    """Frobenius-twisted count of ordered configurations in P^1."""
    counts: dict = {}
    for ell in ctype:
        counts[ell] = counts.get(ell, 0) + 1
    acc = QPolynomial.const(1)
    for ell, c in counts.items():
        e = exact_degree_points(ell)
        for k in range(c):
            acc = acc * (e - k * ell)
    return acc


PGL2 = QPolynomial((0, -1, 0, 1))


@lru_cache(maxsize=None)
def open_count(ctype: tuple) -> QPolynomial:
    """sigma-twisted point count of M_{0,n}, n = sum(ctype) >= 3."""
    return configuration_count(ctype).exact_div(PGL2)


def trace_from_open_count(n: int, count: QPolynomial) -> tuple:
    """Invert count = sum_k (-1)^k tr_k q^(n-3-k)."""
    top = n - 3
    coeffs = list(count.coeffs) + [0] * (top + 1 - len(count.coeffs))
    return tuple((-1) ** k * coeffs[top - k] for k in range(top + 1))


def graded_trace_open_by_count(n: int, sigma) -> tuple:
    return trace_from_open_count(n, open_count(cycle_type(_zb(sigma))))


# ---------------------------------------------------------------------------
# Stable trees and compact traces


def _splits(n: int) -> list:
    """Subsets S of {0..n-2} with 2 <= |S| <= n-2 (the last label is the root side)."""
    base = range(n - 1)
    out = []
    for k in range(2, n - 1):
        for c in combinations(base, k):
            out.append(frozenset(c))
    return out


def _compatible(s: frozenset, t: frozenset) -> bool:
    return s <= t or t <= s or not (s & t)


@lru_cache(maxsize=None)
def stable_trees(n: int) -> tuple:
    """All stable n-pointed genus-0 trees, each as a frozenset of vertices,
    every vertex being the frozenset of the leg-sets of its half-edges."""
    splits = _splits(n)
    families = []

    def extend(start, chosen):
        families.append(tuple(chosen))
        for i in range(start, len(splits)):
            s = splits[i]
            if all(_compatible(s, t) for t in chosen):
                extend(i + 1, chosen + [s])

    extend(0, [])
    full = frozenset(range(n))
    trees = []
    for fam in families:
        fam_set = list(fam)
        vertices = []
        # root vertex: inside the complement of all splits' roots
        for owner in [full] + fam_set:
            children = [t for t in fam_set if t < owner and not any(t < u < owner for u in fam_set)]
            covered = set().union(*children) if children else set()
            if owner is full:
                parts = [frozenset([n - 1])]
                rest = set(range(n - 1)) - covered
            else:
                parts = [full - owner]
                rest = set(owner) - covered
            parts += [frozenset(c) for c in children] + [frozenset([x]) for x in rest]
            vertices.append(frozenset(parts))
        trees.append(frozenset(vertices))
    return tuple(trees)


def _apply_to_vertex(v: frozenset, perm: tuple) -> frozenset:
    return frozenset(frozenset(perm[x] for x in part) for part in v)


def compact_count(n: int, sigma) -> QPolynomial:
    """sigma-twisted point count of the compactified space, a polynomial in q."""
    perm = _zb(sigma)
    total = QPolynomial(())
    for tree in stable_trees(n):
        mapped = frozenset(_apply_to_vertex(v, perm) for v in tree)
        if mapped != tree:
            continue
        term = QPolynomial.const(1)
        remaining = set(tree)
        while remaining:
            v = remaining.pop()
            orbit = [v]
            w = _apply_to_vertex(v, perm)
            while w != v:
                orbit.append(w)
                remaining.discard(w)
                w = _apply_to_vertex(w, perm)
            ell = len(orbit)
            # permutation induced by sigma^ell on the parts of v
            parts = sorted(v, key=lambda p: min(p))
            index = {p: i for i, p in enumerate(parts)}
            induced = []
            for p in parts:
                img = p
                for _ in range(ell):
                    img = frozenset(perm[x] for x in img)
                induced.append(index[img])
            term = term * open_count(cycle_type(tuple(induced))).compose_power(ell)
        total = total + term
    return total


def graded_trace_compact(n: int, sigma) -> tuple:
    """Trace of sigma on H^{2k} of the compactified space, k = 0..n-3."""
    if not 3 <= n <= MAX_COMPACT:
        raise ValueError(f"compact traces are supported for 3 <= n <= {MAX_COMPACT}")
    perm = _zb(sigma)
    if len(perm) != n:
        raise ValueError("permutation size mismatch")
    return _compact_trace_cached(n, cycle_type(perm))


@lru_cache(maxsize=None)
def _compact_trace_cached(n: int, ctype: tuple) -> tuple:
    count = compact_count(n, canonical_perm(ctype))
    coeffs = list(count.coeffs) + [0] * (n - 2 - len(count.coeffs))
    return tuple(coeffs[: n - 2])


def open_poincare(n: int) -> tuple:
    """Betti numbers of M_{0,n} from the product formula."""
    poly = QPolynomial.const(1)
    for j in range(2, n - 1):
        poly = poly * QPolynomial((1, j))
    return tuple(poly.coeffs) if n >= 3 else ()


def compact_betti(n: int) -> tuple:
    """Betti numbers of the compactified space, via the identity trace.

    n = 2 follows the convention that the 2-pointed space is a point."""
    if n == 2:
        return (1,)
    if n < 2:
        return ()
    return graded_trace_compact(n, tuple(range(n)))


@lru_cache(maxsize=None)
def _rooted_tree_count(k: int) -> QPolynomial:
    """Point count of stable rooted trees with k labelled leaves: the root
    vertex splits the leaves into m >= 2 subtrees."""
    if k == 1:
        return QPolynomial((1,))
    acc = QPolynomial((0,))
    for sizes in partitions_of(k):
        m = len(sizes)
        if m < 2:
            continue
        ways = factorial(k)
        for s in sizes:
            ways //= factorial(s)
        for mult in Counter(sizes).values():
            ways //= factorial(mult)
        term = open_count((1,) * (m + 1)) * QPolynomial((ways,))
        for s in sizes:
            term = term * _rooted_tree_count(s)
        acc = acc + term
    return acc


def compact_betti_by_recursion(n: int) -> tuple:
    """Betti numbers of the compactified n-pointed space from the tree
    recursion (no symmetry); usable well beyond the trace engine."""
    if n == 2:
        return (1,)
    if n < 2:
        return ()
    return tuple(_rooted_tree_count(n - 1).coeffs)


def compact_total(n: int) -> int:
    return sum(compact_betti(n))


# ---------------------------------------------------------------------------
# Invariants


def _average(n: int, group: list, trace_fn) -> tuple:
    total = None
    for g in group:
        tr = trace_fn(n, g)
        total = list(tr) if total is None else [a + b for a, b in zip(total, tr)]
    out = []
    for c in total:
        q = Fraction(c, len(group))
        if q.denominator != 1 or q < 0:
            raise ArithmeticError(f"non-integral invariant dimension {q}")
        out.append(int(q))
    return tuple(out)


def invariant_poincare(n: int, gens, compact: bool = False) -> tuple:
    """Invariant Betti numbers under the group generated by `gens`."""
    group = generate_group(n, gens)
    fn = graded_trace_compact if compact else graded_trace_open
    # traces are class functions: evaluate once per cycle type
    return _average(n, group, lambda m, g: fn(m, canonical_perm(cycle_type(g))))


def transposition_trace_compact(n: int) -> tuple:
    """Trace of swapping two labels on the compactified n-pointed space."""
    if n == 2:
        return (1,)
    perm = list(range(n))
    perm[0], perm[1] = 1, 0
    return graded_trace_compact(n, tuple(perm))


# ---------------------------------------------------------------------------
# Keel relations for n = 5

PAIRS5 = [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]


def _divisor_index(i: int, j: int) -> int:
    return PAIRS5.index((min(i, j), max(i, j)))


def keel_relations() -> list:
    """Pullbacks of the cross-ratio relations along the five forgetful maps."""
    rels = []
    for e in range(1, 6):
        a, b, c, d = [x for x in range(1, 6) if x != e]
        # D_ab + D_cd - D_ac - D_bd on the 4-pointed space, pulled back:
        # a divisor D_xy pulls back to D_xy + D_xye, and D_xye = D_{other two}
        def pull(x, y):
            v = [Fraction(0)] * 10
            v[_divisor_index(x, y)] += 1
            rest = [z for z in range(1, 6) if z not in (x, y, e)]
            v[_divisor_index(*rest)] += 1
            return v

        for (p, q), (r, s) in [(((a, b), (c, d)), ((a, c), (b, d))), (((a, b), (c, d)), ((a, d), (b, c)))]:
            v1, v2, v3, v4 = pull(*p), pull(*q), pull(*r), pull(*s)
            rels.append([x1 + x2 - x3 - x4 for x1, x2, x3, x4 in zip(v1, v2, v3, v4)])
    return rels


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def relation_rank() -> int:
    return _rank(keel_relations())


def combo_vector(combo: dict) -> list:
    """combo maps pairs (i, j), 1-indexed, to rational coefficients."""
    v = [Fraction(0)] * 10
    for (i, j), c in combo.items():
        v[_divisor_index(i, j)] += Fraction(c)
    return v


def verify_keel_relation(combo: dict) -> bool:
    rels = keel_relations()
    v = combo_vector(combo)
    return _rank(rels + [v]) == _rank(rels)


def permute_combo(combo: dict, perm: dict) -> dict:
    out: dict = {}
    for (i, j), c in combo.items():
        u, w = perm.get(i, i), perm.get(j, j)
        key = (min(u, w), max(u, w))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def all_permutations(n: int):
    return permutations(range(n))
