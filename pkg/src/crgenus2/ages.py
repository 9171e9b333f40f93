"""Ages of twisted sectors from eigenvalue multiplicities on deformation spaces.

The automorphism's eigenvalues on the deformation space are obtained by the
holomorphic Lefschetz (Eichler) trace on H^0(K^2(D)), D the marked points,
followed by discrete Fourier inversion.  Local data: at a point over a
branch point of type i, the element i of Z/N acts by the primitive r-th root
of unity zeta_N^gcd(i,N), r = N / gcd(i,N).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .admissible import AdmissibleDatum, Sector, involution
from .algebra import CyclotomicElement, frac_part

# +1: an eigenvalue exp(2 pi i j / N) contributes j/N.  Fixed by requiring
# the one-pointed III sector to have age 4/3.
AGE_ORIENTATION = 1


@dataclass(frozen=True)
class CharacterMultiplicities:
    N: int
    m: tuple

    def age(self) -> Fraction:
        return sum((mult * theta(j, self.N) for j, mult in enumerate(self.m)), Fraction(0))

    @property
    def invariant_dim(self) -> int:
        return self.m[0]


def theta(j: int, N: int) -> Fraction:
    j %= N
    if j == 0:
        return Fraction(0)
    return Fraction(j, N) if AGE_ORIENTATION == 1 else Fraction(N - j, N)


def inverse_mod(i: int, N: int) -> int:
    return pow(i, -1, N)


def _one_over_one_minus(N: int, e: int) -> CyclotomicElement:
    """1 / (1 - zeta_N^e) for zeta_N^e != 1, in the group ring basis."""
    r = N // gcd(e % N, N)
    acc = CyclotomicElement.zero(N)
    for j in range(1, r):
        acc = acc + CyclotomicElement.zeta_power(N, e * j, Fraction(-j, r))
    return acc


def lefschetz_trace(datum: AdmissibleDatum, m: int, genus: int) -> CyclotomicElement:
    """Trace of the m-th power of the generator on H^0(K^2(D))."""
    N = datum.N
    m %= N
    if m == 0:
        return CyclotomicElement.zeta_power(N, 0, 3 * genus - 3 + datum.n)
    acc = CyclotomicElement.zero(N)
    for i, di in enumerate(datum.d, start=1):
        g_i = gcd(i, N)
        if di == 0 or m % g_i:
            continue
        r = N // g_i
        # m = k * i mod N with k defined mod r
        k = next(k for k in range(r) if (k * i - m) % N == 0)
        e = g_i * k  # derivative zeta_N^e
        marked = datum.a[i - 1]
        unmarked_points = di * g_i - marked
        inv = _one_over_one_minus(N, e)
        if unmarked_points:
            acc = acc + CyclotomicElement.zeta_power(N, 2 * e, unmarked_points) * inv
        if marked:
            acc = acc + CyclotomicElement.zeta_power(N, e, marked) * inv
    return acc


def character(datum: AdmissibleDatum, genus: int | None = None) -> CharacterMultiplicities:
    if genus is None:
        genus = datum.genus()
    N = datum.N
    traces = [lefschetz_trace(datum, m, genus) for m in range(N)]
    mult = []
    for j in range(N):
        acc = CyclotomicElement.zero(N)
        for m, tr in enumerate(traces):
            acc = acc + tr * CyclotomicElement.zeta_power(N, -j * m)
        value = acc.rational_value() / N
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"bad multiplicity {value} for {datum}")
        mult.append(int(value))
    out = CharacterMultiplicities(N, tuple(mult))
    expected_total = 3 * genus - 3 + datum.n
    if sum(mult) != expected_total:
        raise ArithmeticError("multiplicities do not sum to the dimension")
    if mult[0] != datum.dim:
        raise ArithmeticError("invariant part does not match the sector dimension")
    return out


def base_character(datum: AdmissibleDatum) -> CharacterMultiplicities:
    return character(datum.unmarked())


def base_age(datum: AdmissibleDatum) -> Fraction:
    return base_character(datum).age()


def point_weight(i: int, N: int) -> Fraction:
    """Age contributed by marking a point of type i: lambda(i)/N."""
    return theta(inverse_mod(i, N), N)


def marked_age(s: Sector) -> Fraction:
    return base_age(s.datum) + sum((point_weight(i, s.N) for i in s.alpha), Fraction(0))


def sector_age(s: Sector) -> Fraction:
    """Age from the full character with the marked points included."""
    return character(s.datum).age()


def tails_age(s: Sector, blocks) -> Fraction:
    """Age after replacing marked point j by a rational tail carrying blocks[j].

    A block of size one is the marked point itself; a larger block adds the
    smoothing direction of the new node, whose weight equals the point's."""
    if len(blocks) != len(s.alpha):
        raise ValueError("one block per marked point is required")
    extra = sum((point_weight(i, s.N) for i, b in zip(s.alpha, blocks) if len(b) >= 2), Fraction(0))
    return marked_age(s) + extra


def codim(s: Sector, g: int = 2) -> int:
    return 3 * g - 3 + s.n - s.dim


def duality_defect(s: Sector, g: int = 2) -> Fraction:
    return marked_age(s) + marked_age(involution(s)) - codim(s, g)


def hyperelliptic_character(alpha_pow: int, beta_pow: int, N: int, genus: int = 2) -> CharacterMultiplicities:
    """Oracle: (x, y) -> (zeta^a x, zeta^b y) on y^2 = f(x), acting on the
    quadratic differentials x^k dx^2 / y^2 (k = 0..2g-2) plus, for g >= 3,
    nothing else is modelled; g = 2 gives all 3g-3 = 3 of them."""
    if genus != 2:
        raise ValueError("only genus 2 is modelled")
    mult = [0] * N
    for k in range(3):
        mult[((k + 2) * alpha_pow - 2 * beta_pow) % N] += 1
    return CharacterMultiplicities(N, tuple(mult))


def theta_of_root(x: Fraction) -> Fraction:
    """Age weight of exp(2 pi i x) for a rational x."""
    f = frac_part(Fraction(x))
    return f if AGE_ORIENTATION == 1 or f == 0 else 1 - f
