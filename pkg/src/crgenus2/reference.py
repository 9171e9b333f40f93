"""Expected values used by the verification suite and the tests."""

from __future__ import annotations

from fractions import Fraction as F

from .algebra import FracPoly
from .series import ClosedForm


def _poly(pairs) -> FracPoly:
    return FracPoly.from_dict({F(e): c for e, c in pairs})


# Number of twisted sectors of the open n-pointed genus-2 space, n = 0..6.
SECTOR_COUNTS = (17, 24, 26, 21, 7, 1, 1)
FLAGGED_COUNTS = {3}

# Total cohomology of the twisted sectors of the open n-pointed space.
CORRECTIONS = (22, 30, 39, 43, 51, 60, 60)

BASE_COUNT = 17

# Ordinary Poincare polynomial of the unpointed stable space.
STABLE_POINCARE = _poly([(0, 1), (1, 2), (2, 2), (3, 1)])

# Orbifold Poincare polynomial of the unpointed stable space (untwisted included).
STABLE_ORBIFOLD_POINCARE = _poly([
    (0, 2), ("1/2", 4), ("3/4", 2), (1, 16), ("7/6", 1), ("6/5", 2), ("5/4", 7), ("4/3", 1),
    ("7/5", 2), ("3/2", 23), ("8/5", 2), ("5/3", 1), ("7/4", 7), ("9/5", 2), ("11/6", 1),
    (2, 16), ("9/4", 2), ("5/2", 4), (3, 2),
])
STABLE_SECTOR_COUNT = 63
STABLE_TOTAL = 97

# Graded corrections of the open n-pointed space, n = 0..6.
SMOOTH_GRADED = (
    _poly([(0, 1), ("1/2", 5), (1, 3), ("6/5", 2), ("7/5", 2), ("3/2", 1), ("8/5", 2), ("9/5", 2),
           (2, 3), ("5/2", 1)]),
    _poly([("1/2", 1), (1, 1), ("9/8", 1), ("6/5", 2), ("5/4", 1), ("4/3", 1), ("11/8", 1), ("7/5", 1),
           ("8/5", 2), ("13/8", 1), ("5/3", 1), ("7/4", 1), ("9/5", 1), ("15/8", 1), (2, 5), ("7/3", 1),
           ("12/5", 1), ("8/3", 1), ("14/5", 1), (3, 5)]),
    _poly([(1, 1), ("3/2", 1), ("8/5", 1), ("11/6", 1), (2, 9), ("11/5", 2), ("7/3", 1), ("12/5", 1),
           ("5/2", 1), ("13/5", 1), ("8/3", 1), ("14/5", 2), (3, 11), ("19/6", 1), ("10/3", 1),
           ("17/5", 1), ("7/2", 1), ("11/3", 1), (4, 1)]),
    _poly([("1/2", 1), ("3/2", 5), ("11/5", 3), ("7/3", 3), ("5/2", 3), ("13/5", 3), ("8/3", 3),
           ("10/3", 6), ("17/5", 3), ("7/2", 4), ("11/3", 6), ("19/5", 3)]),
    _poly([(2, 1), (3, 12), (4, 26), (5, 12)]),
    _poly([("5/2", 1), ("7/2", 9), ("9/2", 26), ("11/2", 24)]),
    _poly([(3, 1), (4, 9), (5, 26), (6, 24)]),
)

# Closed forms (corrections only; the untwisted series is dropped).
RT_FORM = ClosedForm.p0_poly([22, 30, 39, 43, 51, 60, 60])
RT_COMPACT_FORM = ClosedForm.p0_poly([29, 39, 47, 42, 38, 34, 34])
U1_FORM = (ClosedForm.p0_poly([37, 48, 68, 40, 28, 8, 4], "P0'")
           + ClosedForm.p0_poly([8, 6, 4, 2], "P1'")
           - ClosedForm.p0_poly([7, 8, 14, 10, 10, 4, 4]))
U2_FORM = ClosedForm.p0_poly([8, 6, 6])
U3_FORM = ClosedForm.p0_poly([-2, -2, -2]) + ClosedForm.p0_poly([6, 4, 4], "P0'")
U4_FORM = ClosedForm.p0_poly([4, 8, 10, 6, 2])
STABLE_FORM = (ClosedForm.p0_poly([32, 43, 47, 38, 30, 30, 30])
               + ClosedForm.p0_poly([43, 52, 72, 40, 28, 8, 4], "P0'")
               + ClosedForm.p0_poly([8, 6, 4, 2], "P1'"))
PARTIAL_FORMS = {"rt": RT_COMPACT_FORM, "1": U1_FORM, "2": U2_FORM, "3": U3_FORM, "4": U4_FORM}
STABLE_CONSTANT_TERMS = (29, -7, 8, -2, 4)
STABLE_CONSTANT = 32

# Leading terms of the input series.
P0_PRIME_AT_ZERO = 1
P1_PRIME_AT_ZERO = 2

# Genus-0 data.
COMPACT_BETTI = {4: (1, 1), 5: (1, 5, 1), 6: (1, 16, 16, 1), 7: (1, 42, 127, 42, 1)}
BIELLIPTIC_OPEN_INVARIANTS = (1, 1, 1)
BIELLIPTIC_COMPACT_INVARIANTS = (1, 3, 1)
KEEL_RANK = 5

# Ages.
BASE_AGES = {
    "τ": F(0), "II": F(1, 2), "III": F(1), "IV": F(1), "VI": F(1),
    "V.1": F(3, 2), "V.2": F(3, 2), "VIII.1": F(3, 2), "VIII.2": F(3, 2),
    "X.1": F(6, 5), "X.2": F(7, 5), "X.3": F(8, 5), "X.4": F(9, 5),
    "X.6": F(6, 5), "X.7": F(7, 5), "X.8": F(8, 5), "X.9": F(9, 5),
}
POINTED_AGES = {"III_1": F(4, 3), "τ_1": F(1, 2), "IV_3": F(7, 4)}

# Excess data.
EXCESS_RANKS = {("III", "III", "III"): 1, ("IV_3", "IV_3", "τ_1"): 1}
FIBER_PRODUCTS = {("τ", "III"): "VI", ("τ", "VI"): "III", ("τ", "IV"): "IV", ("τ", "II"): "II"}
LAMBDA_DEGREE_III = F(1, 18)
DELTA1_DEGREE_III = F(1, 36)
CANONICAL_COEFFS = (-7, 2)
TANGENT_DEGREES = (F(1, 12), F(1, 36))
ANTICANONICAL_DEGREE = F(1, 3)
TANGENT_DEGREE = F(1, 9)
COKERNEL_DEGREE = F(1, 9)
PSI_DEGREE_IV = F(1, 8)
III_CLASS_COEFF = F(1, 9)
IV_CLASS_COEFF = F(-1, 8)
