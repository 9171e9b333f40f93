"""Exact computations for the orbifold cohomology of moduli of pointed genus-2 curves."""

from .admissible import AdmissibleDatum, Sector, enumerate_sectors, involution
from .algebra import FracPoly, TruncatedEGF
from .catalog import CatalogEntry, full_catalog
from .config import RunConfig
from .excess import DoubleSector, classify_class, double_catalog, excess_rank
from .series import ClosedForm, closed_form_eval, correction_series, orbifold_poincare

__version__ = "0.1.0"

__all__ = [
    "AdmissibleDatum", "Sector", "enumerate_sectors", "involution",
    "FracPoly", "TruncatedEGF",
    "CatalogEntry", "full_catalog",
    "RunConfig",
    "DoubleSector", "classify_class", "double_catalog", "excess_rank",
    "ClosedForm", "closed_form_eval", "correction_series", "orbifold_poincare",
]
