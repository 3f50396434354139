"""Exact Hilbert polynomials of polarized varieties of Picard number one and
numeric stability certificates for their syzygy bundles."""

from .ci_hilbert import MultiDegree, f_poly, f_poly_rec, nonneg_check
from .criterion import Verdict, check_condition3, destabilizing_search, monotone_check
from .errors import InputError, PreconditionError
from .exactalg import Polynomial, PowerSeries, binom_poly, elem_sym, series_quotient_expand
from .rr_hilbert import ChernData, ToddVector, abelian_poly, chern_to_todd, todd_poly
from .weyl_hilbert import RootDatum, hilbert_homogeneous

__version__ = "0.1.0"
