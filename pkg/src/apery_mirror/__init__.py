"""Exact power series, Picard-Fuchs operators and mirror data for Apery's numbers."""
from .apery import AperyPair, apery_sequences, zeta3_convergent, zeta3_enclosure, zeta3_enclosure_fast
from .dwork import DworkBasis, dwork_basis, dwork_mirror_yukawa
from .frobenius import CanonicalBasis, HolonomicRecursion, NotMaximallyUnipotent, frobenius_basis, recursion_basis
from .instanton import InstantonTable, detect_period, lambert_extract, lambert_synthesize
from .mirror import BEUKERS, DWORK, Family, MirrorData, build_mirror, family, yukawa_bp_normalized, yukawa_D
from .modular import F_series, T_series, eta_quotient, h_series, hexagonal_theta
from .operators import LogSeries, ThetaOperator, apery_D, apery_L, op_apply, op_mul, op_sym_square
from .series import PowerSeries, SeriesError

__version__ = "0.1.0"
