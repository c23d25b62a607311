"""Exact inertial K-theory and Chow rings of weighted projective lines and BG."""
from .cyclofield import CycNum, cyc_inv, embed
from .errors import *  # noqa: F401,F403
from .scalg import Algebra, Elem, LinearMap, IdealSpan, algebra_new, alg_mul, alg_inv, local_factors
from .psilambda import (PsiRing, psi_apply, lambda_series, gamma_series, is_line_element,
                        enumerate_line_reps, canonical_rep)
from .wps import build_virtual_k, bott_class, periodicity_check
from .wps.chow import build_chern_data, chern_character, chern_series, chern_class
from .bgfinite import build_bg
from .hkrc import build_resolution_k, build_resolution_chow, completion, hkrc_verify

__version__ = "0.1.0"
