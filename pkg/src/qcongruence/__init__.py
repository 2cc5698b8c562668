"""Exact verification of q-congruences modulo products of cyclotomic polynomials."""
from .classical import central_term, conj1_product, rising, run_classical, sum_mod
from .congruence import CongruenceTask, fn_least_index, proof_side_checks, reduce_mod, verify
from .cyclotomic import CyclotomicProduct, PhiModulus, build_modulus, cyclotomic
from .hypergeometric import PhiSeriesSpec, QMonomial, instance_2_3_equals_2_4, phi_eval, watson_check
from .poly import LaurentPoly, Poly, quotient_inverse
from .qseries import FactorRatio, Family, RatFunc, partial_sum, q_limit_one, qint, qpoch, rhs_ratio, summand
from .rational import Rational, padic_residue, padic_split
from .report import Level, Report, Status

__version__ = "0.1.0"
