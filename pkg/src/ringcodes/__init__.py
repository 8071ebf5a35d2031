"""Cyclic codes over finite quotient rings of polynomial algebras.

The rings are R_i = F_q[u]/(u^i), S_i = F_q[u_1..u_i]/(u_k^2, u_k u_l - u_l u_k)
and T_(i,j) = F_q[u, v]/(u^i, v^j, uv - vu).  Codes are ideals of
R[x]/(x^n - 1), handled as F_q-subspaces.
"""

from .analysis import (
    IdealSet,
    augmentation,
    augmentation_check,
    chain_check,
    factorization_search,
    factorization_witness,
    ideal_span,
    is_local,
    is_principal,
)
from .codes import (
    CyclicCode,
    classify_p_adic,
    classify_report,
    cardinality_bound_check,
    cardinality_formula_check,
    code_build,
    code_enumerate,
    distance_doubling_check,
    free_rank_check,
    hamming_weight,
    min_distance,
    two_generator_build,
)
from .errors import CapExceeded, DomainError, ParseError, PreconditionError, RingCodesError
from .fields import FieldCtx, FieldElem, field, field_arith, field_of_order, find_irreducible
from .galois import GaloisRingCtx, gr_basis_check, gr_construct, hensel_lift, hensel_lift_root
from .linalg import FqMatrix, fq_row_reduce
from .poly import QuotientCtx, RingPoly, cyclic_shift, format_poly, parse_poly, quotient_mul
from .report import Report
from .rings import (
    RingElem,
    RingSpec,
    elem_arith,
    elem_inverse,
    elem_is_unit,
    format_elem,
    nilpotency_index,
    parse_elem,
    ring_construct,
)

__version__ = "0.1.0"
