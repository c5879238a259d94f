"""Exact local symbols, residues, and determinant cocycles on P^1.

The package computes, in exact arithmetic over Q, F_p, F_q and Artinian
local algebras:

* the unsigned local commutator and the signed tame symbol,
* the Contou-Carrère symbol over rings with nilpotents,
* residues by three independent routes (coefficient, block-operator trace,
  dual-number symbol extraction) and the Gelfand-Fuchs cocycle,
* the determinant 2-cocycle on finite-window operators,
* global verification of Weil reciprocity, the theorem of residues, the
  residue-pairing orthogonality of rational adeles, and global
  Gelfand-Fuchs vanishing on the projective line.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .artinian import ArtinianAlgebra, dual_numbers
from .blockops import (
    BlockOperator,
    aggregate_sign,
    cocycle_commutator,
    cocycle_det,
    lie_cocycle,
    lie_cocycle_dual,
    multiplication_operator,
    windings_sum_to_zero,
)
from .curve import (
    AdeleVector,
    Divisor,
    Place,
    RationalFunction,
    VerificationReport,
    divisor_of,
    local_expansion,
    relevant_places,
    residue_pairing_sum,
    sigma_perp_forward,
    trace_residue_at_place,
    verify_gf_global,
    verify_residue_theorem,
    verify_residues_local_data,
    verify_wrl,
    verify_wrl_local_data,
    wrl_local_factor,
)
from .errors import (
    DomainError,
    ExpressionError,
    FactorError,
    NonUnitError,
    PrecisionError,
    ReciprocityError,
    TowerError,
    WindowError,
)
from .factor import Factorization, is_irreducible, poly_factor, poly_invmod
from .fields import QQ, AlgebraElement, BaseField, ExtensionField, PrimeField, RationalField
from .laurent import (
    DEFAULT_PRECISION,
    LaurentSeries,
    PrincipalUnitFactorization,
    UnitFactorization,
    cc_factorize,
    is_principal_unit,
    unit_factorize,
)
from .norms import algebra_norm, algebra_trace, norm_det_compat, relative_norm, relative_trace
from .parsing import (
    parse_factored_rational,
    parse_field_spec,
    parse_polynomial,
    parse_rational,
    parse_ring_spec,
    parse_series,
)
from .poly import Polynomial
from .symbols import (
    LoopMatrix,
    SymbolValue,
    contou_carrere_symbol,
    gelfand_fuchs_cocycle,
    local_commutator,
    residue_coefficient,
    residue_from_dual_symbol,
    tame_symbol,
    tate_residue,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
