"""Exact verification of CSM specialization identities for elliptic and
genus-one fibrations and their orientifold (weak coupling) limits."""

from .bundles import (
    CompleteIntersection,
    ProjBundle,
    chern_fulton_ci,
    csm_smooth_ci,
    double_cover_csm,
    euler_char_ci,
    push_down,
    push_to_base,
    reduce_zeta,
    tangent_chern,
)
from .catalog import FAMILIES, FamilyScenario, instantiate_family, solve_twists
from .constructible import (
    ConstructibleFunction,
    Registry,
    StratificationTable,
    Stratum,
    push_stratified,
    solve_stratum_csm,
)
from .errors import TadpoleError
from .ring import BaseGeometry, ChowClass, formal, projective_space, specialize_base
from .specialize import Component, Intersection, ResolutionDatum, delta_function, specialization_csm
from .verify import VerificationReport, check_identity_formal, check_tadpole_numeric, cross_check_modes

__version__ = "0.1.0"
