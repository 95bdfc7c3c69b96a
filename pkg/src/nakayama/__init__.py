"""Gorenstein homological algebra of connected cyclic Nakayama algebras.

An algebra is given by its Kupisch series (p_1, ..., p_s).  The package
computes, exactly and deterministically: syzygies of the uniserial
modules, the resolution quiver with its black/red coloring, Gorenstein
projective modules (fast criterion, literal syzygy oracle, and batched
whole-algebra scan), G-dimensions, Gorenstein status with the dimension
v, CM-freeness, global dimension, the Gorenstein core (X, elementary
modules, membership, filtration peeling, g and p'), the Auslander-Reiten
quiver with core marks, enumeration and classification of Kupisch series,
and an exhaustive property-verification sweep.
"""

from .algebra import (
    EmptySeries,
    KupischError,
    KupischSeries,
    Mod,
    ModOrZero,
    ProjectiveInput,
    SerialViolation,
    SimpleProjective,
    TooShort,
    ZERO,
    ZeroModule,
)
from .arquiver import ArQuiver, build_ar, node_id, to_dot
from .cli import algebra_report, classification_csv, main, rq_to_dot
from .core import (
    CoreProfile,
    NoElementary,
    NonIntegralPPrime,
    NotInCore,
    core_profile,
    elementary,
    in_core,
    peel_filtration,
    x_set,
)
from .enumeration import (
    ClassificationRow,
    canonical_rotation,
    catalan,
    classify,
    count_linear_admissible,
    enumerate_kupisch,
    roof,
    roofs,
)
from .gorenstein import (
    GorensteinStatus,
    INFINITE,
    g_dimension,
    global_dimension,
    gorenstein_status,
    gp_modules,
    is_cm_free,
    is_gp_fast,
    is_gp_oracle,
    projective_dimension,
)
from .resolution import ResolutionQuiver, gamma_of
from .verify import SuiteStats, VerificationResult, run_verification

__all__ = [
    "ArQuiver",
    "ClassificationRow",
    "CoreProfile",
    "EmptySeries",
    "GorensteinStatus",
    "INFINITE",
    "KupischError",
    "KupischSeries",
    "Mod",
    "ModOrZero",
    "NoElementary",
    "NonIntegralPPrime",
    "NotInCore",
    "ProjectiveInput",
    "ResolutionQuiver",
    "SerialViolation",
    "SimpleProjective",
    "SuiteStats",
    "TooShort",
    "VerificationResult",
    "ZERO",
    "ZeroModule",
    "algebra_report",
    "build_ar",
    "canonical_rotation",
    "catalan",
    "classification_csv",
    "classify",
    "core_profile",
    "count_linear_admissible",
    "elementary",
    "enumerate_kupisch",
    "g_dimension",
    "gamma_of",
    "global_dimension",
    "gorenstein_status",
    "gp_modules",
    "in_core",
    "is_cm_free",
    "is_gp_fast",
    "is_gp_oracle",
    "main",
    "node_id",
    "peel_filtration",
    "projective_dimension",
    "roof",
    "roofs",
    "rq_to_dot",
    "run_verification",
    "to_dot",
    "x_set",
]
