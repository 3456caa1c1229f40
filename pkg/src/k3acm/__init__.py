"""Exact-arithmetic workbench for rank-2 aCM bundle numerology on
quartic K3 lattices: integral intersection forms, Riemann-Roch
bookkeeping, the initialized-aCM classifier, bounded constraint
enumerations and step-checked derivation replays.

Everything is integer arithmetic; there are no floats and no tolerances.
"""

from .axioms import AXIOMS, axiom_statement, is_registered
from .classifier import (AcmClassification, AcmStatus, Assumption,
                         AssumptionKind, Effectivity, PencilVerdict, Verdict,
                         acm_companions, derived_assumptions, effectivity,
                         is_elliptic_pencil_class, is_initialized_acm)
from .config import (assumption_from_json, assumption_to_json,
                     config_from_json, config_to_json, data_path, dump_config,
                     load_config, loads_config, shipped_config_names,
                     shipped_quartic_names)
from .errors import (BadDimensionsError, BadParametersError, BoxTooSmallError,
                     ConfigError, ConflictingAssumptionsError,
                     DegenerateFormError, DimensionMismatchError,
                     MalformedScriptError, NegativeDimensionError,
                     NonPositiveAmpleError, NonSymmetricError,
                     NotAcmInputError, NotEffectiveCandidateError,
                     OddK3DiagonalError, OddSquareError, PreconditionError,
                     TrivialClassError, UnsupportedRankError, WorkbenchError,
                     WrongSignatureError)
from .invariants import (AcmDegreeWindow, BundleInvariants, LMInvariants,
                         chern_twist, chi_bundle, chi_line, genus_of,
                         hilbert_ideal_z, hodge_lower, brill_noether,
                         lm_acm_bounds, lm_invariants, twist_chi)
from .lattice import DivClass, Lattice

__version__ = "0.1.0"

__all__ = [
    "AXIOMS", "AcmClassification", "AcmDegreeWindow", "AcmStatus",
    "Assumption", "AssumptionKind", "BadDimensionsError",
    "BadParametersError", "BoxTooSmallError", "BundleInvariants",
    "ConfigError", "ConflictingAssumptionsError", "DegenerateFormError",
    "DimensionMismatchError", "DivClass", "Effectivity", "LMInvariants",
    "Lattice", "MalformedScriptError", "NegativeDimensionError",
    "NonPositiveAmpleError", "NonSymmetricError", "NotAcmInputError",
    "NotEffectiveCandidateError", "OddK3DiagonalError", "OddSquareError",
    "PencilVerdict", "PreconditionError", "TrivialClassError",
    "UnsupportedRankError", "Verdict", "WorkbenchError",
    "WrongSignatureError", "acm_companions", "assumption_from_json",
    "assumption_to_json", "axiom_statement", "brill_noether", "chern_twist",
    "chi_bundle", "chi_line", "config_from_json", "config_to_json",
    "data_path", "derived_assumptions", "dump_config", "effectivity",
    "genus_of", "hilbert_ideal_z", "hodge_lower", "is_elliptic_pencil_class",
    "is_initialized_acm", "is_registered", "lm_acm_bounds", "lm_invariants",
    "load_config", "loads_config", "shipped_config_names",
    "shipped_quartic_names", "twist_chi", "__version__",
]
