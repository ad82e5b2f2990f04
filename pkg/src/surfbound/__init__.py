"""Exact effective bounds for multiple linear systems on surfaces.

A surface enters as a finite model: an integer intersection form of
signature (1, rank-1), a canonical class, and the curves that can appear in
fixed parts and contracted loci. Everything downstream is exact rational
arithmetic: Zariski decompositions, fundamental cycles, obstruction
enumeration, and the n-thresholds for very-ampleness, vanishing, freeness,
contraction, and ring generation of n*A + T.
"""

from .bounds import (
    INFINITY,
    BoundReport,
    ConditionFlags,
    CorrectionDivisor,
    HodgeDefect,
    MatsusakaComparison,
    ObstructionEntry,
    ObstructionQuadratic,
    ObstructionSet,
    RingGeneration,
    SeparatingDivisor,
    ThresholdCheck,
    ThresholdEntry,
    build_bound_report,
    condition_check,
    correction_divisor,
    degree_cap_threshold,
    enumerate_obstructions,
    hodge_defect,
    least_integer_above,
    lr_deficiency,
    matsusaka_compare,
    multiple_gap_bracket,
    obstruction_minimum,
    obstruction_oracle,
    obstruction_quadratic,
    ring_generation_threshold,
    ring_step_threshold,
    separating_divisor,
    theorem_thresholds,
    threshold_holds,
    vanishing_level,
    vanishing_threshold,
)
from .cycles import (
    FundamentalCycle,
    cycle_bruteforce_oracle,
    fundamental_cycle,
    is_rational_configuration,
)
from .errors import (
    AmbiguousDecomposition,
    CalculatorError,
    IntegralityFailure,
    ModelInconsistent,
    NotAmple,
    NotBig,
    NotNefBig,
    NotPseudoEffective,
    OracleMismatch,
    ParseError,
    UnverifiableHypothesis,
    ValidationError,
)
from .surface import CurveClass, DivisorClass, PositivityFlags, SurfaceModel
from .surface_io import (
    fixture_names,
    load_fixture,
    load_surface,
    load_surface_file,
    parse_divisor,
    surface_from_data,
    surface_to_data,
)
from .zariski import (
    H1Correction,
    ZariskiDecomposition,
    h1_correction,
    kappa_is_two,
    zariski_decompose,
    zariski_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "AmbiguousDecomposition",
    "BoundReport",
    "CalculatorError",
    "ConditionFlags",
    "CorrectionDivisor",
    "CurveClass",
    "DivisorClass",
    "FundamentalCycle",
    "H1Correction",
    "HodgeDefect",
    "IntegralityFailure",
    "MatsusakaComparison",
    "ModelInconsistent",
    "NotAmple",
    "NotBig",
    "NotNefBig",
    "NotPseudoEffective",
    "ObstructionEntry",
    "ObstructionQuadratic",
    "ObstructionSet",
    "OracleMismatch",
    "ParseError",
    "PositivityFlags",
    "RingGeneration",
    "SeparatingDivisor",
    "SurfaceModel",
    "ThresholdCheck",
    "ThresholdEntry",
    "UnverifiableHypothesis",
    "ValidationError",
    "ZariskiDecomposition",
    "build_bound_report",
    "condition_check",
    "correction_divisor",
    "cycle_bruteforce_oracle",
    "degree_cap_threshold",
    "enumerate_obstructions",
    "fixture_names",
    "fundamental_cycle",
    "h1_correction",
    "hodge_defect",
    "is_rational_configuration",
    "kappa_is_two",
    "least_integer_above",
    "load_fixture",
    "load_surface",
    "load_surface_file",
    "lr_deficiency",
    "matsusaka_compare",
    "multiple_gap_bracket",
    "obstruction_minimum",
    "obstruction_oracle",
    "obstruction_quadratic",
    "parse_divisor",
    "ring_generation_threshold",
    "ring_step_threshold",
    "separating_divisor",
    "surface_from_data",
    "surface_to_data",
    "theorem_thresholds",
    "threshold_holds",
    "vanishing_level",
    "vanishing_threshold",
    "zariski_decompose",
    "zariski_oracle",
]
