"""Points of plane curves over F_p in small rectangles: exact counts,
pattern statistics, windowed moments and their binomial/Gaussian models."""

from .counting import (PatternDefect, PatternSpec, ShiftedCurve, build_shifted_curve,
                       count_in_rectangle, count_patterns, count_shifted_points,
                       main_term_defect)
from .curve import (ConditionOneResult, PlaneCurve, RamificationReport,
                    check_condition_one, enumerate_points, fiber_count,
                    find_completely_ramified)
from .distribution import (BoxCountHistogram, DistributionReport, box_count_histogram,
                           distribution_report, ks_statistic, moments_from_histogram,
                           normal_cdf)
from .errors import CurveboxError, DomainError, ParseError, UsageError
from .intervals import CyclicInterval, Rectangle
from .lemmas import DefectRecord, translate_lemma_search, weil_defect
from .moments import (MomentReport, MomentSpec, binomial_moment_def,
                      binomial_moment_stirling, empirical_moment, gaussian_nu,
                      moment_report, stirling2)
from .poly import (BivariatePoly, UnivariatePoly, parse_poly, poly_eval,
                   shift_substitute, substitute_x, univariate_roots)
from .prime_field import FieldElement, PrimeModulus, fe_add, fe_inv, fe_mul, is_prime

__all__ = [
    "PatternDefect",
    "PatternSpec",
    "ShiftedCurve",
    "build_shifted_curve",
    "count_in_rectangle",
    "count_patterns",
    "count_shifted_points",
    "main_term_defect",
    "ConditionOneResult",
    "PlaneCurve",
    "RamificationReport",
    "check_condition_one",
    "enumerate_points",
    "fiber_count",
    "find_completely_ramified",
    "BoxCountHistogram",
    "DistributionReport",
    "box_count_histogram",
    "distribution_report",
    "ks_statistic",
    "moments_from_histogram",
    "normal_cdf",
    "CurveboxError",
    "DomainError",
    "ParseError",
    "UsageError",
    "CyclicInterval",
    "Rectangle",
    "DefectRecord",
    "translate_lemma_search",
    "weil_defect",
    "MomentReport",
    "MomentSpec",
    "binomial_moment_def",
    "binomial_moment_stirling",
    "empirical_moment",
    "gaussian_nu",
    "moment_report",
    "stirling2",
    "BivariatePoly",
    "UnivariatePoly",
    "parse_poly",
    "poly_eval",
    "shift_substitute",
    "substitute_x",
    "univariate_roots",
    "FieldElement",
    "PrimeModulus",
    "fe_add",
    "fe_inv",
    "fe_mul",
    "is_prime",
]

__version__ = "0.1.0"
