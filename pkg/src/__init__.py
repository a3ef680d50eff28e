"""
k-Dyck paths bounded below by a horizontal line: exact counts, bijections,
strip generating functions and the k = 1 first-arrival law.
"""

from .analysis.distribution_k1 import DistributionTable, finite_dist, limit_dist, mean_convergence
from .core.config import Settings, get_settings
from .core.exceptions import KDyckError
from .paths.bijections import from_tuple, split_fg, to_tuple
from .paths.core_paths import StepSeq, is_kt_dyck, parameter_j, parse_path
from .series.closed_forms import count_general, count_simple, d_poly, ratio_report
from .series.strip_solver import StripSpec, phi_series_cramer, phi_series_dp

__version__ = "0.1.0"

__all__ = [
    "DistributionTable",
    "finite_dist",
    "limit_dist",
    "mean_convergence",
    "Settings",
    "get_settings",
    "KDyckError",
    "from_tuple",
    "split_fg",
    "to_tuple",
    "StepSeq",
    "is_kt_dyck",
    "parameter_j",
    "parse_path",
    "count_general",
    "count_simple",
    "d_poly",
    "ratio_report",
    "StripSpec",
    "phi_series_cramer",
    "phi_series_dp",
]
