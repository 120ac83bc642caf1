from ..model import delta
from .bounds import AnalysisReport, LowerBounds, bound_suite, lower_bounds
from .lemma7 import LemmaParams, lemma7_check, lemma7_params, route_tree_cost
from .ratio import (RatioPoint, crossing_alpha, crossing_profile, eta, jansen_ratio,
                    ratio_closed_form, ratio_grid_search, tau)
