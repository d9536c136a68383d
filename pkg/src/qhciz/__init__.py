"""Exact and numerical tools for q-deformed rectangular HCIZ integrals.

The package computes character and string expansions of the qHCIZ integral,
the two-legged monotone double Hurwitz numbers behind its topological
expansion, genus free energies and concentration ratios, with independent
oracles (walk enumeration, exact character sums, Monte Carlo Haar
integration) validating every identity in the pipeline.
"""

from .combinat import Partition, class_size, fits_in_square, partitions_of, zee
from .characters import (
    central_character,
    character,
    dim_sym,
    plancherel_expectation,
)
from .haar_mc import (
    McEstimate,
    mc_bgw,
    mc_orbit_schur,
    mc_rhciz,
    rhciz_reduce,
    sample_haar,
)
from .hurwitz import (
    GradedSeries,
    HurwitzRecord,
    InternalConsistencyError,
    SeriesKey,
    build_disconnected,
    connected_table,
    ones_free_energy_table,
    series_exp,
    series_log,
    simple_series_ratio_scan,
)
from .integrals import (
    EvalPoint,
    EvalResult,
    ModelParams,
    auto_d_max,
    bgw_character_eval,
    concentration_ratio,
    concentration_scan,
    free_energy_candidate,
    ones_concentration_deviation,
    qhciz_character_eval,
    qhciz_string_eval,
    rhciz_character_eval,
    rhciz_dimension_eval,
    string_coefficient,
    string_coefficient_square,
    truncation_bound,
)
from .symfun import (
    complete_homogeneous_eval,
    content_h,
    content_poly,
    power_sum_eval,
    schur_eval,
    schur_principal,
)
from .walks import WalkSpec, count_simple_connected, count_walks

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
