"""Degree distributions of k-connected AB random geometric graphs.

Users (A-points) connect to their k nearest stations (B-points); this
package generates station layouts, measures order-k cell areas, evaluates
and fits the analytic degree/area laws, and runs Monte Carlo degree
experiments including log-normal shadowing on real station data.
"""

__version__ = "0.1.0"

from .errors import DataError, NumericError
from .geometry import (
    CLIPPED,
    TORUS,
    Domain,
    GridSpec,
    PointSet,
    distance,
    gen_hex_grid,
    gen_line_grid,
    gen_poisson,
    gen_uniform,
    spawn_rng,
)
from .knn import NnIndex, ShadowConfig, build_index, k_nearest, k_nearest_shadowed
from .areas import AreaTable, area_samples, estimate_areas_2d, exact_areas_1d
from .analytic import (
    CPE,
    CPG,
    ERLANG_AREA,
    GAMMA_AREA,
    POISSON_DEGREE,
    DistSpec,
    SummaryStats,
    cpe_pmf,
    cpg_pmf,
    coefficient_of_variation,
    erlang_area_pdf,
    gamma_area_pdf_cdf,
    pmf_table,
    poisson_degree_pmf,
)
from .fitting import FitResult, extrapolate_ak, fit_ak, fit_poisson_voronoi_shapes
from .experiment import (
    DegreeHistogram,
    ExperimentConfig,
    ExperimentResult,
    compare,
    degrees_one_replicate,
    run_experiment,
)
from .dataio import (
    BoundingBox,
    StationRecord,
    load_ak_constants,
    load_pointset,
    load_stations,
    write_results,
)

__all__ = [name for name in dir() if not name.startswith("_")]
