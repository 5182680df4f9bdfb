"""unitextremes: extremes of a random number of i.i.d. variables on [0, 1].

The library evaluates, samples and estimates the family of distributions
that arise as the maximum or minimum of N i.i.d. draws on the unit
interval, where N is itself random.  Closed forms (geometric, correlated
geometric, truncated Poisson and Zipf counts over uniform, Beta(2,2),
arcsine and Topp-Leone inputs) are cross-checked against series,
quadrature and Monte Carlo oracles.
"""

from ._kernels import active_backend
from .compound import ExtremeModel, Kind
from .closedforms import (
    CATALOGUE_TAGS,
    CSUG,
    CatalogueModel,
    GeomArcsine,
    GeomBeta22,
    GeomToppLeone,
    PoissonArcsine,
    PoissonBeta22,
    PoissonToppLeone,
    SUG,
    UniformPoisson,
    ZipfUniform,
    csug_mean_var,
    csug_moment,
    csug_sample,
    from_tag,
    sug_mean_var,
    sug_moment,
    uniform_poisson_stats,
)
from .counts import Geometric, ShiftedGeometric, TruncatedPoisson, Zipf, riemann_zeta
from .estimate import (
    EstimateResult,
    Method,
    Sample,
    csug_mle,
    moment_inversion,
    sug_mle_numeric,
)
from .inputs import Arcsine, Beta22, ToppLeone, Uniform
from .numerics import (
    BudgetExceededError,
    DEFAULT_TOLERANCE,
    Tolerance,
    integrate,
    maximize_1d,
    sum_series,
)
from .rng import RandomSource

__version__ = "0.1.0"

__all__ = [
    "ExtremeModel",
    "Kind",
    "CatalogueModel",
    "CATALOGUE_TAGS",
    "from_tag",
    "SUG",
    "CSUG",
    "UniformPoisson",
    "ZipfUniform",
    "GeomBeta22",
    "PoissonBeta22",
    "GeomArcsine",
    "PoissonArcsine",
    "GeomToppLeone",
    "PoissonToppLeone",
    "sug_moment",
    "sug_mean_var",
    "csug_moment",
    "csug_mean_var",
    "uniform_poisson_stats",
    "csug_sample",
    "Uniform",
    "Beta22",
    "Arcsine",
    "ToppLeone",
    "Geometric",
    "ShiftedGeometric",
    "TruncatedPoisson",
    "Zipf",
    "riemann_zeta",
    "Sample",
    "EstimateResult",
    "Method",
    "csug_mle",
    "sug_mle_numeric",
    "moment_inversion",
    "RandomSource",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "BudgetExceededError",
    "integrate",
    "sum_series",
    "maximize_1d",
    "active_backend",
    "__version__",
]
