"""Generalized entropies, their pseudo-additive algebra, and axiom checks."""

from .distributions import (
    JointDist,
    ProbDist,
    decompose,
    direct_product,
    escort,
    expand_zero,
    make_dist,
    uniform,
)
from .entropies import (
    Biparametric,
    Composition,
    Gaussian,
    Generalized,
    Nath,
    Renyi,
    Shannon,
    SharmaMittal,
    Tsallis,
    biparametric,
    conditional,
    gaussian_entropy,
    generalized,
    nath,
    renyi,
    shannon,
    sharma_mittal,
    tsallis,
)
from .errors import DomainError, EntropyError, RangeError
from .generators import (
    Affine,
    Exp,
    GammaExp,
    Linear,
    gamma_add,
    h_eval,
    h_invert,
    induced_add,
    kn_mean,
    means_agree,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EntropyError",
    "RangeError",
    "JointDist",
    "ProbDist",
    "decompose",
    "direct_product",
    "escort",
    "expand_zero",
    "make_dist",
    "uniform",
    "Biparametric",
    "Composition",
    "Gaussian",
    "Generalized",
    "Nath",
    "Renyi",
    "Shannon",
    "SharmaMittal",
    "Tsallis",
    "biparametric",
    "conditional",
    "gaussian_entropy",
    "generalized",
    "nath",
    "renyi",
    "shannon",
    "sharma_mittal",
    "tsallis",
    "Affine",
    "Exp",
    "GammaExp",
    "Linear",
    "gamma_add",
    "h_eval",
    "h_invert",
    "induced_add",
    "kn_mean",
    "means_agree",
]
