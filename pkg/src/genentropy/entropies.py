"""
Closed-form entropies and their conditional (composition) forms.

Every public function accepts either a :class:`~genentropy.ProbDist` (and
returns a ``float``) or an array whose last axis is a distribution (and
returns an array over the leading axes).  Results are in bits.

Families
--------
shannon         tau * sum p log2 p
nath            (1/lam) log2 sum p**alpha, or Shannon when lam == 0
renyi           nath with lam = 1 - alpha, tau = -1
tsallis         (sum p**alpha - 1)/gamma, or Shannon when gamma == 0
sharma_mittal   ([sum p**alpha]**((q-1)/(alpha-1)) - 1)/gamma and its limits
gaussian        the alpha = 1 member of sharma_mittal
generalized     h(nath(P)) for a pseudo-addition generator h
biparametric    -(1/lam) log2(sum p**(alpha - tau*lam) / sum p**alpha)
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Union

import numpy as np

from .distributions import JointDist, as_array, escort, split_rows
from .errors import DomainError
from .generators import (
    Affine,
    Exp,
    GammaExp,
    Linear,
    MeanGenerator,
    PseudoAddGenerator,
    gamma_add,
    generator_from_dict,
    generator_to_dict,
    h_eval,
    h_invert,
    induced_add,
    kn_mean,
)

__all__ = [
    "BRANCH_EPS",
    "shannon",
    "nath",
    "renyi",
    "tsallis",
    "sharma_mittal",
    "gaussian_entropy",
    "generalized",
    "biparametric",
    "conditional",
    "Composition",
    "Shannon",
    "Nath",
    "Renyi",
    "Tsallis",
    "SharmaMittal",
    "Gaussian",
    "Generalized",
    "Biparametric",
    "EntropyParams",
    "params_to_dict",
    "params_from_dict",
]

LN2 = math.log(2.0)
# Parameters closer than this to 1 use the limiting (logarithmic) branch.
BRANCH_EPS = 1e-9
_TINY = np.finfo(float).tiny


def _out(x):
    x = np.asarray(x, dtype=float) + 0.0  # drops negative zero
    return float(x) if x.ndim == 0 else x


# -- kernels (last axis is the outcome axis) ---------------------------------


def _plogp(p: np.ndarray) -> np.ndarray:
    """``sum p log2 p`` with ``0 log 0 = 0``."""
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(p > 0, p * np.log2(p), 0.0)
    return t.sum(axis=-1)


def _power_sum_m1(p: np.ndarray, alpha: float) -> np.ndarray:
    """``sum p**alpha - 1`` as ``sum p*(p**(alpha-1) - 1)``, free of cancellation."""
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        e = (alpha - 1.0) * np.log(p)
        t = np.where(e < 700.0, p * np.expm1(np.minimum(e, 700.0)), p**alpha - p)
        t = np.where(p > 0, t, 0.0)
    return t.sum(axis=-1)


def _log2_power_sum(p: np.ndarray, alpha: float) -> np.ndarray:
    """``log2 sum p**alpha``.

    Near ``alpha = 1`` the sum is formed as ``1 + (sum - 1)`` through
    ``log1p``; elsewhere directly, with a max-shift fallback where the plain
    sum underflows.
    """
    if abs(alpha - 1.0) < 0.5:
        return np.log1p(_power_sum_m1(p, alpha)) / LN2
    with np.errstate(divide="ignore", under="ignore"):
        s = (p**alpha).sum(axis=-1)
        bad = ~(s >= _TINY)
        if not np.any(bad):
            return np.log2(s)
        top = p.max(axis=-1, keepdims=True)
        shifted = alpha * np.log2(top[..., 0]) + np.log2(((p / top) ** alpha).sum(axis=-1))
        return np.where(bad, shifted, np.log2(np.where(bad, 1.0, s)))


def _near_one(x: float) -> bool:
    return abs(x - 1.0) < BRANCH_EPS


# -- parameter sets ----------------------------------------------------------


@dataclass(frozen=True)
class Composition:
    """How a family combines a marginal entropy with a conditional one.

    ``system`` is one of SK, NSK, ASK, GSK, SM.  The conditional entropy is
    a mean of the row entropies under escort weights of order ``alpha``:

    * SK, ASK: linear mean;
    * NSK: Kolmogorov-Nagumo mean generated by ``mean``;
    * GSK, SM: ``h`` applied to the ``mean``-generated mean of ``h^-1`` values.

    The marginal and conditional parts are joined by ordinary addition (SK,
    NSK), by ``u + v + gamma*u*v`` (ASK), or by the pseudo-addition that ``h``
    induces (GSK, SM).
    """

    system: str
    alpha: float = 1.0
    mean: MeanGenerator | None = None
    h: PseudoAddGenerator | None = None
    gamma: float = 0.0

    @property
    def pseudo_additive(self) -> bool:
        if self.system == "ASK":
            return self.gamma != 0
        if self.system in ("GSK", "SM"):
            return isinstance(self.h, GammaExp)
        return False

    def weights(self, marginal):
        return escort(marginal, self.alpha)

    def conditional_mean(self, weights, values):
        w = as_array(weights)
        v = np.asarray(values, dtype=float)
        if self.system in ("SK", "ASK"):
            return _out(np.where(w > 0, w * v, 0.0).sum(axis=-1))
        if self.mean is None:
            raise DomainError(f"{self.system} composition needs a mean generator")
        if self.system == "NSK":
            return kn_mean(self.mean, w, v)
        if self.system in ("GSK", "SM"):
            h = self.h or Linear(1.0)
            inner = kn_mean(self.mean, w, np.where(w > 0, h_invert(h, np.where(w > 0, v, 0.0)), 0.0))
            return h_eval(h, inner)
        raise DomainError(f"unknown composition system {self.system!r}")

    def add(self, u, v):
        if self.system in ("SK", "NSK"):
            return u + v
        if self.system == "ASK":
            return gamma_add(u, v, self.gamma)
        if self.system in ("GSK", "SM"):
            return u + v if self.h is None else induced_add(self.h, u, v)
        raise DomainError(f"unknown composition system {self.system!r}")


@dataclass(frozen=True)
class Shannon:
    tau: float = -1.0

    family = "shannon"

    def __post_init__(self):
        if not self.tau < 0:
            raise DomainError(f"Shannon entropy needs tau < 0, got {self.tau!r}")

    def __call__(self, P):
        return _out(self.tau * _plogp(as_array(P)))

    def composition(self) -> Composition:
        return Composition("SK")


@dataclass(frozen=True)
class Nath:
    """Two-parameter family; ``lam == 0`` is Shannon with scale ``tau``."""

    tau: float = -1.0
    lam: float = 0.0
    alpha: float = 1.0

    family = "nath"

    def __post_init__(self):
        if self.lam == 0:
            if not self.tau < 0:
                raise DomainError(f"Nath entropy with lam = 0 needs tau < 0, got {self.tau!r}")
            if self.alpha != 1:
                raise DomainError("Nath entropy with lam = 0 requires alpha = 1")
        else:
            if not self.alpha > 0:
                raise DomainError(f"Nath entropy needs alpha > 0, got {self.alpha!r}")
            if not self.lam * (1.0 - self.alpha) > 0:
                raise DomainError(
                    f"Nath entropy needs lam*(1 - alpha) > 0, got lam={self.lam!r}, alpha={self.alpha!r}"
                )

    def __call__(self, P):
        p = as_array(P)
        if self.lam == 0:
            return _out(self.tau * _plogp(p))
        return _out(_log2_power_sum(p, self.alpha) / self.lam)

    def mean_generator(self) -> MeanGenerator:
        return Affine() if self.lam == 0 else Exp(lam=self.lam)

    def composition(self) -> Composition:
        return Composition("NSK", alpha=self.alpha, mean=self.mean_generator())


@dataclass(frozen=True)
class Renyi:
    alpha: float

    family = "renyi"

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"Renyi entropy needs alpha > 0, got {self.alpha!r}")

    def __call__(self, P):
        p = as_array(P)
        if _near_one(self.alpha):
            return _out(-_plogp(p))
        return _out(_log2_power_sum(p, self.alpha) / (1.0 - self.alpha))

    def composition(self) -> Composition:
        mean = Affine() if _near_one(self.alpha) else Exp(lam=1.0 - self.alpha)
        return Composition("NSK", alpha=self.alpha, mean=mean)


@dataclass(frozen=True)
class Tsallis:
    """Havrda-Charvat-Tsallis family; ``gamma == 0`` is Shannon with scale ``tau``.

    ``gamma = 1 - alpha`` is the Tsallis convention and
    ``gamma = 2**(1 - alpha) - 1`` the Havrda-Charvat one.
    """

    alpha: float
    gamma: float
    tau: float = -1.0

    family = "tsallis"

    def __post_init__(self):
        if self.gamma == 0:
            if not self.tau < 0:
                raise DomainError(f"Tsallis entropy with gamma = 0 needs tau < 0, got {self.tau!r}")
        else:
            if not self.alpha > 0:
                raise DomainError(f"Tsallis entropy needs alpha > 0, got {self.alpha!r}")
            if not self.gamma * (1.0 - self.alpha) > 0:
                raise DomainError(
                    f"Tsallis entropy needs gamma*(1 - alpha) > 0, "
                    f"got gamma={self.gamma!r}, alpha={self.alpha!r}"
                )

    @property
    def convention(self) -> str | None:
        if self.gamma == 0:
            return None
        if math.isclose(self.gamma, 1.0 - self.alpha, rel_tol=1e-12):
            return "tsallis"
        if math.isclose(self.gamma, 2.0 ** (1.0 - self.alpha) - 1.0, rel_tol=1e-12):
            return "havrda-charvat"
        return None

    def __call__(self, P):
        p = as_array(P)
        if self.gamma == 0:
            return _out(self.tau * _plogp(p))
        return _out(_power_sum_m1(p, self.alpha) / self.gamma)

    def composition(self) -> Composition:
        # The linear-generator branch only composes with plain weights.
        alpha = 1.0 if self.gamma == 0 else self.alpha
        return Composition("ASK", alpha=alpha, gamma=self.gamma)


@dataclass(frozen=True)
class SharmaMittal:
    """Sharma-Mittal family with its Shannon, Gaussian and Renyi limits.

    ``gamma = 2**(1 - q) - 1`` is the Sharma-Mittal convention and
    ``gamma = 1 - q`` the Frank-Daffertshofer one; ``gamma`` is ignored
    when ``q == 1``.
    """

    q: float
    alpha: float
    gamma: float = 0.0

    family = "sharma_mittal"

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"Sharma-Mittal entropy needs alpha > 0, got {self.alpha!r}")
        if not _near_one(self.q) and not self.gamma * (1.0 - self.q) > 0:
            raise DomainError(
                f"Sharma-Mittal entropy needs gamma*(1 - q) > 0, got gamma={self.gamma!r}, q={self.q!r}"
            )

    @property
    def convention(self) -> str | None:
        if _near_one(self.q):
            return None
        if math.isclose(self.gamma, 2.0 ** (1.0 - self.q) - 1.0, rel_tol=1e-12):
            return "sharma-mittal"
        if math.isclose(self.gamma, 1.0 - self.q, rel_tol=1e-12):
            return "frank-daffertshofer"
        return None

    def __call__(self, P):
        p = as_array(P)
        q_one, a_one = _near_one(self.q), _near_one(self.alpha)
        if q_one and a_one:
            return _out(-_plogp(p))
        if a_one:
            return _out(np.expm1((self.q - 1.0) * _plogp(p) * LN2) / self.gamma)
        if q_one:
            return _out(_log2_power_sum(p, self.alpha) / (1.0 - self.alpha))
        expo = (self.q - 1.0) / (self.alpha - 1.0)
        return _out(np.expm1(expo * _log2_power_sum(p, self.alpha) * LN2) / self.gamma)

    def to_generalized(self) -> "Generalized":
        h = Linear(1.0) if _near_one(self.q) else GammaExp(1.0 - self.q, self.gamma)
        if _near_one(self.alpha):
            inner = Nath(tau=-1.0, lam=0.0, alpha=1.0)
        else:
            inner = Nath(tau=-1.0, lam=1.0 - self.alpha, alpha=self.alpha)
        return Generalized(h, inner)

    def composition(self) -> Composition:
        return self.to_generalized().composition()


@dataclass(frozen=True)
class Gaussian:
    """``(prod_k p_k**((q-1) p_k) - 1)/gamma``, the ``alpha = 1`` Sharma-Mittal member."""

    q: float
    gamma: float

    family = "gaussian"

    def __post_init__(self):
        if _near_one(self.q):
            raise DomainError("Gaussian entropy needs q != 1")
        if not self.gamma * (1.0 - self.q) > 0:
            raise DomainError(
                f"Gaussian entropy needs gamma*(1 - q) > 0, got gamma={self.gamma!r}, q={self.q!r}"
            )

    def __call__(self, P):
        p = as_array(P)
        # log of the product, in nats, straight from natural logs
        with np.errstate(divide="ignore", invalid="ignore"):
            log_prod = np.where(p > 0, (self.q - 1.0) * p * np.log(p), 0.0).sum(axis=-1)
        return _out(np.expm1(log_prod) / self.gamma)

    def composition(self) -> Composition:
        return SharmaMittal(self.q, 1.0, self.gamma).composition()


@dataclass(frozen=True)
class Generalized:
    """``h(N(P))`` for a pseudo-addition generator ``h`` and Nath entropy ``N``."""

    h: PseudoAddGenerator
    nath: Nath = field(default_factory=Nath)

    family = "generalized"

    def __post_init__(self):
        if not isinstance(self.h, (Linear, GammaExp)):
            raise DomainError(f"not a pseudo-addition generator: {self.h!r}")
        if not isinstance(self.nath, Nath):
            raise DomainError(f"not a Nath parameter set: {self.nath!r}")

    def __call__(self, P):
        return _out(h_eval(self.h, self.nath(P)))

    def composition(self) -> Composition:
        return Composition("GSK", alpha=self.nath.alpha, mean=self.nath.mean_generator(), h=self.h)


@dataclass(frozen=True)
class Biparametric:
    """Additive family ``-(1/lam) log2(sum p**(alpha - tau*lam) / sum p**alpha)``.

    With ``alpha - tau*lam == 1`` it coincides with ``Nath(tau, lam, alpha)``.
    """

    tau: float
    lam: float
    alpha: float

    family = "biparametric"

    def __post_init__(self):
        if not self.tau < 0:
            raise DomainError(f"biparametric entropy needs tau < 0, got {self.tau!r}")
        if not self.alpha > 0:
            raise DomainError(f"biparametric entropy needs alpha > 0, got {self.alpha!r}")
        if not self.alpha - self.tau * self.lam > 0:
            raise DomainError("biparametric entropy needs alpha - tau*lam > 0")

    def __call__(self, P):
        p = as_array(P)
        if self.lam == 0:
            w = escort(p, self.alpha)
            with np.errstate(divide="ignore", invalid="ignore"):
                t = np.where(w > 0, w * np.log2(p), 0.0)
            return _out(self.tau * t.sum(axis=-1))
        top = _log2_power_sum(p, self.alpha - self.tau * self.lam)
        quotient = -(top - _log2_power_sum(p, self.alpha)) / self.lam
        # The log-ratio is E_w[p**(-tau*lam)] under escort weights w.  When every
        # exponent -tau*lam*ln p is small, log1p/expm1 avoid cancelling two
        # nearly equal log-sums.
        w = escort(p, self.alpha)
        with np.errstate(divide="ignore", invalid="ignore"):
            u = np.where(w > 0, -self.tau * self.lam * np.log(p), 0.0)
        small = np.all(np.abs(u) <= 1.0, axis=-1)
        direct = -np.log1p((w * np.expm1(u)).sum(axis=-1)) / (LN2 * self.lam)
        return _out(np.where(small, direct, quotient))

    def composition(self) -> Composition:
        # Additive on independent products; no conditional mean is known.
        return Composition("NSK", alpha=self.alpha)


EntropyParams = Union[Shannon, Nath, Renyi, Tsallis, SharmaMittal, Gaussian, Generalized, Biparametric]

_CLASSES = {
    cls.family: cls
    for cls in (Shannon, Nath, Renyi, Tsallis, SharmaMittal, Gaussian, Generalized, Biparametric)
}


def params_to_dict(params) -> dict:
    """JSON-friendly description ``{"family": ..., <parameters>}``."""
    if isinstance(params, Generalized):
        return {
            "family": "generalized",
            "h": generator_to_dict(params.h),
            "nath": {k: float(v) for k, v in asdict(params.nath).items()},
        }
    if type(params) in _CLASSES.values():
        out = {"family": params.family}
        out.update({k: float(v) for k, v in asdict(params).items()})
        return out
    describe = getattr(params, "describe", None)
    if describe is not None:
        return describe()
    raise DomainError(f"cannot describe {params!r}")


def params_from_dict(d: dict) -> EntropyParams:
    d = dict(d)
    try:
        cls = _CLASSES[d.pop("family")]
    except KeyError:
        raise DomainError(f"unknown entropy family in {d!r}") from None
    if cls is Generalized:
        return Generalized(generator_from_dict(d["h"]), Nath(**d["nath"]))
    return cls(**d)


# -- public functions --------------------------------------------------------


def shannon(P, tau: float = -1.0):
    """``tau * sum p log2 p`` (``tau < 0``); ``-tau`` times the entropy in bits."""
    return Shannon(tau)(P)


def nath(P, tau: float = -1.0, lam: float = 0.0, alpha: float = 1.0):
    return Nath(tau, lam, alpha)(P)


def renyi(P, alpha: float):
    return Renyi(alpha)(P)


def tsallis(P, alpha: float, gamma: float, tau: float = -1.0):
    return Tsallis(alpha, gamma, tau)(P)


def sharma_mittal(P, q: float, alpha: float, gamma: float = 0.0):
    return SharmaMittal(q, alpha, gamma)(P)


def gaussian_entropy(P, q: float, gamma: float):
    """``(prod_k p_k**((q-1) p_k) - 1)/gamma`` for ``q != 1``, ``gamma*(1-q) > 0``."""
    return Gaussian(q, gamma)(P)


def generalized(P, h: PseudoAddGenerator, nath_params: Nath):
    return Generalized(h, nath_params)(P)


def biparametric(P, tau: float, lam: float, alpha: float):
    return Biparametric(tau, lam, alpha)(P)


def conditional(J, entropy: Callable, composition: Composition | None = None):
    """Conditional entropy ``H(Q|P)`` of a joint under a composition rule.

    Parameters
    ----------
    J : JointDist or array of shape (..., n, m)
        Rows index the conditioning outcome.
    entropy : callable
        Entropy evaluated on each conditional row, usually a parameter set
        such as ``Renyi(2.0)``.
    composition : Composition, optional
        Defaults to ``entropy.composition()``.
    """
    if composition is None:
        composition = entropy.composition()
    r = J.cells if isinstance(J, JointDist) else np.asarray(J, dtype=float)
    if r.ndim < 2:
        raise DomainError("joint distribution must have at least two axes")
    marg, rows = split_rows(r)
    values = np.asarray(entropy(rows), dtype=float)
    return _out(composition.conditional_mean(composition.weights(marg), values))
