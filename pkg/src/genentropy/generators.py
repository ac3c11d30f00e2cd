"""
Generators of pseudo-additions and quasi-linear means.

Two function classes appear throughout:

* a pseudo-addition generator ``h`` (increasing, ``h(0) = 0``) which turns
  ordinary addition into ``u (+) v = h(h^-1(u) + h^-1(v))``;
* a mean generator ``g`` (continuous, invertible) which defines the
  Kolmogorov-Nagumo mean ``g^-1(sum_k w_k g(x_k))``.

Both classes are affine or base-2 exponential.  All exponentials use base 2
so that entropies come out in bits.

Mapping of mean-generator roles onto :class:`Exp`
-------------------------------------------------

========================================  ==================================
generator                                 representation
========================================  ==================================
``c*x + b``                               ``Affine(c, b)``
``(d*2**(lam*x) - 1)/gamma``              ``Exp(d, gamma, lam)``
``-c*x`` (additive-entropy class)         ``Affine(-c, 0)``
``(2**(-lam*x) - 1)/gamma``               ``Exp(1, gamma, -lam)``
``f(-x - y)`` for ``f = Exp(d, g, lam)``  ``Exp(d*2**(-lam*y), g, -lam)``
``f(-x - y)`` for ``f = Affine(c, b)``    ``Affine(-c, b - c*y)``
========================================  ==================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .distributions import as_array
from .errors import DomainError, RangeError

__all__ = [
    "Linear",
    "GammaExp",
    "PseudoAddGenerator",
    "Affine",
    "Exp",
    "MeanGenerator",
    "h_eval",
    "h_invert",
    "gamma_add",
    "induced_add",
    "mean_eval",
    "mean_invert",
    "kn_mean",
    "shifted",
    "means_agree",
    "generator_to_dict",
    "generator_from_dict",
]

LN2 = math.log(2.0)
# Largest |exponent| (natural log units) before exp overflows a double.
_EXP_LIMIT = 709.78


@dataclass(frozen=True)
class Linear:
    """``h(x) = a*x`` with ``a > 0``."""

    a: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise DomainError(f"linear generator needs a > 0, got {self.a!r}")


@dataclass(frozen=True)
class GammaExp:
    """``h(x) = (2**(lam*x) - 1)/gamma`` with ``lam*gamma > 0``.

    The induced pseudo-addition is ``u + v + gamma*u*v`` whatever ``lam``.
    """

    lam: float
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and math.isfinite(self.gamma)):
            raise DomainError("generator parameters must be finite")
        if self.lam == 0 or not self.lam * self.gamma > 0:
            raise DomainError(
                f"gamma-exponential generator needs lam != 0 and lam*gamma > 0, "
                f"got lam={self.lam!r}, gamma={self.gamma!r}"
            )


PseudoAddGenerator = Union[Linear, GammaExp]


@dataclass(frozen=True)
class Affine:
    """Mean generator ``g(x) = c*x + b``; every choice gives the arithmetic mean."""

    c: float = 1.0
    b: float = 0.0

    def __post_init__(self):
        if self.c == 0 or not math.isfinite(self.c) or not math.isfinite(self.b):
            raise DomainError(f"affine generator needs finite c != 0, got c={self.c!r}")

    def affine(self, c: float, b: float) -> "Affine":
        """Generator ``c*g + b``."""
        return Affine(c * self.c, c * self.b + b)


@dataclass(frozen=True)
class Exp:
    """Mean generator ``g(x) = (d*2**(lam*x) - 1)/gamma``."""

    d: float = 1.0
    gamma: float = 1.0
    lam: float = 1.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.d, self.gamma, self.lam)):
            raise DomainError("generator parameters must be finite")
        if self.d == 0 or self.gamma == 0 or self.lam == 0:
            raise DomainError(
                f"exponential generator needs d, gamma, lam != 0, "
                f"got d={self.d!r}, gamma={self.gamma!r}, lam={self.lam!r}"
            )

    def affine(self, c: float, b: float) -> "Exp":
        """Generator ``c*g + b``, rewritten in the same exponential form."""
        denom = c - b * self.gamma
        if c == 0 or denom == 0:
            raise DomainError("affine image is not an invertible exponential generator")
        return Exp(d=c * self.d / denom, gamma=self.gamma / denom, lam=self.lam)


MeanGenerator = Union[Affine, Exp]


def _checked_exponent(t):
    """Return the exponent ``t``; raise ``RangeError`` if ``2**t`` overflows."""
    t = np.asarray(t, dtype=float)
    if np.any(t * LN2 > _EXP_LIMIT):
        raise RangeError("exponent overflow in 2**x")
    return t


def h_eval(h: PseudoAddGenerator, x):
    """Evaluate a pseudo-addition generator (scalar or array)."""
    if isinstance(h, Linear):
        out = h.a * np.asarray(x, dtype=float)
    elif isinstance(h, GammaExp):
        t = _checked_exponent(h.lam * np.asarray(x, dtype=float))
        out = np.expm1(t * LN2) / h.gamma
    else:
        raise DomainError(f"not a pseudo-addition generator: {h!r}")
    return out if out.ndim else float(out)


def h_invert(h: PseudoAddGenerator, y):
    """Inverse of :func:`h_eval`; for ``GammaExp`` needs ``gamma*y + 1 > 0``."""
    y = np.asarray(y, dtype=float)
    if isinstance(h, Linear):
        out = y / h.a
    elif isinstance(h, GammaExp):
        gy = h.gamma * y
        if np.any(~(gy > -1)):
            raise DomainError("value outside the range of the generator (gamma*y + 1 <= 0)")
        out = np.log1p(gy) / (h.lam * LN2)
    else:
        raise DomainError(f"not a pseudo-addition generator: {h!r}")
    return out if out.ndim else float(out)


def gamma_add(u, v, gamma: float):
    """``u + v + gamma*u*v``."""
    return u + v + gamma * (u * v)  # u*v first: exactly commutative


def induced_add(h: PseudoAddGenerator, u, v):
    """``h(h^-1(u) + h^-1(v))``."""
    return h_eval(h, np.add(h_invert(h, u), h_invert(h, v)))


def mean_eval(g: MeanGenerator, x):
    x = np.asarray(x, dtype=float)
    if isinstance(g, Affine):
        out = g.c * x + g.b
    elif isinstance(g, Exp):
        out = (g.d * np.exp2(_checked_exponent(g.lam * x)) - 1.0) / g.gamma
    else:
        raise DomainError(f"not a mean generator: {g!r}")
    return out if out.ndim else float(out)


def mean_invert(g: MeanGenerator, y):
    y = np.asarray(y, dtype=float)
    if isinstance(g, Affine):
        out = (y - g.b) / g.c
    elif isinstance(g, Exp):
        arg = (g.gamma * y + 1.0) / g.d
        if np.any(~(arg > 0)):
            raise DomainError("value outside the range of the mean generator")
        out = np.log2(arg) / g.lam
    else:
        raise DomainError(f"not a mean generator: {g!r}")
    return out if out.ndim else float(out)


def kn_mean(g: MeanGenerator, weights, values):
    """Kolmogorov-Nagumo mean ``g^-1(sum_k w_k g(x_k))`` along the last axis.

    Entries with zero weight are skipped entirely, whatever their value (so
    absent conditionals may be passed as NaN).  For the exponential class the
    sum is evaluated relative to the entry with the largest ``lam*x``, which
    cannot overflow; ``d`` and ``gamma`` cancel and are not used.  The result
    is clipped to the range of the supported values.
    """
    w = as_array(weights)
    x = np.asarray(values, dtype=float)
    if w.shape != x.shape:
        raise DomainError(f"weights {w.shape} and values {x.shape} differ in shape")
    live = w > 0
    xs = np.where(live, x, 0.0)
    if np.any(~np.isfinite(xs)):
        raise DomainError("values with positive weight must be finite")
    lo = np.where(live, x, np.inf).min(axis=-1)
    hi = np.where(live, x, -np.inf).max(axis=-1)

    if isinstance(g, Affine):
        out = (w * xs).sum(axis=-1)
    elif isinstance(g, Exp):
        t = np.where(live, g.lam * xs, -np.inf)
        k = np.argmax(t, axis=-1)
        x_ref = np.take_along_axis(xs, k[..., None], axis=-1)
        z = np.where(live, g.lam * (xs - x_ref), -np.inf)
        s = (w * np.exp2(z)).sum(axis=-1)
        out = x_ref[..., 0] + np.log2(s) / g.lam
    else:
        raise DomainError(f"not a mean generator: {g!r}")
    out = np.clip(out, lo, hi)
    return out if out.ndim else float(out)


def shifted(g: MeanGenerator, y: float) -> MeanGenerator:
    """The reflected, shifted generator ``x -> g(-x - y)``."""
    if isinstance(g, Affine):
        return Affine(-g.c, g.b - g.c * y)
    if isinstance(g, Exp):
        t = -g.lam * y
        if abs(t) * LN2 > _EXP_LIMIT:
            raise RangeError("shift too large for the exponential generator")
        return Exp(d=g.d * 2.0**t, gamma=g.gamma, lam=-g.lam)
    raise DomainError(f"not a mean generator: {g!r}")


def means_agree(
    g1: MeanGenerator,
    g2: MeanGenerator,
    trials: int = 1000,
    tol: float = 1e-10,
    seed: int = 0,
) -> tuple[bool, dict]:
    """Search for inputs on which two generators give different means.

    Weights are Dirichlet(1, ..., 1) of dimension 2-6 and values are uniform
    on ``[0, 10]``.  Returns ``(agree, witness)`` where the witness holds the
    draw with the largest absolute difference.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    worst = {"gap": -1.0}
    for n in range(2, 7):
        count = trials // 5 + (1 if n - 2 < trials % 5 else 0)
        if count == 0:
            continue
        w = rng.dirichlet(np.ones(n), size=count)
        x = rng.uniform(0.0, 10.0, size=(count, n))
        gap = np.abs(kn_mean(g1, w, x) - kn_mean(g2, w, x))
        i = int(np.argmax(gap))
        if gap[i] > worst["gap"]:
            worst = {
                "gap": float(gap[i]),
                "weights": w[i].tolist(),
                "values": x[i].tolist(),
            }
    return worst["gap"] <= tol, worst


_VARIANTS = {
    "linear": (Linear, ("a",)),
    "gamma_exp": (GammaExp, ("lam", "gamma")),
    "affine": (Affine, ("c", "b")),
    "exp": (Exp, ("d", "gamma", "lam")),
}


def generator_to_dict(g) -> dict:
    for name, (cls, fields) in _VARIANTS.items():
        if type(g) is cls:
            out = {"variant": name}
            out.update({f: float(getattr(g, f)) for f in fields})
            return out
    raise DomainError(f"not a generator: {g!r}")


def generator_from_dict(d: dict):
    try:
        cls, fields = _VARIANTS[d["variant"]]
    except (KeyError, TypeError):
        raise DomainError(f"unknown generator description {d!r}") from None
    missing = [f for f in fields if f not in d]
    if missing:
        raise DomainError(f"generator {d['variant']!r} is missing {missing}")
    return cls(**{f: float(d[f]) for f in fields})
