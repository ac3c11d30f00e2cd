"""
Points of the probability simplex and joint distributions on a grid.

All objects here are immutable: the underlying arrays are flagged
read-only after construction.  Batched kernels elsewhere in the package
work on plain ``ndarray`` objects whose last axis is the outcome axis;
``ProbDist`` and ``JointDist`` are the validated single-instance types.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "SIMPLEX_TOL",
    "ProbDist",
    "JointDist",
    "make_dist",
    "uniform",
    "escort",
    "direct_product",
    "decompose",
    "expand_zero",
    "as_array",
]

SIMPLEX_TOL = 1e-9


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.flags.writeable = False
    return a


def _check_simplex(a: np.ndarray, what: str) -> None:
    if a.size == 0:
        raise DomainError(f"{what} must be nonempty")
    if not np.all(np.isfinite(a)):
        raise DomainError(f"{what} has non-finite entries")
    if np.any(a < 0):
        raise DomainError(f"{what} has negative entries")
    total = float(a.sum())
    if abs(total - 1.0) > SIMPLEX_TOL:
        raise DomainError(f"{what} sums to {total!r}, not 1 (tolerance {SIMPLEX_TOL})")


class ProbDist:
    """A distribution ``(p_1, ..., p_n)`` on ``n`` outcomes.

    Construct with :func:`make_dist` or directly from a sequence that
    already sums to one within ``SIMPLEX_TOL``.
    """

    __slots__ = ("_p",)

    def __init__(self, probs: Sequence[float] | np.ndarray):
        a = np.asarray(probs, dtype=float)
        if a.ndim != 1:
            raise DomainError(f"expected a 1-D sequence, got shape {a.shape}")
        _check_simplex(a, "distribution")
        self._p = _frozen(a)

    @classmethod
    def _trusted(cls, a: np.ndarray) -> "ProbDist":
        # Internal constructor: renormalize away rounding, skip validation.
        obj = cls.__new__(cls)
        a = np.asarray(a, dtype=float)
        obj._p = _frozen(a / a.sum())
        return obj

    @property
    def probs(self) -> np.ndarray:
        return self._p

    @property
    def n(self) -> int:
        return self._p.shape[0]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[float]:
        return iter(self._p.tolist())

    def __getitem__(self, k):
        return self._p[k]

    def __array__(self, dtype=None, copy=None):
        return self._p if dtype is None else self._p.astype(dtype)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProbDist):
            return NotImplemented
        return np.array_equal(self._p, other._p)

    def __hash__(self) -> int:
        return hash(self._p.tobytes())

    def __repr__(self) -> str:
        return "ProbDist(" + ", ".join(repr(float(x)) for x in self._p) + ")"

    def tolist(self) -> list[float]:
        return self._p.tolist()


class JointDist:
    """An ``n x m`` joint distribution ``r_ij``.

    Row ``i`` collects the outcomes that share the first coordinate, so the
    row sums form the marginal and the normalized rows are the conditionals.
    """

    __slots__ = ("_r",)

    def __init__(self, cells: Sequence[Sequence[float]] | np.ndarray):
        a = np.asarray(cells, dtype=float)
        if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
            raise DomainError(f"expected a nonempty 2-D grid, got shape {a.shape}")
        _check_simplex(a, "joint distribution")
        self._r = _frozen(a)

    @classmethod
    def _trusted(cls, a: np.ndarray) -> "JointDist":
        obj = cls.__new__(cls)
        a = np.asarray(a, dtype=float)
        obj._r = _frozen(a / a.sum())
        return obj

    @property
    def cells(self) -> np.ndarray:
        return self._r

    @property
    def shape(self) -> tuple[int, int]:
        return self._r.shape

    @property
    def n(self) -> int:
        return self._r.shape[0]

    @property
    def m(self) -> int:
        return self._r.shape[1]

    def flatten(self) -> ProbDist:
        return ProbDist._trusted(self._r.ravel())

    def marginal(self) -> ProbDist:
        return ProbDist._trusted(self._r.sum(axis=1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, JointDist):
            return NotImplemented
        return np.array_equal(self._r, other._r)

    def __hash__(self) -> int:
        return hash((self._r.shape, self._r.tobytes()))

    def __repr__(self) -> str:
        return f"JointDist({self._r.tolist()!r})"

    def tolist(self) -> list[list[float]]:
        return self._r.tolist()


def as_array(P) -> np.ndarray:
    """Return the probability array behind ``P``.

    ``ProbDist`` yields its own array. Anything else is converted and
    validated along the last axis, so a 2-D input is treated as a batch of
    distributions.
    """
    if isinstance(P, ProbDist):
        return P.probs
    if isinstance(P, JointDist):
        return P.cells.ravel()
    a = np.asarray(P, dtype=float)
    if a.ndim == 0 or a.shape[-1] == 0:
        raise DomainError("distribution must be nonempty")
    if not np.all(np.isfinite(a)) or np.any(a < 0):
        raise DomainError("distribution entries must be finite and nonnegative")
    if np.any(np.abs(a.sum(axis=-1) - 1.0) > SIMPLEX_TOL):
        raise DomainError("distribution does not sum to 1")
    return a


def make_dist(values: Sequence[float], mode: str = "strict") -> ProbDist:
    """Build a ``ProbDist`` from raw values.

    Parameters
    ----------
    values : sequence of float
        Nonnegative entries.
    mode : {"strict", "renormalize"}
        ``strict`` requires the entries to sum to one within ``SIMPLEX_TOL``;
        ``renormalize`` divides by the sum.
    """
    a = np.asarray(values, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise DomainError("values must be a nonempty 1-D sequence")
    if not np.all(np.isfinite(a)):
        raise DomainError("values must be finite")
    if np.any(a < 0):
        raise DomainError("values must be nonnegative")
    if mode == "strict":
        return ProbDist(a)
    if mode == "renormalize":
        total = a.sum()
        if total <= 0:
            raise DomainError("cannot renormalize an all-zero vector")
        return ProbDist._trusted(a / total)
    raise DomainError(f"unknown mode {mode!r}")


def uniform(n: int) -> ProbDist:
    if int(n) != n or n < 1:
        raise DomainError(f"uniform distribution needs n >= 1, got {n!r}")
    return ProbDist._trusted(np.full(int(n), 1.0 / n))


def _escort_array(p: np.ndarray, alpha: float) -> np.ndarray:
    """Escort transform along the last axis, shifted by the row maximum."""
    if alpha == 1:
        return p / p.sum(axis=-1, keepdims=True)
    with np.errstate(divide="ignore"):
        logp = np.log(p)
    shift = logp.max(axis=-1, keepdims=True)
    w = np.exp(alpha * (logp - shift))
    return w / w.sum(axis=-1, keepdims=True)


def escort(P, alpha: float):
    """Escort distribution ``p_k**alpha / sum_i p_i**alpha``.

    Zero entries stay zero. Accepts a ``ProbDist`` (returns a ``ProbDist``)
    or a batch array (returns an array).
    """
    if not alpha > 0:
        raise DomainError(f"escort exponent must be positive, got {alpha!r}")
    if isinstance(P, ProbDist):
        return ProbDist._trusted(_escort_array(P.probs, alpha))
    return _escort_array(as_array(P), alpha)


def direct_product(P: ProbDist, Q: ProbDist) -> JointDist:
    """Independent joint ``r_ij = p_i * q_j``."""
    return JointDist._trusted(np.outer(as_array(P), as_array(Q)))


def decompose(J: JointDist) -> tuple[ProbDist, list[ProbDist | None]]:
    """Split a joint into its marginal and row conditionals.

    Rows carrying zero mass have no conditional; they are returned as
    ``None`` and skipped by every conditional mean.
    """
    r = J.cells
    marg = r.sum(axis=1)
    conds: list[ProbDist | None] = []
    for k in range(r.shape[0]):
        conds.append(None if marg[k] == 0 else ProbDist._trusted(r[k] / marg[k]))
    return ProbDist._trusted(marg), conds


def split_rows(r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Batched ``decompose`` for arrays of shape ``(..., n, m)``.

    Returns ``(marginal, rows)``. Absent rows are replaced by the uniform
    distribution so downstream kernels stay finite; their marginal weight is
    exactly zero, which makes every conditional mean ignore them.
    """
    marg = r.sum(axis=-1)
    m = r.shape[-1]
    safe = np.where(marg[..., None] > 0, marg[..., None], 1.0)
    rows = np.where(marg[..., None] > 0, r / safe, 1.0 / m)
    return marg, rows


def expand_zero(P: ProbDist) -> ProbDist:
    return ProbDist._trusted(np.append(as_array(P), 0.0))
