"""
Brute-force reference implementations.

Plain Python loops written straight from the definitions, using only the
``math`` module.  Nothing here imports the package, so agreement between the
two is evidence rather than tautology.
"""

import math


def _psum(p, a):
    return math.fsum(x**a for x in p if x > 0)


def shannon(p, tau=-1.0):
    return tau * math.fsum(x * math.log2(x) for x in p if x > 0)


def nath(p, tau, lam, alpha):
    if lam == 0:
        return shannon(p, tau)
    return math.log2(_psum(p, alpha)) / lam


def renyi(p, alpha):
    if alpha == 1:
        return shannon(p)
    return math.log2(_psum(p, alpha)) / (1.0 - alpha)


def tsallis(p, alpha, gamma, tau=-1.0):
    if gamma == 0:
        return shannon(p, tau)
    return (_psum(p, alpha) - 1.0) / gamma


def gaussian(p, q, gamma):
    prod = 1.0
    for x in p:
        if x > 0:
            prod *= x ** ((q - 1.0) * x)
    return (prod - 1.0) / gamma


def sharma_mittal(p, q, alpha, gamma):
    if q == 1 and alpha == 1:
        return shannon(p)
    if q == 1:
        return renyi(p, alpha)
    if alpha == 1:
        return gaussian(p, q, gamma)
    return (_psum(p, alpha) ** ((q - 1.0) / (alpha - 1.0)) - 1.0) / gamma


def h_gamma_exp(x, lam, gamma):
    return (2.0 ** (lam * x) - 1.0) / gamma


def biparametric(p, tau, lam, alpha):
    if lam == 0:
        z = _psum(p, alpha)
        return tau * math.fsum(x**alpha / z * math.log2(x) for x in p if x > 0)
    us = [-tau * lam * math.log(x) for x in p if x > 0]
    if max(abs(u) for u in us) <= 1.0:
        # cancellation-free form for small exponents
        w = escort(p, alpha)
        acc = math.fsum(wi * math.expm1(u) for wi, u in zip([x for x in w if x > 0], us))
        return -math.log1p(acc) / math.log(2) / lam
    return -math.log2(_psum(p, alpha - tau * lam) / _psum(p, alpha)) / lam


def escort(p, alpha):
    z = _psum(p, alpha)
    return [x**alpha / z if x > 0 else 0.0 for x in p]


def rows_of(joint):
    """Marginal and conditional rows; rows with zero mass come back as None."""
    marg = [math.fsum(r) for r in joint]
    rows = [[x / s for x in r] if s > 0 else None for r, s in zip(joint, marg)]
    return marg, rows


def conditional_shannon(joint, tau=-1.0):
    marg, rows = rows_of(joint)
    return math.fsum(w * shannon(r, tau) for w, r in zip(marg, rows) if w > 0)


def conditional_nath(joint, tau, lam, alpha):
    """Escort-weighted KN mean with generator 2**(lam*x)."""
    marg, rows = rows_of(joint)
    w = escort(marg, alpha)
    if lam == 0:
        return math.fsum(wk * shannon(r, tau) for wk, r in zip(w, rows) if wk > 0)
    s = math.fsum(wk * 2.0 ** (lam * nath(r, tau, lam, alpha)) for wk, r in zip(w, rows) if wk > 0)
    return math.log2(s) / lam


def conditional_tsallis(joint, alpha, gamma):
    marg, rows = rows_of(joint)
    a = 1.0 if gamma == 0 else alpha
    w = escort(marg, a)
    return math.fsum(wk * tsallis(r, alpha, gamma) for wk, r in zip(w, rows) if wk > 0)


def conditional_sharma_mittal(joint, q, alpha, gamma):
    """h applied to the Renyi-type conditional, h(x) = (2**((1-q)x) - 1)/gamma."""
    r = conditional_nath(joint, -1.0, 1.0 - alpha, alpha) if alpha != 1 else conditional_shannon(joint)
    if q == 1:
        return r
    return h_gamma_exp(r, 1.0 - q, gamma)


def flatten(joint):
    return [x for row in joint for x in row]
