"""Evaluate every entropy family on one distribution and watch them collapse onto each other.

Run: python demos/01_entropy_families.py
"""

import numpy as np

from genentropy import (
    GammaExp,
    Nath,
    biparametric,
    gaussian_entropy,
    generalized,
    make_dist,
    nath,
    renyi,
    shannon,
    sharma_mittal,
    tsallis,
    uniform,
)

P = make_dist([0.5, 0.25, 0.125, 0.125])
print(f"P = {P}\n")

# Shannon is the reference point. In bits, this P needs 1.75 of them.
print(f"shannon                     {shannon(P):.12f}")

# Renyi: one parameter, non-increasing in alpha.
for a in (0.5, 2.0, 4.0):
    print(f"renyi        alpha={a:<4}      {renyi(P, a):.12f}")

# Nath rescales Renyi: lam = 1 - alpha gives Renyi back exactly.
print(f"nath  lam=1-alpha, alpha=2  {nath(P, -1, -1, 2):.12f}   (= renyi alpha=2)")
print(f"nath  lam=-2,      alpha=2  {nath(P, -1, -2, 2):.12f}   (half of it)")

# Tsallis with the two named gamma conventions.
a = 2.0
print(f"tsallis  gamma=1-alpha      {tsallis(P, a, 1 - a):.12f}")
print(f"tsallis  gamma=2^(1-a)-1    {tsallis(P, a, 2 ** (1 - a) - 1):.12f}")

# Sharma-Mittal contains Renyi (q=1), Tsallis (q=alpha) and Gaussian (alpha=1).
q = 2.0
g = 2 ** (1 - q) - 1
print(f"\nsharma_mittal q=1, alpha=2  {sharma_mittal(P, 1, 2):.12f}   (= renyi)")
print(f"sharma_mittal q=alpha=2     {sharma_mittal(P, 2, 2, g):.12f}   (= tsallis {tsallis(P, 2, g):.12f})")
print(f"sharma_mittal alpha=1, q=2  {sharma_mittal(P, 2, 1, g):.12f}   (= gaussian {gaussian_entropy(P, 2, g):.12f})")

# The generalized form h(Nath(P)) with h(x) = (2^((1-q)x) - 1)/gamma is Sharma-Mittal.
h = GammaExp(1 - q, g)
print(f"generalized h o nath        {generalized(P, h, Nath(-1, -1, 2)):.12f}   "
      f"(= sharma_mittal {sharma_mittal(P, q, 2, g):.12f})")

# Biparametric members with alpha - tau*lam = 1 coincide with Nath.
print("biparametric with tau=-1, lam=0.5, alpha=0.5:")
print(f"   biparametric             {biparametric(P, -1, 0.5, 0.5):.12f}")
print(f"   nath                     {nath(P, -1, 0.5, 0.5):.12f}")

# Limits: Renyi at alpha = 1 +/- 1e-7 is Shannon to about seven digits.
print(f"\nrenyi alpha=1+1e-7 minus shannon: {renyi(P, 1 + 1e-7) - shannon(P):+.3e}")

# Every family is maximal on the uniform distribution.
rng = np.random.default_rng(0)
samples = rng.dirichlet(np.ones(4), size=10_000)
print(f"max renyi(alpha=0.5) over 10^4 random P: {renyi(samples, 0.5).max():.6f}  "
      f"vs uniform {renyi(uniform(4), 0.5):.6f}")
