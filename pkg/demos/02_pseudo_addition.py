"""Pseudo-addition: how a generator h turns + into u (+) v = u + v + gamma*u*v.

Run: python demos/02_pseudo_addition.py
"""

from genentropy import GammaExp, Linear, gamma_add, h_eval, h_invert, induced_add

h = GammaExp(lam=-1.0, gamma=-1.0)  # h(x) = 1 - 2^-x, the q = 2 Sharma-Mittal generator

print("h(x) = (2^(lam x) - 1)/gamma with lam = gamma = -1")
for x in (0.0, 1.0, 2.0, 10.0):
    print(f"  h({x:>4}) = {h_eval(h, x):.12f}   h^-1(h(x)) = {h_invert(h, h_eval(h, x)):.12f}")

# h is a homomorphism from (+) onto (+)_gamma.
u, v = h_eval(h, 1.0), h_eval(h, 2.0)
print(f"\nh(1) (+) h(2) via generator : {induced_add(h, u, v):.15f}")
print(f"gamma_add(h(1), h(2), -1)   : {gamma_add(u, v, -1.0):.15f}")
print(f"h(3)                        : {h_eval(h, 3.0):.15f}")

# The identity element is 0 and the operation does not depend on lam, only on gamma.
for lam in (-0.5, -2.0):
    other = GammaExp(lam, -1.0)
    print(f"lam={lam:+}: induced_add(0.5, 0.5) = {induced_add(other, 0.5, 0.5)}  (gamma_add gives 0.75)")

# A linear generator gives back ordinary addition.
print(f"\nLinear(3): induced_add(1.25, 2.5) = {induced_add(Linear(3.0), 1.25, 2.5)}")

# Inputs outside the range of h are rejected rather than returning NaN.
try:
    h_invert(GammaExp(1.0, 1.0), -2.0)
except ValueError as exc:
    print(f"h_invert outside the range: {exc}")
