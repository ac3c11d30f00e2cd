"""Joint = marginal combined with conditional, under each composition rule.

Shannon adds a linear average of row entropies.  Renyi/Nath add a
Kolmogorov-Nagumo mean over escort weights.  Tsallis combines with (+)_gamma,
and Sharma-Mittal with the pseudo-addition induced by its generator.

Run: python demos/03_composition_rules.py
"""

from genentropy import Composition, JointDist, Renyi, Shannon, SharmaMittal, Tsallis, conditional

J = JointDist([[0.25, 0.25], [0.30, 0.20]])
P = J.marginal()
print(f"joint {J.tolist()}, marginal {P.tolist()}\n")

families = [
    ("Shannon", Shannon()),
    ("Renyi alpha=2", Renyi(2.0)),
    ("Tsallis alpha=2, gamma=-1", Tsallis(2.0, -1.0)),
    ("Sharma-Mittal q=2, alpha=3", SharmaMittal(2.0, 3.0, -1.0)),
]
print(f"{'family':<28}{'H(PQ)':>20}{'H(P) (+) H(Q|P)':>22}{'residual':>12}")
for name, H in families:
    comp = H.composition()
    joint = H(J.flatten())
    rebuilt = comp.add(H(P), conditional(J, H))
    print(f"{name:<28}{joint:>20.15f}{rebuilt:>22.15f}{abs(joint - rebuilt):>12.1e}")

# The escort weights matter.  With a skewed marginal, averaging the rows
# under plain weights breaks the rule for Renyi.
K = JointDist([[0.4, 0.3], [0.2, 0.1]])
R = Renyi(2.0)
plain = Composition("NSK", alpha=1.0, mean=R.composition().mean)
for label, comp in (("escort", R.composition()), ("plain", plain)):
    rebuilt = R(K.marginal()) + conditional(K, R, comp)
    print(f"Renyi alpha=2 with {label:>6} weights: residual {abs(R(K.flatten()) - rebuilt):.3e}")
