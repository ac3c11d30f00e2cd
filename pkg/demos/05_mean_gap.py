"""The shifted generator f_y(x) = f(-x - y) and the unshifted f give different means.

For exponential generators the two quasi-linear means differ, so a step
that swaps one for the other is not valid unless lam = 0 (affine case).

Run: python demos/05_mean_gap.py
"""

from genentropy import Exp, kn_mean, means_agree
from genentropy.generators import shifted
from genentropy.harness import TrialConfig, mean_gap_demo

cfg = TrialConfig(seed=42)
for lam in (-1.0, -0.5, 0.0, 0.5, 1.0):
    rec = mean_gap_demo(lam, alpha=2.0, cfg=cfg)
    verdict = "means differ" if lam else "means coincide"
    print(f"lam={lam:+.1f}: largest gap {rec.max_residual:.3e} -> {verdict}")

rec = mean_gap_demo(1.0, alpha=2.0, cfg=cfg)
w, x = rec.witness["weights"], rec.witness["values"]
print("\nwitness for lam=1:")
print(f"  weights {[round(v, 4) for v in w]}")
print(f"  values  {[round(v, 4) for v in x]}")

# Same question asked directly of the plain KN means (no h in between).
f = Exp(lam=1.0)
ok, witness = means_agree(f, shifted(f, 1.0), trials=1000)
print(f"\nmeans_agree(f, f_1): {ok}, gap {witness['gap']:.3e}")
print(f"  kn_mean(f)   = {kn_mean(f, witness['weights'], witness['values']):.6f}")
print(f"  kn_mean(f_1) = {kn_mean(shifted(f, 1.0), witness['weights'], witness['values']):.6f}")
