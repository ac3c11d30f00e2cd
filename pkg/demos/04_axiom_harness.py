"""Randomized axiom checks, fault injection and witness replay.

Run: python demos/04_axiom_harness.py
"""

from genentropy import Renyi, Tsallis
from genentropy.harness import (
    BROKEN,
    AxiomReport,
    TrialConfig,
    replay,
    verify_family,
    verify_functional,
)

cfg = TrialConfig(seed=42, trials=500, max_samples=2000)

report = AxiomReport("NSK", cfg.seed, verify_family("NSK", Renyi(2.0), cfg))
print(report.to_text())

# Tsallis is pseudo-additive: the plain power law must fail, the (+)_gamma one must hold.
report = AxiomReport("ASK", cfg.seed, verify_family("ASK", Tsallis(2.0, -1.0), cfg))
print(report.to_text())

# A broken functional, sum p^2, must be caught.
bad = AxiomReport("SK", cfg.seed, verify_functional(BROKEN["sum_squares"], cfg))
print(bad.to_text())
worst = max(bad.failures(), key=lambda r: r.max_residual)
print(f"worst failure {worst.axiom}: residual {worst.max_residual:.6f}, witness {worst.witness}")
print(f"replayed from the witness alone: {replay(worst):.6f}")
