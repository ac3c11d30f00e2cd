import sys
from pathlib import Path

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def dists(draw, min_n=1, max_n=8, zeros=True):
    """Points of the simplex, optionally with exact zeros."""
    n = draw(st.integers(min_n, max_n))
    lo = 0.0 if zeros else 1e-3
    raw = draw(st.lists(st.floats(lo, 1.0), min_size=n, max_size=n))
    if sum(raw) <= 0:
        raw[0] = 1.0
    a = np.asarray(raw)
    return a / a.sum()


@st.composite
def joints(draw, max_n=5, max_m=5):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    flat = draw(dists(min_n=n * m, max_n=n * m))
    return flat.reshape(n, m)


alphas = st.floats(0.1, 5.0).filter(lambda a: abs(a - 1) > 1e-3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
