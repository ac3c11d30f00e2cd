"""
Command-line front end: ``compute``, ``verify`` and ``sweep``.

Exit status is 0 on success, 1 when a verification check fails, 2 for
unusable input (bad flags, unparsable distributions, empty grids) and 3 when
parameters violate a family's constraints.

Numbers are printed in Python's shortest round-trip form, so a printed
value parses back to exactly the double the library returned.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field, replace
from decimal import Decimal, InvalidOperation
from pathlib import Path

import numpy as np

from . import __version__
from .distributions import JointDist, ProbDist, make_dist
from .entropies import (
    Biparametric,
    Gaussian,
    Generalized,
    Nath,
    Renyi,
    Shannon,
    SharmaMittal,
    Tsallis,
    conditional,
    params_to_dict,
)
from .errors import DomainError, EntropyError, RangeError
from .generators import GammaExp, Linear
from .harness import BROKEN, AxiomReport, TrialConfig, run_suite, verify_family, verify_functional

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CONSTRAINT = 0, 1, 2, 3

FAMILIES = ("shannon", "nath", "renyi", "tsallis", "sharma-mittal", "gaussian", "generalized", "biparametric")
SYSTEMS = ("SK", "NSK", "ASK", "GSK", "SM")
SWEEP_PARAMS = ("alpha", "q", "gamma", "tau", "lam")
DEFAULT_SEED = 42

_NATURAL_SYSTEM = {
    "shannon": "SK",
    "nath": "NSK",
    "renyi": "NSK",
    "tsallis": "ASK",
    "sharma-mittal": "SM",
    "gaussian": "SM",
    "generalized": "GSK",
}

# Named gamma conventions, as functions of alpha (Tsallis) or q (SM, Gaussian).
_GAMMA_NAMES = {
    "tsallis": ("alpha", lambda a: 1.0 - a),
    "hc": ("alpha", lambda a: 2.0 ** (1.0 - a) - 1.0),
    "fd": ("q", lambda q: 1.0 - q),
    "sm": ("q", lambda q: 2.0 ** (1.0 - q) - 1.0),
}


class InputError(Exception):
    """Unusable command-line input; maps to exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    family: str | None = None
    params: dict = field(default_factory=dict)
    dist: object = None
    fmt: str = "text"
    seed: int = DEFAULT_SEED
    trials: int = 1000
    tolerance: float | None = None
    system: str | None = None
    all: bool = False
    inject: tuple[str, ...] = ()
    output: str | None = None
    sweep: tuple[str, str, str, str] | None = None


def fmt_num(x: float) -> str:
    return repr(float(x))


# -- input parsing -----------------------------------------------------------


def _load_csv(text: str) -> list:
    rows = [[float(c) for c in row if c.strip()] for row in csv.reader(io.StringIO(text))]
    rows = [r for r in rows if r]
    if len(rows) == 1:
        return rows[0]
    if all(len(r) == 1 for r in rows):
        return [r[0] for r in rows]
    return rows


def parse_distribution(source: str, renormalize: bool = False):
    """Inline JSON array, or a path to a ``.json`` / ``.csv`` file.

    A flat array gives a ``ProbDist``; a nested one gives a ``JointDist``.
    """
    try:
        path = Path(source)
        suffix = path.suffix.lower()
        if suffix in (".json", ".csv"):
            text = path.read_text()
            data = _load_csv(text) if suffix == ".csv" else json.loads(text)
        else:
            data = json.loads(source)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read distribution {source!r}: {exc}") from None
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError):
        raise InputError(f"distribution {source!r} is not a numeric array") from None
    try:
        if arr.ndim == 1:
            return make_dist(arr, "renormalize" if renormalize else "strict")
        if arr.ndim == 2:
            if renormalize:
                total = arr.sum()
                if not (np.all(np.isfinite(arr)) and np.all(arr >= 0) and total > 0):
                    raise DomainError("cannot renormalize this grid")
                arr = arr / total
            return JointDist(arr)
    except DomainError as exc:
        raise InputError(f"invalid distribution: {exc}") from None
    raise InputError(f"distribution must be 1-D or 2-D, got {arr.ndim}-D")


def _parse_h(source: str):
    kind, _, rest = source.partition(":")
    try:
        args = [float(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise InputError(f"bad generator {source!r}") from None
    if kind == "linear" and len(args) <= 1:
        return Linear(*args)
    if kind == "gamma_exp" and len(args) == 2:
        return GammaExp(*args)
    raise InputError(f"generator must be linear[:a] or gamma_exp:lam,gamma, got {source!r}")


def _resolve_gamma(raw, values: dict, family: str):
    if raw is None:
        return None
    if raw in _GAMMA_NAMES:
        key, fn = _GAMMA_NAMES[raw]
        if values.get(key) is None:
            raise InputError(f"gamma convention {raw!r} needs --{key}")
        if (key == "alpha") != (family == "tsallis"):
            raise InputError(f"gamma convention {raw!r} does not apply to {family}")
        return fn(values[key])
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"--gamma must be a number or one of {sorted(_GAMMA_NAMES)}") from None


def _need(values: dict, *names):
    missing = [n for n in names if values.get(n) is None]
    if missing:
        raise InputError("missing " + ", ".join("--" + n for n in missing))


def build_family(family: str, params: dict):
    """Instantiate a family; constraint violations surface as ``DomainError``."""
    v = dict(params)
    v["gamma"] = _resolve_gamma(v.get("gamma"), v, family)
    tau = v["tau"] if v.get("tau") is not None else -1.0
    if family == "shannon":
        return Shannon(tau)
    if family == "nath":
        return Nath(tau, v.get("lam") or 0.0, v["alpha"] if v.get("alpha") is not None else 1.0)
    if family == "renyi":
        _need(v, "alpha")
        return Renyi(v["alpha"])
    if family == "tsallis":
        _need(v, "alpha", "gamma")
        return Tsallis(v["alpha"], v["gamma"], tau)
    if family == "sharma-mittal":
        _need(v, "q", "alpha")
        return SharmaMittal(v["q"], v["alpha"], v["gamma"] if v["gamma"] is not None else 0.0)
    if family == "gaussian":
        _need(v, "q", "gamma")
        return Gaussian(v["q"], v["gamma"])
    if family == "generalized":
        _need(v, "h")
        nath = Nath(tau, v.get("lam") or 0.0, v["alpha"] if v.get("alpha") is not None else 1.0)
        return Generalized(_parse_h(v["h"]), nath)
    if family == "biparametric":
        _need(v, "lam", "alpha")
        return Biparametric(tau, v["lam"], v["alpha"])
    raise InputError(f"unknown family {family!r}")


# -- output ------------------------------------------------------------------


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _table(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in [header, *rows])


# -- subcommands ---------------------------------------------------------------


def cmd_compute(cfg: RunConfig) -> int:
    fam = build_family(cfg.family, cfg.params)
    if isinstance(cfg.dist, JointDist):
        values = {
            "joint": fam(cfg.dist.flatten()),
            "marginal": fam(cfg.dist.marginal()),
            "conditional": conditional(cfg.dist, fam),
        }
    else:
        values = {"entropy": fam(cfg.dist)}
    if cfg.fmt == "json":
        text = json.dumps({"family": params_to_dict(fam), **values}, allow_nan=False) + "\n"
    elif cfg.fmt == "csv":
        text = _table(list(values), [[fmt_num(x) for x in values.values()]], "csv")
    elif len(values) == 1:
        text = fmt_num(values["entropy"]) + "\n"
    else:
        text = "".join(f"{k} {fmt_num(x)}\n" for k, x in values.items())
    _emit(text, cfg.output)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    tc = TrialConfig(seed=cfg.seed, trials=cfg.trials, inject=cfg.inject if cfg.all else ())
    if cfg.tolerance is not None:
        tc = replace(tc, tolerance=cfg.tolerance)
    if cfg.all:
        report = run_suite(tc)
    elif cfg.family is None:
        if not cfg.inject:
            raise InputError("verify needs --family, --all or --inject")
        report = AxiomReport("SK", tc.seed)
        for name in cfg.inject:
            report.records.extend(verify_functional(BROKEN[name], tc))
    else:
        fam = build_family(cfg.family, cfg.params)
        system = cfg.system or _NATURAL_SYSTEM.get(cfg.family)
        if system is None:
            raise InputError(f"{cfg.family} has no composition axiom system; pass --system")
        report = AxiomReport(system, tc.seed)
        try:
            report.records.extend(verify_family(system, fam, tc))
        except DomainError as exc:
            raise InputError(str(exc)) from None
        for name in cfg.inject:
            report.records.extend(verify_functional(BROKEN[name], tc))
    text = report.to_text() if cfg.fmt == "text" else report.to_json()
    _emit(text, cfg.output)
    return EXIT_OK if report.passed else EXIT_FAILED


def sweep_grid(start: str, stop: str, step: str) -> list[float]:
    """Inclusive decimal grid ``start, start+step, ... <= stop``."""
    try:
        a, b, s = Decimal(start), Decimal(stop), Decimal(step)
    except InvalidOperation:
        raise InputError("sweep bounds must be decimal numbers") from None
    if not s > 0 or not a.is_finite() or not b.is_finite():
        return []
    count = int((b - a) / s) + 1 if b >= a else 0
    return [float(a + k * s) for k in range(count)]


def cmd_sweep(cfg: RunConfig) -> int:
    param, start, stop, step = cfg.sweep
    if not isinstance(cfg.dist, ProbDist):
        raise InputError("sweep needs a 1-D distribution")
    grid = sweep_grid(start, stop, step)
    if not grid:
        raise InputError("empty sweep grid")
    rows = []
    for x in grid:
        fam = build_family(cfg.family, {**cfg.params, param: x})
        rows.append((x, fam(cfg.dist)))
    if cfg.fmt == "json":
        payload = {
            "family": cfg.family,
            "param": param,
            "rows": [{param: x, "entropy": v} for x, v in rows],
        }
        text = json.dumps(payload, allow_nan=False) + "\n"
    else:
        text = _table([param, "entropy"], [[fmt_num(x), fmt_num(v)] for x, v in rows], cfg.fmt)
    _emit(text, cfg.output)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------


def _env_seed() -> int:
    raw = os.environ.get("ENTROPY_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"ENTROPY_SEED must be an integer, got {raw!r}") from None


def _add_family_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--tau", type=float)
    p.add_argument("--lam", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--gamma", help="number, or a convention: tsallis, hc, fd, sm")
    p.add_argument("--h", help="generalized family generator: linear[:a] or gamma_exp:lam,gamma")


def _add_dist_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dist", required=True, help="JSON array, or path to a .json/.csv file")
    p.add_argument("--renormalize", action="store_true", help="divide the input by its sum")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genentropy", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compute", help="evaluate an entropy")
    _add_family_args(p, required=True)
    _add_dist_args(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", "-o")

    p = sub.add_parser("verify", help="run the axiom checks")
    _add_family_args(p, required=False)
    p.add_argument("--system", choices=SYSTEMS)
    p.add_argument("--all", action="store_true", help="the full default grid")
    p.add_argument("--inject", action="append", choices=sorted(BROKEN), default=[],
                   help="also check a deliberately broken functional")
    p.add_argument("--seed", type=int, help="defaults to $ENTROPY_SEED, then 42")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", "-o")

    p = sub.add_parser("sweep", help="tabulate an entropy over a parameter range")
    _add_family_args(p, required=True)
    _add_dist_args(p)
    p.add_argument("--param", choices=SWEEP_PARAMS, required=True)
    p.add_argument("--start", required=True)
    p.add_argument("--stop", required=True)
    p.add_argument("--step", required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p.add_argument("--output", "-o")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    params = {k: getattr(ns, k, None) for k in ("tau", "lam", "alpha", "q", "gamma", "h")}
    cfg = RunConfig(subcommand=ns.subcommand, family=ns.family, params=params,
                    fmt=ns.format, output=ns.output)
    if ns.subcommand in ("compute", "sweep"):
        cfg = replace(cfg, dist=parse_distribution(ns.dist, ns.renormalize))
    if ns.subcommand == "sweep":
        cfg = replace(cfg, sweep=(ns.param, ns.start, ns.stop, ns.step))
    if ns.subcommand == "verify":
        if ns.trials < 1:
            raise InputError("--trials must be >= 1")
        if ns.tolerance is not None and not ns.tolerance > 0:
            raise InputError("--tolerance must be positive")
        cfg = replace(cfg, seed=ns.seed if ns.seed is not None else _env_seed(), trials=ns.trials,
                      tolerance=ns.tolerance, system=ns.system, all=ns.all, inject=tuple(ns.inject))
    return cfg


_COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(ns)
        return _COMMANDS[cfg.subcommand](cfg)
    except InputError as exc:
        print(f"genentropy: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, RangeError) as exc:
        print(f"genentropy: constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except EntropyError as exc:  # pragma: no cover - no other subclasses today
        print(f"genentropy: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
