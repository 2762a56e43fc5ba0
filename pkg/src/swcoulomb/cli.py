"""Command-line front end.

    swcoulomb spectrum --n 3 --gamma 1 --beta 0,0 --branch -,- --levels 3
    swcoulomb states   --n 4 --beta 1,1,1 --system spherical --levels 2 --format csv
    swcoulomb eval     --n 3 --beta 0,0 --system parabolic --state 0,0,0 --grid ray:1,1,1:0.1:5:50
    swcoulomb green    --n 3 --beta 1,1 --energy -0.3 --m1 4.5 --rprime 1 --grid radial:0.1:10:40
    swcoulomb verify   --suite all --n 3 --beta 1,1

Every flag may also come from a flat ``key=value`` file given with
``--config``; flags on the command line win.  Output is one JSON document
(schema "sw-coulomb/1") or a CSV table with a header row.  Floats are
written with 17 significant digits so they round-trip exactly.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import SWCoulombError
from .model import AUTO, ModelParams
from .quantum import (
    SYSTEMS,
    SphericalState,
    check_system,
    degeneracy_series,
    enumerate_level,
    make_state,
    m_chain_spherical,
    principal_number,
    energy,
)
from . import verify as vf
from .wavefn import green_radial, in_domain, psi_cartesian_array

SCHEMA = "sw-coulomb/1"
COMMANDS = ("spectrum", "states", "eval", "green", "verify")
SUITES = ("all", "ortho", "residual", "oracle", "hille-hardy", "poles", "cross")
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "n": 3,
    "gamma": 1.0,
    "beta": None,
    "branch": None,
    "hbar": 1.0,
    "mass": 1.0,
    "units": "natural",
    "levels": None,
    "system": "parabolic",
    "state": None,
    "grid": None,
    "suite": "all",
    "format": "json",
    "out": None,
    "seed": 0,
    "energy": None,
    "m1": None,
    "rprime": None,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    params: ModelParams
    command: str
    output_format: str = "json"
    output_path: str | None = None
    seed: int | None = 0
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in ("json", "csv"):
            raise UsageError(f"format must be json or csv, got {self.output_format!r}")


# -- parsing ------------------------------------------------------------------


def _float_list(text, name):
    try:
        return [float(v) for v in str(text).split(",") if v.strip() != ""]
    except ValueError:
        raise UsageError(f"--{name} expects comma-separated numbers, got {text!r}") from None


def _int_list(text, name):
    try:
        return [int(v) for v in str(text).split(",") if v.strip() != ""]
    except ValueError:
        raise UsageError(f"--{name} expects comma-separated integers, got {text!r}") from None


def read_config_file(path: str) -> dict:
    """Parse a flat key=value file; '#' starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.lstrip("-").replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    g = common.add_argument_group("model")
    g.add_argument("--config", default=S, help="key=value file; flags override it")
    g.add_argument("--n", type=int, default=S, help="space dimension (>= 3)")
    g.add_argument("--gamma", type=float, default=S, help="Coulomb strength")
    g.add_argument("--beta", default=S, help="n-1 comma-separated barrier strengths (default all 0)")
    g.add_argument("--branch", default=S, help="per-axis root flags +,-,auto; used only where beta=0")
    g.add_argument("--units", choices=("natural", "explicit"), default=S, help="natural: hbar=M=1")
    g.add_argument("--hbar", type=float, default=S, help="hbar (needs --units explicit)")
    g.add_argument("--mass", type=float, default=S, help="mass (needs --units explicit)")
    g = common.add_argument_group("selection")
    g.add_argument("--levels", type=int, default=S, help="highest level offset nu")
    g.add_argument("--system", choices=SYSTEMS, default=S)
    g.add_argument("--state", default=S, help="labels: N1,N2,J... (parabolic) or Nr,J... (spherical)")
    g.add_argument("--grid", default=S, help="ray:d1,..,dn:rmin:rmax:count | line:x..:y..:count | radial:rmin:rmax:count")
    g.add_argument("--energy", type=float, default=S, help="energy for green (< 0)")
    g.add_argument("--m1", type=float, default=S, help="radial sector for green (default from --state)")
    g.add_argument("--rprime", type=float, default=S, help="fixed second radius for green (default a)")
    g.add_argument("--suite", choices=SUITES, default=S)
    g = common.add_argument_group("output")
    g.add_argument("--format", choices=("json", "csv"), default=S)
    g.add_argument("--out", default=S, help="output file (default stdout)")
    g.add_argument("--seed", type=int, default=S, help="seed for random sample points")

    parser = argparse.ArgumentParser(prog="swcoulomb", description="Coulomb problem with inverse-square barriers in n dimensions")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "spectrum": "energy levels with both degeneracy counts",
        "states": "enumerate states of one system",
        "eval": "evaluate a wavefunction on a Cartesian grid",
        "green": "radial Green's function along a radial grid",
        "verify": "run verification checks",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def resolve_options(ns: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    flags = {k: v for k, v in vars(ns).items() if k not in ("command", "config")}
    if getattr(ns, "config", None):
        try:
            opts.update(read_config_file(ns.config))
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    opts.update(flags)
    return opts


def build_params(opts: dict) -> ModelParams:
    try:
        n = int(opts["n"])
        gamma = float(opts["gamma"])
        hbar, mass = float(opts["hbar"]), float(opts["mass"])
    except (TypeError, ValueError):
        raise UsageError("n, gamma, hbar and mass must be numbers") from None
    if opts["units"] == "natural" and (hbar != 1.0 or mass != 1.0):
        raise UsageError("--hbar/--mass need --units explicit")
    if opts["units"] not in ("natural", "explicit"):
        raise UsageError(f"units must be natural or explicit, got {opts['units']!r}")
    beta = [0.0] * (n - 1) if opts["beta"] is None else _float_list(opts["beta"], "beta")
    if opts["branch"] is None:
        branch = [AUTO] * len(beta)
    else:
        branch = [s.strip() for s in str(opts["branch"]).split(",")]
        if len(branch) != len(beta):
            raise UsageError(f"--branch needs {len(beta)} entries")
        # flags matter only on free axes
        branch = [AUTO if b > 0 else f for b, f in zip(beta, branch)]
    return ModelParams(n=n, gamma=gamma, beta=tuple(beta), hbar=hbar, mass=mass, branch=tuple(branch))


def _glue_branch(argv):
    # "--branch -,-" would read as an option flag; bind the value explicitly
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--branch":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--branch={nxt}")
        else:
            out.append(tok)
    return out


def build_config(argv=None) -> RunConfig:
    argv = sys.argv[1:] if argv is None else list(argv)
    ns = build_parser().parse_args(_glue_branch(argv))
    opts = resolve_options(ns)
    params = build_params(opts)
    seed = None if opts["seed"] is None else int(opts["seed"])
    return RunConfig(params, ns.command, str(opts["format"]), opts["out"], seed, opts)


# -- grids ----------------------------------------------------------------------


def parse_grid(spec: str, n: int) -> np.ndarray:
    """Cartesian points from ``ray:d:rmin:rmax:count`` or ``line:start:end:count``."""
    if not spec:
        raise UsageError("--grid is required")
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "ray" and len(parts) == 5:
            d = np.array(_float_list(parts[1], "grid"))
            lo, hi, count = float(parts[2]), float(parts[3]), int(parts[4])
            if d.size != n or not np.linalg.norm(d) > 0:
                raise UsageError(f"ray direction needs {n} components, not all zero")
            r = np.linspace(lo, hi, count)
            return r[:, None] * (d / np.linalg.norm(d))[None, :]
        if kind == "line" and len(parts) == 4:
            a = np.array(_float_list(parts[1], "grid"))
            b = np.array(_float_list(parts[2], "grid"))
            count = int(parts[3])
            if a.size != n or b.size != n:
                raise UsageError(f"line endpoints need {n} components")
            t = np.linspace(0.0, 1.0, count)
            return a[None, :] + t[:, None] * (b - a)[None, :]
    except ValueError:
        raise UsageError(f"malformed grid {spec!r}") from None
    raise UsageError(f"grid must be ray:d1,..,dn:rmin:rmax:count or line:start:end:count, got {spec!r}")


def parse_radial_grid(spec: str) -> np.ndarray:
    parts = (spec or "").split(":")
    if len(parts) != 4 or parts[0] != "radial":
        raise UsageError("green needs --grid radial:rmin:rmax:count")
    try:
        return np.linspace(float(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError:
        raise UsageError(f"malformed grid {spec!r}") from None


# -- commands --------------------------------------------------------------------


def _levels(cfg, default):
    v = cfg.options["levels"]
    v = default if v is None else int(v)
    if v < 0:
        raise UsageError("--levels must be >= 0")
    return v


def cmd_spectrum(cfg: RunConfig) -> dict:
    p = cfg.params
    K = _levels(cfg, 3)
    dp = dict(degeneracy_series(p, "parabolic", K))
    ds = dict(degeneracy_series(p, "spherical", K))
    rows = []
    for nu in range(K + 1):
        lvl = enumerate_level(p, "parabolic", nu)
        rows.append(
            {
                "nu": nu,
                "N": lvl.N,
                "energy": lvl.energy,
                "degeneracy_parabolic": dp[nu],
                "degeneracy_spherical": ds[nu],
            }
        )
    return {"columns": list(rows[0]), "rows": rows}


def _label_names(p, system):
    if system == "parabolic":
        return ["N1", "N2"] + [f"J{i}" for i in range(1, p.n - 1)]
    return ["Nr"] + [f"J{i}" for i in range(1, p.n)]


def cmd_states(cfg: RunConfig) -> dict:
    p = cfg.params
    system = check_system(cfg.options["system"])
    K = _levels(cfg, 2)
    names = _label_names(p, system)
    rows = []
    for nu in range(K + 1):
        lvl = enumerate_level(p, system, nu)
        for s in lvl.states:
            row = {"nu": nu}
            row.update(zip(names, s.labels()))
            row.update({"N": lvl.N, "energy": lvl.energy})
            rows.append(row)
    return {"system": system, "columns": ["nu"] + names + ["N", "energy"], "rows": rows}


def _state_from_options(cfg, system):
    if cfg.options["state"] is None:
        raise UsageError("--state is required")
    return make_state(cfg.params, system, _int_list(cfg.options["state"], "state"))


def cmd_eval(cfg: RunConfig) -> dict:
    p = cfg.params
    system = check_system(cfg.options["system"])
    state = _state_from_options(cfg, system)
    x = parse_grid(cfg.options["grid"], p.n)
    ok = in_domain(system, x) & (np.linalg.norm(x, axis=1) > 0)
    values = psi_cartesian_array(p, state, x[ok]) if ok.any() else np.empty(0)
    cols = [f"x{i}" for i in range(1, p.n + 1)]
    rows = [dict(zip(cols + ["psi"], list(map(float, xi)) + [float(v)])) for xi, v in zip(x[ok], values)]
    skipped = int((~ok).sum())
    if skipped:
        print(f"warning: {skipped} grid point(s) outside the {system} domain were skipped", file=sys.stderr)
    return {
        "system": system,
        "state": list(state.labels()),
        "energy": energy(p, principal_number(p, state)),
        "columns": cols + ["psi"],
        "rows": rows,
        "skipped": skipped,
    }


def cmd_green(cfg: RunConfig) -> dict:
    p = cfg.params
    E = cfg.options["energy"]
    if E is None:
        raise UsageError("green needs --energy")
    E = float(E)
    if cfg.options["m1"] is not None:
        m1 = float(cfg.options["m1"])
    else:
        if cfg.options["state"] is not None:
            s = make_state(p, "spherical", _int_list(cfg.options["state"], "state"))
        else:
            s = SphericalState(0, (0,) * (p.n - 1))
        m1 = m_chain_spherical(p, s)[0]
    rp = p.a if cfg.options["rprime"] is None else float(cfg.options["rprime"])
    if not rp > 0:
        raise UsageError("--rprime must be positive")
    rows = []
    skipped = 0
    for r in parse_radial_grid(cfg.options["grid"]):
        if not r > 0 or r == rp:
            skipped += 1
            continue
        lo, hi = sorted((float(r), rp))
        rows.append({"r": float(r), "r_prime": rp, "G": green_radial(p, m1, E, lo, hi)})
    if skipped:
        print(f"warning: {skipped} radius value(s) skipped (r <= 0 or r == r')", file=sys.stderr)
    return {"energy": E, "m1": m1, "columns": ["r", "r_prime", "G"], "rows": rows, "skipped": skipped}


def _safe(name, fn):
    """Run one check; numerical breakdowns become failed reports, not crashes."""
    try:
        return fn()
    except (ArithmeticError, SWCoulombError) as exc:
        return vf.ResidualReport(name, math.inf, math.inf, 1, 1.0, {"error": f"{type(exc).__name__}: {exc}"})


def _aggregate(name, reports, tolerance, **details):
    worst = max(reports, key=lambda r: r.max_residual)
    res = [r.max_residual for r in reports]
    return vf.ResidualReport(
        name,
        float(max(res)),
        float(np.mean(res)),
        len(res),
        tolerance,
        dict(details, worst=worst.details, checks=len(reports)),
    )


def _suite_ortho(p, K, seed):
    import itertools

    out = []
    for system in SYSTEMS:
        states = [s for nu in range(K + 1) for s in enumerate_level(p, system, nu).states]
        reps = [
            _safe("orthonormality", lambda a=a, b=b: vf.orthonormality_check(p, system, a, b))
            for a, b in itertools.combinations_with_replacement(states, 2)
        ]
        out.append(_aggregate("orthonormality", reps, 1e-7, system=system, max_level=K))
    return out


def _suite_residual(p, K, seed):
    out = []
    for system in SYSTEMS:
        reps = []
        for nu in range(K + 1):
            for s in enumerate_level(p, system, nu).states:
                def run(s=s):
                    pts = vf.sample_points(p, system, s, 50, seed=seed)
                    return vf.hamiltonian_residual(p, system, s, pts)

                reps.append(_safe("hamiltonian_residual", run))
        out.append(_aggregate("hamiltonian_residual", reps, 1e-5, system=system, max_level=K))
    return out


def _sectors(p):
    # the ground sector and the one with J_1 = 1
    J0 = (0,) * (p.n - 1)
    J1 = (1,) + (0,) * (p.n - 2)
    return [m_chain_spherical(p, SphericalState(0, J))[0] for J in (J0, J1)]


def _suite_oracle(p, K, seed):
    return [_safe("radial_oracle", lambda m=m: vf.radial_oracle_report(p, m)) for m in _sectors(p)]


def _suite_poles(p, K, seed):
    out = []
    for m in _sectors(p):
        rep = _safe("pole_scan", lambda m=m: vf.pole_scan_report(p, m, 3))
        if rep.details.get("gamma_condition_ok") is False:
            rep = vf.ResidualReport(rep.check_name, math.inf, rep.mean_residual, rep.sample_count, rep.tolerance, rep.details)
        out.append(rep)
    return out


def _suite_hille_hardy(p, K, seed):
    rng = np.random.default_rng(seed)
    reps = [vf.hille_hardy_identity(1.5, 0.3, 0.7, 0.5, 60), vf.hille_hardy_identity(0.5, 1.0, 1.0, 0.3, 80)]
    for _ in range(20):
        a, x, y = rng.uniform(-0.5, 5.0), rng.uniform(0.0, 5.0), rng.uniform(0.0, 5.0)
        z = rng.uniform(-0.8, 0.8)
        reps.append(_safe("hille_hardy", lambda a=a, x=x, y=y, z=z: vf.hille_hardy_identity(a, x, y, z, 120)))
    return [_aggregate("hille_hardy", reps, 1e-10, draws=20, seed=seed)]


def _suite_cross(p, K, seed):
    return [vf.spectrum_cross_check(p, max(K, 10))]


SUITE_RUNNERS = {
    "ortho": _suite_ortho,
    "residual": _suite_residual,
    "oracle": _suite_oracle,
    "hille-hardy": _suite_hille_hardy,
    "poles": _suite_poles,
    "cross": _suite_cross,
}


def cmd_verify(cfg: RunConfig) -> dict:
    p = cfg.params
    suite = cfg.options["suite"]
    if suite not in SUITES:
        raise UsageError(f"suite must be one of {SUITES}")
    K = _levels(cfg, 2)
    seed = 0 if cfg.seed is None else cfg.seed
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    reports = []
    for name in names:
        reports.extend(SUITE_RUNNERS[name](p, K, seed))
    dicts = [r.to_dict(p) for r in reports]
    return {"suite": suite, "reports": dicts, "passed": all(d["passed"] for d in dicts)}


HANDLERS = {"spectrum": cmd_spectrum, "states": cmd_states, "eval": cmd_eval, "green": cmd_green, "verify": cmd_verify}


# -- output -------------------------------------------------------------------------


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    if isinstance(v, (list, tuple)):
        return ";".join(_fmt(x) for x in v)
    return str(v)


def render_json(cfg: RunConfig, result: dict) -> str:
    doc = {
        "schema": SCHEMA,
        "command": cfg.command,
        "params": cfg.params.as_dict(),
        "params_digest": vf.params_digest(cfg.params),
        "seed": cfg.seed,
    }
    doc.update(result)
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def render_csv(cfg: RunConfig, result: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cfg.command == "verify":
        cols = ["check_name", "params_digest", "max_residual", "mean_residual", "count", "tolerance", "passed", "label"]
        w.writerow(cols)
        for d in result["reports"]:
            det = d["details"]
            label = det.get("system", det.get("m1", ""))
            r = d["residuals"]
            w.writerow(
                [_fmt(v) for v in (d["check_name"], d["params_digest"], r["max"], r["mean"], r["count"], d["tolerance"], d["passed"], label)]
            )
    else:
        cols = result["columns"]
        w.writerow(cols)
        for row in result["rows"]:
            w.writerow([_fmt(row[c]) for c in cols])
    if "skipped" in result:
        buf.write(f"# skipped={result['skipped']}\n")
    return buf.getvalue()


def run(cfg: RunConfig) -> tuple:
    """Execute a command; returns (rendered text, exit code)."""
    result = HANDLERS[cfg.command](cfg)
    text = render_json(cfg, result) if cfg.output_format == "json" else render_csv(cfg, result)
    code = EXIT_OK
    if cfg.command == "verify" and not result["passed"]:
        code = EXIT_FAILED
    return text, code


def main(argv=None) -> int:
    try:
        cfg = build_config(argv)
        text, code = run(cfg)
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    except (UsageError, SWCoulombError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
