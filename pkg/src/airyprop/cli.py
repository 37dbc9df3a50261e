"""Command-line front end: scenario configuration, kernel/table emission, and
the verification-suite runner.

Scenario files are INI-style key/value text with nested sections; see
`load_scenario` for the schema.  All outputs are written atomically
(temp + rename) with shortest-round-trip float formatting, so identical
configurations produce byte-identical files.

Exit codes: 0 success, 1 configuration error, 2 domain/caustic error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import amplitudes as am
from . import evolve as ev
from . import oracle
from . import propagator as pr
from . import verify as verify_mod
from .errors import (
    CausticError,
    ConfigError,
    DomainError,
    ParameterError,
    ParityError,
    RangeError,
    SingularIntegrandError,
    SingularOriginError,
    TruncationDomainError,
)
from .kernelcoeffs import EquationVariant

DIMENSIONLESS_KINDS = tuple(v.value for v in EquationVariant if v.value != "oscillator_general")
OSCILLATOR_KINDS = ("oscillator_chirp", "oscillator_general", "sudden")
ALL_KINDS = tuple(
    v.value for v in EquationVariant
) + ("sudden",)

_DOMAIN_ERRORS = (
    CausticError,
    DomainError,
    ParameterError,
    ParityError,
    RangeError,
    SingularIntegrandError,
    SingularOriginError,
    TruncationDomainError,
)


@dataclass
class ScenarioConfig:
    kind: str
    m: float = 1.0
    hbar: float = 1.0
    omega0: float = 1.0
    omega1: float = 2.0
    duration: float = 1.0
    profile_path: str | None = None
    x_min: float = -6.0
    x_max: float = 6.0
    n_x: int = 64
    y_min: float = -6.0
    y_max: float = 6.0
    n_y: int = 64
    n_points: int = 1024
    times: tuple = (0.5,)
    initial_kind: str = "eigenstate"
    initial_n: int = 0
    initial_center: float = 0.0
    initial_width: float = 1.0
    nls_s: float = 1.0
    nls_coupling: float = 0.5
    nls_kappa0: float = 0.0
    nls_phi: float = 0.0
    kernel_c1: float = 0.0
    kernel_c2: float = 1.0
    kernel_beta0: float = -2.0
    kernel_gamma0: float = 0.0
    out_dir: str = "."
    out_format: str = "csv"
    k_max: int = 64
    tolerance: float = 1e-8

    def oscillator_config(self) -> pr.OscillatorConfig:
        profile = None
        if self.kind == "oscillator_general":
            if self.profile_path is None:
                raise ConfigError("oscillator.profile is required for kind=oscillator_general")
            profile = oracle.FrequencyProfile.from_csv(self.profile_path)
        try:
            return pr.OscillatorConfig(
                omega0=self.omega0,
                omega1=self.omega1,
                T=self.duration,
                m=self.m,
                hbar=self.hbar,
                profile=profile,
            )
        except ParameterError as exc:
            raise ConfigError(f"oscillator section: {exc}") from exc


def _get(section, key, cast, default=None, where=""):
    if key not in section:
        if default is not None:
            return default
        raise ConfigError(f"missing field '{where}.{key}'")
    raw = section[key]
    try:
        return cast(raw)
    except ValueError as exc:
        raise ConfigError(f"field '{where}.{key}': cannot parse {raw!r}") from exc


def load_scenario(path: str) -> ScenarioConfig:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"config file not found or unreadable: {path}")
    if "scenario" not in parser:
        raise ConfigError("missing [scenario] section")
    kind = _get(parser["scenario"], "kind", str, where="scenario").strip()
    if kind not in ALL_KINDS:
        raise ConfigError(f"field 'scenario.kind': unknown kind {kind!r}; choose from {ALL_KINDS}")
    cfg = ScenarioConfig(kind=kind)

    if "oscillator" in parser:
        osc = parser["oscillator"]
        cfg.m = _get(osc, "m", float, cfg.m, "oscillator")
        cfg.hbar = _get(osc, "hbar", float, cfg.hbar, "oscillator")
        cfg.omega0 = _get(osc, "omega0", float, cfg.omega0, "oscillator")
        cfg.omega1 = _get(osc, "omega1", float, cfg.omega1, "oscillator")
        cfg.duration = _get(osc, "t", float, cfg.duration, "oscillator")
        cfg.profile_path = osc.get("profile", None)
    elif kind in OSCILLATOR_KINDS:
        raise ConfigError(f"missing [oscillator] section for kind={kind}")

    if "grid" in parser:
        g = parser["grid"]
        cfg.x_min = _get(g, "x_min", float, cfg.x_min, "grid")
        cfg.x_max = _get(g, "x_max", float, cfg.x_max, "grid")
        cfg.n_x = _get(g, "n_x", int, cfg.n_x, "grid")
        cfg.y_min = _get(g, "y_min", float, cfg.x_min, "grid")
        cfg.y_max = _get(g, "y_max", float, cfg.x_max, "grid")
        cfg.n_y = _get(g, "n_y", int, cfg.n_x, "grid")
        cfg.n_points = _get(g, "n_points", int, cfg.n_points, "grid")

    if "times" in parser:
        raw = _get(parser["times"], "values", str, where="times")
        try:
            cfg.times = tuple(float(v) for v in raw.split())
        except ValueError as exc:
            raise ConfigError(f"field 'times.values': cannot parse {raw!r}") from exc
        if not cfg.times:
            raise ConfigError("field 'times.values': need at least one time")

    if "initial" in parser:
        ini = parser["initial"]
        cfg.initial_kind = _get(ini, "kind", str, cfg.initial_kind, "initial")
        if cfg.initial_kind not in ("eigenstate", "gaussian"):
            raise ConfigError(f"field 'initial.kind': unknown {cfg.initial_kind!r}")
        cfg.initial_n = _get(ini, "n", int, cfg.initial_n, "initial")
        cfg.initial_center = _get(ini, "center", float, cfg.initial_center, "initial")
        cfg.initial_width = _get(ini, "width", float, cfg.initial_width, "initial")

    if "nls" in parser:
        nls = parser["nls"]
        cfg.nls_s = _get(nls, "s", float, cfg.nls_s, "nls")
        cfg.nls_coupling = _get(nls, "coupling", float, cfg.nls_coupling, "nls")
        cfg.nls_kappa0 = _get(nls, "kappa0", float, cfg.nls_kappa0, "nls")
        cfg.nls_phi = _get(nls, "phi", float, cfg.nls_phi, "nls")

    if "kernel" in parser:
        kern = parser["kernel"]
        cfg.kernel_c1 = _get(kern, "c1", float, cfg.kernel_c1, "kernel")
        cfg.kernel_c2 = _get(kern, "c2", float, cfg.kernel_c2, "kernel")
        cfg.kernel_beta0 = _get(kern, "beta0", float, cfg.kernel_beta0, "kernel")
        cfg.kernel_gamma0 = _get(kern, "gamma0", float, cfg.kernel_gamma0, "kernel")

    if "output" in parser:
        out = parser["output"]
        cfg.out_dir = _get(out, "directory", str, cfg.out_dir, "output")
        cfg.out_format = _get(out, "format", str, cfg.out_format, "output")
        cfg.k_max = _get(out, "kmax", int, cfg.k_max, "output")
        cfg.tolerance = _get(out, "tolerance", float, cfg.tolerance, "output")
    if cfg.out_format not in ("csv", "json"):
        raise ConfigError(f"field 'output.format': must be csv or json, got {cfg.out_format!r}")
    if cfg.tolerance <= 0:
        raise ConfigError("field 'output.tolerance': must be positive")
    return cfg


def _atomic_write(path: str, text: str):
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_grid_csv(path: str, xs, ys, values):
    lines = ["x,y,re,im"]
    for j, y in enumerate(ys):
        for i, x in enumerate(xs):
            v = values[j, i]
            lines.append(f"{float(x)!r},{float(y)!r},{float(v.real)!r},{float(v.imag)!r}")
    _atomic_write(path, "\n".join(lines) + "\n")


def _write_grid_json(path: str, xs, ys, t, values):
    payload = {
        "t": t,
        "x": [float(v) for v in xs],
        "y": [float(v) for v in ys],
        "data": [[[float(v.real), float(v.imag)] for v in row] for row in values],
    }
    _atomic_write(path, json.dumps(payload))


def _kernel_for(cfg: ScenarioConfig):
    if cfg.kind in DIMENSIONLESS_KINDS and cfg.kind != "oscillator_chirp":
        variant = EquationVariant(cfg.kind)
        return lambda x, y, t: pr.greens(variant, x, y, t)
    osc = cfg.oscillator_config()
    if cfg.kind == "oscillator_chirp":
        return lambda x, y, t: pr.oscillator_green(x, y, t, osc)
    if cfg.kind == "oscillator_general":
        mu = osc.classical_solution()
        return lambda x, y, t: pr.general_green(x, y, t, osc, mu), mu
    raise ConfigError(f"scenario.kind={cfg.kind!r} has no pointwise kernel (use amplitudes)")


def cmd_greens(cfg: ScenarioConfig, out_dir: str, fmt: str) -> int:
    xs = np.linspace(cfg.x_min, cfg.x_max, cfg.n_x)
    ys = np.linspace(cfg.y_min, cfg.y_max, cfg.n_y)
    kernel = _kernel_for(cfg)
    mu = None
    if isinstance(kernel, tuple):
        kernel, mu = kernel
    data = pr.batch_evaluate(kernel, xs, ys, cfg.times)
    os.makedirs(out_dir, exist_ok=True)
    for k, t in enumerate(cfg.times):
        base = os.path.join(out_dir, f"greens_t{k}")
        if fmt == "csv":
            _write_grid_csv(base + ".csv", xs, ys, data[k])
        else:
            _write_grid_json(base + ".json", xs, ys, t, data[k])
    if mu is not None:
        mu.to_csv(os.path.join(out_dir, "mu.csv"))
    print(f"wrote {len(cfg.times)} kernel grid(s) to {out_dir}")
    return 0


def _initial_state(cfg: ScenarioConfig) -> ev.GridWaveFunction:
    if cfg.initial_kind == "eigenstate":
        return ev.eigenstate_grid(
            cfg.initial_n,
            cfg.omega0,
            m=cfg.m,
            hbar=cfg.hbar,
            x_min=cfg.x_min,
            x_max=cfg.x_max,
            n_points=cfg.n_points,
        )
    width = cfg.initial_width

    def gaussian(x):
        raw = np.exp(-((x - cfg.initial_center) ** 2) / (2.0 * width**2))
        return raw / (np.pi * width**2) ** 0.25

    return ev.GridWaveFunction.from_callable(gaussian, cfg.x_min, cfg.x_max, cfg.n_points)


def cmd_evolve(cfg: ScenarioConfig, out_dir: str, fmt: str) -> int:
    phi = _initial_state(cfg)
    os.makedirs(out_dir, exist_ok=True)
    osc = cfg.oscillator_config() if cfg.kind in OSCILLATOR_KINDS else None
    mu = None
    if cfg.kind == "oscillator_general":
        mu = osc.classical_solution()
    for k, t in enumerate(cfg.times):
        if cfg.kind == "gauge":
            psi = ev.gauge_solve(phi, t)
        elif cfg.kind in ("oscillator_chirp", "oscillator_general"):
            variant = EquationVariant(cfg.kind)
            psi = ev.solve_cauchy(variant, phi, t, cfg=osc, mu=mu)
        else:
            psi = ev.solve_cauchy(EquationVariant(cfg.kind), phi, t)
        base = os.path.join(out_dir, f"psi_t{k}")
        if fmt == "csv":
            psi.to_csv(base + ".csv")
        else:
            _atomic_write(base + ".json", json.dumps(psi.to_json()))
        print(f"t={t!r}: norm^2 = {psi.norm_squared()!r}")
    return 0


def _build_table(cfg: ScenarioConfig, k_max: int) -> am.TransitionTable:
    if cfg.kind == "sudden":
        if cfg.omega0 == cfg.omega1:
            raise ParameterError("sudden scenario with equal frequencies is degenerate")
        return am.sudden_transition_table(cfg.omega0, cfg.omega1, k_max=k_max)
    osc = cfg.oscillator_config()
    mu = osc.classical_solution() if cfg.kind == "oscillator_general" else None
    return am.transition_table(osc, k_max=k_max, mu=mu)


def cmd_amplitudes(cfg: ScenarioConfig, out_dir: str, fmt: str, k_max: int, tol: float) -> int:
    if cfg.kind not in OSCILLATOR_KINDS:
        raise ConfigError("amplitudes needs an oscillator scenario (chirp, general, or sudden)")
    table = _build_table(cfg, k_max)
    os.makedirs(out_dir, exist_ok=True)
    _atomic_write(os.path.join(out_dir, "table.json"), json.dumps(table.to_json()))
    table.to_probability_csv(os.path.join(out_dir, "probabilities.csv"))
    defects = table.column_defects(min(4, k_max))
    for n, d in enumerate(defects):
        status = "ok" if d <= tol else "EXCEEDS TOLERANCE"
        print(f"column n={n}: unitarity defect {d!r} ({status})")
    print(f"zeta = {table.zeta!r}")
    return 0


def cmd_probabilities(cfg: ScenarioConfig, out_dir: str, fmt: str, k_max: int) -> int:
    if cfg.kind not in OSCILLATOR_KINDS:
        raise ConfigError("probabilities needs an oscillator scenario")
    os.makedirs(out_dir, exist_ok=True)
    if cfg.kind == "sudden":
        table = _build_table(cfg, k_max)
        probs = np.abs(table.entries) ** 2
    else:
        osc = cfg.oscillator_config()
        mu = osc.classical_solution() if cfg.kind == "oscillator_general" else None
        phase = osc.scaled_phase(osc.T, mu=mu)
        probs = np.zeros((k_max + 1, k_max + 1))
        for k in range(k_max + 1):
            for n in range(k % 2, k_max + 1, 2):
                probs[k, n] = am.transition_probability(k, n, phase, osc)
    path = os.path.join(out_dir, "probabilities.csv")
    lines = ["k," + ",".join(f"n{n}" for n in range(k_max + 1))]
    for k in range(k_max + 1):
        lines.append(f"{k}," + ",".join(f"{float(v)!r}" for v in probs[k]))
    _atomic_write(path, "\n".join(lines) + "\n")
    col = probs.sum(axis=0)
    for n in range(min(5, k_max + 1)):
        print(f"column n={n}: total probability {col[n]!r}")
    return 0


def cmd_bargmann(cfg: ScenarioConfig, out_dir: str, fmt: str, k_max: int) -> int:
    if cfg.kind not in ("oscillator_chirp", "oscillator_general"):
        raise ConfigError("bargmann needs a transition scenario (chirp or general)")
    osc = cfg.oscillator_config()
    mu = osc.classical_solution() if cfg.kind == "oscillator_general" else None
    phase = osc.scaled_phase(osc.T, mu=mu)
    angles = am.bargmann_angles(phase, osc.omega0, osc.omega1)
    elements = []
    for k in range(min(k_max, 12) + 1):
        for n in range(k % 2, min(k_max, 12) + 1, 2):
            idx = am.quantum_numbers(k, n)
            elements.append(
                {
                    "k": k,
                    "n": n,
                    "j": idx.j,
                    "lam": idx.lam,
                    "lam_prime": idx.lam_prime,
                    "t": am.bargmann_t(idx, abs(angles.tau)),
                }
            )
    payload = {
        "theta": angles.theta,
        "tau": angles.tau,
        "phi": angles.phi,
        "zeta": am.zeta(phase, osc.omega0, osc.omega1),
        "elements": elements,
    }
    os.makedirs(out_dir, exist_ok=True)
    _atomic_write(os.path.join(out_dir, "bargmann.json"), json.dumps(payload))
    print(f"theta={angles.theta!r} tau={angles.tau!r} phi={angles.phi!r}")
    return 0


def cmd_nls(cfg: ScenarioConfig, out_dir: str, fmt: str) -> int:
    if cfg.kind not in ("increasing", "oscillatory"):
        raise ConfigError("nls needs kind=increasing or kind=oscillatory")
    variant = EquationVariant(cfg.kind)
    params = ev.NlsParams(
        s=cfg.nls_s, coupling=cfg.nls_coupling, kappa0=cfg.nls_kappa0, phi=cfg.nls_phi
    )
    from . import kernelcoeffs as kc

    lines = ["t,mu,kappa"]
    for t in cfg.times:
        phase = kc.general_coeffs(
            variant, cfg.kernel_c1, cfg.kernel_c2, cfg.kernel_beta0, cfg.kernel_gamma0, t
        )
        phase0 = kc.general_coeffs(
            variant, cfg.kernel_c1, cfg.kernel_c2, cfg.kernel_beta0, cfg.kernel_gamma0, 0.0
        )
        kappa = ev._kappa_closed(params, phase.mu, phase0.mu)
        lines.append(f"{float(t)!r},{float(phase.mu)!r},{float(kappa)!r}")
    os.makedirs(out_dir, exist_ok=True)
    _atomic_write(os.path.join(out_dir, "nls_kappa.csv"), "\n".join(lines) + "\n")
    print(f"wrote kappa table for s={params.s!r}, coupling={params.coupling!r}")
    return 0


def cmd_verify(suite: str, out_dir: str | None) -> int:
    try:
        results = verify_mod.run_suite(suite)
    except KeyError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    report = [r.to_dict() for r in results]
    text = json.dumps(report, indent=2)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        _atomic_write(os.path.join(out_dir, f"verify_{suite}.json"), text)
    for r in results:
        print(f"[{r.status.upper():4}] {r.check}: measured {r.measured:.3e} vs tolerance {r.tolerance:.3e}")
    n_fail = sum(1 for r in results if r.status != "pass")
    print(f"{len(results) - n_fail}/{len(results)} checks passed")
    return 0 if n_fail == 0 else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airyprop",
        description="Closed-form quadratic-phase propagators, transition amplitudes, "
        "and their numerical cross-validation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, config_required=True):
        p.add_argument("--config", required=config_required, help="scenario file (INI)")
        p.add_argument("--out", default=None, help="output directory override")
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--kmax", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)

    for name in ("greens", "evolve", "amplitudes", "probabilities", "bargmann", "nls"):
        add_common(sub.add_parser(name))
    pv = sub.add_parser("verify")
    pv.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=verify_mod.SUITES + ("all",),
    )
    pv.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args.suite, args.out)
    try:
        cfg = load_scenario(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    out_dir = args.out or cfg.out_dir
    fmt = args.format or cfg.out_format
    k_max = args.kmax or cfg.k_max
    tol = args.tol or cfg.tolerance
    try:
        if args.command == "greens":
            return cmd_greens(cfg, out_dir, fmt)
        if args.command == "evolve":
            return cmd_evolve(cfg, out_dir, fmt)
        if args.command == "amplitudes":
            return cmd_amplitudes(cfg, out_dir, fmt, k_max, tol)
        if args.command == "probabilities":
            return cmd_probabilities(cfg, out_dir, fmt, k_max)
        if args.command == "bargmann":
            return cmd_bargmann(cfg, out_dir, fmt, k_max)
        if args.command == "nls":
            return cmd_nls(cfg, out_dir, fmt)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except _DOMAIN_ERRORS as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
