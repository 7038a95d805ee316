"""
Command-line front end.

    seqbell [--config FILE] [--out PATH] [--seed N] COMMAND [options]

Commands: ``eval``, ``sweep``, ``optimize``, ``signaling``, ``reproduce``.
A config file holds ``key=value`` lines whose keys are flag names
(``refine-iters=50``); explicit flags override it. Exit codes: 0 success,
1 reproduction failure, 2 validation error, 3 I/O error.
"""

import argparse
import io
import math
import sys

import numpy as np

from . import chsh
from .chsh import OptimizeSpec, SweepSpec, chsh_value, optimize, signaling_metric, sweep, sweep_max
from .errors import SeqBellError
from .measurement import UpdateRule
from .nonlocality import factorization_grid
from .observables import PARAM_NAMES, BasisParams, ContextBasisParams
from .presets import PRESETS
from .states import StateAngles, make_state

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3

DEFAULT_ANGLES = {"entangled": (math.pi / 4, math.pi / 4), "product": (0.0, math.pi / 4)}

DEFAULTS = {
    "state": "entangled",
    "rule": "lueders",
    "params": None,
    "vary": "gamma1",
    "from": 0.0,
    "to": 1.0,
    "steps": 1001,
    "restarts": 32,
    "grid": 9,
    "refine_iters": 200,
    "seed": 0,
    "alice": "A1",
    "bob": "B1",
    "p1": "1,1",
    "p2": "0.7071067811865476,1",
    "out": None,
}


class ConfigError(Exception):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


def fmt(x):
    return f"{round(x, 12) + 0.0:.12f}"


def fmt_csv(x):
    return f"{x:.12g}"


# -- argument parsing --------------------------------------------------------

def _globals(p):
    s = argparse.SUPPRESS
    p.add_argument("--config", default=s, help="key=value config file")
    p.add_argument("--out", default=s, help="output file (default: stdout)")
    p.add_argument("--seed", default=s, help="random seed (unsigned integer)")


def _state_opts(p):
    s = argparse.SUPPRESS
    p.add_argument("--preset", default=s, choices=sorted(PRESETS))
    p.add_argument("--state", default=s, choices=["entangled", "product"])
    p.add_argument("--alpha", default=s, help="state angle alpha (radians)")
    p.add_argument("--beta", default=s, help="state angle beta (radians)")
    p.add_argument("--rule", default=s, choices=[r.value for r in UpdateRule])


def build_parser():
    s = argparse.SUPPRESS
    parser = argparse.ArgumentParser(prog="seqbell", description=__doc__.split("\n\n")[0])
    _globals(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the four correlations and delta")
    _globals(p)
    _state_opts(p)
    p.add_argument("--params", default=s, help="8 comma-separated basis parameters "
                   "(" + ",".join(PARAM_NAMES) + ")")

    p = sub.add_parser("sweep", help="sweep one basis parameter and write param,delta CSV")
    _globals(p)
    _state_opts(p)
    p.add_argument("--params", default=s)
    p.add_argument("--vary", default=s, choices=PARAM_NAMES)
    p.add_argument("--from", dest="from", default=s)
    p.add_argument("--to", default=s)
    p.add_argument("--steps", default=s)

    p = sub.add_parser("optimize", help="maximize delta over the 8 basis parameters")
    _globals(p)
    _state_opts(p)
    p.add_argument("--restarts", default=s)
    p.add_argument("--grid", default=s, help="grid points per axis")
    p.add_argument("--refine-iters", dest="refine_iters", default=s)

    p = sub.add_parser("signaling", help="change of Bob's marginal under Alice's basis switch")
    _globals(p)
    _state_opts(p)
    p.add_argument("--alice", default=s, choices=["A1", "A2"])
    p.add_argument("--bob", default=s, choices=["B1", "B2"])
    p.add_argument("--p1", default=s, help="eta,gamma for the first basis")
    p.add_argument("--p2", default=s, help="eta,gamma for the second basis")

    p = sub.add_parser("reproduce", help="check a headline number, PASS/FAIL")
    _globals(p)
    p.add_argument("target", choices=["tsirelson", "fig1", "fig2", "product-lueders",
                                      "factorization"])
    return parser


def read_config(path):
    cfg = {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        raise ConfigError("config", f"cannot read {path!r}: {e.strerror}") from None
    for i, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError("config", f"line {i} is not key=value: {line!r}")
        k, v = (t.strip() for t in line.split("=", 1))
        k = k.lstrip("-").replace("-", "_")
        cfg[k] = v
    return cfg


def merge(args):
    """Layer defaults < preset < config file < explicit flags."""
    given = {k: v for k, v in vars(args).items() if k != "command"}
    file_cfg = read_config(given["config"]) if "config" in given else {}
    allowed = set(DEFAULTS) | {"preset", "alpha", "beta", "target"}
    unknown = set(file_cfg) - allowed
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown config key")
    preset_name = given.get("preset", file_cfg.get("preset"))
    cfg = dict(DEFAULTS)
    if preset_name is not None:
        if preset_name not in PRESETS:
            raise ConfigError("preset", f"unknown preset {preset_name!r}")
        pr = PRESETS[preset_name]
        cfg.update(state=pr.state, alpha=pr.alpha, beta=pr.beta, rule=pr.rule,
                   params=",".join(repr(x) for x in pr.params.as_tuple()), vary=pr.vary)
    cfg.update(file_cfg)
    cfg.update({k: v for k, v in given.items() if k != "config"})
    return cfg


# -- validation --------------------------------------------------------------

def _float(cfg, key):
    try:
        v = float(cfg[key])
    except (TypeError, ValueError):
        raise ConfigError(key, f"not a number: {cfg[key]!r}") from None
    if not math.isfinite(v):
        raise ConfigError(key, "must be finite")
    return v


def _uint(cfg, key, minimum=0):
    try:
        v = int(str(cfg[key]))
    except ValueError:
        raise ConfigError(key, f"not an integer: {cfg[key]!r}") from None
    if v < minimum:
        raise ConfigError(key, f"must be >= {minimum}")
    return v


def _floats(cfg, key, n):
    raw = cfg[key]
    parts = raw if isinstance(raw, (list, tuple)) else str(raw).split(",")
    try:
        vals = [float(x) for x in parts]
    except ValueError:
        raise ConfigError(key, f"not a list of numbers: {raw!r}") from None
    if len(vals) != n:
        raise ConfigError(key, f"expected {n} comma-separated values, got {len(vals)}")
    return vals


def state_from(cfg):
    kind = cfg["state"]
    if kind not in DEFAULT_ANGLES:
        raise ConfigError("state", f"must be entangled or product, got {kind!r}")
    a0, b0 = DEFAULT_ANGLES[kind]
    alpha = _float(cfg, "alpha") if cfg.get("alpha") is not None else a0
    beta = _float(cfg, "beta") if cfg.get("beta") is not None else b0
    try:
        return make_state(kind, alpha, beta)
    except SeqBellError as e:
        raise ConfigError("alpha/beta", str(e)) from None


def rule_from(cfg):
    try:
        return UpdateRule(cfg["rule"])
    except ValueError:
        raise ConfigError("rule", f"must be lueders or von-neumann, got {cfg['rule']!r}") from None


def params_from(cfg):
    if cfg.get("params") is None:
        return BasisParams()
    vals = _floats(cfg, "params", 8)
    for name, v in zip(PARAM_NAMES, vals):
        if not 0.0 <= v <= 1.0:
            raise ConfigError("params", f"{name} = {v!r} is outside [0, 1]")
    return BasisParams.from_sequence(vals)


def context_from(cfg, key):
    eta, gamma = _floats(cfg, key, 2)
    try:
        return ContextBasisParams(eta, gamma)
    except SeqBellError as e:
        raise ConfigError(key, str(e)) from None


# -- output ------------------------------------------------------------------

def emit(text, out):
    """Write ``text`` to ``out`` (a path) or stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


def sweep_csv(rows):
    buf = io.StringIO()
    buf.write("param,delta\n")
    for x, d in rows:
        buf.write(f"{fmt_csv(x)},{fmt_csv(d)}\n")
    return buf.getvalue()


def factorization_csv(reports):
    buf = io.StringIO()
    buf.write("eta1,c00re,c01re,c10re,c11re,residual1,residual2\n")
    for r in reports:
        c = np.real(r.c_plus)
        vals = [r.eta1, c[0, 0], c[0, 1], c[1, 0], c[1, 1], r.residual_first, r.residual_second]
        buf.write(",".join(fmt_csv(float(v)) for v in vals) + "\n")
    return buf.getvalue()


# -- commands ----------------------------------------------------------------

def cmd_eval(cfg):
    state, rule, params = state_from(cfg), rule_from(cfg), params_from(cfg)
    res = chsh_value(state, rule, params)
    lines = [f"{a}{b} {fmt(c)}" for (a, b), c in zip(chsh.CONTEXTS, res.correlations)]
    lines.append(f"delta {fmt(res.delta)}")
    emit("\n".join(lines) + "\n", cfg["out"])
    return EXIT_OK


def cmd_sweep(cfg):
    state, rule, params = state_from(cfg), rule_from(cfg), params_from(cfg)
    try:
        spec = SweepSpec(cfg["vary"], _float(cfg, "from"), _float(cfg, "to"),
                         _uint(cfg, "steps", 2), params)
    except ValueError as e:
        raise ConfigError("sweep", str(e)) from None
    rows = sweep(state, rule, spec)
    emit(sweep_csv(rows), cfg["out"])
    if cfg["out"] is not None:
        x, d = sweep_max(rows)
        print(f"max delta {fmt(d)} at {spec.varied} = {fmt(x)}")
    return EXIT_OK


def cmd_optimize(cfg):
    state, rule = state_from(cfg), rule_from(cfg)
    spec = OptimizeSpec(restarts=_uint(cfg, "restarts", 1), seed=_uint(cfg, "seed"),
                        refine_iters=_uint(cfg, "refine_iters", 1),
                        grid_resolution=_uint(cfg, "grid", 2))
    params, delta = optimize(state, rule, spec)
    lines = [f"{k} {fmt(v)}" for k, v in params.as_dict().items()]
    lines.append(f"delta {fmt(delta)}")
    emit("\n".join(lines) + "\n", cfg["out"])
    return EXIT_OK


def cmd_signaling(cfg):
    state, rule = state_from(cfg), rule_from(cfg)
    p1, p2 = context_from(cfg, "p1"), context_from(cfg, "p2")
    if cfg["alice"] not in ("A1", "A2"):
        raise ConfigError("alice", f"must be A1 or A2, got {cfg['alice']!r}")
    if cfg["bob"] not in ("B1", "B2"):
        raise ConfigError("bob", f"must be B1 or B2, got {cfg['bob']!r}")
    value = signaling_metric(state, cfg["alice"], cfg["bob"], p1, p2, rule)
    emit(f"signaling {fmt(value)}\n", cfg["out"])
    return EXIT_OK


def _verdict(name, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reproduce(cfg):
    target = cfg["target"]
    if target == "factorization":
        reports = factorization_grid(101)
        worst = max(r.max_residual for r in reports)
        if cfg["out"] is not None:
            emit(factorization_csv(reports), cfg["out"])
        return _verdict(target, worst < 1e-12, f"max residual {worst:.3e} over 101 eta1 points "
                        f"(tol 1e-12)")
    if target == "product-lueders":
        worst = 0.0
        for a in np.linspace(0.0, math.pi, 21):
            for b in np.linspace(-math.pi / 2 + 0.1, math.pi / 2 - 0.1, 21):
                angles = StateAngles(float(a), float(b))
                st = make_state("product", a, b)
                worst = max(worst, abs(chsh.product_lueders_closed_form(angles)
                                       - chsh_value(st, "lueders").delta))
        at = chsh.product_lueders_closed_form(StateAngles(0.0, math.pi / 4))
        ok = worst < 1e-10 and abs(at - math.sqrt(2)) < 1e-9
        return _verdict(target, ok, f"value {fmt(at)} (target {fmt(math.sqrt(2))}), "
                        f"grid deviation {worst:.3e} (tol 1e-10)")
    pr = PRESETS[target]
    state = make_state(pr.state, pr.alpha, pr.beta)
    if target == "tsirelson":
        d = chsh_value(state, pr.rule, pr.params).delta
    else:
        rows = sweep(state, pr.rule, SweepSpec(pr.vary, 0.0, 1.0, 1001, pr.params))
        _, d = sweep_max(rows)
        if cfg["out"] is not None:
            emit(sweep_csv(rows), cfg["out"])
    return _verdict(target, abs(d - pr.target) <= pr.tol,
                    f"delta {fmt(d)} (target {pr.target:g} +/- {pr.tol:g})")


COMMANDS = {
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "optimize": cmd_optimize,
    "signaling": cmd_signaling,
    "reproduce": cmd_reproduce,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = merge(args)
        return COMMANDS[args.command](cfg)
    except ConfigError as e:
        print(f"seqbell: validation error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"seqbell: I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
