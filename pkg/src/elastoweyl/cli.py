"""Command line entry point: ``python -m elastoweyl <command> ...``.

Commands
--------
coeffs    Weyl coefficients, heat trace variants and the Liu comparison.
rayleigh  Roots of the Rayleigh cubic.
shift     Samples of the spectral shift function at ``xi = 1``.
count     Counting functions of the unit disk or a flat cylinder.

Exit status is 0 on success, 2 for invalid input and 3 for numerical failures.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from .material import MaterialError, material_from_alpha, new_material
from .numerics.quadrature import QuadratureError
from .numerics.series import SeriesError
from .rayleigh import critical_alpha, rayleigh_roots
from .shift import b_from_shift, shift_components, shift_profile
from .spectra.counting import CacheError, CountingFunction
from .spectra.cylinder import cylinder_spectrum
from .spectra.disk import ScanBudgetError, disk_spectrum
from .weyl import (
    DEFAULT_TOL, b_dir_odd, b_free_odd, compute_coefficients, liu_b_dir, weyl_a,
)

SCHEMA_VERSION = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


class ConfigError(ValueError):
    pass


def _g(x):
    """12 significant digits; empty for missing values."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    return f"{float(x):.12g}"


def _json_value(x):
    if x is None or isinstance(x, (str, bool)):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(f"{float(x):.12g}")


class Report:
    """Rows with a fixed column list plus comment lines, written once at the end."""

    def __init__(self, command, columns):
        self.command = command
        self.columns = list(columns)
        self.rows = []
        self.notes = {}

    def add(self, **row):
        self.rows.append([row.get(c) for c in self.columns])

    def render(self, fmt):
        if fmt == "json":
            doc = {
                "schema": f"elastoweyl/{self.command}/v{SCHEMA_VERSION}",
                "notes": {k: _json_value(v) for k, v in self.notes.items()},
                "rows": [
                    {c: _json_value(v) for c, v in zip(self.columns, r)} for r in self.rows
                ],
            }
            return json.dumps(doc, indent=1) + "\n"
        lines = [f"# elastoweyl {self.command} v{SCHEMA_VERSION}"]
        lines += [f"# {k}={_g(v)}" for k, v in self.notes.items()]
        lines.append(",".join(self.columns))
        lines += [",".join(_g(v) for v in r) for r in self.rows]
        return "\n".join(lines) + "\n"


# --- argument helpers ------------------------------------------------------


def _dims(text):
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split(".."))
            dims = list(range(lo, hi + 1))
        else:
            dims = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}")
    if not dims or min(dims) < 2:
        raise argparse.ArgumentTypeError("dimensions must be >= 2")
    return dims


def _sweep(text):
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"sweep must be a:b:n, got {text!r}")
    if not (0 < a <= b < 1) or n < 1:
        raise argparse.ArgumentTypeError("sweep needs 0 < a <= b < 1 and n >= 1")
    return np.linspace(a, b, n)


def _material_args(p):
    p.add_argument("--lambda", dest="lam", type=float, default=2.0, help="Lamé lambda (default 2)")
    p.add_argument("--mu", type=float, default=1.0, help="Lamé mu (default 1)")
    p.add_argument("--extended", action="store_true",
                   help="accept any alpha in (0,1) instead of d*lambda + 2mu > 0")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    parser = argparse.ArgumentParser(prog="elastoweyl", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="Weyl coefficients", parents=[common])
    _material_args(p)
    p.add_argument("--dim", type=_dims, default=[3], help="dimension, list 2,3 or range 2..5 (default 3)")
    p.add_argument("--liu", action="store_true", help="add the Liu value and its ratio to b_dir")
    p.add_argument("--alpha-sweep", type=_sweep, default=None, metavar="A:B:N",
                   help="sweep alpha at fixed mu and report mu-rescaled coefficients")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="quadrature tolerance (default 1e-10)")

    p = sub.add_parser("rayleigh", help="roots of the Rayleigh cubic", parents=[common])
    p.add_argument("--alpha", type=float, default=None, help="alpha directly")
    _material_args(p)
    p.add_argument("--alpha-sweep", type=_sweep, default=None, metavar="A:B:N")

    p = sub.add_parser("shift", help="spectral shift function samples", parents=[common])
    _material_args(p)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--bc", choices=("dir", "free"), required=True)
    p.add_argument("--xi", type=float, default=1.0, help="boundary covector length (default 1)")
    p.add_argument("--grid", type=int, default=200, help="number of Lambda samples (default 200)")
    p.add_argument("--check-b", action="store_true",
                   help="compare b from the shift integral with the quadrature value")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("count", help="model counting functions", parents=[common])
    _material_args(p)
    p.add_argument("--model", choices=("disk", "cylinder"), required=True)
    p.add_argument("--bc", choices=("dir", "free"), required=True)
    p.add_argument("--h", type=float, default=math.pi, help="cylinder height (default pi)")
    p.add_argument("--lambda-max", type=float, required=True)
    p.add_argument("--grid", type=int, default=400, help="number of output points (default 400)")
    p.add_argument("--emit-liu", action="store_true", help="add the Liu prediction column")
    p.add_argument("--cache", default=None, help="spectrum cache CSV; reused when it matches")
    return parser


# --- commands --------------------------------------------------------------


def _material(args, dim):
    return new_material(args.lam, args.mu, dim, args.extended)


def cmd_coeffs(args):
    sweep = args.alpha_sweep is not None
    cols = ["dim", "lambda", "mu", "alpha", "a", "b_dir", "b_free",
            "a_heat", "b_dir_heat", "b_free_heat",
            "b_dir_odd", "b_free_odd", "delta_dir", "delta_free"]
    if sweep:
        cols += ["b_dir_rescaled", "b_free_rescaled", "gamma_r"]
    if args.liu:
        cols += ["b_liu", "liu_ratio"]
    rep = Report("coeffs", cols)
    cases = []
    for d in args.dim:
        if sweep:
            cases += [material_from_alpha(float(al), args.mu, d) for al in args.alpha_sweep]
        else:
            cases.append(_material(args, d))
    for m in cases:
        c = compute_coefficients(m, tol=args.tol)
        row = dict(dim=m.dim, mu=m.mu, alpha=m.alpha, a=c.a,
                   b_dir=c.b_dir, b_free=c.b_free, a_heat=c.a_heat,
                   b_dir_heat=c.b_dir_heat, b_free_heat=c.b_free_heat)
        row["lambda"] = m.lam
        if m.dim % 2 == 1:
            bo, fo = b_dir_odd(m), b_free_odd(m)
            row.update(b_dir_odd=bo, b_free_odd=fo,
                       delta_dir=abs(c.b_dir - bo), delta_free=abs(c.b_free - fo))
        if sweep:
            scale = m.mu ** ((m.dim - 1) / 2.0)
            row.update(b_dir_rescaled=c.b_dir * scale, b_free_rescaled=c.b_free * scale,
                       gamma_r=rayleigh_roots(m.alpha).gamma_r)
        if args.liu:
            row.update(b_liu=c.b_dir_liu, liu_ratio=c.b_dir_liu / c.b_dir)
        rep.add(**row)
    return rep


def cmd_rayleigh(args):
    if args.alpha_sweep is not None:
        alphas = list(args.alpha_sweep)
    elif args.alpha is not None:
        alphas = [args.alpha]
    else:
        alphas = [_material(args, 2 if args.lam >= 0 else 3).alpha]
    rep = Report("rayleigh", ["alpha", "w1", "w2_re", "w2_im", "w3_re", "w3_im", "case", "gamma_r"])
    rep.notes["alpha_star"] = critical_alpha()
    for al in alphas:
        if not 0 < al < 1:
            raise ConfigError(f"alpha must lie in (0, 1), got {al}")
        r = rayleigh_roots(float(al))
        rep.add(alpha=al, w1=r.w1, w2_re=r.w2.real, w2_im=r.w2.imag,
                w3_re=r.w3.real, w3_im=r.w3.imag, case=r.case_tag, gamma_r=r.gamma_r)
    return rep


def cmd_shift(args):
    m = _material(args, args.dim)
    if args.grid < 2:
        raise ConfigError("--grid must be at least 2")
    if not args.xi > 0:
        raise ConfigError("--xi must be positive")
    prof = shift_profile(m, args.bc, args.xi)
    top = 1.25 * prof.breakpoints[-1]
    grid = np.linspace(0.0, top, args.grid + 1)[1:]
    grid = np.unique(np.concatenate([grid, prof.breakpoints]))
    rep = Report("shift", ["Lambda", "shift", "breakpoint", "perp", "plane"])
    for k, v in zip(("rayleigh", "shear", "pressure")[-len(prof.breakpoints):], prof.breakpoints):
        rep.notes[f"breakpoint_{k}"] = v
    s2 = args.xi * args.xi
    for L in grid:
        val, flag = prof.evaluate(float(L))
        perp, plane = shift_components(m, args.bc, float(L) / s2)
        rep.add(Lambda=L, shift=val, breakpoint=flag, perp=perp, plane=plane)
    if args.check_b:
        c = compute_coefficients(m, tol=args.tol)
        bq = c.b_dir if args.bc == "dir" else c.b_free
        bs = b_from_shift(m, args.bc, args.tol)
        rep.notes.update(b_quadrature=bq, b_from_shift=bs, b_abs_diff=abs(bs - bq),
                         b_check_pass=abs(bs - bq) < 1e-6)
    return rep


def _load_cache(path, model, bc, m, h, lambda_max):
    if not path or not os.path.exists(path):
        return None
    cf = CountingFunction.load(path)
    want = {"lam": m.lam, "mu": m.mu}
    if model == "cylinder":
        want["h"] = h
    if cf.geometry != model or cf.bc != bc or cf.lambda_max < lambda_max:
        return None
    if any(cf.params.get(k) != v for k, v in want.items()):
        return None
    return cf


def cmd_count(args):
    d = 2 if args.model == "disk" else 3
    m = _material(args, d)
    if not args.lambda_max > 0:
        raise ConfigError("--lambda-max must be positive")
    if args.grid < 2:
        raise ConfigError("--grid must be at least 2")
    if args.model == "cylinder" and not args.h > 0:
        raise ConfigError("--h must be positive")
    cf = _load_cache(args.cache, args.model, args.bc, m, args.h, args.lambda_max)
    cached = cf is not None
    if cf is None:
        if args.model == "disk":
            cf = disk_spectrum(m, args.bc, args.lambda_max)
        else:
            cf = cylinder_spectrum(m, args.bc, args.h, args.lambda_max)
        if args.cache:
            cf.save(args.cache)
    if args.model == "disk":
        vol, area = math.pi, 2.0 * math.pi
    else:
        vol, area = 4.0 * math.pi ** 2 * args.h, 8.0 * math.pi ** 2
    a = weyl_a(m)
    c = compute_coefficients(m)
    b = c.b_dir if args.bc == "dir" else c.b_free
    cols = ["Lambda", "N", "residual", "prediction"]
    if args.emit_liu:
        cols.append("liu_prediction")
    rep = Report("count", cols)
    grid = np.linspace(0.0, args.lambda_max, args.grid + 1)[1:]
    counts = cf(grid)
    resid = counts - a * vol * grid ** (d / 2.0)
    for L, n, r in zip(grid, counts, resid):
        row = dict(Lambda=L, N=int(n), residual=r, prediction=b * area * L ** ((d - 1) / 2.0))
        if args.emit_liu:
            row["liu_prediction"] = liu_b_dir(m) * area * L ** ((d - 1) / 2.0)
        rep.add(**row)
    top = grid >= 0.5 * args.lambda_max
    measured = float(np.mean(resid[top] / grid[top] ** ((d - 1) / 2.0)))
    rep.notes.update(model=args.model, bc=args.bc, a=a, b=b, eigenvalues=len(cf),
                     cached=cached, top_half_mean=measured, predicted=b * area,
                     relative_deviation=measured / (b * area) - 1.0)
    if getattr(cf, "suspects", None):
        rep.notes["suspect_roots"] = len(cf.suspects)
    return rep


COMMANDS = {"coeffs": cmd_coeffs, "rayleigh": cmd_rayleigh, "shift": cmd_shift, "count": cmd_count}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = COMMANDS[args.command](args)
    except (MaterialError, ConfigError, CacheError, ValueError) as exc:
        if isinstance(exc, SeriesError):
            print(f"numerical failure: {exc}", file=sys.stderr)
            return EXIT_NUMERICAL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (QuadratureError, ScanBudgetError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    text = rep.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0
