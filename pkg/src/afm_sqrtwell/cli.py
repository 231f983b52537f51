"""Command-line interface.

Usage:
    afm-sqrtwell eval --m 2 --a 1 --b 1 --n 0 --l 0 --N harmonic
    afm-sqrtwell exact --beta 1 --n 2 --l 2
    afm-sqrtwell table --beta 1 --format csv
    afm-sqrtwell bounds --beta 0
    afm-sqrtwell fit --betas 0 1 100
    afm-sqrtwell salpeter --omega 1 --M 1 --sigma 0.25 --N harmonic

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, fields, replace
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path

from . import __version__
from .afm import PrincipalN, Variant, afm_energy, afm_energy_simple, afm_solution
from .core import (
    ConvergenceError,
    PotentialParams,
    QuantumNumbers,
    ValidationError,
    reduce,
)
from .exact import MeshConfig, spectrum, spectrum_for
from .fit import DEFAULT_BETAS, fit_AC, fit_hyperbolic, hyperbolic_AC
from .relmap import SalpeterParams, from_salpeter, salpeter_spectrum

__all__ = ["RunConfig", "load_config", "format_rows", "main"]

CONFIG_ENV = "AFM_SQRTWELL_CONFIG"
FORMATS = ("csv", "json")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class RunConfig:
    mesh_size: int = 100
    mesh_scale: float | None = None
    eta: float = 1.0
    N: str = "harmonic"
    format: str = "csv"
    precision: int = 5

    def __post_init__(self):
        MeshConfig(self.mesh_size, self.mesh_scale)
        if self.N not in {v.value for v in Variant}:
            _bad(f"unknown N variant {self.N!r}")
        if self.format not in FORMATS:
            _bad(f"format must be one of {FORMATS}, got {self.format!r}")
        if isinstance(self.precision, bool) or not isinstance(self.precision, int) or not 1 <= self.precision <= 15:
            _bad(f"precision must be an integer in [1, 15], got {self.precision!r}")
        if not math.isfinite(self.eta):
            _bad(f"eta must be finite, got {self.eta!r}")

    @property
    def mesh(self) -> MeshConfig:
        return MeshConfig(self.mesh_size, self.mesh_scale)


def _bad(message: str):
    raise ValidationError(message)


def load_config(path: str | os.PathLike | None = None) -> RunConfig:
    """Read a JSON config file; ``path=None`` falls back to ``$AFM_SQRTWELL_CONFIG``."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return RunConfig()
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"config {path} must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValidationError(f"unknown config keys: {', '.join(unknown)}")
    return RunConfig(**data)


def _round(value: float, precision: int) -> str:
    if math.isnan(value) or math.isinf(value):
        return str(value)
    quantum = Decimal(1).scaleb(-precision)
    rounded = Decimal(value).quantize(quantum, rounding=ROUND_HALF_EVEN)
    # no "-0.000"
    return str(abs(rounded) if rounded == 0 else rounded)


def _cell(value, precision: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _round(value, precision)
    return str(value)


def format_rows(
    rows: list[dict], fmt: str, precision: int, meta: dict | None = None
) -> str:
    """Render rows as CSV (rounded half-even) or JSON (full precision)."""
    if fmt == "json":
        payload = {"meta": meta or {}, "rows": rows}
        return json.dumps(payload, indent=2) + "\n"
    out = io.StringIO()
    columns = list(rows[0]) if rows else []
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_cell(row[c], precision) for c in columns) + "\n")
    return out.getvalue()


def _principal(args, cfg: RunConfig) -> PrincipalN:
    variant = args.N or cfg.N
    if (args.A is None) != (args.C is None):
        raise ValidationError("--A and --C must be given together")
    if args.A is not None:
        if variant != Variant.FITTED.value:
            raise ValidationError("--A/--C require --N fitted")
        return PrincipalN.fitted(args.A, args.C)
    return PrincipalN(Variant(variant))


def cmd_eval(args, cfg: RunConfig):
    params = PotentialParams(args.m, args.a, args.b)
    qn = QuantumNumbers(args.n, args.l)
    N = _principal(args, cfg)
    sol = afm_solution(params, qn, N)
    estimate, formula = sol.estimate, "full"
    if args.eta is not None or args.simple:
        eta = args.eta if args.eta is not None else cfg.eta
        estimate, formula = afm_energy_simple(params, qn, N, eta), f"simple(eta={eta})"
    row = {
        "n": qn.n,
        "l": qn.l,
        "value": estimate.value,
        "kind": str(estimate.kind),
        "N_used": sol.N,
        "Y": sol.quartic.Y,
        "G": sol.quartic.G,
        "formula": formula,
    }
    return [row], {}


def _mesh(args, cfg: RunConfig) -> MeshConfig:
    size = args.mesh_size if args.mesh_size is not None else cfg.mesh_size
    scale = args.scale if args.scale is not None else cfg.mesh_scale
    return MeshConfig(size, scale)


def cmd_exact(args, cfg: RunConfig):
    mesh = _mesh(args, cfg)
    qn = QuantumNumbers(args.n, args.l)
    physical = [v is not None for v in (args.m, args.a, args.b)]
    if args.beta is not None and any(physical):
        raise ValidationError("give either --beta or --m/--a/--b, not both")
    if args.beta is None:
        if not all(physical):
            raise ValidationError("give --beta or all of --m, --a, --b")
        reduced = reduce(PotentialParams(args.m, args.a, args.b))
    else:
        reduced = None
    beta = reduced.beta if reduced else args.beta
    scale = reduced.scale if reduced else 1.0
    result = spectrum_for(beta, [(qn.n, qn.l)], mesh)
    eps = result.entries[0][1]
    if not result.converged[0]:
        raise ConvergenceError(
            f"mesh refinement did not converge: delta={result.deltas[0]:.3e}",
            (eps - result.deltas[0], eps),
        )
    row = {
        "n": qn.n,
        "l": qn.l,
        "beta": beta,
        "value": scale * eps,
        "mesh_size": result.sizes[0],
        "refinement_delta": scale * result.deltas[0],
        "converged": result.converged[0],
    }
    return [row], {}


def _grid(beta: float, nmax: int, lmax: int, mesh: MeshConfig):
    exact = spectrum(beta, nmax, lmax, mesh)
    params = PotentialParams(2.0, 1.0, beta)
    for n in range(nmax + 1):
        for l in range(lmax + 1):
            qn = QuantumNumbers(n, l)
            yield {
                "n": n,
                "l": l,
                "upper": afm_energy(params, qn, PrincipalN.harmonic()).value,
                "exact": exact.value(n, l),
                "fitted": afm_energy(params, qn, PrincipalN.fitted()).value,
                "lower": afm_energy(params, qn, PrincipalN.coulomb()).value,
            }


def cmd_table(args, cfg: RunConfig):
    rows = list(_grid(args.beta, args.nmax, args.lmax, _mesh(args, cfg)))
    return rows, {}


def cmd_bounds(args, cfg: RunConfig):
    rows = []
    for r in _grid(args.beta, args.nmax, args.lmax, _mesh(args, cfg)):
        rows.append(
            {
                "n": r["n"],
                "l": r["l"],
                "lower": r["lower"],
                "fitted": r["fitted"],
                "exact": r["exact"],
                "upper": r["upper"],
                "sandwich": r["lower"] <= r["exact"] <= r["upper"],
            }
        )
    return rows, {}


class _PartialFailure(Exception):
    def __init__(self, rows, meta, message):
        super().__init__(message)
        self.rows = rows
        self.meta = meta


def cmd_fit(args, cfg: RunConfig):
    betas = args.betas if args.betas is not None else list(DEFAULT_BETAS)
    if not betas:
        raise ValidationError("--betas needs at least one value")
    for b in betas:
        if not (math.isfinite(b) and b >= 0):
            raise ValidationError(f"beta must be finite and >= 0, got {b}")
    mesh = _mesh(args, cfg)
    samples, rows, failures = [], [], []
    for beta in betas:
        try:
            sample = fit_AC(beta, spectrum(beta, args.nmax, args.lmax, mesh))
        except ConvergenceError as exc:
            failures.append(f"beta={beta}: {exc}")
            rows.append({"beta": beta, "A": math.nan, "C": math.nan, "chi": math.nan, "ok": False})
            continue
        samples.append(sample)
        rows.append({"beta": beta, "A": sample.A, "C": sample.C, "chi": sample.chi, "ok": True})
    meta: dict = {}
    global_fit = None
    if not failures:
        try:
            global_fit = fit_hyperbolic(samples)
        except ValidationError as exc:
            meta["hyperbolic_fit"] = None
            meta["hyperbolic_fit_skipped"] = str(exc)
    if global_fit is not None:
        meta["hyperbolic_fit"] = asdict(global_fit)
    for row in rows:
        A_ref, C_ref = hyperbolic_AC(row["beta"])
        if global_fit is not None:
            row["A_hyperbolic"], row["C_hyperbolic"] = global_fit(row["beta"])
        row["A_reference"], row["C_reference"] = A_ref, C_ref
    if failures:
        raise _PartialFailure(rows, meta, "; ".join(failures))
    return rows, meta


def cmd_salpeter(args, cfg: RunConfig):
    sp = SalpeterParams(args.omega, args.M, args.sigma)
    if sp.omega not in (1.0, 2.0):
        print(
            f"warning: omega={sp.omega} is not 1 or 2; the mapped problem has no "
            "direct particle interpretation",
            file=sys.stderr,
        )
    qn = QuantumNumbers(args.n, args.l)
    params = from_salpeter(sp)
    estimate = salpeter_spectrum(sp, qn, _principal(args, cfg))
    row = {
        "omega": sp.omega,
        "M": sp.M,
        "sigma": sp.sigma,
        "m": params.m,
        "a": params.a,
        "b": params.b,
        "n": qn.n,
        "l": qn.l,
        "value": estimate.value,
        "kind": str(estimate.kind),
    }
    return [row], {}


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"JSON config file (default: ${CONFIG_ENV})")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--precision", type=_int, help="decimal digits in csv output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    mesh = argparse.ArgumentParser(add_help=False)
    mesh.add_argument("--mesh-size", type=_int)
    mesh.add_argument("--scale", type=float, help="fixed mesh scaling h (default: automatic)")

    variant = argparse.ArgumentParser(add_help=False)
    variant.add_argument("--N", choices=[v.value for v in Variant])
    variant.add_argument("--A", type=float, help="fitted-N slope (with --C)")
    variant.add_argument("--C", type=float, help="fitted-N offset (with --A)")

    state = argparse.ArgumentParser(add_help=False)
    state.add_argument("--n", type=_int, default=0)
    state.add_argument("--l", type=_int, default=0)

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--nmax", type=_int, default=4)
    grid.add_argument("--lmax", type=_int, default=4)

    parser = argparse.ArgumentParser(
        prog="afm-sqrtwell",
        description="Bound-state energies for the potential sqrt(a^2 r^2 + b).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common, state, variant], help="closed-form AFM energy")
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--eta", type=float, help="use the simplified formula with this eta")
    p.add_argument("--simple", action="store_true", help="use the simplified formula, eta from config")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("exact", parents=[common, state, mesh], help="numerical reference energy")
    p.add_argument("--beta", type=float)
    p.add_argument("--m", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("table", parents=[common, grid, mesh], help="upper/exact/fitted/lower table")
    p.add_argument("--beta", type=float, default=1.0)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bounds", parents=[common, grid, mesh], help="bounds bracketing exact values")
    p.add_argument("--beta", type=float, default=1.0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("fit", parents=[common, grid, mesh], help="fit N = A n + l + C per beta")
    p.add_argument("--betas", type=float, nargs="*")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("salpeter", parents=[common, state, variant], help="spinless Salpeter dual")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--M", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.set_defaults(func=cmd_salpeter)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        overrides = {k: getattr(args, k) for k in ("format", "precision") if getattr(args, k) is not None}
        cfg = replace(cfg, **overrides)
        meta = {
            "command": args.command,
            "parameters": {
                k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "config", "out")
            },
            "version": __version__,
        }
        try:
            rows, extra = args.func(args, cfg)
            status = EXIT_OK
        except _PartialFailure as exc:
            rows, extra, status = exc.rows, exc.meta, EXIT_NUMERIC
            print(f"error: {exc}", file=sys.stderr)
        meta.update(extra)
        _emit(format_rows(rows, cfg.format, cfg.precision, meta), args.out)
        return status
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConvergenceError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
