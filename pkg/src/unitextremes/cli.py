"""Command-line front end.

Subcommands: pdf, cdf, moments, mgf, sample, estimate, check, figure.
Tables and samples are CSV (one header line, '#'-prefixed metadata,
17-significant-digit numbers); estimates and check reports are JSON.
Exit codes: 0 success, 1 usage or validation error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .checks import model_check
from .closedforms import CATALOGUE_TAGS, CatalogueModel, from_tag
from .compound import ExtremeModel, Kind
from .counts import Geometric, ShiftedGeometric, TruncatedPoisson, Zipf
from .estimate import Sample, csug_mle, moment_inversion, sug_mle_numeric
from .inputs import Arcsine, Beta22, ToppLeone, Uniform
from .numerics import BudgetExceededError, Tolerance
from .rng import RandomSource

_INPUT_FAMILIES = ("uniform", "beta22", "arcsine", "toppleone")
_COUNT_FAMILIES = ("geometric", "shifted-geometric", "trunc-poisson", "zipf")
_FIGURE_NAMES = ("sug-max", "sug-min", "csug-max", "csug-min")
_FIGURE_GRID = 501


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this tool reserves 2 for
    # numerical failures, so route usage problems through exit code 1.
    def error(self, message):
        raise _UsageError(message)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _build_parser() -> _Parser:
    parser = _Parser(prog="unitextremes", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_options(p, with_seed=False):
        p.add_argument("--model", required=True,
                       help="catalogue tag (e.g. sug-max) or generic triple "
                            "input/count/kind (e.g. beta22/zipf/max)")
        p.add_argument("--theta", type=float, default=None)
        p.add_argument("--lambda", dest="lam", type=float, default=None)
        p.add_argument("--a", type=float, default=None)
        p.add_argument("--zipf-k", type=float, default=None,
                       help="Zipf exponent for generic zipf counts (default 2)")
        p.add_argument("--max-evals", type=int, default=1_000_000,
                       help="evaluation budget for quadrature/series")
        if with_seed:
            p.add_argument("--seed", type=int, default=0)

    for name, help_text in (("pdf", "density table"), ("cdf", "distribution-function table")):
        p = sub.add_parser(name, help=help_text)
        add_model_options(p)
        p.add_argument("--grid", default="0:1:0.01", help="x grid as start:stop:step")
        p.add_argument("--out", default=None)

    p = sub.add_parser("moments", help="raw moment table")
    add_model_options(p)
    p.add_argument("--kmax", type=int, default=2, help="highest moment order")
    p.add_argument("--out", default=None)

    p = sub.add_parser("mgf", help="moment generating function table (quadrature)")
    add_model_options(p)
    p.add_argument("--grid", default="-2:2:0.5", help="t grid as start:stop:step")
    p.add_argument("--out", default=None)

    p = sub.add_parser("sample", help="reproducible draws")
    add_model_options(p, with_seed=True)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--out", default=None)

    p = sub.add_parser("estimate", help="fit theta from a sample file")
    p.add_argument("--model", required=True,
                   help="one of sug-max, sug-min, csug-max, csug-min")
    p.add_argument("--method", choices=("mle", "moment"), default="mle")
    p.add_argument("--input", required=True, help="one value per line, or single-column CSV")
    p.add_argument("--out", default=None)

    p = sub.add_parser("check", help="oracle cross-check report")
    add_model_options(p, with_seed=True)
    p.add_argument("--as-printed", action="store_true",
                   help="also probe the literal published variants of the "
                        "two misprinted formulas")
    p.add_argument("--out", default=None)

    p = sub.add_parser("figure", help="density grids behind the published figure panels")
    p.add_argument("name", choices=_FIGURE_NAMES)
    p.add_argument("--thetas", default="0.2,0.5,0.8",
                   help="comma-separated theta values")
    p.add_argument("--out", default=None)

    return parser


def _parse_grid(spec: str) -> np.ndarray:
    try:
        parts = [float(s) for s in spec.split(":")]
    except ValueError:
        raise _UsageError(f"bad grid {spec!r}; expected start:stop:step") from None
    if len(parts) != 3:
        raise _UsageError(f"bad grid {spec!r}; expected start:stop:step")
    start, stop, step = parts
    if not (step > 0 and stop > start):
        raise _UsageError("grid requires stop > start and step > 0")
    n = int(np.floor((stop - start) / step + 1e-9))
    xs = start + step * np.arange(n + 1)
    # inclusive of the end point when the step divides the range
    if xs[-1] > stop + 1e-12 * max(1.0, abs(stop)):
        xs = xs[:-1]
    return xs


def _resolve_model(args):
    """Turn --model plus parameters into a catalogue or generic scheme model."""
    tag = args.model.strip().lower()
    if tag in CATALOGUE_TAGS:
        if getattr(args, "zipf_k", None) is not None:
            raise _UsageError("--zipf-k applies only to generic zipf counts")
        return from_tag(tag, theta=args.theta, lam=args.lam, a=args.a)
    if tag.count("/") == 2:
        input_name, count_name, kind_name = tag.split("/")
        if input_name not in _INPUT_FAMILIES:
            raise _UsageError(f"unknown input family {input_name!r}; choose from {_INPUT_FAMILIES}")
        if count_name not in _COUNT_FAMILIES:
            raise _UsageError(f"unknown count family {count_name!r}; choose from {_COUNT_FAMILIES}")
        if kind_name not in ("max", "min"):
            raise _UsageError("kind must be 'max' or 'min'")
        if input_name == "uniform":
            input_law = Uniform()
        elif input_name == "beta22":
            input_law = Beta22()
        elif input_name == "arcsine":
            input_law = Arcsine()
        else:
            if args.a is None:
                raise _UsageError("toppleone input requires --a")
            input_law = ToppLeone(args.a)
        if count_name == "geometric":
            if args.theta is None:
                raise _UsageError("geometric count requires --theta")
            count_law = Geometric(args.theta)
        elif count_name == "shifted-geometric":
            if args.theta is None:
                raise _UsageError("shifted-geometric count requires --theta")
            count_law = ShiftedGeometric(args.theta)
        elif count_name == "trunc-poisson":
            if args.lam is None:
                raise _UsageError("trunc-poisson count requires --lambda")
            count_law = TruncatedPoisson(args.lam)
        else:
            count_law = Zipf(args.zipf_k if args.zipf_k is not None else 2.0)
        return ExtremeModel(input_law, count_law, Kind(kind_name))
    raise _UsageError(
        f"unknown model {args.model!r}; use a catalogue tag "
        f"({', '.join(CATALOGUE_TAGS)}) or input/count/kind"
    )


_COUNT_NAMES = {
    "Geometric": "geometric",
    "ShiftedGeometric": "shifted-geometric",
    "TruncatedPoisson": "trunc-poisson",
    "Zipf": "zipf",
}


def _model_meta(model) -> dict:
    if isinstance(model, CatalogueModel):
        meta = {"model": model.tag}
        meta.update({k: _fmt(v) for k, v in model.params.items()})
        return meta
    count_name = _COUNT_NAMES[type(model.count_law).__name__]
    meta = {"model": f"{model.input_law.name}/{count_name}/{model.kind.value}"}
    for obj, attr, label in (
        (model.count_law, "theta", "theta"),
        (model.count_law, "lam", "lambda"),
        (model.count_law, "k", "zipf-k"),
        (model.input_law, "a", "a"),
    ):
        if hasattr(obj, attr):
            meta[label] = _fmt(getattr(obj, attr))
    return meta


def _write(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv(meta: dict, header: list[str], rows) -> str:
    lines = [f"# {key}: {value}" for key, value in meta.items()]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _tolerance(args) -> Tolerance:
    if args.max_evals < 1:
        raise _UsageError("--max-evals must be at least 1")
    return Tolerance(max_evals=args.max_evals)


def _cmd_table(args, which: str) -> int:
    model = _resolve_model(args)
    xs = _parse_grid(args.grid)
    if isinstance(model, ExtremeModel) and (xs.min() < 0 or xs.max() > 1):
        raise _UsageError("grid must stay inside [0, 1] for generic models")
    if which == "pdf":
        values = model.pdf(xs)
    else:
        values = model.cdf(xs)
    meta = _model_meta(model)
    meta.update({"operation": which, "grid": args.grid})
    _write(_csv(meta, ["x", "value"], zip(xs, np.asarray(values, dtype=float))), args.out)
    return 0


def _cmd_moments(args) -> int:
    model = _resolve_model(args)
    if args.kmax < 1:
        raise _UsageError("--kmax must be at least 1")
    tol = _tolerance(args)
    rows = [(k, model.moment(k, tol)) for k in range(1, args.kmax + 1)]
    meta = _model_meta(model)
    meta.update({"operation": "moments", "tolerance": f"abs={tol.abs_tol:g} rel={tol.rel_tol:g}"})
    _write(_csv(meta, ["k", "moment"], rows), args.out)
    return 0


def _cmd_mgf(args) -> int:
    model = _resolve_model(args)
    ts = _parse_grid(args.grid)
    tol = _tolerance(args)
    if isinstance(model, CatalogueModel):
        rows = [(t, model.mgf_numeric(t, tol)) for t in ts]
    else:
        rows = [(t, model.mgf(t, tol)) for t in ts]
    meta = _model_meta(model)
    meta.update({"operation": "mgf", "grid": args.grid,
                 "tolerance": f"abs={tol.abs_tol:g} rel={tol.rel_tol:g}"})
    _write(_csv(meta, ["t", "mgf"], rows), args.out)
    return 0


def _cmd_sample(args) -> int:
    model = _resolve_model(args)
    if args.n < 1:
        raise _UsageError("--n must be at least 1")
    src = RandomSource(args.seed, stream_id=0)
    draws = model.sample(src, args.n)
    meta = _model_meta(model)
    meta.update({"operation": "sample", "n": str(args.n), "seed": str(args.seed)})
    _write(_csv(meta, ["value"], ((v,) for v in draws)), args.out)
    return 0


def _read_sample_file(path: str) -> Sample:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read input file: {exc}") from None
    values = []
    for line_no, line in enumerate(raw.splitlines(), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        text = text.rstrip(",").split(",")[0].strip()
        try:
            values.append(float(text))
        except ValueError:
            if line_no == 1:
                continue  # a single-column CSV header
            raise _UsageError(f"line {line_no}: {line!r} is not a number") from None
    if not values:
        raise _UsageError("input file contains no numeric values")
    try:
        return Sample(np.asarray(values))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _cmd_estimate(args) -> int:
    tag = args.model.strip().lower()
    valid = ("sug-max", "sug-min", "csug-max", "csug-min")
    if tag not in valid:
        raise _UsageError(f"estimation is defined for {', '.join(valid)}")
    family, kind_name = tag.rsplit("-", 1)
    kind = Kind(kind_name)
    sample = _read_sample_file(args.input)
    try:
        if args.method == "mle":
            if family == "csug":
                result = csug_mle(kind, sample)
            else:
                result = sug_mle_numeric(kind, sample)
        else:
            result = moment_inversion(kind, family, float(np.mean(sample.values)))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    payload = {
        "model": tag,
        "method": result.method.value,
        "n": len(sample),
        "theta_hat": result.theta_hat,
        "loglik": result.loglik,
        "evals": result.evals,
        "note": result.note,
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_check(args) -> int:
    model = _resolve_model(args)
    if not isinstance(model, CatalogueModel):
        raise _UsageError("check runs on catalogue models only")
    report = model_check(model, seed=args.seed, as_printed=args.as_printed)
    _write(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _cmd_figure(args) -> int:
    try:
        thetas = [float(s) for s in args.thetas.split(",") if s.strip()]
    except ValueError:
        raise _UsageError(f"bad --thetas {args.thetas!r}") from None
    if not thetas:
        raise _UsageError("--thetas must list at least one value")
    rows = []
    for theta in thetas:
        model = from_tag(args.name, theta=theta)
        lo, hi = model.support
        xs = np.linspace(lo, hi, _FIGURE_GRID)
        pdf = model.pdf(xs)
        rows.extend((theta, x, v) for x, v in zip(xs, pdf))
    meta = {"model": args.name, "operation": "figure",
            "thetas": args.thetas, "grid_points": str(_FIGURE_GRID)}
    _write(_csv(meta, ["theta", "x", "pdf"], rows), args.out)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("pdf", "cdf"):
            return _cmd_table(args, args.command)
        if args.command == "moments":
            return _cmd_moments(args)
        if args.command == "mgf":
            return _cmd_mgf(args)
        if args.command == "sample":
            return _cmd_sample(args)
        if args.command == "estimate":
            return _cmd_estimate(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "figure":
            return _cmd_figure(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
