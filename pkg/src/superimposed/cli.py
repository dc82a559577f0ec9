"""Command-line entry point.

Exit status: 0 on success or when every verified row matches, 1 when a
verification finds a mismatch, 2 on usage, parse or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .analyze import full_report
from .construct import CodebookFormatError, ParameterError, code_from_spec, parse_codebook
from .decode import channel_simulate, exact_word_error_rate
from .gf2words import CapacityError
from .oracle import DEFAULT_BUDGET, BudgetExceededError, best_linear_code, best_nonlinear_four_word_code, bv_lookup
from .verify import CONJECTURE_BUDGET, conjecture, run_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(obj, dict):
        out = []
        for key, val in obj.items():
            out += _flatten(val, f"{prefix}.{key}" if prefix else str(key))
        return out
    if isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        out = []
        for i, val in enumerate(obj):
            out += _flatten(val, f"{prefix}[{i}]")
        return out
    return [(prefix, obj)]


def _fmt_value(val: Any) -> str:
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, list):
        return "[" + ",".join(_fmt_value(v) for v in val) + "]"
    if isinstance(val, str) and (" " in val or not val):
        return json.dumps(val)
    return str(val)


def render(payload: dict, fmt: str) -> str:
    """Text is the JSON payload flattened to ``key=value`` lines, one per row."""
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"# {k}={_fmt_value(v)}" for k, v in _flatten(payload.get("config", {}))]
    for key, val in payload.items():
        if key in ("config", "rows", "words"):
            continue
        if isinstance(val, dict):
            lines.append(f"{key}: " + " ".join(f"{k}={_fmt_value(v)}" for k, v in _flatten(val)))
        elif isinstance(val, list) and val and isinstance(val[0], str):
            lines += [f"{key}: {v}" for v in val]
        else:
            lines.append(f"{key}: {_fmt_value(val)}")
    for row in payload.get("rows", []):
        status = "PASS" if row.get("ok") else "FAIL"
        fields = " ".join(f"{k}={_fmt_value(v)}" for k, v in _flatten(row) if k != "ok")
        lines.append(f"{status} {fields}")
    for word in payload.get("words", []):
        lines.append(word)
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args: argparse.Namespace, *names: str) -> dict:
    cfg = {"command": args.command}
    for name in names:
        cfg[name] = getattr(args, name)
    return cfg


def _load_code(source: str):
    path = Path(source)
    if path.is_file():
        return parse_codebook(path.read_text())
    return code_from_spec(source)


# --- subcommands --------------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    code = code_from_spec(args.spec)
    report = full_report(code)
    config = _config(args, "spec")
    payload = {"config": config, "report": report.as_dict()}
    if args.out:
        Path(args.out).write_text(code.to_text([f"spec={args.spec}"]))
        payload["codebook"] = args.out
    else:
        payload["words"] = [str(w) for w in code.words]
    sys.stdout.write(render(payload, args.format))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    lines = []
    for source in args.codebooks:
        report = full_report(_load_code(source))
        if args.format == "json":
            lines.append(json.dumps({"source": source, **report.as_dict()}, separators=(",", ":")))
        else:
            lines.append(f"# source={source}\n{report.summary()}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_decode_sim(args: argparse.Namespace) -> int:
    code = _load_code(args.source)
    stats = channel_simulate(code, args.decoder, args.p, args.trials, args.seed)
    payload: dict[str, Any] = {
        "config": _config(args, "source", "decoder", "p", "trials", "seed"),
        "stats": stats.as_dict(),
    }
    if args.exact:
        exact = exact_word_error_rate(code, args.decoder, args.p)
        sigma = (exact * (1 - exact) / args.trials) ** 0.5
        payload["exact"] = {
            "wer": exact,
            "sigma": sigma,
            "z": None if sigma == 0 else (stats.wer - exact) / sigma,
        }
    _emit(render(payload, args.format), args.out)
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    check = run_table(args.which)
    payload = {"config": _config(args, "which"), **check.as_dict()}
    _emit(render(payload, args.format), args.out)
    return EXIT_OK if check.ok else EXIT_MISMATCH


def cmd_conjecture(args: argparse.Namespace) -> int:
    budget = CONJECTURE_BUDGET if args.budget is None else args.budget
    check = conjecture(args.which, args.range, budget)
    config = _config(args, "which", "range")
    config["budget"] = budget
    payload = {"config": config, **check.as_dict()}
    _emit(render(payload, args.format), args.out)
    return EXIT_OK if check.ok else EXIT_MISMATCH


def cmd_oracle(args: argparse.Namespace) -> int:
    budget = DEFAULT_BUDGET if args.budget is None else args.budget
    config = _config(args, "n", "k", "constant_weight")
    config["budget"] = budget
    try:
        res = best_linear_code(args.n, args.k, args.constant_weight, budget)
    except BudgetExceededError as exc:
        payload = {"config": config, "refused": {"estimate": exc.estimate, "budget": exc.budget}}
        _emit(render(payload, args.format), args.out)
        return EXIT_USAGE
    result = res.as_dict()
    d_bv = bv_lookup(args.n, args.k)
    result["d_bv"] = d_bv
    result["matches_bv"] = None if d_bv is None else res.best_d == d_bv
    if args.nonlinear:
        if args.k != 2 or args.n > 8:
            raise UsageError("--nonlinear is only available for k=2 and n <= 8")
        result["best_d_nonlinear"] = best_nonlinear_four_word_code(args.n)
    payload = {"config": config, "result": result, "words": [str(w) for w in res.witness.words]}
    _emit(render(payload, args.format), args.out)
    return EXIT_OK


def _probability(text: str) -> float:
    p = float(text)
    if not 0.0 <= p <= 0.5:
        raise argparse.ArgumentTypeError(f"flip probability must be in [0, 0.5], got {text}")
    return p


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="superimposed", description="Generalized (u, u+v) superimposed codes over GF(2)."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a code and report its parameters")
    p.add_argument("spec", help="chain 's,h[,a,b];...', 'c3:NU[:POLY]', 'c2:NU', 'single:S,H', 'simplex:NU', 'rep:J'")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", parents=[common], help="measure codebook files or code specs")
    p.add_argument("codebooks", nargs="+", metavar="CODEBOOK")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decode-sim", parents=[common], help="binary symmetric channel simulation")
    p.add_argument("source", help="codebook file or code spec")
    p.add_argument("--decoder", choices=("staged", "ml"), default="ml")
    p.add_argument("--p", type=_probability, default=0.01)
    p.add_argument("--trials", type=_positive, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true", help="also enumerate every error pattern (n <= 20)")
    p.set_defaults(func=cmd_decode_sim)

    p = sub.add_parser("tables", parents=[common], help="reproduce a published parameter table")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive best linear code search")
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--constant-weight", action="store_true")
    p.add_argument("--nonlinear", action="store_true", help="also search all 4-word codes (k=2, n<=8)")
    p.add_argument("--budget", type=_positive, default=None, help=f"max column multisets (default {DEFAULT_BUDGET})")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("conjecture", parents=[common], help="sweep one of the conjectured code families")
    p.add_argument("which", choices=("I", "II", "III"), type=str.upper)
    p.add_argument("range", type=_positive)
    p.add_argument(
        "--budget", type=_positive, default=None, help=f"oracle budget per row (default {CONJECTURE_BUDGET})"
    )
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, CodebookFormatError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
