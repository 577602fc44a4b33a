"""Command line front end.

Subcommands map one-to-one onto the library operations: pade, table,
hankel, cf, row-cf, montessus, moments. Output goes to stdout as JSON
(default) or CSV where a flat layout makes sense; exit code 0 on success,
1 when the mathematics degenerates (blocked entry, non-normal window,
near-pole evaluation), 2 when the input is malformed. Given the same
inputs and precision the output bytes are identical run to run: keys are
sorted, floats are printed with 17 significant digits, and nothing
depends on iteration order of sets or dicts.

Every subcommand accepts --emit-schema to print a description of its
inputs and exit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from .contfrac import (
    builtin_algebraic_cf,
    cf_from_convergents,
    cf_to_document,
    euclid_cf,
    evaluate_cf,
    parse_cf_document,
    sqrt_cf,
)
from .core.floats import set_precision
from .core.poly import Polynomial
from .core.scalars import format_rational, parse_rational
from .core.series import (
    BuiltinSource,
    SeriesSource,
    parse_series_document,
    series_from_moments,
)
from .errors import DomainError, InputError, PadelabError, SchemaError
from .montessus import (
    parse_experiment_document,
    report_to_csv_rows,
    report_to_document,
    run_row_experiment,
)
from .pade import hankel_det, hankel_grid, pade_approximant, pade_table, row_to_cf

# ---------------------------------------------------------------------------
# Deterministic writers


def _format_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise DomainError("non-finite value reached the output layer")
    return format(x, ".17g")


def dump_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = []
        for key in sorted(obj):
            parts.append(f"{inner}{json.dumps(str(key))}: {dump_json(obj[key], indent + 1)}")
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [f"{inner}{dump_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, mpmath.mpf):
        return _format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Fraction):
        return json.dumps(format_rational(obj))
    raise InputError(f"cannot serialize {type(obj).__name__} to JSON")


def dump_csv(rows: list[list]) -> str:
    out = []
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, float):
                cells.append(_format_float(cell))
            elif isinstance(cell, mpmath.mpf):
                cells.append(_format_float(float(cell)))
            elif isinstance(cell, Fraction):
                cells.append(format_rational(cell))
            else:
                cells.append(str(cell))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def _emit(doc, fmt: str, csv_rows=None) -> None:
    if fmt == "csv":
        if csv_rows is None:
            raise InputError("csv output is not supported for this subcommand")
        sys.stdout.write(dump_csv(csv_rows))
    else:
        sys.stdout.write(dump_json(doc) + "\n")


# ---------------------------------------------------------------------------
# Argument helpers


def _load_json_arg(text: str, what: str):
    text = text.strip()
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {what} file {text[1:]!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON for {what}: {exc}") from exc


def _series_arg(text: str) -> SeriesSource:
    """Series from shorthand ('exp', 'geometric:2') or a JSON document."""
    stripped = text.strip()
    if stripped == "exp":
        return BuiltinSource("exp")
    if stripped == "geometric":
        return BuiltinSource("geometric", None)
    if stripped.startswith("geometric:"):
        return BuiltinSource("geometric", parse_rational(stripped.split(":", 1)[1]))
    if stripped.startswith("{") or stripped.startswith("@"):
        return parse_series_document(_load_json_arg(stripped, "series"))
    raise InputError(
        f"series must be 'exp', 'geometric[:ratio]', inline JSON, or @file; got {text!r}"
    )


def _series_for(source: SeriesSource, preferred: int, minimum: int):
    """Series at the preferred order, backing off to what exists (>= minimum)."""
    bound = source.available_order()
    order = preferred if bound is None else min(preferred, bound)
    if order < minimum:
        raise InputError(
            f"series provides coefficients through {bound}, "
            f"at least {minimum} are required"
        )
    return source.series(order)


def _require(args, names: list[str]) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise InputError("missing required option(s): " + ", ".join(f"--{n}" for n in missing))


def _entry_document(entry) -> dict:
    if entry.is_block:
        return {
            "L": entry.L,
            "M": entry.M,
            "block": {"singular_system": list(entry.singular_system)},
        }
    return {
        "L": entry.L,
        "M": entry.M,
        "num": [format_rational(c) for c in entry.fraction.num.coeffs],
        "den": [format_rational(c) for c in entry.fraction.den.coeffs],
    }


def _poly_array(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


# ---------------------------------------------------------------------------
# Schemas

_SERIES_SCHEMA = {
    "oneOf": [
        {"kind": "explicit", "coeffs": ["rational literal, ascending"]},
        {"kind": "builtin", "name": "exp | geometric", "ratio": "rational (geometric only)"},
        {"kind": "rational", "num": ["rational literal"], "den": ["rational literal"]},
        {"kind": "sum", "parts": ["series document"]},
    ],
    "shorthand": "exp | geometric[:ratio] | @file.json",
}

_SCHEMAS = {
    "pade": {
        "subcommand": "pade",
        "options": {"series": _SERIES_SCHEMA, "L": "int >= 0", "M": "int >= 0"},
        "output": "entry document {L, M, num, den} or {L, M, block}; block exits 1",
    },
    "table": {
        "subcommand": "table",
        "options": {"series": _SERIES_SCHEMA, "L-max": "int >= 0", "M-max": "int >= 0"},
        "output": "table document keyed 'L,M' with normality flags and block squares",
    },
    "hankel": {
        "subcommand": "hankel",
        "options": {
            "series": _SERIES_SCHEMA,
            "m": "int >= 0 (single value mode)",
            "p": "int >= 0 (single value mode)",
            "m-max": "int >= 0 (grid mode)",
            "p-max": "int >= 1 (grid mode)",
        },
        "output": "single {m, p, value} or grid rows m = 0..m_max, columns p = 1..p_max",
    },
    "cf": {
        "subcommand": "cf",
        "options": {
            "euclid": "rational literal",
            "sqrt": "nonnegative int (with --terms)",
            "builtin": "tan | exp (with --terms for the document)",
            "input": "continued fraction document or @file",
            "from-convergents": "JSON array of [A, B] pairs (rationals or coeff arrays)",
            "terms": "int >= 1",
            "convergent": "int k >= 0: emit pair (A_k, B_k) and the reduced value",
            "eval": "complex point 're' or 're,im' (with --k, optional --method)",
            "k": "truncation level for --eval",
            "method": "backward | forward",
        },
        "output": "fraction document {q0, terms|partials}, convergent pair, or value",
    },
    "row-cf": {
        "subcommand": "row-cf",
        "options": {
            "series": _SERIES_SCHEMA,
            "p": "int >= 0",
            "n-min": "int >= 0",
            "n-max": "int >= n_min",
        },
        "output": "algebraic fraction document whose convergents are the row entries",
    },
    "montessus": {
        "subcommand": "montessus",
        "options": {
            "config": {
                "function": _SERIES_SCHEMA,
                "p": "int >= 0",
                "n_min": "int >= 0",
                "n_max": "int >= n_min",
                "grid": {
                    "radius": "number > 0 (required)",
                    "rim_points": "int >= 1 (default 64)",
                    "interior_circles": "int >= 0 (default 2)",
                    "points_per_circle": "int >= 1 (default 16)",
                    "exclusion_radius": "number >= 0 (default 0.05 * radius)",
                },
                "precision": "int >= 8 (bits, optional)",
                "declared_poles": [{"re": "number", "im": "number", "multiplicity": "int >= 1"}],
            }
        },
        "output": "convergence report (JSON) or rows n, root_re, root_im, matched_pole, distance, sup_error, flag (CSV)",
    },
    "moments": {
        "subcommand": "moments",
        "options": {"moments": "comma separated rational literals, or JSON array"},
        "output": "{coeffs, variable: '1/z'} with signs alternating",
    },
}


# ---------------------------------------------------------------------------
# Handlers


def _cmd_pade(args) -> int:
    _require(args, ["series", "L", "M"])
    source = _series_arg(args.series)
    series = _series_for(source, args.L + args.M + 1, args.L + args.M)
    entry = pade_approximant(series, args.L, args.M)
    _emit(_entry_document(entry), args.format)
    return 1 if entry.is_block else 0


def _cmd_table(args) -> int:
    _require(args, ["series", "L_max", "M_max"])
    source = _series_arg(args.series)
    lm = args.L_max + args.M_max
    series = _series_for(source, lm + 1, lm)
    table = pade_table(series, args.L_max, args.M_max)
    entries = {}
    for (L, M), entry in table.entries.items():
        doc = _entry_document(entry)
        doc.pop("L"), doc.pop("M")
        if entry.is_block:
            block = table.blocks[table.block_of[(L, M)]]
            doc["block"] = [block.corner[0], block.corner[1], block.size]
        doc["normal"] = entry.normal
        entries[f"{L},{M}"] = doc
    blocks = []
    for b in table.blocks:
        fraction = None
        if b.fraction is not None:
            fraction = {"num": _poly_array(b.fraction.num), "den": _poly_array(b.fraction.den)}
        blocks.append(
            {"corner": list(b.corner), "size": b.size, "clipped": b.clipped,
             "fraction": fraction}
        )
    doc = {"L_max": table.Lmax, "M_max": table.Mmax, "entries": entries, "blocks": blocks}
    rows = None
    if args.format == "csv":
        rows = [["L\\M"] + list(range(table.Mmax + 1))]
        for L in range(table.Lmax + 1):
            row = [L]
            for M in range(table.Mmax + 1):
                entry = table.entries[(L, M)]
                if entry.is_block:
                    b = table.blocks[table.block_of[(L, M)]]
                    row.append(f"block({b.corner[0]};{b.corner[1]};{b.size})")
                else:
                    row.append(
                        f"({entry.fraction.num.pretty()}) / ({entry.fraction.den.pretty()})"
                    )
            rows.append(row)
    _emit(doc, args.format, rows)
    return 0


def _cmd_hankel(args) -> int:
    _require(args, ["series"])
    source = _series_arg(args.series)
    single = args.m is not None or args.p is not None
    grid_mode = args.m_max is not None or args.p_max is not None
    if single == grid_mode:
        raise InputError("use exactly one of (--m, --p) or (--m-max, --p-max)")
    if single:
        _require(args, ["m", "p"])
        top = args.m + 2 * args.p - 2
        series = _series_for(source, max(top, 0), max(top, 0))
        value = hankel_det(series, args.m, args.p)
        _emit({"m": args.m, "p": args.p, "value": format_rational(value)}, args.format)
        return 0
    _require(args, ["m_max", "p_max"])
    top = args.m_max + 2 * args.p_max - 2
    series = _series_for(source, max(top, 0), max(top, 0))
    grid = hankel_grid(series, args.m_max, args.p_max)
    doc = {
        "m_max": args.m_max,
        "p_max": args.p_max,
        "rows": [[format_rational(v) for v in row] for row in grid],
    }
    rows = [["m\\p"] + list(range(1, args.p_max + 1))]
    for m, row in enumerate(grid):
        rows.append([m] + [format_rational(v) for v in row])
    _emit(doc, args.format, rows)
    return 0


def _cf_source(args):
    chosen = [
        name
        for name, value in (
            ("euclid", args.euclid),
            ("sqrt", args.sqrt),
            ("builtin", args.builtin),
            ("input", args.input),
            ("from-convergents", args.from_convergents),
        )
        if value is not None
    ]
    if len(chosen) != 1:
        raise InputError(
            "choose exactly one of --euclid, --sqrt, --builtin, --input, "
            "--from-convergents"
        )
    kind = chosen[0]
    if kind == "euclid":
        return euclid_cf(parse_rational(args.euclid))
    if kind == "sqrt":
        _require(args, ["terms"])
        return sqrt_cf(args.sqrt, args.terms)
    if kind == "builtin":
        return builtin_algebraic_cf(args.builtin)
    if kind == "input":
        return parse_cf_document(_load_json_arg(args.input, "continued fraction"))
    payload = _load_json_arg(args.from_convergents, "convergent pairs")
    if not isinstance(payload, list) or not payload:
        raise InputError("--from-convergents needs a nonempty JSON array of [A, B] pairs")
    pairs = []
    for i, item in enumerate(payload):
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"pair {i} must be a two-element array")
        a, b = item
        if isinstance(a, list) or isinstance(b, list):
            pairs.append(
                (
                    Polynomial([parse_rational(c) for c in (a if isinstance(a, list) else [a])]),
                    Polynomial([parse_rational(c) for c in (b if isinstance(b, list) else [b])]),
                )
            )
        else:
            pairs.append((parse_rational(a), parse_rational(b)))
    return cf_from_convergents(pairs)


def _cmd_cf(args) -> int:
    cf = _cf_source(args)
    if args.eval is not None:
        _require(args, ["k"])
        parts = args.eval.split(",")
        if len(parts) not in (1, 2):
            raise InputError("--eval expects 're' or 're,im'")
        try:
            re = float(parts[0])
            im = float(parts[1]) if len(parts) == 2 else 0.0
        except ValueError as exc:
            raise InputError(f"invalid evaluation point {args.eval!r}") from exc
        value = evaluate_cf(cf, mpmath.mpc(re, im), args.k, method=args.method)
        _emit(
            {
                "k": args.k,
                "method": args.method,
                "point": {"re": re, "im": im},
                "value": {"re": float(value.real), "im": float(value.imag)},
            },
            args.format,
        )
        return 0
    if args.convergent is not None:
        pair = cf.convergent(args.convergent)
        if cf.algebraic:
            reduced = pair.reduced()
            doc = {
                "k": args.convergent,
                "A": _poly_array(pair.numerator),
                "B": _poly_array(pair.denominator),
                "reduced": {
                    "num": _poly_array(reduced.num),
                    "den": _poly_array(reduced.den),
                },
            }
        else:
            doc = {
                "k": args.convergent,
                "A": format_rational(pair.numerator),
                "B": format_rational(pair.denominator),
                "reduced": format_rational(pair.reduced()),
            }
        _emit(doc, args.format)
        return 0
    target = cf
    if cf.length is None:
        _require(args, ["terms"])
        target = cf.prefix(args.terms)
    elif args.terms is not None:
        target = cf.prefix(min(args.terms, cf.length))
    doc = cf_to_document(target)
    if getattr(target, "convergent_offset", 0):
        doc["offset"] = target.convergent_offset
    _emit(doc, args.format)
    return 0


def _cmd_row_cf(args) -> int:
    _require(args, ["series", "p", "n_min", "n_max"])
    source = _series_arg(args.series)
    need = args.n_max + args.p
    series = _series_for(source, need, need)
    cf = row_to_cf(series, args.p, args.n_min, args.n_max)
    doc = cf_to_document(cf)
    if cf.convergent_offset:
        doc["offset"] = cf.convergent_offset
    doc["p"] = args.p
    doc["n_min"] = args.n_min
    doc["n_max"] = args.n_max
    _emit(doc, args.format)
    return 0


def _cmd_montessus(args) -> int:
    _require(args, ["config"])
    config = parse_experiment_document(_load_json_arg(args.config, "experiment config"))
    if config.precision is not None:
        set_precision(config.precision)
    report = run_row_experiment(
        config.spec, config.p, config.n_min, config.n_max, config.grid
    )
    _emit(report_to_document(report), args.format, report_to_csv_rows(report))
    return 0


def _cmd_moments(args) -> int:
    _require(args, ["moments"])
    text = args.moments.strip()
    if text.startswith("[") or text.startswith("@"):
        raw = _load_json_arg(text, "moments")
        if not isinstance(raw, list):
            raise InputError("moments JSON must be an array")
        values = [parse_rational(m) for m in raw]
    else:
        values = [parse_rational(m) for m in text.split(",") if m.strip()]
    series = series_from_moments(values)
    _emit(
        {"coeffs": [format_rational(c) for c in series.coeffs], "variable": series.variable},
        args.format,
    )
    return 0


_HANDLERS = {
    "pade": _cmd_pade,
    "table": _cmd_table,
    "hankel": _cmd_hankel,
    "cf": _cmd_cf,
    "row-cf": _cmd_row_cf,
    "montessus": _cmd_montessus,
    "moments": _cmd_moments,
}


# ---------------------------------------------------------------------------
# Parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json",
                     help="output format (default json)")
    sub.add_argument("--precision", type=int, default=None, metavar="BITS",
                     help="working precision for floating diagnostics")
    sub.add_argument("--seed", type=int, default=None,
                     help="seed for randomized utilities (current subcommands are deterministic)")
    sub.add_argument("--emit-schema", action="store_true",
                     help="print this subcommand's input schema and exit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padelab",
        description="Exact Pade tables, continued fractions, and pole convergence runs.",
    )
    subs = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    p = subs.add_parser("pade", help="one approximant [L/M] of a series")
    p.add_argument("--series", help="series document, 'exp', 'geometric[:r]', or @file")
    p.add_argument("--L", type=int, dest="L")
    p.add_argument("--M", type=int, dest="M")
    _add_common(p)

    p = subs.add_parser("table", help="rectangular table with blocks and normality")
    p.add_argument("--series")
    p.add_argument("--L-max", type=int, dest="L_max")
    p.add_argument("--M-max", type=int, dest="M_max")
    _add_common(p)

    p = subs.add_parser("hankel", help="Hankel determinant or determinant grid")
    p.add_argument("--series")
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m-max", type=int, dest="m_max")
    p.add_argument("--p-max", type=int, dest="p_max")
    _add_common(p)

    p = subs.add_parser("cf", help="continued fractions: build, invert, evaluate")
    p.add_argument("--euclid", metavar="RATIONAL")
    p.add_argument("--sqrt", type=int, metavar="N")
    p.add_argument("--builtin", choices=("tan", "exp"))
    p.add_argument("--input", metavar="DOC")
    p.add_argument("--from-convergents", dest="from_convergents", metavar="PAIRS")
    p.add_argument("--terms", type=int)
    p.add_argument("--convergent", type=int, metavar="K")
    p.add_argument("--eval", metavar="POINT")
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=("backward", "forward"), default="backward")
    _add_common(p)

    p = subs.add_parser("row-cf", help="continued fraction generating a table row")
    p.add_argument("--series")
    p.add_argument("--p", type=int)
    p.add_argument("--n-min", type=int, dest="n_min")
    p.add_argument("--n-max", type=int, dest="n_max")
    _add_common(p)

    p = subs.add_parser("montessus", help="row convergence experiment")
    p.add_argument("--config", metavar="DOC", help="experiment document or @file")
    _add_common(p)

    p = subs.add_parser("moments", help="alternating series from a moment list")
    p.add_argument("--moments", metavar="LIST")
    _add_common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    try:
        if args.emit_schema:
            sys.stdout.write(dump_json(_SCHEMAS[args.command]) + "\n")
            return 0
        if args.precision is not None:
            set_precision(args.precision)
        return _HANDLERS[args.command](args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PadelabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
