"""Command-line front end (``aggkit``).

Exit codes: 0 success; 1 a check or validation failed; 2 bad input or
configuration; 3 domain error while evaluating a row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from aggkit import axioms, integrals, specs
from aggkit.core.io import measure_from_json, measure_to_json, subset_key
from aggkit.core.measures import (
    BinaryMeasure,
    FuzzyMeasure,
    additive_measure,
    classify_measure,
    necessity_measure,
    members,
    possibility_measure,
)
from aggkit.core.signature import invariant_signature
from aggkit.errors import AggregationError, MonotonicityViolation, NotCardinalityBased, SpecError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(v: float) -> str:
    # shortest string that round-trips; locale-independent
    return repr(float(v))


def _err(msg: str) -> None:
    print(f"aggkit: {msg}", file=sys.stderr)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _read_json(path: str) -> Any:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _load_spec(path: str) -> specs.Aggregator:
    obj = _read_json(path)
    base = Path(path).parent if path != "-" else None
    return specs.build(obj, base_dir=base)


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- eval --------------------------------------------------------------------


def cmd_eval(args) -> int:
    agg = _load_spec(args.spec)
    reader = csv.reader(io.StringIO(_read_text(args.data)))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not f.strip() for f in row):
            continue
        if args.header and lineno == 1:
            if not args.values_only:
                writer.writerow(row + ["value"])
            continue
        xs = []
        for col, field in enumerate(row, start=1):
            try:
                v = float(field)
            except ValueError:
                _err(f"row {lineno}, column {col}: cannot parse {field!r} as a number")
                return EXIT_USAGE
            if math.isnan(v):
                _err(f"row {lineno}, column {col}: NaN is not a valid input")
                return EXIT_USAGE
            xs.append(v)
        if agg.n is not None and len(xs) != agg.n:
            _err(f"row {lineno}: expected {agg.n} fields, got {len(xs)}")
            return EXIT_USAGE
        try:
            value = agg(xs)
        except AggregationError as exc:
            _err(f"row {lineno}: {exc}")
            return EXIT_DOMAIN
        writer.writerow([fmt(value)] if args.values_only else row + [fmt(value)])
    text = out.getvalue()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- check -------------------------------------------------------------------


def cmd_check(args) -> int:
    agg = _load_spec(args.spec)
    unknown = [p for p in args.properties if p not in axioms.PROPERTIES]
    if unknown:
        raise UsageError(f"unknown properties {unknown}; see 'aggkit list'")
    n = args.n if args.n is not None else (agg.n or 3)
    if agg.n is not None and n != agg.n:
        raise UsageError(f"--n {n} conflicts with the aggregator's arity {agg.n}")
    tolerances = {p: args.tolerance for p in args.properties} if args.tolerance is not None else {}
    sampler = axioms.Sampler(
        seed=args.seed,
        domain=tuple(args.domain),
        n=n,
        samples=args.samples,
        n_max=args.n_max,
        tolerances=tolerances,
    )
    reports = axioms.check_suite(args.properties, agg, sampler)
    if args.format == "json":
        doc = {
            "spec": _read_json(args.spec),
            "seed": args.seed,
            "n": n,
            "domain": list(sampler.domain),
            "reports": [r.to_dict() for r in reports],
        }
        print(_dump(doc))
    else:
        for r in reports:
            print(str(r))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


# -- measure -----------------------------------------------------------------


def _load_measure(path: str) -> FuzzyMeasure:
    return measure_from_json(_read_json(path))


def cmd_measure(args) -> int:
    action = args.action
    if action == "validate":
        try:
            mu = _load_measure(args.file)
        except MonotonicityViolation as exc:
            print(
                _dump(
                    {
                        "valid": False,
                        "error": "MonotonicityViolation",
                        "message": str(exc),
                        "witness": {"smaller": subset_key(exc.smaller), "larger": subset_key(exc.larger)},
                    }
                )
            )
            return EXIT_FAIL
        except SpecError:
            raise
        except AggregationError as exc:
            print(_dump({"valid": False, "error": type(exc).__name__, "message": str(exc)}))
            return EXIT_FAIL
        print(_dump({"valid": True, "n": mu.n}))
        return EXIT_OK
    if action == "classify":
        print(_dump(classify_measure(_load_measure(args.file))))
        return EXIT_OK
    if action == "to-owa":
        mu = _load_measure(args.file)
        try:
            w = integrals.measure_to_owa(mu)
        except NotCardinalityBased as exc:
            print(
                _dump(
                    {
                        "error": "NotCardinalityBased",
                        "message": str(exc),
                        "witness": [subset_key(exc.first), subset_key(exc.second)],
                    }
                )
            )
            return EXIT_FAIL
        print(_dump({"weights": list(w)}))
        return EXIT_OK
    weights = _weights_arg(args)
    if action == "from-owa":
        mu = integrals.owa_to_measure(weights)
    else:
        build = {
            "additive": additive_measure,
            "possibility": possibility_measure,
            "necessity": necessity_measure,
        }[args.kind]
        mu = build(weights)
    print(_dump(measure_to_json(mu)))
    return EXIT_OK


def _weights_arg(args) -> list[float]:
    source = args.weights_file or (args.file if args.weights is None else None)
    if source:
        obj = _read_json(source)
        if isinstance(obj, dict):
            extra = set(obj) - {"weights"}
            if extra or "weights" not in obj:
                raise UsageError("weights file must be a list or {\"weights\": [...]}")
            obj = obj["weights"]
        if not isinstance(obj, list):
            raise UsageError("weights file must contain a list of numbers")
        vals = obj
    else:
        vals = args.weights
    if not vals:
        raise UsageError("no weights given")
    try:
        return [float(v) for v in vals]
    except (TypeError, ValueError):
        raise UsageError(f"weights must be numbers, got {vals!r}") from None


# -- convert -----------------------------------------------------------------


# lattice polynomials are both Choquet and Sugeno integrals
FAMILIES = (
    {"choquet", "owa", "wam", "lattice-poly"},
    {"sugeno", "pmax", "pmin", "opmax", "opmin", "lattice-poly"},
)


def convert_spec(spec: dict[str, Any], target: str) -> dict[str, Any]:
    """Rewrite a spec as an equivalent spec of kind ``target``."""
    agg = specs.build(spec)
    kind = spec["kind"]
    mu = None
    if kind in ("choquet", "sugeno"):
        mu = measure_from_json(spec["measure"]) if "measure" in spec else None
        if mu is None:
            raise UsageError("convert needs an inline measure")
    w = spec.get("weights")
    n = agg.n
    # route everything through a measure
    if kind == "owa":
        mu = integrals.owa_to_measure(w)
    elif kind == "wam":
        mu = additive_measure(w)
    elif kind == "pmax":
        mu = possibility_measure(w)
    elif kind == "pmin":
        mu = necessity_measure(w)
    elif kind == "opmax":
        mu = integrals.opmax_to_measure(w)
    elif kind == "opmin":
        mu = integrals.opmin_to_measure(w)
    elif kind == "lattice-poly":
        mu = BinaryMeasure.from_generators(n, spec["winning"]).to_measure()
    if mu is None:
        raise UsageError(f"kind {kind!r} has no measure representation")

    if not any(kind in fam and target in fam for fam in FAMILIES):
        raise UsageError(f"cannot convert {kind!r} into {target!r}: different integral families")

    flags = classify_measure(mu)
    if target in ("choquet", "sugeno"):
        return {"kind": target, "measure": measure_to_json(mu)}
    if target == "owa":
        return {"kind": "owa", "weights": list(integrals.measure_to_owa(mu))}
    if target == "wam":
        if not flags["additive"]:
            raise UsageError("measure is not additive; no equivalent wam")
        return {"kind": "wam", "weights": [mu.values[1 << i] for i in range(mu.n)]}
    if target == "opmax":
        return {"kind": "opmax", "weights": list(integrals.measure_to_opmax(mu))}
    if target == "opmin":
        return {"kind": "opmin", "weights": list(integrals.measure_to_opmin(mu))}
    if target == "pmax":
        if not flags["possibility"]:
            raise UsageError("measure is not a possibility measure; no equivalent pmax")
        return {"kind": "pmax", "weights": [mu.values[1 << i] for i in range(mu.n)]}
    if target == "pmin":
        if not flags["necessity"]:
            raise UsageError("measure is not a necessity measure; no equivalent pmin")
        return {"kind": "pmin", "weights": [mu.values[mu.full ^ (1 << i)] for i in range(mu.n)]}
    if target == "lattice-poly":
        if not flags["binary"]:
            raise UsageError("measure is not 0/1-valued; no equivalent lattice polynomial")
        gamma = BinaryMeasure(mu.n, frozenset(m for m in range(1 << mu.n) if mu.values[m] == 1.0))
        return {"kind": "lattice-poly", "n": mu.n, "winning": [list(members(m)) for m in gamma.minimal_sets()]}
    raise UsageError(f"unsupported conversion target {target!r}")


CONVERT_TARGETS = ("choquet", "sugeno", "owa", "wam", "pmax", "pmin", "opmax", "opmin", "lattice-poly")


def cmd_convert(args) -> int:
    spec = _read_json(args.spec)
    if not isinstance(spec, dict):
        raise UsageError("spec must be a JSON object")
    try:
        out = convert_spec(spec, args.to)
    except NotCardinalityBased as exc:
        raise UsageError(f"measure is not cardinality-based: {exc}") from None
    print(_dump(out))
    return EXIT_OK


# -- signature / list ------------------------------------------------------------


def demo_transform(t: float) -> float:
    """A strictly increasing bijection of the reals used by --apply-monotone."""
    return t**3 + t


def cmd_signature(args) -> int:
    x = args.values
    sig = invariant_signature(x)
    print(str(sig))
    if args.apply_monotone:
        y = [demo_transform(v) for v in x]
        sig2 = invariant_signature(y)
        print(str(sig2))
        print("invariant" if sig2 == sig else "changed")
        return EXIT_OK if sig2 == sig else EXIT_FAIL
    return EXIT_OK


def cmd_list(args) -> int:
    kinds = sorted(specs.KINDS)
    props = list(axioms.PROPERTIES)
    if args.format == "json":
        print(_dump({"kinds": kinds, "properties": props}))
    else:
        print("kinds:")
        for k in kinds:
            req, opt = specs.KINDS[k]
            params = ", ".join(sorted(req) + [f"[{o}]" for o in sorted(opt)])
            print(f"  {k}" + (f" ({params})" if params else ""))
        print("properties:")
        for p in props:
            print(f"  {p}")
    return EXIT_OK


# -- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _err(message)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="aggkit", description="Aggregation functions: evaluate, check, convert.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate an aggregator over CSV rows")
    e.add_argument("spec", help="AggregatorSpec JSON file ('-' for stdin)")
    e.add_argument("data", help="CSV file of numeric rows ('-' for stdin)")
    e.add_argument("-o", "--output", help="write CSV here instead of stdout")
    e.add_argument("--header", action="store_true", help="first row is a header")
    e.add_argument("--values-only", action="store_true", help="emit only the aggregated values")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("check", help="run sampled property checks")
    c.add_argument("spec")
    c.add_argument("properties", nargs="+", metavar="property")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=1000)
    c.add_argument("--n-max", type=int, default=5)
    c.add_argument("--n", type=int, default=None, help="arity (default: the aggregator's, else 3)")
    c.add_argument("--domain", type=float, nargs=2, default=[0.0, 1.0], metavar=("LO", "HI"))
    c.add_argument("--tolerance", type=float, default=None, help="override every selected law's tolerance")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("measure", help="validate, classify and convert fuzzy measures")
    m.add_argument("action", choices=("validate", "classify", "to-owa", "from-owa", "from-weights"))
    m.add_argument("file", nargs="?", help="measure JSON file ('-' for stdin)")
    m.add_argument("--weights", type=float, nargs="+", default=None)
    m.add_argument("--weights-file", default=None, help="JSON list of weights ('-' for stdin)")
    m.add_argument("--kind", choices=("additive", "possibility", "necessity"), default="additive")
    m.set_defaults(func=cmd_measure)

    v = sub.add_parser("convert", help="rewrite an integral spec as an equivalent kind")
    v.add_argument("spec")
    v.add_argument("--to", required=True, choices=CONVERT_TARGETS)
    v.set_defaults(func=cmd_convert)

    s = sub.add_parser("signature", help="print the invariant signature of a vector")
    s.add_argument("values", type=float, nargs="+")
    s.add_argument("--apply-monotone", action="store_true", help="also show the signature after t -> t^3 + t")
    s.set_defaults(func=cmd_signature)

    ls = sub.add_parser("list", help="list aggregator kinds and property names")
    ls.add_argument("--format", choices=("text", "json"), default="text")
    ls.set_defaults(func=cmd_list)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "measure":
        needs_file = args.action in ("validate", "classify", "to-owa")
        if needs_file and not args.file:
            _err(f"measure {args.action} needs a file argument")
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except AggregationError as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
