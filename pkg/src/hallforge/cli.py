"""Command-line interface: ``hallforge catalog|product|verify|table``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration limit, 4 out-of-catalog, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import expr
from . import field_linalg as fl
from .catalog import get_catalog
from .element import LinComb
from .errors import InternalError, OutOfCatalogError, ParseError, ResourceLimitError, ValidationError
from .quiver import parse_quiver
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT, EXIT_CATALOG, EXIT_IO = range(6)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dims(text: str, n: int) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError("--max-dim must be a comma list of integers", text, 0) from None
    if len(vals) == 1 and n > 1:
        vals = vals * n
    if len(vals) != n or any(v < 0 for v in vals):
        raise ValidationError(f"--max-dim needs {n} nonnegative entries, got {text!r}")
    return vals


def _common(p: argparse.ArgumentParser):
    p.add_argument("--quiver", default="a1", help="a<n> or a<n>:<dirs>, e.g. a2:> (default a1)")
    p.add_argument("--q", type=int, default=2, help="prime field order (default 2)")
    p.add_argument("--max-dim", default="2", help="catalog bound, comma list or one value for all vertices")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--limit", type=int, default=None,
                   help="enumeration cap (default: $HALLFORGE_LIMIT or 2^20)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hallforge", description="Exact Hall-algebra computations over type-A quivers.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("catalog", help="list iso classes with a_M and Hom/Ext tables")
    _common(c)

    pr = sub.add_parser("product", help="multiply two element expressions")
    _common(pr)
    pr.add_argument("--algebra", choices=expr.ALGEBRAS, default="dh2")
    pr.add_argument("--lhs", required=True)
    pr.add_argument("--rhs", required=True)

    v = sub.add_parser("verify", help="run an identity suite")
    _common(v)
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("table", help="multiplication table over the standard basis")
    _common(t)
    t.add_argument("--algebra", choices=expr.ALGEBRAS, default="dh2")
    return ap


def _session(args):
    if args.limit is not None:
        fl.set_limit(args.limit)
    q = parse_quiver(args.quiver)
    fl.PrimeField(args.q)
    return q, args.q, _dims(args.max_dim, q.n)


def _emit(args, payload: str) -> None:
    if not payload.endswith("\n"):
        payload += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def cmd_catalog(args) -> int:
    q, p, dmax = _session(args)
    cat = get_catalog(q, p, dmax)
    names = [str(c) for c in cat.classes]
    if args.format == "json":
        data = {
            "quiver": q.spec,
            "q": p,
            "dmax": list(dmax),
            "classes": [{"iso": str(c), "dim": list(cat.dim(c)), "aut": cat.aut[c]} for c in cat.classes],
            "hom": [[cat.hom[(a, b)] for b in cat.classes] for a in cat.classes],
            "ext": [[cat.ext[(a, b)] for b in cat.classes] for a in cat.classes],
        }
        _emit(args, _dump(data))
    else:
        lines = [f"# {q.spec} q={p} dmax={','.join(map(str, dmax))}: {len(cat)} classes"]
        for i, c in enumerate(cat.classes):
            lines.append(f"{i:4d}  {names[i]:<32} dim={','.join(map(str, cat.dim(c)))} aut={cat.aut[c]}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_product(args) -> int:
    q, p, dmax = _session(args)
    cat = get_catalog(q, p, dmax)
    x = expr.parse_and_evaluate(cat, args.algebra, args.lhs)
    y = expr.parse_and_evaluate(cat, args.algebra, args.rhs)
    z = expr.product(cat, args.algebra, x, y)
    if args.format == "json":
        _emit(args, _dump(expr.element_to_json(args.algebra, z)))
    else:
        _emit(args, expr.format_element(args.algebra, z))
    return EXIT_OK


def cmd_verify(args) -> int:
    q, p, dmax = _session(args)
    report = run_suite(args.suite, q, p, dmax, samples=args.samples, seed=args.seed)
    if args.format == "json":
        _emit(args, _dump(report.to_json()))
    else:
        lines = [report.summary()] + [f"  note: {n}" for n in report.notes]
        _emit(args, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args) -> int:
    q, p, dmax = _session(args)
    small = get_catalog(q, p, dmax)
    big = get_catalog(q, p, tuple(2 * d for d in dmax))
    alg = args.algebra
    gens = expr.generators(small, alg)
    rows = []
    for a in gens:
        for b in gens:
            z = expr.product(big, alg, LinComb.monomial(p, a), LinComb.monomial(p, b))
            rows.append((a, b, z))
    if args.format == "json":
        data = {
            "algebra": alg,
            "quiver": q.spec,
            "q": p,
            "dmax": list(dmax),
            "generators": [expr.format_key(alg, g) for g in gens],
            "table": [
                {"lhs": expr.format_key(alg, a), "rhs": expr.format_key(alg, b),
                 "product": expr.element_to_json(alg, z)}
                for a, b, z in rows
            ],
        }
        _emit(args, _dump(data))
    else:
        _emit(args, "\n".join(f"{expr.format_key(alg, a)} * {expr.format_key(alg, b)} = "
                              f"{expr.format_element(alg, z)}" for a, b, z in rows))
    return EXIT_OK


COMMANDS = {"catalog": cmd_catalog, "product": cmd_product, "verify": cmd_verify, "table": cmd_table}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ValidationError) as exc:
        print(f"hallforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"hallforge: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OutOfCatalogError as exc:
        print(f"hallforge: out of catalog: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except OSError as exc:
        print(f"hallforge: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InternalError as exc:
        print(f"hallforge: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        if args.limit is not None:
            fl.set_limit(None)


if __name__ == "__main__":
    sys.exit(main())
