"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 domain error (bad parameters,
missing/malformed files), 3 golden-diff mismatch.  Results go to stdout
(or --out), diagnostics to stderr; identical flags produce identical
bytes except for benchmark timings.
"""
import argparse
import json
import os
import sys

from . import bench, tables
from .algebraic import compute_nq, enb_embedding_degree, multgroup_embedding_degree
from .errors import GF2Error
from .gauss import GnbElement, build_params, gnb_mul, lowest_type, mult_table
from .towers import (
    FORM_AS2,
    FORM_KUMMER3,
    FORM_WITT4,
    TowerElement,
    build_as2,
    build_kummer3,
    build_witt4,
    tower_mul,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_GOLDEN = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    top = _Parser(prog="gf2nbasis", description=__doc__)
    top.add_argument("--format", choices=("text", "csv", "json"), default="text")
    top.add_argument("--jobs", type=int, default=None, help="scan worker count (default: all cores)")
    sub = top.add_subparsers(dest="command", required=True)

    gnb = sub.add_parser("gnb", help="Gaussian normal bases")
    gsub = gnb.add_subparsers(dest="subcommand", required=True)

    p = gsub.add_parser("lowest", help="lowest type k <= kmax for degree n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=10)

    p = gsub.add_parser("table", help="scan a degree range for lowest types")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--out", default=None)
    p.add_argument("--golden", default=None)

    p = gsub.add_parser("mul", help="multiply two elements given as hex coordinates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = gsub.add_parser("complexity", help="multiplication-table weight of a basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("nq", help="the curve-existence integer for a pair (n, q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    enb = sub.add_parser("enb", help="embedding-degree searches")
    esub = enb.add_subparsers(dest="subcommand", required=True)

    p = esub.add_parser("embed", help="smallest workable embedding degree for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emax", type=int, default=20)
    p.add_argument("--mechanism", choices=("elliptic", "multiplicative"), default="elliptic")

    p = esub.add_parser("table", help="scan a range for embedding degrees")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--emax", type=int, default=20)
    p.add_argument("--out", default=None)
    p.add_argument("--golden", default=None)

    ext = sub.add_parser("ext", help="extension workarounds where low-type GNBs are missing")
    xsub = ext.add_subparsers(dest="subcommand", required=True)
    p = xsub.add_parser("table")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--emax", type=int, default=20)
    p.add_argument("--out", default=None)
    p.add_argument("--golden", default=None)

    tower = sub.add_parser("tower", help="tower-extension arithmetic")
    tsub = tower.add_subparsers(dest="subcommand", required=True)
    p = tsub.add_parser("mul", help="multiply two tower elements (comma-separated hex blocks)")
    p.add_argument("--form", choices=(FORM_AS2, FORM_WITT4, FORM_KUMMER3), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    b = sub.add_parser("bench", help="timing reports")
    bsub = b.add_subparsers(dest="subcommand", required=True)
    p = bsub.add_parser("crossover", help="schoolbook vs karatsuba ladder plus GNB timings")
    p.add_argument("--min-deg", type=int, default=64)
    p.add_argument("--max-deg", type=int, default=16384)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--compare-backends", action="store_true")
    p.add_argument("--out", default=None)

    return top


def _write_out(text: str, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_scalar(args, value, fields):
    """One scalar result; text prints just the value, json the full record."""
    if args.format == "json":
        print(json.dumps(fields, sort_keys=True))
    elif args.format == "csv":
        print(",".join(str(k) for k in fields))
    else:
        print("none" if value is None else value)


def _emit_table(args, rows, schema, out, golden):
    text = tables.rows_to_csv(rows, schema)
    if args.format == "json":
        payload = [dict(zip(schema, row.cells())) for row in rows]
        text = json.dumps(payload, indent=0, sort_keys=False) + "\n"
    _write_out(text, out)
    if golden is not None:
        diff = tables.diff_text_golden(
            tables.rows_to_csv(rows, schema), tables.resolve_golden(golden)
        )
        if not diff.ok:
            print(diff.report(), file=sys.stderr)
            return EXIT_GOLDEN
        print(diff.report(), file=sys.stderr)
    return EXIT_OK


def _run(args) -> int:
    jobs = args.jobs
    if args.command == "gnb" and args.subcommand == "lowest":
        k = lowest_type(args.n, args.kmax)
        _emit_scalar(args, k, {"n": args.n, "kmax": args.kmax, "k": k})
    elif args.command == "gnb" and args.subcommand == "table":
        rows = tables.gnb_range(args.min, args.max, args.kmax, jobs=jobs or (os.cpu_count() or 1))
        return _emit_table(args, rows, tables.GNB_SCHEMA, args.out, args.golden)
    elif args.command == "gnb" and args.subcommand == "mul":
        params = build_params(args.n, args.k)
        a = GnbElement.from_hex(params, args.a)
        b = GnbElement.from_hex(params, args.b)
        c = gnb_mul(a, b)
        _emit_scalar(args, c.to_hex(), {"n": args.n, "k": args.k, "product": c.to_hex()})
    elif args.command == "gnb" and args.subcommand == "complexity":
        table = mult_table(build_params(args.n, args.k))
        _emit_scalar(
            args,
            table.complexity,
            {"n": args.n, "k": args.k, "complexity": table.complexity},
        )
    elif args.command == "nq":
        profile = compute_nq(args.n, args.q)
        _emit_scalar(
            args,
            profile.nq,
            {
                "n": args.n,
                "q": args.q,
                "nq": profile.nq,
                "per_prime": [list(t) for t in profile.per_prime],
            },
        )
    elif args.command == "enb" and args.subcommand == "embed":
        search = (
            enb_embedding_degree if args.mechanism == "elliptic" else multgroup_embedding_degree
        )
        res = search(args.n, args.emax)
        _emit_scalar(
            args,
            res.embed,
            {"n": args.n, "embed": res.embed, "d": res.d, "mechanism": res.mechanism},
        )
    elif args.command == "enb" and args.subcommand == "table":
        rows = tables.enb_range(args.min, args.max, args.emax, jobs=jobs or (os.cpu_count() or 1))
        return _emit_table(args, rows, tables.ENB_SCHEMA, args.out, args.golden)
    elif args.command == "ext":
        rows = tables.ext_range(
            args.min, args.max, args.kmax, args.emax, jobs=jobs or (os.cpu_count() or 1)
        )
        return _emit_table(args, rows, tables.EXT_SCHEMA, args.out, args.golden)
    elif args.command == "tower":
        base = build_params(args.d, args.k)
        builder = {FORM_AS2: build_as2, FORM_WITT4: build_witt4, FORM_KUMMER3: build_kummer3}
        tp = builder[args.form](base)
        x = TowerElement.from_hex_blocks(tp, args.x)
        y = TowerElement.from_hex_blocks(tp, args.y)
        z = tower_mul(x, y)
        _emit_scalar(
            args,
            z.to_hex_blocks(),
            {"form": args.form, "d": args.d, "k": args.k, "product": z.to_hex_blocks()},
        )
    elif args.command == "bench":
        rows = bench.bench_crossover(
            args.min_deg,
            args.max_deg,
            samples=args.samples,
            compare_backends=args.compare_backends,
        )
        if args.format == "json":
            payload = [
                {"degree": d, "algorithm": alg, "ns_per_op": ns} for d, alg, ns in rows
            ]
            _write_out(json.dumps(payload, indent=0) + "\n", args.out)
        else:
            _write_out(bench.rows_to_csv(rows), args.out)
    else:  # pragma: no cover
        raise AssertionError("unhandled command")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_USAGE if ex.code not in (0, None) else EXIT_OK
    try:
        return _run(args)
    except GF2Error as ex:
        print(f"gf2nbasis: {ex}", file=sys.stderr)
        return EXIT_DOMAIN
    except ZeroDivisionError as ex:
        print(f"gf2nbasis: {ex}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
