# ehrhart_mckay/interfaces/cli.py
import argparse
import csv
import json
import sys
from fractions import Fraction

from ehrhart_mckay import config
from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.report import RunSpec
from ehrhart_mckay.core.polytope_count import count_all_states
from ehrhart_mckay.core.verifier import Verifier
from ehrhart_mckay.enums import Method, OutputFormat, VerifyMode
from ehrhart_mckay.errors import (EXIT_INTERNAL, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, USAGE_ERRORS,
                                  EhrhartMcKayError, InvalidAlgebraError)
from ehrhart_mckay.utils.logger import log, set_level

CSV_HEADER = ("algebra", "q", "count")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact number: {text!r}")


def _emit_json(payload: dict):
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _emit_csv(rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)


class Cli:
    def __init__(self, verifier: Verifier):
        self.verifier = verifier
        self.dispatcher = verifier.dispatcher

    @staticmethod
    def resolve_algebras(args) -> list[AlgebraId]:
        """--algebra names, --su N and --so M, in that order."""
        algebras = [AlgebraId.parse(name) for name in (args.algebra or [])]
        algebras += [AlgebraId.from_su(n) for n in (args.su or [])]
        algebras += [AlgebraId.from_so(m) for m in (args.so or [])]
        return algebras

    def _single_algebra(self, args) -> AlgebraId:
        algebras = self.resolve_algebras(args)
        if len(algebras) != 1:
            raise InvalidAlgebraError(f"Expected exactly one algebra (--algebra, --su or --so), got {len(algebras)}")
        return algebras[0]

    def cmd_count(self, args) -> int:
        request = RunSpec(self._single_algebra(args), Method(args.method), level=args.level,
                       output_format=OutputFormat(args.format))
        count = self.dispatcher.run_count(request.method.value, request.algebra, request.level)
        if request.output_format is OutputFormat.JSON:
            _emit_json({"algebra": str(request.algebra), "method": request.method.value,
                        "level": request.level, "count": str(count)})
        elif request.output_format is OutputFormat.CSV:
            _emit_csv([(str(request.algebra), request.level, count)])
        else:
            print(count)
        return EXIT_OK

    def cmd_series(self, args) -> int:
        a = self._single_algebra(args)
        terms = args.terms if args.terms is not None else self.dispatcher.default_truncation(args.method, a)
        request = RunSpec(a, Method(args.method), truncation=terms, output_format=OutputFormat(args.format))
        series = self.dispatcher.run_series(request.method.value, a, request.truncation)
        if request.output_format is OutputFormat.JSON:
            _emit_json({"algebra": str(a), "method": request.method.value, "truncation": series.truncation,
                        "coefficients": [str(c) for c in series]})
        elif request.output_format is OutputFormat.CSV:
            _emit_csv([(str(a), q, c) for q, c in enumerate(series)])
        else:
            print(f"{a} ({request.method.value}): " + ", ".join(str(c) for c in series))
        return EXIT_OK

    def cmd_table(self, args) -> int:
        algebras = self.resolve_algebras(args)
        if not algebras:
            raise InvalidAlgebraError("table needs at least one algebra")
        truncations, rows = {}, []
        for a in algebras:
            terms = args.terms if args.terms is not None else self.dispatcher.default_truncation(args.method, a)
            series = self.dispatcher.run_series(args.method, a, terms)
            truncations[str(a)] = series.truncation
            rows += [(a, q, c) for q, c in enumerate(series)]
        if args.format == OutputFormat.TEXT.value:
            print(f"{'algebra':<8} {'q':>3} {'count':>12} {'all states':>12}")
            for a, q, c in rows:
                print(f"{str(a):<8} {q:>3} {c:>12} {count_all_states(a, q):>12}")
        elif args.format == OutputFormat.JSON.value:
            _emit_json({"method": args.method, "truncation": truncations,
                        "rows": [{"algebra": str(a), "q": q, "count": str(c)} for a, q, c in rows]})
        else:
            _emit_csv([(str(a), q, c) for a, q, c in rows])
        return EXIT_OK

    def cmd_verify(self, args) -> int:
        mode = VerifyMode(args.mode)
        if mode in (VerifyMode.DUALITY, VerifyMode.DETERMINANTS):
            options = {"algebra": self._single_algebra(args)}
            if mode is VerifyMode.DUALITY:
                options["terms"] = args.terms
        elif mode is VerifyMode.LEVELRANK:
            options = {"max_n": args.max if args.max is not None else config.LEVELRANK_MAX}
        elif mode is VerifyMode.ASYMPTOTIC:
            options = {"algebras": self.resolve_algebras(args) or None,
                       "level": args.level if args.level is not None else config.ASYMPTOTIC_LEVEL,
                       "tolerance": args.tolerance}
        elif mode is VerifyMode.OMEGA_IDENTITIES:
            options = {"order": args.terms if args.terms is not None else 12}
        else:
            options = {"bless": args.bless}
        report = self.verifier.run(mode, **options)
        if args.format == OutputFormat.JSON.value:
            _emit_json(report.to_dict())
        else:
            print(report.render_text())
        return EXIT_OK if report.passed else EXIT_MISMATCH


def _add_algebra_options(parser: argparse.ArgumentParser):
    parser.add_argument("--algebra", action="append", help="A<n>, D<n>, E6, E7 or E8 (repeatable where several are allowed)")
    parser.add_argument("--su", action="append", type=int, help="su(N), i.e. A_{N-1}")
    parser.add_argument("--so", action="append", type=int, help="so(M) with M even, i.e. D_{M/2}")


def _add_omega_option(parser: argparse.ArgumentParser):
    # SUPPRESS keeps the top-level value when the flag is not repeated after the subcommand
    parser.add_argument("--omega-max-rank", type=int, default=argparse.SUPPRESS, dest="omega_max_rank",
                        help="Same as the top-level --omega-max-rank")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrhart-mckay",
        description="Root-lattice state counts and Ehrhart series of simply-laced algebras, with cross-method verification.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs on stderr")
    parser.add_argument("--omega-max-rank", type=int, default=config.OMEGA_MAX_RANK,
                        help=f"Largest rank the omega method accepts (default: {config.OMEGA_MAX_RANK})")
    subparsers = parser.add_subparsers(dest="command", required=True)
    methods = [m.value for m in Method]
    formats = [f.value for f in OutputFormat]

    # -- count --
    p_count = subparsers.add_parser("count", help="Number of root-lattice states at one level")
    _add_algebra_options(p_count)
    _add_omega_option(p_count)
    p_count.add_argument("--level", type=int, required=True, help="Level q >= 0")
    p_count.add_argument("--method", choices=methods, default=Method.BRUTE.value)
    p_count.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)

    # -- series --
    p_series = subparsers.add_parser("series", help="Ehrhart series to z^T")
    _add_algebra_options(p_series)
    _add_omega_option(p_series)
    p_series.add_argument("--terms", type=int, help=f"Truncation T (default: {config.DEFAULT_TERMS}, omega on rank >= {config.OMEGA_LARGE_RANK}: {config.OMEGA_LARGE_RANK_TERMS})")
    p_series.add_argument("--method", choices=methods, default=Method.BRUTE.value)
    p_series.add_argument("--format", choices=formats, default=OutputFormat.JSON.value)

    # -- verify --
    p_verify = subparsers.add_parser("verify", help="Cross-method and duality checks")
    p_verify.add_argument("mode", choices=[m.value for m in VerifyMode])
    _add_algebra_options(p_verify)
    _add_omega_option(p_verify)
    p_verify.add_argument("--terms", type=int, help="Truncation (duality) or series order (omega-identities)")
    p_verify.add_argument("--max", type=int, help=f"Largest k and q for levelrank (default: {config.LEVELRANK_MAX})")
    p_verify.add_argument("--level", type=int, help=f"Level for asymptotic (default: {config.ASYMPTOTIC_LEVEL})")
    p_verify.add_argument("--tolerance", type=_fraction, default=config.ASYMPTOTIC_TOLERANCE,
                          help="Allowed |ratio - 1| for asymptotic, exact (default: 1/10)")
    p_verify.add_argument("--bless", action="store_true", help="golden: rewrite the golden file from brute force")
    p_verify.add_argument("--format", choices=[OutputFormat.TEXT.value, OutputFormat.JSON.value],
                          default=OutputFormat.TEXT.value)

    # -- table --
    p_table = subparsers.add_parser("table", help="algebra,q,count rows for q <= T")
    _add_algebra_options(p_table)
    _add_omega_option(p_table)
    p_table.add_argument("--terms", type=int, help=f"Truncation T (default: {config.DEFAULT_TERMS}, omega on rank >= {config.OMEGA_LARGE_RANK}: {config.OMEGA_LARGE_RANK_TERMS})")
    p_table.add_argument("--method", choices=methods, default=Method.BRUTE.value)
    p_table.add_argument("--format", choices=formats, default=OutputFormat.CSV.value)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.verbose:
        set_level("DEBUG" if args.verbose > 1 else "INFO")

    cli = Cli(Verifier(omega_max_rank=args.omega_max_rank))
    commands = {"count": cli.cmd_count, "series": cli.cmd_series, "verify": cli.cmd_verify, "table": cli.cmd_table}
    try:
        return commands[args.command](args)
    except USAGE_ERRORS as e:
        log("CLI", f"{type(e).__name__}: {e}", level="ERROR")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EhrhartMcKayError as e:
        log("CLI", f"Internal assertion failed: {type(e).__name__}: {e}", level="ERROR")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
