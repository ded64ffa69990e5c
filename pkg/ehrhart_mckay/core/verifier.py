# ehrhart_mckay/core/verifier.py
import csv
from collections import Counter
from fractions import Fraction
from pathlib import Path

from ehrhart_mckay import config
from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.laurent import Monomial, OmegaExpr, Window
from ehrhart_mckay.components.report import VerificationReport
from ehrhart_mckay.core.mckay_reps import (TABULATED_DETERMINANTS, determinant_prediction, group_of,
                                          roots_of_unity, vee)
from ehrhart_mckay.core.method_dispatcher import MethodDispatcher
from ehrhart_mckay.core.omega_calculus import expand, omega_eq, omega_eq_via_geq, omega_geq, partition_chain
from ehrhart_mckay.core.polytope_count import asymptotic_ratio, count_root_states
from ehrhart_mckay.core.series_core import geometric_expand, phi_su_series
from ehrhart_mckay.core.timing_monitor import TimingMonitor
from ehrhart_mckay.enums import Method, VerifyMode
from ehrhart_mckay.errors import TruncationError
from ehrhart_mckay.utils.logger import log

# (x, y, x v y)
VEE_EXAMPLES = (
    (Fraction(2, 3), Fraction(1, 3), Fraction(2, 3)),
    (Fraction(5, 7), Fraction(6, 7), Fraction(5, 7)),
    (Fraction(1, 4), Fraction(0), Fraction(1, 4)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
)

# Algebra -> highest level written when the golden file is created from scratch
DEFAULT_GOLDEN_GRID = {"A1": 10, "A2": 6, "A3": 4, "D4": 4, "E8": 4}

GOLDEN_HEADER = ("algebra", "q", "count")


def _nontrivial(phases) -> str:
    """The nonzero phases as a sorted multiset, e.g. '1/3 1/3 2/3 2/3'."""
    return " ".join(str(p) for p in sorted(Counter(p for p in phases if p != 0).elements())) or "none"


def _format_phases(phases) -> str:
    return "(" + ", ".join(str(p) for p in phases) + ")"


class Verifier:
    def __init__(self, omega_max_rank: int = config.OMEGA_MAX_RANK):
        self.timing_monitor = TimingMonitor()
        self.dispatcher = MethodDispatcher(self.timing_monitor, omega_max_rank=omega_max_rank)
        log("Verifier", f"Initialized (omega rank guard {omega_max_rank})", level="DEBUG")

    def run(self, mode: VerifyMode, **options) -> VerificationReport:
        handlers = {
            VerifyMode.DUALITY: self.duality,
            VerifyMode.LEVELRANK: self.levelrank,
            VerifyMode.ASYMPTOTIC: self.asymptotic,
            VerifyMode.OMEGA_IDENTITIES: self.omega_identities,
            VerifyMode.DETERMINANTS: self.determinants,
            VerifyMode.GOLDEN: self.golden,
        }
        log("Verifier", f"Running {mode.value} with {options}")
        report = handlers[mode](**options)
        report.timing = self.timing_monitor.get_report()
        status = "PASS" if report.passed else "FAIL"
        log("Verifier", f"{mode.value} [{report.subject}]: {status}", level="INFO" if report.passed else "WARNING")
        return report

    def duality(self, algebra: AlgebraId, terms: int | None = None) -> VerificationReport:
        """Every method that runs on the algebra must give the same coefficients."""
        terms = config.DEFAULT_TERMS if terms is None else terms
        if terms < 1:
            raise TruncationError(f"Truncation must be >= 1, got {terms}")
        methods = self.dispatcher.available(algebra)
        report = VerificationReport(VerifyMode.DUALITY, str(algebra), methods)
        computed = {}
        for name in methods:
            truncation = terms
            if name == Method.OMEGA.value and algebra.rank >= config.OMEGA_LARGE_RANK:
                truncation = min(terms, config.OMEGA_LARGE_RANK_TERMS)
            computed[name] = self.dispatcher.run_series(name, algebra, truncation)
            if truncation < terms:
                report.notes.append(f"{name} checked to z^{truncation} only")
        for q in range(terms + 1):
            values = {name: series[q] for name, series in computed.items() if q <= series.truncation}
            report.add(f"z^{q}", values)
        return report

    def levelrank(self, max_n: int = config.LEVELRANK_MAX) -> VerificationReport:
        """[z^q] Ehr(su(k)) = [z^k] Ehr(su(q)) for 1 <= k < q <= max_n."""
        if max_n < 1:
            raise TruncationError(f"--max must be >= 1, got {max_n}")
        report = VerificationReport(VerifyMode.LEVELRANK, f"su(k), k <= {max_n}", ["genfun"])
        series = {k: phi_su_series(k, max_n) for k in range(1, max_n + 1)}
        for k in range(1, max_n + 1):
            for q in range(k + 1, max_n + 1):
                report.add(f"su({k}) z^{q} / su({q}) z^{k}", {f"su({k})": series[k][q], f"su({q})": series[q][k]})
        return report

    def asymptotic(self, algebras=None, level: int = config.ASYMPTOTIC_LEVEL,
                   tolerance: Fraction = config.ASYMPTOTIC_TOLERANCE) -> VerificationReport:
        """count_all_states |W| / (q^r det C) within tolerance of 1."""
        algebras = algebras or [AlgebraId.parse(name) for name in ("A2", "A3", "D4")]
        tolerance = Fraction(tolerance)
        report = VerificationReport(VerifyMode.ASYMPTOTIC, ", ".join(str(a) for a in algebras))
        for a in algebras:
            ratio = asymptotic_ratio(a, level)
            report.add(f"{a} q={level}", {"ratio": ratio}, agree=abs(ratio - 1) <= tolerance)
        report.notes.append(f"tolerance {tolerance}")
        return report

    def omega_identities(self, order: int = 12) -> VerificationReport:
        """Omega identities as truncated series to the given order."""
        report = VerificationReport(VerifyMode.OMEGA_IDENTITIES, f"order {order}")
        xy = Window({"x": (0, order), "y": (0, order)})
        x_only = Window({"x": (0, order)})

        # Omega_= 1/((1 - l^2 x)(1 - y/l)) = 1/(1 - x y^2)
        variables = ("l", "x", "y")
        window = Window({"l": (-2 * order, 2 * order), "x": (0, order), "y": (0, order)})
        product = expand(OmegaExpr(variables, [Monomial(variables, (2, 1, 0)), Monomial(variables, (-1, 0, 1))], window))
        expected = geometric_expand(Monomial(("x", "y"), (1, 2)), xy)
        direct = omega_eq(product, "l")
        report.add("Omega_= 1/((1-l^2 x)(1-y/l))", {"computed": len(direct), "expected": len(expected)},
                   agree=direct == expected)
        report.add("Omega_= via Omega_>= decomposition", {"terms": len(direct)},
                   agree=omega_eq_via_geq(product, "l") == direct)

        # Omega_>= 1/((1 - l x)(1 - x/l)) = 1/((1 - x)(1 - x^2))
        variables = ("l", "x")
        window = Window({"l": (-order, order), "x": (0, order)})
        product = expand(OmegaExpr(variables, [Monomial(variables, (1, 1)), Monomial(variables, (-1, 1))], window))
        computed = omega_geq(product, "l")
        expected = expand(OmegaExpr(("x",), [Monomial(("x",), (1,)), Monomial(("x",), (2,))], x_only))
        report.add("Omega_>= 1/((1-l x)(1-x/l))", {"computed": len(computed), "expected": len(expected)},
                   agree=computed == expected)

        # the chain for partitions into at most three parts
        computed = partition_chain(3, order)
        expected = expand(OmegaExpr(("x",), [Monomial(("x",), (k,)) for k in (1, 2, 3)], x_only))
        report.add("partition chain n=3", {"computed": len(computed), "expected": len(expected)},
                   agree=computed == expected)

        # two nested Omega_>=: 1/((1 - l m x)(1 - y/(l^2 m))) -> 1/((1 - x)(1 - x^2 y))
        variables = ("l", "m", "x", "y")
        window = Window({"l": (-2 * order, 2 * order), "m": (-order, order), "x": (0, order), "y": (0, order)})
        product = expand(OmegaExpr(variables, [Monomial(variables, (1, 1, 1, 0)), Monomial(variables, (-2, -1, 0, 1))], window))
        computed = omega_geq(omega_geq(product, "m"), "l")
        expected = expand(OmegaExpr(("x", "y"), [Monomial(("x", "y"), (1, 0)), Monomial(("x", "y"), (2, 1))], xy))
        report.add("nested Omega_>= in l and m", {"computed": len(computed), "expected": len(expected)},
                   agree=computed == expected)
        return report

    def determinants(self, algebra: AlgebraId) -> VerificationReport:
        """The vee-fold prediction against the dual group's determinants."""
        report = VerificationReport(VerifyMode.DETERMINANTS, str(algebra))
        for x, y, expected in VEE_EXAMPLES:
            report.add(f"{x} v {y}", {"computed": vee(x, y), "expected": expected})
        prediction = determinant_prediction(algebra)
        group = group_of(algebra)
        report.add("nontrivial determinants vs group",
                   {"predicted": _nontrivial(prediction), "group": _nontrivial(group.phases)})
        if algebra in TABULATED_DETERMINANTS:
            report.add("nontrivial determinants vs tabulated",
                       {"predicted": _nontrivial(prediction),
                        "tabulated": _nontrivial(TABULATED_DETERMINANTS[algebra].elements())})
        report.notes.append(f"X = {_format_phases(prediction)}")
        report.notes.append(f"D = ({', '.join(str(d) for d in roots_of_unity(prediction))})")
        report.notes.append(f"group {group}")
        return report

    def golden(self, path: Path | None = None, bless: bool = False) -> VerificationReport:
        """Brute-force counts against the golden CSV; `bless` rewrites the file instead."""
        path = Path(path or config.GOLDEN_PATH)
        report = VerificationReport(VerifyMode.GOLDEN, str(path), ["brute"])
        recorded = self._read_golden(path)
        if bless:
            if recorded:
                grid = [(AlgebraId.parse(name), q) for name, q, _ in recorded]
            else:
                grid = [(AlgebraId.parse(name), q) for name, top in DEFAULT_GOLDEN_GRID.items() for q in range(top + 1)]
            rows = [(str(a), q, count_root_states(a, q)) for a, q in grid]
            self._write_golden(path, rows)
            report.notes.append(f"blessed {len(rows)} rows into {path}")
            log("Verifier", f"Rewrote golden file {path} ({len(rows)} rows)", level="WARNING")
            return report
        if not recorded:
            report.add("golden file", {"rows": 0, "expected": "at least one"}, agree=False)
            return report
        for name, q, count in recorded:
            a = AlgebraId.parse(name)
            report.add(f"{a} q={q}", {"golden": count, "brute": count_root_states(a, q)})
        return report

    @staticmethod
    def _read_golden(path: Path) -> list[tuple[str, int, int]]:
        if not path.exists():
            log("Verifier", f"Golden file {path} not found", level="WARNING")
            return []
        with path.open(newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            return [(row["algebra"], int(row["q"]), int(row["count"])) for row in reader]

    @staticmethod
    def _write_golden(path: Path, rows):
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(GOLDEN_HEADER)
            writer.writerows(rows)
