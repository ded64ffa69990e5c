from fractions import Fraction

import pytest

from ehrhart_mckay import config
from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.method import CountingMethod, MethodRegistry, default_method_registry
from ehrhart_mckay.components.report import RunSpec, VerificationReport
from ehrhart_mckay.core import method_dispatcher
from ehrhart_mckay.core.method_dispatcher import MethodDispatcher
from ehrhart_mckay.core.timing_monitor import TimingMonitor
from ehrhart_mckay.core.verifier import Verifier
from ehrhart_mckay.enums import Method, VerifyMode
from ehrhart_mckay.errors import TruncationError, UnsupportedMethodError


@pytest.fixture
def verifier():
    return Verifier()


@pytest.fixture
def dispatcher():
    return MethodDispatcher(TimingMonitor())


def test_duality_on_su4(verifier):
    report = verifier.run(VerifyMode.DUALITY, algebra=AlgebraId.from_su(4), terms=6)
    assert report.passed
    assert report.methods == ["brute", "omega", "genfun", "reps"]
    assert len(report.rows) == 7
    assert report.rows[4].values == {"brute": "10", "omega": "10", "genfun": "10", "reps": "10"}
    assert report.timing["total_calls"] == 4


def test_duality_caps_omega_on_large_rank(verifier):
    report = verifier.run(VerifyMode.DUALITY, algebra=AlgebraId.parse("D4"), terms=4)
    assert report.passed
    assert not report.notes  # 4 terms is already under the cap
    assert report.rows[4].values["omega"] == "16"


def test_duality_without_omega_on_e8(verifier):
    report = verifier.run(VerifyMode.DUALITY, algebra=AlgebraId.parse("E8"), terms=3)
    assert report.passed
    assert report.methods == ["brute", "reps"]


def test_duality_rejects_zero_terms(verifier):
    with pytest.raises(TruncationError):
        verifier.run(VerifyMode.DUALITY, algebra=AlgebraId.parse("A2"), terms=0)


def test_levelrank(verifier):
    report = verifier.run(VerifyMode.LEVELRANK, max_n=6)
    assert report.passed
    assert len(report.rows) == 15


def test_asymptotic(verifier):
    report = verifier.run(VerifyMode.ASYMPTOTIC, level=200)
    assert report.passed
    assert len(report.rows) == 3
    strict = verifier.run(VerifyMode.ASYMPTOTIC, level=200, tolerance=Fraction(0))
    assert not strict.passed


def test_omega_identities(verifier):
    report = verifier.run(VerifyMode.OMEGA_IDENTITIES, order=10)
    assert report.passed
    assert len(report.rows) == 5


@pytest.mark.parametrize("name", ["A3", "D5", "D6", "E6", "E7", "E8"])
def test_determinants(verifier, name):
    report = verifier.run(VerifyMode.DETERMINANTS, algebra=AlgebraId.parse(name))
    assert report.passed
    assert any(note.startswith("X = (") for note in report.notes)


def test_e7_determinants_against_table(verifier):
    report = verifier.run(VerifyMode.DETERMINANTS, algebra=AlgebraId.parse("E7"))
    tabulated = [row for row in report.rows if row.label.endswith("tabulated")]
    assert tabulated[0].values == {"predicted": "1/2 1/2 1/2", "tabulated": "1/2 1/2 1/2"}


def test_golden_bless_then_verify(verifier, tmp_path):
    path = tmp_path / "golden.csv"
    blessed = verifier.run(VerifyMode.GOLDEN, path=path, bless=True)
    assert blessed.passed
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "algebra,q,count"
    assert "D4,4,16" in lines
    assert "E8,4,10" in lines
    assert verifier.run(VerifyMode.GOLDEN, path=path).passed

    path.write_text(path.read_text(encoding="utf-8").replace("D4,4,16", "D4,4,17"), encoding="utf-8")
    tampered = verifier.run(VerifyMode.GOLDEN, path=path)
    assert not tampered.passed
    assert [row.label for row in tampered.mismatches] == ["D4 q=4"]


def test_golden_bless_keeps_existing_grid(verifier, tmp_path):
    path = tmp_path / "golden.csv"
    path.write_text("algebra,q,count\nA2,3,0\n", encoding="utf-8")
    verifier.run(VerifyMode.GOLDEN, path=path, bless=True)
    assert path.read_text(encoding="utf-8") == "algebra,q,count\nA2,3,4\n"


def test_missing_golden_file_fails(verifier, tmp_path):
    assert not verifier.run(VerifyMode.GOLDEN, path=tmp_path / "absent.csv").passed


def test_shipped_golden_file(verifier):
    assert verifier.run(VerifyMode.GOLDEN).passed


def test_report_verdicts():
    report = VerificationReport(VerifyMode.DUALITY, "A1", ["brute", "genfun"])
    report.add("z^0", {"brute": 1, "genfun": 1})
    assert report.passed
    report.add("z^1", {"brute": 1, "genfun": 2})
    assert not report.passed
    assert report.to_dict()["mismatches"] == ["z^1"]
    assert report.render_text().endswith("FAIL (1 mismatches)")
    report.add("forced", {"only": 3}, agree=False)
    assert len(report.mismatches) == 2


def test_run_spec_needs_exactly_one_target():
    a2 = AlgebraId.parse("A2")
    with pytest.raises(TruncationError):
        RunSpec(a2, Method.BRUTE)
    with pytest.raises(TruncationError):
        RunSpec(a2, Method.BRUTE, truncation=4, level=4)
    with pytest.raises(TruncationError):
        RunSpec(a2, Method.BRUTE, level=-1)
    assert RunSpec(a2, Method.BRUTE, level=0).level == 0


def test_dispatcher_rejects_unsupported_methods(dispatcher):
    with pytest.raises(UnsupportedMethodError):
        dispatcher.resolve("omega", AlgebraId.parse("E8"))
    with pytest.raises(UnsupportedMethodError):
        dispatcher.resolve("genfun", AlgebraId.parse("D5"))
    with pytest.raises(UnsupportedMethodError):
        dispatcher.resolve("simplex", AlgebraId.parse("A2"))
    assert dispatcher.available(AlgebraId.parse("D5")) == ["brute", "omega", "reps"]


def test_available_does_not_log_errors(dispatcher, monkeypatch):
    levels = []
    monkeypatch.setattr(method_dispatcher, "log", lambda sender, message, level="INFO": levels.append(level))
    assert dispatcher.available(AlgebraId.parse("E6")) == ["brute", "omega", "reps"]
    assert "ERROR" not in levels
    with pytest.raises(UnsupportedMethodError):
        dispatcher.resolve("genfun", AlgebraId.parse("E6"))
    assert levels[-1] == "ERROR"


def test_dispatcher_rank_guard_is_configurable():
    relaxed = MethodDispatcher(TimingMonitor(), omega_max_rank=8)
    assert "omega" in relaxed.available(AlgebraId.parse("E8"))
    strict = MethodDispatcher(TimingMonitor(), omega_max_rank=2)
    with pytest.raises(UnsupportedMethodError):
        strict.resolve("omega", AlgebraId.parse("A3"))


def test_default_truncation(dispatcher):
    assert dispatcher.default_truncation("omega", AlgebraId.parse("D4")) == config.OMEGA_LARGE_RANK_TERMS
    assert dispatcher.default_truncation("omega", AlgebraId.parse("A2")) == config.DEFAULT_TERMS
    assert dispatcher.default_truncation("brute", AlgebraId.parse("E8")) == config.DEFAULT_TERMS


def test_counts_agree_across_methods(dispatcher):
    a = AlgebraId.parse("D4")
    assert {dispatcher.run_count(name, a, 4) for name in dispatcher.available(a)} == {16}
    assert dispatcher.run_count("genfun", a, 0) == 1


def test_timing_is_recorded_even_on_failure():
    monitor = TimingMonitor()
    dispatcher = MethodDispatcher(monitor)
    with pytest.raises(TruncationError):
        dispatcher.run_series("brute", AlgebraId.parse("A1"), 0)
    report = monitor.get_report()
    assert report["total_calls"] == 1
    assert set(report["per_method"]) == {"brute"}


def test_custom_registry():
    class Constant(CountingMethod):
        def __init__(self):
            super().__init__(Method.BRUTE, "always one")

        def series(self, a, truncation):
            raise AssertionError("not used")

        def count(self, a, q):
            return 1

    registry = MethodRegistry()
    registry.register_method(Constant())
    dispatcher = MethodDispatcher(TimingMonitor(), method_registry=registry)
    assert dispatcher.run_count("brute", AlgebraId.parse("E8"), 9) == 1
    assert registry.list_methods() == ["brute"]
    assert "brute" in default_method_registry.get_method_descriptions()
