# ehrhart_mckay/core/method_dispatcher.py
import time

from ehrhart_mckay import config
from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.method import CountingMethod, MethodRegistry, default_method_registry
from ehrhart_mckay.components.series import PowerSeries
from ehrhart_mckay.core.timing_monitor import TimingMonitor
from ehrhart_mckay.enums import Method
from ehrhart_mckay.errors import UnsupportedMethodError
from ehrhart_mckay.utils.logger import log


class MethodDispatcher:
    def __init__(self, timing_monitor: TimingMonitor, method_registry: MethodRegistry = default_method_registry,
                 omega_max_rank: int = config.OMEGA_MAX_RANK):
        self.method_registry = method_registry
        self.timing_monitor = timing_monitor
        self.omega_max_rank = omega_max_rank

    def _refusal(self, method: CountingMethod, a: AlgebraId) -> str | None:
        if not method.supports(a):
            return f"Method '{method.name}' is not defined for {a}"
        if method.method is Method.OMEGA and a.rank > self.omega_max_rank:
            return (f"The omega method is limited to rank <= {self.omega_max_rank} "
                    f"(see --omega-max-rank); {a} has rank {a.rank}")
        return None

    def resolve(self, method_name: str, a: AlgebraId) -> CountingMethod:
        """Finds the method and checks it can run on the algebra."""
        method = self.method_registry.get_method(method_name)
        if not method:
            log("MethodDispatcher", f"Method '{method_name}' not found in registry.", level="ERROR")
            raise UnsupportedMethodError(
                f"Unknown method '{method_name}'; available: {self.method_registry.list_methods()}")
        refusal = self._refusal(method, a)
        if refusal:
            log("MethodDispatcher", refusal, level="ERROR")
            raise UnsupportedMethodError(refusal)
        return method

    def available(self, a: AlgebraId) -> list[str]:
        """Names of every method that would resolve for this algebra."""
        names = []
        for name in self.method_registry.list_methods():
            refusal = self._refusal(self.method_registry.get_method(name), a)
            if refusal:
                log("MethodDispatcher", f"Skipping '{name}': {refusal}", level="DEBUG")
                continue
            names.append(name)
        return names

    def default_truncation(self, method_name: str, a: AlgebraId) -> int:
        if method_name == Method.OMEGA.value and a.rank >= config.OMEGA_LARGE_RANK:
            return config.OMEGA_LARGE_RANK_TERMS
        return config.DEFAULT_TERMS

    def run_series(self, method_name: str, a: AlgebraId, truncation: int) -> PowerSeries:
        method = self.resolve(method_name, a)
        log("MethodDispatcher", f"Running '{method_name}' series for {a} to z^{truncation}")
        start = time.perf_counter()
        try:
            return method.series(a, truncation)
        finally:
            self.timing_monitor.record_usage(method_name, str(a), time.perf_counter() - start)

    def run_count(self, method_name: str, a: AlgebraId, q: int) -> int:
        method = self.resolve(method_name, a)
        log("MethodDispatcher", f"Running '{method_name}' count for {a} at level {q}")
        start = time.perf_counter()
        try:
            return method.count(a, q)
        finally:
            self.timing_monitor.record_usage(method_name, str(a), time.perf_counter() - start)
