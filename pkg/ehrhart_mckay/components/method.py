# ehrhart_mckay/components/method.py
from abc import ABC, abstractmethod

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.series import PowerSeries
from ehrhart_mckay.core.mckay_reps import group_of, rep_count, rep_series
from ehrhart_mckay.core.omega_calculus import ehrhart_series_omega
from ehrhart_mckay.core.polytope_count import count_root_states, ehrhart_series_bruteforce
from ehrhart_mckay.core.series_core import phi_dic_even_series, phi_su_series
from ehrhart_mckay.enums import Family, Method
from ehrhart_mckay.errors import TruncationError, UnsupportedMethodError
from ehrhart_mckay.utils.logger import log


class CountingMethod(ABC):
    def __init__(self, method: Method, description: str):
        self.method = method
        self.name = method.value
        self.description = description

    def supports(self, a: AlgebraId) -> bool:
        return True

    @abstractmethod
    def series(self, a: AlgebraId, truncation: int) -> PowerSeries:
        """Ehr(z) of the algebra up to z^truncation (truncation >= 1)."""

    def count(self, a: AlgebraId, q: int) -> int:
        """The coefficient of z^q; methods with a direct count override this."""
        if q < 0:
            raise TruncationError(f"Level must be >= 0, got {q}")
        if q == 0:
            return 1
        return self.series(a, q)[q]

    def __str__(self):
        return f"CountingMethod(name={self.name})"


class BruteMethod(CountingMethod):
    def __init__(self):
        super().__init__(Method.BRUTE, "Root-space and weight-space lattice point enumeration of the level-q polytope.")

    def series(self, a, truncation):
        return ehrhart_series_bruteforce(a, truncation)

    def count(self, a, q):
        return count_root_states(a, q)


class OmegaMethod(CountingMethod):
    def __init__(self):
        super().__init__(Method.OMEGA, "Omega_= eliminations over the slack-form constraint matrix.")

    def series(self, a, truncation):
        return ehrhart_series_omega(a, truncation)


class GenfunMethod(CountingMethod):
    def __init__(self):
        super().__init__(Method.GENFUN, "Closed-form series: root-of-unity average for su(N), dicyclic average for so(2(N+2)) with N even.")

    def supports(self, a):
        return a.family is Family.A or (a.family is Family.D and a.dual_n % 2 == 0)

    def series(self, a, truncation):
        if truncation < 1:
            raise TruncationError(f"Truncation must be >= 1, got {truncation}")
        if a.family is Family.A:
            return phi_su_series(a.dual_n, truncation)
        if self.supports(a):
            return phi_dic_even_series(a.dual_n, truncation)
        raise UnsupportedMethodError(f"No closed-form series for {a}")


class RepsMethod(CountingMethod):
    def __init__(self):
        super().__init__(Method.REPS, "Unit-determinant representations of the McKay-dual group.")

    def series(self, a, truncation):
        return rep_series(a, truncation)

    def count(self, a, q):
        return rep_count(group_of(a), q)


class MethodRegistry:
    def __init__(self):
        self._methods: dict[str, CountingMethod] = {}

    def register_method(self, method: CountingMethod):
        if method.name in self._methods:
            log("MethodRegistry", f"Method '{method.name}' already registered. Overwriting.", level="WARNING")
        self._methods[method.name] = method
        log("MethodRegistry", f"Registered method: {method.name}", level="DEBUG")

    def get_method(self, name: str) -> CountingMethod | None:
        return self._methods.get(name)

    def list_methods(self) -> list[str]:
        return list(self._methods.keys())

    def get_method_descriptions(self) -> str:
        if not self._methods:
            return "No methods available."
        desc = "Available methods:\n"
        for name, method in self._methods.items():
            desc += f"- {name}: {method.description}\n"
        return desc


# Used by MethodDispatcher unless another registry is passed in
default_method_registry = MethodRegistry()
for _method in (BruteMethod(), OmegaMethod(), GenfunMethod(), RepsMethod()):
    default_method_registry.register_method(_method)
