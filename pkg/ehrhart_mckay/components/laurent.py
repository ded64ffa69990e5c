from dataclasses import dataclass, field
from fractions import Fraction

from ehrhart_mckay.errors import SeriesDomainError, WindowOverflowError


class Window:
    """Per-variable exponent bounds (lo, hi); None means unbounded on that side.

    A variable whose lower bound is >= 0 is one-sided (a counting variable such
    as z); every other variable is two-sided (a lambda of the Omega calculus).
    """

    def __init__(self, bounds: dict[str, tuple[int | None, int | None]]):
        for name, (lo, hi) in bounds.items():
            if (lo is not None and lo > 0) or (hi is not None and hi < 0):
                raise SeriesDomainError(f"Window for {name} must contain 0, got [{lo}, {hi}]")
        self.bounds = dict(bounds)

    def bound(self, name: str) -> tuple[int | None, int | None]:
        return self.bounds.get(name, (None, None))

    def is_one_sided(self, name: str) -> bool:
        lo, _ = self.bound(name)
        return lo is not None and lo >= 0

    def admits(self, name: str, exponent: int) -> bool:
        lo, hi = self.bound(name)
        return (lo is None or exponent >= lo) and (hi is None or exponent <= hi)

    def __repr__(self):
        return f"Window({self.bounds})"


@dataclass(frozen=True)
class Monomial:
    """coefficient * prod_v v^exponents[v]."""

    variables: tuple[str, ...]
    exponents: tuple[int, ...]
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        if len(self.variables) != len(self.exponents):
            raise SeriesDomainError(f"{len(self.variables)} variables but {len(self.exponents)} exponents")

    def exponent(self, name: str) -> int:
        return self.exponents[self.variables.index(name)]

    def is_constant(self) -> bool:
        return all(e == 0 for e in self.exponents)


class MultiLaurent:
    """Sparse truncated Laurent series: exponent tuple -> rational coefficient.

    `uncertain` names the two-sided variables for which some term was cut at
    the window edge without a certificate that it could not come back; Omega
    extraction refuses to act on those variables.
    """

    def __init__(self, variables, terms=None, uncertain=frozenset()):
        self.variables = tuple(variables)
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != len(self.variables):
                raise SeriesDomainError(f"Term {exps} does not match variables {self.variables}")
            if coeff != 0:
                self.terms[tuple(exps)] = Fraction(coeff)
        self.uncertain = frozenset(uncertain)

    @classmethod
    def one(cls, variables) -> "MultiLaurent":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): 1})

    @classmethod
    def from_monomial(cls, monomial: Monomial) -> "MultiLaurent":
        return cls(monomial.variables, {monomial.exponents: monomial.coefficient})

    def index(self, var) -> int:
        if isinstance(var, int):
            if not 0 <= var < len(self.variables):
                raise SeriesDomainError(f"Variable index {var} out of range for {self.variables}")
            return var
        if var not in self.variables:
            raise SeriesDomainError(f"Unknown variable {var!r}; have {self.variables}")
        return self.variables.index(var)

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "MultiLaurent") -> "MultiLaurent":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MultiLaurent(self.variables, terms, self.uncertain | other.uncertain)

    def __neg__(self):
        return MultiLaurent(self.variables, {e: -c for e, c in self.terms.items()}, self.uncertain)

    def __sub__(self, other: "MultiLaurent") -> "MultiLaurent":
        return self + (-other)

    def __mul__(self, other: "MultiLaurent") -> "MultiLaurent":
        return self.multiply(other)

    def multiply(self, other: "MultiLaurent", window: Window | None = None,
                 reach: dict[str, tuple[int, int]] | None = None) -> "MultiLaurent":
        """Product restricted to `window`.

        With `reach` (the exponent range the factors still to come can add, per
        two-sided variable) only terms that can still return to exponent 0 in
        every two-sided variable are kept, and a term cut by the window that
        could have returned raises WindowOverflowError.
        """
        self._check_compatible(other)
        uncertain = set(self.uncertain | other.uncertain)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if reach is not None and not self._can_return(exps, window, reach):
                    continue
                if window is not None:
                    cut = self._cut_variables(exps, window)
                    if cut is not None:
                        if cut:
                            if reach is not None:
                                raise WindowOverflowError(
                                    f"Term {dict(zip(self.variables, exps))} left the window {window} "
                                    f"but can still reach the extracted coefficient")
                            uncertain.update(cut)
                        continue
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return MultiLaurent(self.variables, terms, uncertain)

    def _cut_variables(self, exps, window: Window):
        """None if the term lies in the window; otherwise the two-sided variables
        responsible for the cut (empty when a one-sided bound alone excludes it)."""
        outside = [v for v, e in zip(self.variables, exps) if not window.admits(v, e)]
        if not outside:
            return None
        if any(window.is_one_sided(v) for v in outside):
            return []  # one-sided exponents only grow
        return outside

    def _can_return(self, exps, window, reach) -> bool:
        for v, e in zip(self.variables, exps):
            if window is not None and window.is_one_sided(v):
                continue
            lo, hi = reach.get(v, (0, 0))
            if not e + lo <= 0 <= e + hi:
                return False
        return True

    def _check_compatible(self, other: "MultiLaurent"):
        if self.variables != other.variables:
            raise SeriesDomainError(f"Variable mismatch: {self.variables} vs {other.variables}")

    def eliminate(self, var, keep) -> "MultiLaurent":
        """Drops variable `var`, keeping terms whose exponent satisfies `keep` and
        summing coefficients that collide once the variable is gone."""
        i = self.index(var)
        name = self.variables[i]
        remaining = self.variables[:i] + self.variables[i + 1:]
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            if keep(exps[i]):
                key = exps[:i] + exps[i + 1:]
                terms[key] = terms.get(key, 0) + coeff
        return MultiLaurent(remaining, terms, self.uncertain - {name})

    def invert_variable(self, var) -> "MultiLaurent":
        """Substitutes var -> 1/var."""
        i = self.index(var)
        return MultiLaurent(
            self.variables,
            {exps[:i] + (-exps[i],) + exps[i + 1:]: c for exps, c in self.terms.items()},
            self.uncertain,
        )

    def __eq__(self, other):
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __repr__(self):
        shown = sorted(self.terms.items())[:8]
        more = "" if len(self.terms) <= 8 else f" ... ({len(self.terms)} terms)"
        return f"MultiLaurent{self.variables}({shown}{more})"


@dataclass
class OmegaExpr:
    """prod_i 1 / (1 - factor_i): the input of an Omega elimination.

    `powers` optionally caps how many times each factor can be picked; a cap is
    the caller's guarantee that higher picks cannot reach the extracted part.
    """

    variables: tuple[str, ...]
    factors: list[Monomial]
    window: Window
    powers: list[int | None] = field(default_factory=list)

    def __post_init__(self):
        if not self.powers:
            self.powers = [None] * len(self.factors)
        for factor in self.factors:
            if factor.variables != self.variables:
                raise SeriesDomainError(f"Factor over {factor.variables}, expression over {self.variables}")
            if factor.is_constant():
                raise SeriesDomainError("A factor 1/(1 - c) with no variables has no series expansion")
