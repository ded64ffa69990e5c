from fractions import Fraction
from functools import lru_cache

import sympy

from ehrhart_mckay.errors import ProjectionError, SeriesDomainError


def _is_zero(value) -> bool:
    return value == 0


class PowerSeries:
    """Truncated formal power series sum_{n<=T} c_n z^n.

    Coefficients are ints/Fractions or CycloElements; `zero` is the additive
    identity of the coefficient ring. Products truncate at the smaller
    truncation, never round.
    """

    def __init__(self, coefficients, truncation: int | None = None, zero=0):
        coefficients = list(coefficients)
        if truncation is None:
            truncation = len(coefficients) - 1
        if truncation < 0:
            raise SeriesDomainError(f"Truncation must be >= 0, got {truncation}")
        coefficients = coefficients[:truncation + 1]
        coefficients += [zero] * (truncation + 1 - len(coefficients))
        self._coefficients = tuple(coefficients)
        self._zero = zero

    @classmethod
    def one(cls, truncation: int, zero=0) -> "PowerSeries":
        return cls([zero + 1], truncation, zero)

    @classmethod
    def geometric(cls, truncation: int, step: int = 1, coefficient=1, zero=0) -> "PowerSeries":
        """1 / (1 - coefficient * z^step)."""
        if step < 1:
            raise SeriesDomainError(f"1/(1 - c z^{step}) is not a power series unit expansion")
        coefficients = [zero] * (truncation + 1)
        power = zero + 1
        for n in range(0, truncation + 1, step):
            coefficients[n] = power
            power = power * coefficient
        return cls(coefficients, truncation, zero)

    @property
    def truncation(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    @property
    def zero(self):
        return self._zero

    def __getitem__(self, n: int):
        if n < 0 or n > self.truncation:
            raise IndexError(f"Coefficient z^{n} outside truncation {self.truncation}")
        return self._coefficients[n]

    def __len__(self):
        return len(self._coefficients)

    def __iter__(self):
        return iter(self._coefficients)

    def truncate(self, truncation: int) -> "PowerSeries":
        if truncation > self.truncation:
            raise SeriesDomainError(f"Cannot extend a series known to z^{self.truncation} up to z^{truncation}")
        return PowerSeries(self._coefficients, truncation, self._zero)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([self._zero + other], self.truncation, self._zero)

    def __add__(self, other):
        other = self._coerce(other)
        t = min(self.truncation, other.truncation)
        return PowerSeries([a + b for a, b in zip(self._coefficients[:t + 1], other._coefficients[:t + 1])], t, self._zero)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self._coefficients], self.truncation, self._zero)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self._coefficients], self.truncation, self._zero)
        t = min(self.truncation, other.truncation)
        result = [self._zero] * (t + 1)
        for i, a in enumerate(self._coefficients[:t + 1]):
            if _is_zero(a):
                continue
            for j, b in enumerate(other._coefficients[:t + 1 - i]):
                if not _is_zero(b):
                    result[i + j] = result[i + j] + a * b
        return PowerSeries(result, t, self._zero)

    def __rmul__(self, other):
        return self * other

    def inverse(self) -> "PowerSeries":
        return PowerSeries.one(self.truncation, self._zero) / self

    def __truediv__(self, other):
        """Division by a unit series (constant term +1 or -1) or by a scalar."""
        if not isinstance(other, PowerSeries):
            return PowerSeries([c / other for c in self._coefficients], self.truncation, self._zero)
        unit = other._coefficients[0]
        one = self._zero + 1
        if unit != one and unit != -one:
            raise SeriesDomainError(f"Division restricted to units; constant term is {unit}")
        t = min(self.truncation, other.truncation)
        divisor = [(k, d) for k, d in enumerate(other._coefficients[1:t + 1], start=1) if not _is_zero(d)]
        result = []
        for n in range(t + 1):
            acc = self._coefficients[n]
            for k, d in divisor:
                if k > n:
                    break
                acc = acc - d * result[n - k]
            result.append(acc * unit)  # unit is its own inverse
        return PowerSeries(result, t, self._zero)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.truncation == other.truncation and all(
            a == b for a, b in zip(self._coefficients, other._coefficients))

    def __hash__(self):
        return hash(self._coefficients)

    def to_integers(self) -> "PowerSeries":
        """Same series with int coefficients; raises if any coefficient is not integral."""
        ints = []
        for n, c in enumerate(self._coefficients):
            value = Fraction(c)
            if value.denominator != 1:
                raise SeriesDomainError(f"Coefficient of z^{n} is not an integer: {value}")
            ints.append(int(value))
        return PowerSeries(ints, self.truncation)

    def __repr__(self):
        terms = " + ".join(f"{c}*z^{n}" for n, c in enumerate(self._coefficients) if not _is_zero(c))
        return f"PowerSeries({terms or '0'} + O(z^{self.truncation + 1}))"


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> sympy.Poly:
    x = sympy.Symbol("x")
    return sympy.Poly(sympy.cyclotomic_poly(n, x), x)


class CycloElement:
    """Element sum_k a_k x^k of Q[x]/(x^N - 1); x stands for w = exp(2 pi i / N)."""

    __slots__ = ("modulus", "coefficients")

    def __init__(self, modulus: int, coefficients):
        if modulus < 1:
            raise SeriesDomainError(f"Modulus must be positive, got {modulus}")
        reduced = [0] * modulus
        for k, a in enumerate(coefficients):
            reduced[k % modulus] += a
        self.modulus = modulus
        self.coefficients = tuple(reduced)

    @classmethod
    def zero(cls, modulus: int) -> "CycloElement":
        return cls(modulus, ())

    @classmethod
    def one(cls, modulus: int) -> "CycloElement":
        return cls(modulus, (1,))

    @classmethod
    def monomial(cls, modulus: int, power: int, coefficient=1) -> "CycloElement":
        coefficients = [0] * modulus
        coefficients[power % modulus] = coefficient
        return cls(modulus, coefficients)

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.modulus != self.modulus:
                raise SeriesDomainError(f"Mixing moduli {self.modulus} and {other.modulus}")
            return other
        return CycloElement(self.modulus, (other,))

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElement(self.modulus, [a + b for a, b in zip(self.coefficients, other.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.modulus, [-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CycloElement):
            return CycloElement(self.modulus, [a * other for a in self.coefficients])
        other = self._coerce(other)
        n = self.modulus
        product = [0] * n
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                if b != 0:
                    product[(i + j) % n] += a * b
        return CycloElement(n, product)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return CycloElement(self.modulus, [Fraction(a) / scalar for a in self.coefficients])

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return self.modulus == other.modulus and self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == self._coerce(other).coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.coefficients))

    def substitute_power(self, i: int) -> "CycloElement":
        """The image under x -> x^i (w -> w^i)."""
        moved = [0] * self.modulus
        for k, a in enumerate(self.coefficients):
            moved[(k * i) % self.modulus] += a
        return CycloElement(self.modulus, moved)

    def root_sum(self):
        """sum over all N-th roots u of the element evaluated at u; equals N * a_0."""
        return self.modulus * self.coefficients[0]

    def at_primitive_root(self) -> tuple[Fraction, ...]:
        """Canonical coordinates in Q(w): the remainder modulo the N-th cyclotomic polynomial,
        lowest degree first."""
        x = sympy.Symbol("x")
        coeffs = [sympy.Rational(Fraction(a).numerator, Fraction(a).denominator) for a in self.coefficients]
        poly = sympy.Poly(list(reversed(coeffs)), x, domain="QQ")
        remainder = poly.rem(_cyclotomic(self.modulus).set_domain("QQ"))
        values = [Fraction(int(c.p), int(c.q)) for c in reversed(remainder.all_coeffs())]
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        return tuple(values)

    def rational_value(self) -> Fraction:
        """The value at w when it is rational; raises ProjectionError otherwise."""
        values = self.at_primitive_root()
        if any(v != 0 for v in values[1:]):
            raise ProjectionError(f"Element {self} does not collapse to a rational at w = exp(2 pi i/{self.modulus})")
        return values[0] if values else Fraction(0)

    def __repr__(self):
        terms = " + ".join(f"{a}*w^{k}" for k, a in enumerate(self.coefficients) if a != 0)
        return f"CycloElement[{self.modulus}]({terms or '0'})"
