"""
Exact polynomials and rational functions in the dimension parameter n.
"""
import math
import typing
from fractions import Fraction

import sympy

__all__ = ["n", "PolynomialInN", "RationalFunctionInN", "rising_factorial"]

n = sympy.Symbol("n")

Coefficient = typing.Union[int, Fraction]


def _lcm(values: typing.Iterable[int]) -> int:
    result = 1
    for value in values:
        result = result * value // math.gcd(result, value)
    return result


class PolynomialInN:
    """
    Dense ascending coefficients: `coeffs[k]` multiplies n**k.
    No trailing zero is stored; the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: typing.Iterable[Coefficient] = ()) -> None:
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: typing.Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Coefficient) -> "PolynomialInN":
        return cls([value])

    @classmethod
    def monomial(cls, power: int, coefficient: Coefficient = 1) -> "PolynomialInN":
        return cls([0] * power + [coefficient])

    @classmethod
    def from_sympy(cls, expr: typing.Any) -> "PolynomialInN":
        poly = sympy.Poly(expr, n, domain="QQ")
        coeffs = [
            Fraction(int(c.p), int(c.q))
            for c in reversed(poly.all_coeffs())
        ]
        return cls(coeffs)

    def to_sympy(self) -> sympy.Expr:
        return sum(
            (sympy.Rational(c.numerator, c.denominator) * n ** k
             for k, c in enumerate(self.coeffs)),
            sympy.Integer(0),
        )

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, value: Coefficient) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    __call__ = evaluate

    def __add__(self, other: typing.Any) -> "PolynomialInN":
        if not isinstance(other, PolynomialInN):
            other = PolynomialInN.constant(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return PolynomialInN(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "PolynomialInN":
        return PolynomialInN(-c for c in self.coeffs)

    def __sub__(self, other: typing.Any) -> "PolynomialInN":
        if not isinstance(other, PolynomialInN):
            other = PolynomialInN.constant(other)
        return self + (-other)

    def __rsub__(self, other: typing.Any) -> "PolynomialInN":
        return (-self) + other

    def __mul__(self, other: typing.Any) -> "PolynomialInN":
        if not isinstance(other, PolynomialInN):
            return PolynomialInN(c * Fraction(other) for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return PolynomialInN()
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return PolynomialInN(result)

    __rmul__ = __mul__

    def __eq__(self, other: typing.Any) -> bool:
        if isinstance(other, PolynomialInN):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolynomialInN.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def terms(self) -> str:
        """integer-coefficient text form, highest power first"""
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "n" if k == 1 else f"n^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append((sign, body))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        denominator = _lcm(c.denominator for c in self.coeffs)
        if denominator == 1:
            return self.terms()
        scaled = self * denominator
        return f"({scaled.terms()})/{denominator}"

    def __repr__(self) -> str:
        return f"PolynomialInN({[str(c) for c in self.coeffs]})"


def rising_factorial(d: int) -> PolynomialInN:
    """n(n+1)...(n+d-1)"""
    result = PolynomialInN.constant(1)
    for k in range(d):
        result = result * PolynomialInN([k, 1])
    return result


class RationalFunctionInN:
    """
    A reduced quotient of polynomials in n with a monic denominator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: PolynomialInN, denominator: PolynomialInN) -> None:
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator.")
        num, den = sympy.fraction(
            sympy.cancel(numerator.to_sympy() / denominator.to_sympy())
        )
        numerator = PolynomialInN.from_sympy(num)
        denominator = PolynomialInN.from_sympy(den)
        lead = denominator.leading_coefficient
        self.numerator = numerator * (1 / lead)
        self.denominator = denominator * (1 / lead)

    @classmethod
    def from_polynomial(cls, polynomial: PolynomialInN) -> "RationalFunctionInN":
        return cls(polynomial, PolynomialInN.constant(1))

    @classmethod
    def sum(
        cls, terms: typing.Iterable[typing.Tuple[Coefficient, PolynomialInN]]
    ) -> "RationalFunctionInN":
        """sum of constant / polynomial terms over one common denominator"""
        expr = sympy.Integer(0)
        for weight, polynomial in terms:
            weight = Fraction(weight)
            if weight == 0:
                continue
            expr += sympy.Rational(weight.numerator, weight.denominator) / polynomial.to_sympy()
        num, den = sympy.fraction(sympy.together(expr))
        return cls(PolynomialInN.from_sympy(num), PolynomialInN.from_sympy(den))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def evaluate(self, value: Coefficient) -> Fraction:
        return self.numerator.evaluate(value) / self.denominator.evaluate(value)

    __call__ = evaluate

    def __eq__(self, other: typing.Any) -> bool:
        if isinstance(other, RationalFunctionInN):
            return (
                self.numerator == other.numerator
                and self.denominator == other.denominator
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __str__(self) -> str:
        if self.denominator == PolynomialInN.constant(1):
            return str(self.numerator)
        scale = _lcm(c.denominator for c in self.numerator.coeffs) if self.numerator.coeffs else 1
        top, bottom = self.numerator * scale, self.denominator * scale
        top_text, bottom_text = top.terms(), bottom.terms()
        if len([c for c in top.coeffs if c]) > 1:
            top_text = f"({top_text})"
        # bare n or n^k reads unambiguously, anything else is bracketed
        if len([c for c in bottom.coeffs if c]) > 1 or bottom.leading_coefficient != 1:
            bottom_text = f"({bottom_text})"
        return f"{top_text}/{bottom_text}"

    def __repr__(self) -> str:
        return f"RationalFunctionInN({self})"
