"""Exact scalar arithmetic: rationals and the rational-function field Q(L).

Two scalar domains are used throughout the package, selected by
:class:`LambdaMode`:

* plain arbitrary-precision rationals (``fractions.Fraction``), used when
  the deformation parameter is a fixed rational number;
* :class:`LambdaRatFunc`, a rational function of the deformation
  parameter ``L`` over Q, used in symbolic mode.

Both are immutable, exact, and compare structurally; canonical form for
Q(L) is a gcd-reduced fraction with monic denominator, so equality is a
plain field-by-field comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Union

from ._kernels import conv_frac, prim_gcd_int

__all__ = [
    "Fraction",
    "PoleError",
    "MixedModeError",
    "rational",
    "parse_rational",
    "render_rational",
    "LambdaPoly",
    "poly_gcd",
    "LambdaRatFunc",
    "ratfunc_canonical",
    "FieldElement",
    "LambdaMode",
    "field_arith",
    "evaluate_at",
    "is_zero_element",
]

RationalLike = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


class MixedModeError(TypeError):
    """Operands from different scalar domains mixed in one computation."""


def rational(numerator: int, denominator: int = 1) -> Fraction:
    """Canonical rational p/q: reduced, denominator positive, zero is 0/1."""
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact rational."""
    return Fraction(text.strip())


def render_rational(value: RationalLike) -> str:
    """Render as "p/q", omitting "/q" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _fast_fraction(numerator: int, denominator: int) -> Fraction:
    # Bypasses Fraction's normalization; only for pairs the kernels
    # already returned in lowest terms with positive denominator.
    f = Fraction.__new__(Fraction)
    f._numerator = numerator
    f._denominator = denominator
    return f


class LambdaPoly:
    """Dense polynomial in the deformation parameter over Q.

    Coefficients ascend by power; no trailing zeros; the zero polynomial
    has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly([other])
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("LambdaPoly", self.coeffs))

    def __repr__(self):
        from .render import render_lambda_poly

        return render_lambda_poly(self, "L")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPoly()
        cn, cd = conv_frac(
            [c.numerator for c in a],
            [c.denominator for c in a],
            [c.numerator for c in b],
            [c.denominator for c in b],
            len(a) + len(b) - 1,
        )
        return LambdaPoly([_fast_fraction(n, d) for n, d in zip(cn, cd)])

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        result = LambdaPoly([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def scale(self, factor: RationalLike) -> "LambdaPoly":
        factor = Fraction(factor)
        if not factor:
            return LambdaPoly()
        return LambdaPoly([c * factor for c in self.coeffs])

    def evaluate(self, point: RationalLike) -> Fraction:
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def divexact(self, divisor: "LambdaPoly") -> "LambdaPoly":
        """Exact quotient; raises if the division leaves a remainder."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return LambdaPoly()
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            raise ValueError("division is not exact")
        q = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            q[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] -= f * divisor.coeffs[j]
        if any(rem):
            raise ValueError("division is not exact")
        return LambdaPoly(q)

    def int_primitive(self) -> list:
        """Integer coefficient list proportional to this polynomial."""
        if not self.coeffs:
            return []
        common = lcm(*(c.denominator for c in self.coeffs)) if len(self.coeffs) > 1 else self.coeffs[0].denominator
        return [c.numerator * (common // c.denominator) for c in self.coeffs]


def _as_poly(value):
    if isinstance(value, LambdaPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaPoly([value])
    return NotImplemented


def poly_gcd(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    """Gcd in Q[L], returned with integer primitive coefficients and a
    positive leading coefficient (constants are units, so any nonzero
    constant gcd comes back as 1)."""
    g = prim_gcd_int(a.int_primitive(), b.int_primitive())
    return LambdaPoly(g)


_POLY_ONE = LambdaPoly([1])


class LambdaRatFunc:
    """Element of Q(L): quotient of two coprime polynomials, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_POLY_ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("LambdaRatFunc takes polynomial or rational operands")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = LambdaPoly(), _POLY_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
            lead = den.leading
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num: LambdaPoly, den: LambdaPoly) -> "LambdaRatFunc":
        # Trusted constructor: operands already coprime with monic denominator.
        obj = cls.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def from_rational(cls, value: RationalLike) -> "LambdaRatFunc":
        return cls._raw(LambdaPoly([value]), _POLY_ONE)

    def __setattr__(self, name, value):
        raise AttributeError("LambdaRatFunc is immutable")

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_rational(self) -> bool:
        return self.den == _POLY_ONE and self.num.degree <= 0

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not a constant rational function: {self!r}")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaRatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den == _POLY_ONE and self.num == LambdaPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(("LambdaRatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        from .render import render_ratfunc

        return render_ratfunc(self, "L")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LambdaRatFunc):
            return other
        if isinstance(other, int):
            return LambdaRatFunc.from_rational(other)
        # Fractions embed through LambdaMode.scalar / from_rational; an
        # implicit crossing here usually means a mode bug, so refuse it.
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero:
            return rhs
        if rhs.is_zero:
            return self
        g = poly_gcd(self.den, rhs.den)
        if g.degree <= 0:
            num = self.num * rhs.den + rhs.num * self.den
            den = self.den * rhs.den
            if num.is_zero:
                return _RATFUNC_ZERO
            return LambdaRatFunc._raw(num, den)
        sa = self.den.divexact(g)
        sb = rhs.den.divexact(g)
        t = self.num * sb + rhs.num * sa
        if t.is_zero:
            return _RATFUNC_ZERO
        g2 = poly_gcd(t, g)
        if g2.degree > 0:
            t = t.divexact(g2)
            den = sa * rhs.den.divexact(g2)
        else:
            den = sa * rhs.den
        lead = den.leading
        if lead != 1:
            t = t.scale(1 / lead)
            den = den.scale(1 / lead)
        return LambdaRatFunc._raw(t, den)

    __radd__ = __add__

    def __neg__(self):
        return LambdaRatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return _RATFUNC_ZERO
        g1 = poly_gcd(self.num, rhs.den)
        g2 = poly_gcd(rhs.num, self.den)
        num_a = self.num.divexact(g1) if g1.degree > 0 else self.num
        den_b = rhs.den.divexact(g1) if g1.degree > 0 else rhs.den
        num_b = rhs.num.divexact(g2) if g2.degree > 0 else rhs.num
        den_a = self.den.divexact(g2) if g2.degree > 0 else self.den
        num = num_a * num_b
        den = den_a * den_b
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        return LambdaRatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "LambdaRatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return LambdaRatFunc(self.den, self.num)

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("rational-function powers take integer exponents")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = _RATFUNC_ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def evaluate_at(self, point: RationalLike) -> Fraction:
        """Exact substitution; raises PoleError at a denominator root."""
        point = Fraction(point)
        d = self.den.evaluate(point)
        if not d:
            raise PoleError(f"pole at {render_rational(point)}")
        return self.num.evaluate(point) / d


_RATFUNC_ZERO = LambdaRatFunc._raw(LambdaPoly(), _POLY_ONE)
_RATFUNC_ONE = LambdaRatFunc._raw(_POLY_ONE, _POLY_ONE)
_RATFUNC_LAMBDA = LambdaRatFunc._raw(LambdaPoly([0, 1]), _POLY_ONE)


def ratfunc_canonical(num: LambdaPoly, den: LambdaPoly) -> LambdaRatFunc:
    """Canonical fraction in Q(L): gcd removed, denominator monic."""
    return LambdaRatFunc(num, den)


FieldElement = Union[Fraction, LambdaRatFunc]


@dataclass(frozen=True)
class LambdaMode:
    """Scalar-domain selector: symbolic deformation parameter or a fixed
    rational value.  ``value`` is None in symbolic mode."""

    value: Optional[Fraction]

    @classmethod
    def symbolic(cls) -> "LambdaMode":
        return cls(None)

    @classmethod
    def numeric(cls, value: RationalLike) -> "LambdaMode":
        return cls(Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "LambdaMode":
        text = text.strip()
        if text.lower() == "symbolic":
            return cls.symbolic()
        return cls.numeric(parse_rational(text))

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def is_one(self) -> bool:
        return self.value == 1

    @property
    def zero(self) -> FieldElement:
        return _RATFUNC_ZERO if self.is_symbolic else Fraction(0)

    @property
    def one(self) -> FieldElement:
        return _RATFUNC_ONE if self.is_symbolic else Fraction(1)

    @property
    def lam(self) -> FieldElement:
        """The deformation parameter itself as a scalar of this mode."""
        return _RATFUNC_LAMBDA if self.is_symbolic else self.value

    def scalar(self, value: RationalLike) -> FieldElement:
        """Embed a plain rational into this mode's scalar domain."""
        if self.is_symbolic:
            if isinstance(value, LambdaRatFunc):
                return value
            return LambdaRatFunc.from_rational(value)
        if isinstance(value, LambdaRatFunc):
            raise MixedModeError("symbolic scalar used in numeric mode")
        return Fraction(value)

    def matches(self, value: FieldElement) -> bool:
        if self.is_symbolic:
            return isinstance(value, LambdaRatFunc)
        return isinstance(value, Fraction)

    def label(self) -> str:
        return "symbolic" if self.is_symbolic else render_rational(self.value)

    def __str__(self) -> str:
        return self.label()


def is_zero_element(value: FieldElement) -> bool:
    return not value


def _same_variant(a: FieldElement, b: FieldElement) -> bool:
    both_sym = isinstance(a, LambdaRatFunc) and isinstance(b, LambdaRatFunc)
    both_rat = isinstance(a, Fraction) and isinstance(b, Fraction)
    return both_sym or both_rat


def field_arith(op: str, a: FieldElement, b: Optional[FieldElement] = None) -> FieldElement:
    """Field operations with a strict same-domain check.

    ``op`` is one of add, sub, mul, div, neg, inv; the last two are unary.
    Mixing a plain rational with a symbolic value raises MixedModeError.
    """
    if op in ("neg", "inv"):
        if b is not None:
            raise TypeError(f"{op} is unary")
        if op == "neg":
            return -a
        if isinstance(a, LambdaRatFunc):
            return a.inverse()
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if not _same_variant(a, b):
        raise MixedModeError("operands come from different scalar domains")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by the zero element")
        return a / b
    raise ValueError(f"unknown field operation: {op!r}")


def evaluate_at(f: LambdaRatFunc, point: RationalLike) -> Fraction:
    """Substitute a rational value for the deformation parameter."""
    return f.evaluate_at(point)
