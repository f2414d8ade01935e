"""Number sequences and polynomial families from the generating kernels.

The two kernels are

* Bernoulli-type: t^k / (L e^t - 1)^k, with the L = 1 case routed through
  (t / (e^t - 1))^k because substituting 1 into the symbolic values hits
  the pole at L = 1;
* Euler-type: 2^k / (L e^t + 1)^k, which is regular at L = 1 and singular
  only at L = -1 (rejected).

Numbers are n! times the n-th ordinary series coefficient; polynomials
come from the binomial sum over the numbers, with an independent
series-product extraction kept alongside for cross-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Tuple

from .field import FieldElement, LambdaMode, PoleError
from .polynomials import XPolynomial
from .series import TruncatedSeries, exp_scaled_series

__all__ = [
    "Family",
    "NumberTable",
    "apostol_bernoulli_numbers",
    "apostol_euler_numbers",
    "bernoulli_numbers_by_recurrence",
    "euler_numbers_by_recurrence",
    "euler_number_from_half_point",
    "apostol_bernoulli_poly",
    "apostol_euler_poly",
    "poly_by_series_extraction",
    "bernoulli_poly",
    "euler_poly",
    "bernoulli_number",
    "euler_number",
    "clear_caches",
]


class Family(enum.Enum):
    APOSTOL_BERNOULLI = "apostol-bernoulli"
    APOSTOL_EULER = "apostol-euler"
    BERNOULLI = "bernoulli"
    EULER = "euler"


@dataclass(frozen=True)
class NumberTable:
    """values[n] = n! * [t^n] of the family's generating kernel."""

    family: Family
    k: int
    mode: LambdaMode
    values: Tuple[FieldElement, ...]

    def __getitem__(self, n: int) -> FieldElement:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _exp_series(mode: LambdaMode, order: int) -> TruncatedSeries:
    return exp_scaled_series(mode.one, order)


@lru_cache(maxsize=None)
def _bernoulli_kernel(k: int, order: int, mode: LambdaMode) -> TruncatedSeries:
    if k == 0:
        return TruncatedSeries([mode.one] + [mode.zero] * order)
    if mode.is_one:
        # (e^t - 1)/t has coefficients 1/(m+1)! and unit constant term.
        base = TruncatedSeries(
            [Fraction(1, factorial(m + 1)) for m in range(order + 1)]
        )
        return (base ** k).recip()
    lam = mode.lam
    exp_t = _exp_series(mode, order)
    affine = TruncatedSeries(
        [exp_t.coefficient(0) * lam - mode.one]
        + [exp_t.coefficient(m) * lam for m in range(1, order + 1)]
    )
    return (affine ** k).recip().times_t_power(k)


@lru_cache(maxsize=None)
def _euler_kernel(k: int, order: int, mode: LambdaMode) -> TruncatedSeries:
    if not mode.is_symbolic and mode.value == -1:
        raise PoleError("Euler-family kernel has a pole at lambda = -1")
    if k == 0:
        return TruncatedSeries([mode.one] + [mode.zero] * order)
    lam = mode.lam
    exp_t = _exp_series(mode, order)
    affine = TruncatedSeries(
        [exp_t.coefficient(0) * lam + mode.one]
        + [exp_t.coefficient(m) * lam for m in range(1, order + 1)]
    )
    return (affine ** k).recip().scale(mode.scalar(2 ** k))


def _table_from_kernel(
    family: Family, k: int, n_max: int, mode: LambdaMode, kernel: TruncatedSeries
) -> NumberTable:
    values = tuple(
        kernel.coefficient(n) * factorial(n) for n in range(n_max + 1)
    )
    return NumberTable(family=family, k=k, mode=mode, values=values)


@lru_cache(maxsize=None)
def apostol_bernoulli_numbers(k: int, n_max: int, mode: LambdaMode) -> NumberTable:
    """Bernoulli-type numbers of order k through index n_max."""
    if k < 0 or n_max < 0:
        raise ValueError("order and index bound must be nonnegative")
    kernel = _bernoulli_kernel(k, n_max, mode)
    return _table_from_kernel(Family.APOSTOL_BERNOULLI, k, n_max, mode, kernel)


@lru_cache(maxsize=None)
def apostol_euler_numbers(k: int, n_max: int, mode: LambdaMode) -> NumberTable:
    """Euler-type numbers of order k through index n_max."""
    if k < 0 or n_max < 0:
        raise ValueError("order and index bound must be nonnegative")
    kernel = _euler_kernel(k, n_max, mode)
    return _table_from_kernel(Family.APOSTOL_EULER, k, n_max, mode, kernel)


@lru_cache(maxsize=None)
def bernoulli_numbers_by_recurrence(n_max: int) -> NumberTable:
    """Classical Bernoulli numbers from the umbral recurrence.

    Expanding (B+1)^n - B_n = [n == 1] with B^j read as B_j gives, for
    n >= 2, sum_{j=0}^{n-1} C(n, j) B_j = 0, which determines each B_{n-1}
    from its predecessors once B_0 = 1 is fixed (the n = 1 instance).
    """
    mode = LambdaMode.numeric(1)
    values = [Fraction(1)]
    for n in range(2, n_max + 2):
        acc = Fraction(0)
        for j in range(n - 1):
            acc += comb(n, j) * values[j]
        values.append(-acc / comb(n, n - 1))
    return NumberTable(
        family=Family.BERNOULLI, k=1, mode=mode, values=tuple(values[: n_max + 1])
    )


@lru_cache(maxsize=None)
def euler_numbers_by_recurrence(n_max: int) -> NumberTable:
    """Integer Euler numbers from (E+1)^n + (E-1)^n = 2*[n == 0].

    Terms with n - j odd cancel, so for n >= 1 the surviving even-offset
    sum gives E_n = -sum of C(n, j) E_j over j < n with n - j even.
    """
    mode = LambdaMode.numeric(1)
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(n - 2, -1, -2):
            acc += comb(n, j) * values[j]
        values.append(-acc)
    return NumberTable(family=Family.EULER, k=1, mode=mode, values=tuple(values))


def euler_number_from_half_point(k: int) -> Fraction:
    """The bridge value 2^k E_k(1/2) from the classical Euler polynomial."""
    value = euler_poly(k).evaluate(Fraction(1, 2))
    return value * 2 ** k


@lru_cache(maxsize=None)
def apostol_bernoulli_poly(n: int, k: int, mode: LambdaMode) -> XPolynomial:
    """Degree-indexed Bernoulli-type polynomial via the binomial sum
    sum_l C(n, l) x^l * number_{n-l}."""
    numbers = apostol_bernoulli_numbers(k, n, mode)
    return XPolynomial(
        [numbers[n - l] * comb(n, l) for l in range(n + 1)], mode
    )


@lru_cache(maxsize=None)
def apostol_euler_poly(n: int, k: int, mode: LambdaMode) -> XPolynomial:
    """Degree-indexed Euler-type polynomial via the binomial sum."""
    numbers = apostol_euler_numbers(k, n, mode)
    return XPolynomial(
        [numbers[n - l] * comb(n, l) for l in range(n + 1)], mode
    )


def poly_by_series_extraction(
    n: int, k: int, mode: LambdaMode, family: Family = Family.APOSTOL_BERNOULLI
) -> XPolynomial:
    """Independent construction: n! * [t^n] (kernel * e^{xt}).

    The kernel series is lifted to polynomial coefficients and multiplied
    by the series with coefficients x^m / m!; no binomial identities are
    involved, so this cross-checks the table-based construction.
    """
    if family in (Family.APOSTOL_BERNOULLI, Family.BERNOULLI):
        kernel = _bernoulli_kernel(k, n, mode)
    elif family in (Family.APOSTOL_EULER, Family.EULER):
        kernel = _euler_kernel(k, n, mode)
    else:
        raise ValueError(f"unknown family: {family}")
    lifted = TruncatedSeries(
        [XPolynomial([c], mode) for c in kernel.coeffs]
    )
    exp_xt = TruncatedSeries(
        [
            XPolynomial.monomial(mode, m, Fraction(1, factorial(m)))
            for m in range(n + 1)
        ]
    )
    product = lifted * exp_xt
    return product.coefficient(n) * factorial(n)


def bernoulli_poly(n: int) -> XPolynomial:
    """Classical Bernoulli polynomial (numeric mode at 1)."""
    return apostol_bernoulli_poly(n, 1, LambdaMode.numeric(1))


def euler_poly(n: int) -> XPolynomial:
    """Classical Euler polynomial (numeric mode at 1)."""
    return apostol_euler_poly(n, 1, LambdaMode.numeric(1))


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers_by_recurrence(n)[n]


def euler_number(n: int) -> Fraction:
    return euler_numbers_by_recurrence(n)[n]


def clear_caches():
    """Drop all memoized tables (results are unaffected; timing tests use this)."""
    for fn in (
        _bernoulli_kernel,
        _euler_kernel,
        apostol_bernoulli_numbers,
        apostol_euler_numbers,
        bernoulli_numbers_by_recurrence,
        euler_numbers_by_recurrence,
        apostol_bernoulli_poly,
        apostol_euler_poly,
    ):
        fn.cache_clear()
