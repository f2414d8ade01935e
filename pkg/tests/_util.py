"""Shared helpers for the test suite."""

from fractions import Fraction
from random import Random

from apobern import LambdaMode, LambdaPoly, LambdaRatFunc, XPolynomial

SYM = LambdaMode.symbolic()
ONE = LambdaMode.numeric(1)
TWO = LambdaMode.numeric(2)
MINUS_TWO = LambdaMode.numeric(-2)
THIRD = LambdaMode.numeric(Fraction(1, 3))

ALL_MODES = (SYM, ONE, TWO, MINUS_TWO, THIRD)
NOT_ONE_MODES = (SYM, TWO, MINUS_TWO, THIRD)


def random_fraction(rng: Random, num_bound: int = 9, den_bound: int = 4) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def random_lambda_poly(rng: Random, max_deg: int = 2, nonzero: bool = False) -> LambdaPoly:
    while True:
        coeffs = [random_fraction(rng, 3, 2) for _ in range(rng.randint(0, max_deg) + 1)]
        poly = LambdaPoly(coeffs)
        if not nonzero or not poly.is_zero:
            return poly


def random_ratfunc(rng: Random, max_deg: int = 2) -> LambdaRatFunc:
    return LambdaRatFunc(
        random_lambda_poly(rng, max_deg),
        random_lambda_poly(rng, max_deg, nonzero=True),
    )


def random_xpoly(rng: Random, mode: LambdaMode, max_deg: int = 6) -> XPolynomial:
    deg = rng.randint(0, max_deg)
    return XPolynomial([random_fraction(rng) for _ in range(deg + 1)], mode)
