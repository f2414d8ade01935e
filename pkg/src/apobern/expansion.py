"""Expanding polynomials in the Bernoulli-type basis of a fixed order.

Away from L = 1 the family members of order k start at index k (the
lower ones are zero polynomials) and the member of index j has degree
j - k, so representing a degree-n polynomial takes indices k..k+n and the
resulting linear system is triangular.  At L = 1 the members are monic of
degree equal to their index and the natural window is 0..n.

Three routes are provided: an exact triangular solve (the oracle), the
closed-form coefficient formula with index window k..n as cataloged, and
a repaired variant that extends the window to k..k+n and evaluates the
operator power by literal iteration.  Only the oracle is guaranteed
exact; the other two carry an exactness flag computed by reconstruction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import comb, factorial
from typing import Optional, Tuple

from .families import apostol_bernoulli_poly
from .field import FieldElement, LambdaMode
from .operators import DifferencePowerMethod, d_op, lambda_power_at_zero
from .polynomials import XPolynomial

__all__ = [
    "ExpansionMethod",
    "BasisExpansion",
    "UnsupportedModeError",
    "expand_oracle",
    "closed_form_coefficients",
    "corrected_coefficients",
    "reconstruct",
]


class UnsupportedModeError(ValueError):
    """Expansion route undefined for the requested mode."""


class ExpansionMethod(enum.Enum):
    ORACLE = "oracle"
    CLOSED_FORM = "closed-form"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients b_j over basis indices j_lo..j_hi (empty if j_lo > j_hi).

    ``exact`` records whether sum b_j * basis_j reproduces the expanded
    polynomial identically.
    """

    method: ExpansionMethod
    k: int
    mode: LambdaMode
    j_lo: int
    j_hi: int
    coefficients: Tuple[FieldElement, ...]
    exact: bool

    def coefficient(self, j: int) -> FieldElement:
        if not self.j_lo <= j <= self.j_hi:
            raise IndexError(f"basis index {j} outside {self.j_lo}..{self.j_hi}")
        return self.coefficients[j - self.j_lo]

    def indices(self) -> range:
        return range(self.j_lo, self.j_hi + 1)


def _empty(method: ExpansionMethod, k: int, mode: LambdaMode, j_lo: int, exact: bool) -> BasisExpansion:
    return BasisExpansion(
        method=method, k=k, mode=mode, j_lo=j_lo, j_hi=j_lo - 1, coefficients=(), exact=exact
    )


def reconstruct(expansion: BasisExpansion, mode: Optional[LambdaMode] = None) -> XPolynomial:
    """sum b_j * basis_j as a polynomial; the empty expansion gives zero."""
    if mode is None:
        mode = expansion.mode
    elif mode != expansion.mode:
        raise ValueError("reconstruction mode does not match the expansion")
    total = XPolynomial.zero(mode)
    for j in expansion.indices():
        b = expansion.coefficient(j)
        if b:
            total = total + apostol_bernoulli_poly(j, expansion.k, mode).scalar_mul(b)
    return total


def expand_oracle(q: XPolynomial, k: int, mode: Optional[LambdaMode] = None) -> BasisExpansion:
    """Exact expansion by back-substitution on the degree-triangular system."""
    if mode is None:
        mode = q.mode
    elif mode != q.mode:
        raise ValueError("expansion mode does not match the polynomial")
    if k < 0:
        raise ValueError("basis order must be nonnegative")
    j_lo = 0 if mode.is_one else k
    if q.is_zero:
        return _empty(ExpansionMethod.ORACLE, k, mode, j_lo, exact=True)
    n = q.degree
    j_hi = j_lo + n
    residual = q
    coeffs: dict[int, FieldElement] = {}
    for j in range(j_hi, j_lo - 1, -1):
        basis = apostol_bernoulli_poly(j, k, mode)
        deg = j - j_lo
        c = residual.coefficient(deg)
        if c:
            b = c / basis.coefficient(deg)
            coeffs[j] = b
            residual = residual - basis.scalar_mul(b)
        else:
            coeffs[j] = mode.zero
    if not residual.is_zero:
        raise AssertionError("triangular solve left a nonzero residual")
    return BasisExpansion(
        method=ExpansionMethod.ORACLE,
        k=k,
        mode=mode,
        j_lo=j_lo,
        j_hi=j_hi,
        coefficients=tuple(coeffs[j] for j in range(j_lo, j_hi + 1)),
        exact=True,
    )


def closed_form_coefficients(
    q: XPolynomial, k: int, mode: Optional[LambdaMode] = None
) -> BasisExpansion:
    """Coefficient formula over the window j = k..deg q, as cataloged:

        b_j = (1/j!) * sum_{a=0}^{k} (-1)^a C(k, a) L^a (D^{j-k} q)(a)

    The window cannot reach a degree-n polynomial away from L = 1 (the
    basis members there have degree j - k), so the exactness flag is
    computed by reconstructing and comparing against q.
    """
    if mode is None:
        mode = q.mode
    elif mode != q.mode:
        raise ValueError("expansion mode does not match the polynomial")
    if k < 0:
        raise ValueError("basis order must be nonnegative")
    n = q.degree
    if n < k:
        return _empty(ExpansionMethod.CLOSED_FORM, k, mode, k, exact=q.is_zero)
    lam = mode.lam
    coeffs = []
    for j in range(k, n + 1):
        deriv = d_op(q, j - k)
        acc = mode.zero
        for a in range(k + 1):
            term = deriv.evaluate(a) * (lam ** a) * comb(k, a)
            acc = acc + (-term if a % 2 else term)
        coeffs.append(acc / factorial(j))
    expansion = BasisExpansion(
        method=ExpansionMethod.CLOSED_FORM,
        k=k,
        mode=mode,
        j_lo=k,
        j_hi=n,
        coefficients=tuple(coeffs),
        exact=False,
    )
    return replace(expansion, exact=reconstruct(expansion) == q)


def corrected_coefficients(
    q: XPolynomial, k: int, mode: Optional[LambdaMode] = None
) -> BasisExpansion:
    """Repaired route: window j = k..k+deg q and literal operator powers,

        b_j = (1/j!) * (Lambda^k D^{j-k} q)(0),

    validated against the oracle rather than assumed."""
    if mode is None:
        mode = q.mode
    elif mode != q.mode:
        raise ValueError("expansion mode does not match the polynomial")
    if k < 0:
        raise ValueError("basis order must be nonnegative")
    if mode.is_one:
        raise UnsupportedModeError(
            "the k..k+n window presumes basis degrees j-k, which fails at lambda = 1"
        )
    if q.is_zero:
        return _empty(ExpansionMethod.CORRECTED, k, mode, k, exact=True)
    n = q.degree
    coeffs = []
    for j in range(k, k + n + 1):
        value = lambda_power_at_zero(
            d_op(q, j - k), k, mode, DifferencePowerMethod.ITERATED
        )
        coeffs.append(value / factorial(j))
    expansion = BasisExpansion(
        method=ExpansionMethod.CORRECTED,
        k=k,
        mode=mode,
        j_lo=k,
        j_hi=k + n,
        coefficients=tuple(coeffs),
        exact=False,
    )
    return replace(expansion, exact=reconstruct(expansion) == q)
