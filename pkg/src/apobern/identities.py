"""Catalog of displayed identities, compiled to exact equality checks.

Every identity is checked by forming the difference of its two sides
over a grid of parameter points and testing it against zero in exact
arithmetic.  Bivariate identities fix the second variable at more
rational sample points than its degree, which is a complete test for a
polynomial identity.  Checks never repair a formula: where a repaired
variant exists it is reported alongside the cataloged form under its own
variant label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .expansion import (
    closed_form_coefficients,
    corrected_coefficients,
    expand_oracle,
    reconstruct,
)
from .families import (
    apostol_bernoulli_numbers,
    apostol_bernoulli_poly,
    apostol_euler_numbers,
    apostol_euler_poly,
    bernoulli_numbers_by_recurrence,
    bernoulli_poly,
    euler_poly,
)
from .field import FieldElement, LambdaMode
from .operators import (
    DifferencePowerMethod,
    corrected_power_at_zero,
    lambda_op,
    lambda_power_at_zero,
    shift_poly,
)
from .polynomials import XPolynomial, embed_poly
from .render import render_field_element, render_x_poly

__all__ = [
    "IdentityId",
    "GridPoint",
    "ResultEntry",
    "IdentitySummary",
    "IdentityReport",
    "SuiteConfig",
    "GridBoundsError",
    "default_grid",
    "default_suite_config",
    "verify_identity",
    "run_suite",
]

_SYM = LambdaMode.symbolic()
_ONE = LambdaMode.numeric(1)
_FULL_MODES = (
    _SYM,
    _ONE,
    LambdaMode.numeric(2),
    LambdaMode.numeric(-2),
    LambdaMode.numeric(Fraction(1, 3)),
)
_NOT_ONE_MODES = (
    _SYM,
    LambdaMode.numeric(2),
    LambdaMode.numeric(-2),
    LambdaMode.numeric(Fraction(1, 3)),
)
_AUDIT_MODES = (_SYM, LambdaMode.numeric(2), LambdaMode.numeric(Fraction(1, 3)))


class IdentityId(enum.Enum):
    """Catalog keys; the enum order fixes the report order."""

    ID_DERIV = "ID_DERIV"
    ID_DIFF = "ID_DIFF"
    ID_LOWER_ORDER = "ID_LOWER_ORDER"
    ID_ZERO_ORDER = "ID_ZERO_ORDER"
    ID_LEMMA_CLOSED_FORM = "ID_LEMMA_CLOSED_FORM"
    ID_THM1 = "ID_THM1"
    ID_COR_XN = "ID_COR_XN"
    ID_THM2 = "ID_THM2"
    ID_THM3 = "ID_THM3"
    ID_HANSEN = "ID_HANSEN"
    ID_EULER_RAMANUJAN = "ID_EULER_RAMANUJAN"
    ID_THM4 = "ID_THM4"
    ID_DILCHER = "ID_DILCHER"
    ID_THM5 = "ID_THM5"


_ID_ORDER = {identity: i for i, identity in enumerate(IdentityId)}


class GridBoundsError(ValueError):
    """Grid outside the desk-scale bounds the catalog certifies."""


@dataclass(frozen=True)
class GridPoint:
    """One parameter point; fields that do not apply stay None."""

    n: int
    k: Optional[int] = None
    mode: Optional[LambdaMode] = None
    y: Optional[Fraction] = None


@dataclass(frozen=True)
class ResultEntry:
    point: GridPoint
    variant: Optional[str]
    passed: bool
    witness: Optional[str]


@dataclass(frozen=True)
class IdentitySummary:
    passed: int
    failed: int
    validity_domain: str


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityId
    results: Tuple[ResultEntry, ...]
    summary: IdentitySummary

    @property
    def grid(self) -> Tuple[GridPoint, ...]:
        seen = []
        for entry in self.results:
            if entry.point not in seen:
                seen.append(entry.point)
        return tuple(seen)


# --------------------------------------------------------------------------
# helpers


def _mode_sort_key(mode: Optional[LambdaMode]):
    if mode is None:
        return (0, Fraction(0))
    if mode.is_symbolic:
        return (1, Fraction(0))
    return (2, mode.value)


def _point_sort_key(point: GridPoint):
    return (
        point.n,
        -1 if point.k is None else point.k,
        _mode_sort_key(point.mode),
        (0, Fraction(0)) if point.y is None else (1, point.y),
    )


def _lam_powers(mode: LambdaMode, k: int) -> List[FieldElement]:
    powers = [mode.one]
    for _ in range(k):
        powers.append(powers[-1] * mode.lam)
    return powers


def _ff(n: int, m: int) -> Fraction:
    """Falling-factorial quotient n!/m!, zero when m is negative."""
    if m < 0:
        return Fraction(0)
    return Fraction(factorial(n), factorial(m))


def _y_samples(count: int) -> List[Fraction]:
    return [Fraction(2 * i - 1, 2) for i in range(count)]


def _poly_witness(diff: XPolynomial) -> Optional[str]:
    if diff.is_zero:
        return None
    return render_x_poly(diff)


def _check_poly_identity(lhs: XPolynomial, rhs: XPolynomial):
    diff = lhs - rhs
    return diff.is_zero, _poly_witness(diff)


CheckOutcome = List[Tuple[Optional[str], bool, Optional[str]]]


# --------------------------------------------------------------------------
# checkers, one per catalog entry


def _check_deriv(pt: GridPoint) -> CheckOutcome:
    # d/dx of the order-k family member n equals n times member n-1.
    lhs = apostol_bernoulli_poly(pt.n, pt.k, pt.mode).derivative()
    rhs = apostol_bernoulli_poly(pt.n - 1, pt.k, pt.mode) * pt.n
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_diff(pt: GridPoint) -> CheckOutcome:
    # (L*p_{n+1}(x+1) - p_{n+1}(x)) / (n+1) equals the order-(k-1) member n.
    p = apostol_bernoulli_poly(pt.n + 1, pt.k, pt.mode)
    lhs = (shift_poly(p, 1).scalar_mul(pt.mode.lam) - p).scalar_div(pt.n + 1)
    rhs = apostol_bernoulli_poly(pt.n, pt.k - 1, pt.mode)
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_lower_order(pt: GridPoint) -> CheckOutcome:
    # The twisted difference drops the order by one and the index by one.
    lhs = lambda_op(apostol_bernoulli_poly(pt.n, pt.k, pt.mode))
    rhs = apostol_bernoulli_poly(pt.n - 1, pt.k - 1, pt.mode) * pt.n
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_zero_order(pt: GridPoint) -> CheckOutcome:
    # Order zero collapses both families to plain monomials.
    monomial = XPolynomial.monomial(pt.mode, pt.n)
    bern = apostol_bernoulli_poly(pt.n, 0, pt.mode) - monomial
    euler = apostol_euler_poly(pt.n, 0, pt.mode) - monomial
    if bern.is_zero and euler.is_zero:
        return [(None, True, None)]
    parts = []
    if not bern.is_zero:
        parts.append(f"bernoulli-type: {render_x_poly(bern)}")
    if not euler.is_zero:
        parts.append(f"euler-type: {render_x_poly(euler)}")
    return [(None, False, "; ".join(parts))]


def _check_lemma(pt: GridPoint) -> CheckOutcome:
    # Both closed forms for the k-th twisted-difference power at zero,
    # judged against literal iteration on the monomial x^n.
    p = XPolynomial.monomial(pt.mode, pt.n)
    direct = lambda_power_at_zero(p, pt.k, pt.mode, DifferencePowerMethod.ITERATED)
    closed = lambda_power_at_zero(p, pt.k, pt.mode, DifferencePowerMethod.CLOSED_FORM)
    corrected = corrected_power_at_zero(p, pt.k, pt.mode)
    out: CheckOutcome = []
    for variant, value in (("closed-form", closed), ("corrected-sign", corrected)):
        if value == direct:
            out.append((variant, True, None))
        else:
            witness = (
                f"iterated = {render_field_element(direct)}, "
                f"{variant} = {render_field_element(value)}"
            )
            out.append((variant, False, witness))
    return out


def _check_thm1(pt: GridPoint) -> CheckOutcome:
    # Basis-expansion coefficient formula versus the exact solve, both for
    # the cataloged window k..n and for the repaired window k..k+n.
    q = XPolynomial.monomial(pt.mode, pt.n)
    oracle = expand_oracle(q, pt.k, pt.mode)
    out: CheckOutcome = []

    literal = closed_form_coefficients(q, pt.k, pt.mode)
    diff = reconstruct(literal) - q
    out.append(("closed-form", literal.exact, _poly_witness(diff)))

    if pt.mode.is_one:
        # The repaired window presumes basis degrees j-k, which only holds
        # away from 1; no corrected variant is defined there.
        return out

    corrected = corrected_coefficients(q, pt.k, pt.mode)
    agrees = (
        corrected.exact
        and corrected.j_lo == oracle.j_lo
        and corrected.j_hi == oracle.j_hi
        and corrected.coefficients == oracle.coefficients
    )
    witness = None
    if not agrees:
        witness = _poly_witness(reconstruct(corrected) - q) or "coefficients differ from oracle"
    out.append(("corrected", agrees, witness))
    return out


def _check_cor_xn(pt: GridPoint) -> CheckOutcome:
    # Monomial expansion with coefficients (1/j!) sum_a (-1)^a C(k,a) L^a
    # * n!/(n-j+k)! * a^(n-j+k), window j = k..n.
    n, k, mode = pt.n, pt.k, pt.mode
    lam_pow = _lam_powers(mode, k)
    lhs = XPolynomial.monomial(mode, n)
    rhs = XPolynomial.zero(mode)
    for j in range(k, n + 1):
        m = n - j + k
        c = mode.zero
        for a in range(k + 1):
            scale = comb(k, a) * _ff(n, m) * Fraction(a) ** m
            if not scale:
                continue
            term = lam_pow[a] * mode.scalar(scale)
            c = c + (-term if a % 2 else term)
        if c:
            rhs = rhs + apostol_bernoulli_poly(j, k, mode).scalar_mul(c / factorial(j))
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _triple_sum_rhs(pt: GridPoint, numbers) -> XPolynomial:
    # Common shape of the two order-k expansions: coefficients
    # sum_a sum_l C(k,a) C(m,l) a^l (-L)^a n! / (j! m!) * numbers[m-l]
    # with m = n-j+k, attached to the order-k basis member j.
    n, k, mode = pt.n, pt.k, pt.mode
    lam_pow = _lam_powers(mode, k)
    rhs = XPolynomial.zero(mode)
    for j in range(k, n + 1):
        m = n - j + k
        c = mode.zero
        for a in range(k + 1):
            inner = Fraction(0)
            for l in range(m + 1):
                inner += comb(m, l) * Fraction(a) ** l * numbers[m - l]
            scale = comb(k, a) * Fraction(factorial(n), factorial(j) * factorial(m)) * inner
            if not scale:
                continue
            term = lam_pow[a] * mode.scalar(scale)
            c = c + (-term if a % 2 else term)
        if c:
            rhs = rhs + apostol_bernoulli_poly(j, k, mode).scalar_mul(c)
    return rhs


def _check_thm2(pt: GridPoint) -> CheckOutcome:
    numbers = apostol_euler_numbers(pt.k, pt.n, _ONE)
    lhs = embed_poly(apostol_euler_poly(pt.n, pt.k, _ONE), pt.mode)
    rhs = _triple_sum_rhs(pt, numbers)
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_thm3(pt: GridPoint) -> CheckOutcome:
    numbers = apostol_bernoulli_numbers(pt.k, pt.n, _ONE)
    lhs = embed_poly(apostol_bernoulli_poly(pt.n, pt.k, _ONE), pt.mode)
    rhs = _triple_sum_rhs(pt, numbers)
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _bernoulli_convolution(m: int, y: Fraction) -> XPolynomial:
    total = XPolynomial.zero(_ONE)
    for i in range(m + 1):
        scalar = comb(m, i) * bernoulli_poly(m - i).evaluate(y)
        if scalar:
            total = total + bernoulli_poly(i).scalar_mul(scalar)
    return total


def _euler_convolution(n: int, y: Fraction) -> XPolynomial:
    total = XPolynomial.zero(_ONE)
    for i in range(n + 1):
        scalar = comb(n, i) * euler_poly(n - i).evaluate(y)
        if scalar:
            total = total + euler_poly(i).scalar_mul(scalar)
    return total


def _check_hansen(pt: GridPoint) -> CheckOutcome:
    # Binomial convolution of Bernoulli polynomials versus
    # (1-m) B_m(x+y) + (x+y-1) m B_{m-1}(x+y).
    m, y = pt.n, pt.y
    lhs = _bernoulli_convolution(m, y)
    rhs = shift_poly(bernoulli_poly(m), y).scalar_mul(Fraction(1 - m))
    if m >= 1:
        affine = XPolynomial([y - 1, 1], _ONE)
        rhs = rhs + (affine * shift_poly(bernoulli_poly(m - 1), y)) * m
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_euler_ramanujan(pt: GridPoint) -> CheckOutcome:
    # B_m = -(sum_{i=2}^{m-2} C(m,i) B_i B_{m-i}) / (m+1).
    m = pt.n
    numbers = bernoulli_numbers_by_recurrence(m)
    acc = Fraction(0)
    for i in range(2, m - 1):
        acc += comb(m, i) * numbers[i] * numbers[m - i]
    rhs = -acc / (m + 1)
    diff = numbers[m] - rhs
    if not diff:
        return [(None, True, None)]
    return [(None, False, render_field_element(diff))]


def _check_thm4(pt: GridPoint) -> CheckOutcome:
    # Bernoulli convolution expanded in the order-k basis; the bracket is
    # evaluated at a+y per the cataloged display.
    n, k, mode, y = pt.n, pt.k, pt.mode, pt.y
    lhs = embed_poly(_bernoulli_convolution(n, y), mode)
    lam_pow = _lam_powers(mode, k)
    rhs = XPolynomial.zero(mode)
    for j in range(k, n + 1):
        m = n - j + k
        c = mode.zero
        for a in range(k + 1):
            arg = a + y
            bracket = (1 - n) * _ff(n, m) * bernoulli_poly(m).evaluate(arg)
            if m >= 1:
                bracket += (arg - 1) * _ff(n, m - 1) * bernoulli_poly(m - 1).evaluate(arg)
            bracket += (j - k) * _ff(n, m) * bernoulli_poly(m).evaluate(arg)
            scale = comb(k, a) * bracket
            if not scale:
                continue
            term = lam_pow[a] * mode.scalar(scale)
            c = c + (-term if a % 2 else term)
        if c:
            rhs = rhs + apostol_bernoulli_poly(j, k, mode).scalar_mul(c / factorial(j))
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_dilcher(pt: GridPoint) -> CheckOutcome:
    # Binomial convolution of Euler polynomials versus
    # 2 (1-x-y) E_n(x+y) + 2 E_{n+1}(x+y).
    n, y = pt.n, pt.y
    lhs = _euler_convolution(n, y)
    affine = XPolynomial([1 - y, -1], _ONE)
    rhs = (affine * shift_poly(euler_poly(n), y)) * 2
    rhs = rhs + shift_poly(euler_poly(n + 1), y) * 2
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


def _check_thm5(pt: GridPoint) -> CheckOutcome:
    # Euler convolution expanded in the order-k basis; the bracket keeps
    # the variable x exactly as the cataloged display does.
    n, k, mode, y = pt.n, pt.k, pt.mode, pt.y
    lhs = embed_poly(_euler_convolution(n, y), mode)
    lam_pow = _lam_powers(mode, k)
    shifted = {
        m: embed_poly(shift_poly(euler_poly(m), y), mode) for m in range(n + 2)
    }
    one_minus = XPolynomial([1 - y, -1], mode)
    rhs = XPolynomial.zero(mode)
    for j in range(k, n + 1):
        m = n - j + k
        bracket = (one_minus * shifted[m]).scalar_mul(_ff(n, m))
        middle = _ff(n, m + 1) * (j - k)
        if middle:
            bracket = bracket - shifted[m + 1].scalar_mul(middle)
        bracket = bracket + shifted[m + 1].scalar_mul(_ff(n + 1, m + 1))
        sign_sum = mode.zero
        for a in range(k + 1):
            term = lam_pow[a] * comb(k, a)
            sign_sum = sign_sum + (-term if a % 2 else term)
        factor = sign_sum / factorial(j)
        if factor:
            rhs = rhs + (bracket * apostol_bernoulli_poly(j, k, mode)).scalar_mul(factor)
    rhs = rhs * 2
    ok, witness = _check_poly_identity(lhs, rhs)
    return [(None, ok, witness)]


# --------------------------------------------------------------------------
# catalog metadata

_CHECKERS: Dict[IdentityId, Callable[[GridPoint], CheckOutcome]] = {
    IdentityId.ID_DERIV: _check_deriv,
    IdentityId.ID_DIFF: _check_diff,
    IdentityId.ID_LOWER_ORDER: _check_lower_order,
    IdentityId.ID_ZERO_ORDER: _check_zero_order,
    IdentityId.ID_LEMMA_CLOSED_FORM: _check_lemma,
    IdentityId.ID_THM1: _check_thm1,
    IdentityId.ID_COR_XN: _check_cor_xn,
    IdentityId.ID_THM2: _check_thm2,
    IdentityId.ID_THM3: _check_thm3,
    IdentityId.ID_HANSEN: _check_hansen,
    IdentityId.ID_EULER_RAMANUJAN: _check_euler_ramanujan,
    IdentityId.ID_THM4: _check_thm4,
    IdentityId.ID_DILCHER: _check_dilcher,
    IdentityId.ID_THM5: _check_thm5,
}

# Parameter letter used in validity-domain summaries.
_LETTERS: Dict[IdentityId, str] = {
    IdentityId.ID_DERIV: "n",
    IdentityId.ID_DIFF: "n",
    IdentityId.ID_LOWER_ORDER: "n",
    IdentityId.ID_ZERO_ORDER: "n",
    IdentityId.ID_LEMMA_CLOSED_FORM: "k",
    IdentityId.ID_THM1: "k",
    IdentityId.ID_COR_XN: "k",
    IdentityId.ID_THM2: "k",
    IdentityId.ID_THM3: "k",
    IdentityId.ID_HANSEN: "m",
    IdentityId.ID_EULER_RAMANUJAN: "m",
    IdentityId.ID_THM4: "k",
    IdentityId.ID_DILCHER: "n",
    IdentityId.ID_THM5: "k",
}

# Identities whose statement contains no deformation parameter.
_LAMBDA_FREE = {
    IdentityId.ID_HANSEN,
    IdentityId.ID_EULER_RAMANUJAN,
    IdentityId.ID_DILCHER,
}

_BIVARIATE = {IdentityId.ID_HANSEN, IdentityId.ID_DILCHER, IdentityId.ID_THM4, IdentityId.ID_THM5}


def _grid_points(
    n_values: Sequence[int],
    k_values: Sequence[Optional[int]],
    modes: Sequence[Optional[LambdaMode]],
    y_counts: Optional[Callable[[int], int]] = None,
) -> List[GridPoint]:
    points = []
    for n in n_values:
        ys = _y_samples(y_counts(n)) if y_counts else [None]
        for k in k_values:
            for mode in modes:
                for y in ys:
                    points.append(GridPoint(n=n, k=k, mode=mode, y=y))
    return points


def default_grid(
    identity: IdentityId,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
    modes: Optional[Tuple[LambdaMode, ...]] = None,
) -> List[GridPoint]:
    """The grid the default suite certifies for one identity.

    ``max_n``/``max_k`` shrink (never extend) the default ranges; ``modes``
    restricts the deformation-parameter selection for identities that have
    one.
    """

    def clamp(default: int, bound: Optional[int]) -> int:
        return default if bound is None else min(default, bound)

    def mode_list(defaults: Tuple[LambdaMode, ...]) -> Tuple[LambdaMode, ...]:
        if modes is None:
            return defaults
        chosen = tuple(m for m in defaults if m in modes)
        if not chosen:
            raise ValueError(
                f"mode selection leaves no grid for {identity.value}"
            )
        return chosen

    if identity is IdentityId.ID_DERIV:
        return _grid_points(
            range(1, clamp(10, max_n) + 1), range(0, clamp(4, max_k) + 1), mode_list(_FULL_MODES)
        )
    if identity is IdentityId.ID_DIFF:
        return _grid_points(
            range(0, clamp(8, max_n) + 1), range(1, clamp(4, max_k) + 1), mode_list(_FULL_MODES)
        )
    if identity is IdentityId.ID_LOWER_ORDER:
        return _grid_points(
            range(1, clamp(8, max_n) + 1), range(1, clamp(4, max_k) + 1), mode_list(_FULL_MODES)
        )
    if identity is IdentityId.ID_ZERO_ORDER:
        return _grid_points(range(0, clamp(10, max_n) + 1), [0], mode_list(_FULL_MODES))
    if identity is IdentityId.ID_LEMMA_CLOSED_FORM:
        return _grid_points(
            range(0, clamp(5, max_n) + 1), range(0, clamp(5, max_k) + 1), (_SYM,)
        )
    if identity is IdentityId.ID_THM1:
        return _grid_points(
            range(0, clamp(6, max_n) + 1),
            range(0, clamp(3, max_k) + 1),
            mode_list(_NOT_ONE_MODES),
        )
    if identity is IdentityId.ID_COR_XN:
        return _grid_points(
            range(0, clamp(8, max_n) + 1), range(0, clamp(3, max_k) + 1), mode_list(_FULL_MODES)
        )
    if identity in (IdentityId.ID_THM2, IdentityId.ID_THM3):
        return _grid_points(
            range(0, clamp(8, max_n) + 1), range(0, clamp(3, max_k) + 1), mode_list(_AUDIT_MODES)
        )
    if identity is IdentityId.ID_HANSEN:
        return _grid_points(
            range(0, clamp(10, max_n) + 1), [None], [None], y_counts=lambda m: m + 2
        )
    if identity is IdentityId.ID_EULER_RAMANUJAN:
        return _grid_points(range(2, clamp(20, max_n) + 1), [None], [None])
    if identity is IdentityId.ID_THM4:
        return _grid_points(
            range(0, clamp(8, max_n) + 1),
            range(0, clamp(3, max_k) + 1),
            mode_list(_AUDIT_MODES),
            y_counts=lambda n: n + 2,
        )
    if identity is IdentityId.ID_DILCHER:
        return _grid_points(
            range(0, clamp(10, max_n) + 1), [None], [None], y_counts=lambda n: n + 2
        )
    if identity is IdentityId.ID_THM5:
        return _grid_points(
            range(0, clamp(8, max_n) + 1),
            range(0, clamp(3, max_k) + 1),
            mode_list(_AUDIT_MODES),
            y_counts=lambda n: n + 3,
        )
    raise ValueError(f"unknown identity: {identity!r}")


def _check_bounds(identity: IdentityId, grid: Sequence[GridPoint]):
    k_limit = 5 if identity is IdentityId.ID_LEMMA_CLOSED_FORM else 4
    for pt in grid:
        if pt.n < 0:
            raise GridBoundsError(f"negative index in grid point {pt}")
        if pt.k is not None and not 0 <= pt.k <= k_limit:
            raise GridBoundsError(f"order {pt.k} outside 0..{k_limit}")
        n_limit = 10 if (pt.mode is not None and pt.mode.is_symbolic) else 24
        if pt.n > n_limit:
            raise GridBoundsError(f"index {pt.n} outside desk scale (limit {n_limit})")


def _ranges(values: Sequence[int]) -> str:
    parts = []
    run_start = prev = values[0]
    for v in list(values[1:]) + [None]:
        if v is not None and v == prev + 1:
            prev = v
            continue
        parts.append(str(run_start) if run_start == prev else f"{run_start}..{prev}")
        if v is not None:
            run_start = prev = v
    return ",".join(parts)


def _domain_for(letter: str, outcomes: Dict[int, bool]) -> str:
    passing = sorted(v for v, ok in outcomes.items() if ok)
    failing = sorted(v for v, ok in outcomes.items() if not ok)
    if not failing:
        return "all tested points pass"
    if not passing:
        return "no tested points pass"
    return (
        f"pass at every point with {letter} in {_ranges(passing)}; "
        f"fail at some point with {letter} in {_ranges(failing)}"
    )


def _validity_domain(identity: IdentityId, results: Sequence[ResultEntry]) -> str:
    letter = _LETTERS[identity]

    def value_of(point: GridPoint) -> int:
        return point.k if letter == "k" else point.n

    variants = []
    for entry in results:
        if entry.variant not in variants:
            variants.append(entry.variant)
    domains = []
    for variant in variants:
        outcomes: Dict[int, bool] = {}
        for entry in results:
            if entry.variant != variant:
                continue
            v = value_of(entry.point)
            outcomes[v] = outcomes.get(v, True) and entry.passed
        domain = _domain_for(letter, outcomes)
        domains.append(domain if variant is None else f"{variant}: {domain}")
    return "; ".join(domains)


def verify_identity(identity: IdentityId, grid: Sequence[GridPoint]) -> IdentityReport:
    """Check one identity over a grid and assemble the ordered report."""
    if not isinstance(identity, IdentityId):
        raise ValueError(f"unknown identity: {identity!r}")
    if not grid:
        raise ValueError("empty grid")
    _check_bounds(identity, grid)
    checker = _CHECKERS[identity]
    ordered = sorted(set(grid), key=_point_sort_key)
    results: List[ResultEntry] = []
    for pt in ordered:
        for variant, passed, witness in checker(pt):
            results.append(
                ResultEntry(point=pt, variant=variant, passed=passed, witness=witness)
            )
    passed = sum(1 for r in results if r.passed)
    summary = IdentitySummary(
        passed=passed,
        failed=len(results) - passed,
        validity_domain=_validity_domain(identity, results),
    )
    return IdentityReport(identity=identity, results=tuple(results), summary=summary)


@dataclass(frozen=True)
class SuiteConfig:
    """Which identities to verify and how far to push their grids."""

    ids: Tuple[IdentityId, ...] = tuple(IdentityId)
    max_n: Optional[int] = None
    max_k: Optional[int] = None
    modes: Optional[Tuple[LambdaMode, ...]] = None

    def __post_init__(self):
        if not self.ids:
            raise ValueError("identity subset must not be empty")
        for identity in self.ids:
            if not isinstance(identity, IdentityId):
                raise ValueError(f"unknown identity: {identity!r}")


def default_suite_config() -> SuiteConfig:
    return SuiteConfig()


def run_suite(config: SuiteConfig) -> List[IdentityReport]:
    """One report per selected identity, ordered by the catalog order."""
    reports = []
    for identity in sorted(set(config.ids), key=_ID_ORDER.get):
        grid = default_grid(identity, config.max_n, config.max_k, config.modes)
        reports.append(verify_identity(identity, grid))
    return reports
