"""Infinite-series approximations of pi with correction-term acceleration.

Series implemented (full-pi normalization in all return values):

* ``leibniz``   4 * (1 - 1/3 + 1/5 - 1/7 + ...)
* ``aux-a``     4 * (3/4 + 1/(3^3-3) - 1/(5^3-5) + ...)
* ``aux-b``     8 * (1/(2^2-1) + 1/(6^2-1) + 1/(10^2-1) + ...)
* ``aux-c``     4 * (4/(1^5+4*1) - 4/(3^5+4*3) + ...)
* ``aux-d``     4 * (1/2 + 1/(2^2-1) - 1/(4^2-1) + 1/(6^2-1) - ...)
* ``sqrt12``    sqrt(12) * (1 - 1/(3*3) + 1/(5*3^2) - 1/(7*3^3) + ...)

plus the arctangent power series (x - x^3/3 + x^5/5 - ...) from which the
sqrt12 form arises at x = 1/sqrt(3), the end-correction terms F1, F2, F3
appended after n Leibniz terms, the classical 13-digit fraction
2,827,433,388,233 / 9e11, and the circumference cross-check for a circle
of diameter 9e11.

Numerical contract: a call with working scale s sums reciprocals that are
individually truncated at s, so the result carries the analytic series
error plus at most (n + a few) * 10**-s of truncation drift.  Callers
wanting d trustworthy digits follow the guard-digit convention: compute
at s = d + 10 and truncate the result to d.

The leading constants in aux-a (3/4) and aux-d (1/2) are always included
and never counted in n.  Term denominators are constructed as exact
Python integers and immediately wrapped; all accumulation is FixedDec.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigfixed import (
    BigNat,
    FixedDec,
    fd_add,
    fd_divn,
    fd_from_ratio,
    fd_from_string,
    fd_isqrt,
    fd_mul,
    fd_rescale,
    fd_round,
)

LEIBNIZ = "leibniz"
AUX_A = "aux-a"
AUX_B = "aux-b"
AUX_C = "aux-c"
AUX_D = "aux-d"
SQRT12 = "sqrt12"
SERIES_IDS = (LEIBNIZ, AUX_A, AUX_B, AUX_C, AUX_D, SQRT12)

NO_CORRECTION = "none"
F1 = "f1"
F2 = "f2"
F3 = "f3"
CORRECTIONS = (NO_CORRECTION, F1, F2, F3)

# pi truncated to 30 decimals.  Never trusted blindly: the test suite
# re-derives it from pi_sqrt12 at n=70, where the a-priori bound is far
# below 1e-30.
PI_REF_30 = "3.141592653589793238462643383279"

# Attributed circumference of a circle of diameter 9e11, and that diameter.
MADHAVA_CIRCUMFERENCE = 2_827_433_388_233
CIRCLE_DIAMETER = 9 * 10**11

DEFAULT_TERM_CAP = 1_000_000


class TermCountError(ValueError):
    """Requested digit count needs more terms than the configured cap."""


@dataclass(frozen=True)
class SeriesSpec:
    """Selects one pi series evaluation: id, term count, optional
    end-correction (Leibniz only) and working scale."""

    series_id: str
    terms: int
    correction: str = NO_CORRECTION
    scale: int = 20

    def __post_init__(self):
        if self.series_id not in SERIES_IDS:
            raise ValueError(f"unknown series id {self.series_id!r}")
        if self.terms < 1:
            raise ValueError("terms must be >= 1")
        if self.correction not in CORRECTIONS:
            raise ValueError(f"unknown correction {self.correction!r}")
        if self.correction != NO_CORRECTION and self.series_id != LEIBNIZ:
            raise ValueError("corrections apply to the leibniz series only")
        if self.scale < 1:
            raise ValueError("scale must be >= 1")


@dataclass(frozen=True)
class PiResult:
    value: FixedDec
    terms_used: int
    error_bound: FixedDec | None


# ---------------------------------------------------------------------------
# series evaluation
# ---------------------------------------------------------------------------

def _signed_recip_sum(pairs, scale: int) -> FixedDec:
    """Sum of (-1)**(k-1) * num_k / den_k, each quotient truncated at scale."""
    acc = FixedDec.from_int(0, scale)
    sign = 1
    for num, den in pairs:
        acc = fd_add(acc, fd_from_ratio(num, den, sign, scale))
        sign = -sign
    return acc


def _times_int(a: FixedDec, n: int) -> FixedDec:
    return fd_mul(a, FixedDec.from_int(n))


def leibniz_partial(n: int, scale: int) -> FixedDec:
    """4 * sum_{k=1..n} (-1)**(k-1) / (2k-1).

    Error vs pi is within 4/(2n+1) + n * 10**-scale.
    """
    _check_terms(n)
    s = _signed_recip_sum(((1, 2 * k - 1) for k in range(1, n + 1)), scale)
    return _times_int(s, 4)


def correction_term(n: int, variant: str, scale: int) -> FixedDec:
    """End-correction after n terms: F1 = 1/(4n), F2 = n/(4n^2+1),
    F3 = (n^2+1)/(n(4n^2+5)).  Exact formula value truncated at scale."""
    _check_terms(n)
    if variant == F1:
        return fd_from_ratio(1, 4 * n, 1, scale)
    if variant == F2:
        return fd_from_ratio(n, 4 * n * n + 1, 1, scale)
    if variant == F3:
        return fd_from_ratio(n * n + 1, n * (4 * n * n + 5), 1, scale)
    raise ValueError(f"unknown correction variant {variant!r}")


def leibniz_corrected(n: int, variant: str, scale: int) -> FixedDec:
    """4 * (n-term Leibniz sum + (-1)**n * F_variant(n)).

    The correction sign follows the series: it continues the alternation
    after the n-th term.
    """
    _check_terms(n)
    s = _signed_recip_sum(((1, 2 * k - 1) for k in range(1, n + 1)), scale)
    corr = correction_term(n, variant, scale)
    s = fd_add(s, corr if n % 2 == 0 else -corr)
    return _times_int(s, 4)


def aux_series(series_id: str, n: int, scale: int) -> FixedDec:
    """One of the four auxiliary series, normalized to approximate pi.

    n counts summed terms after any leading constant; the leading 3/4 of
    aux-a and 1/2 of aux-d are always included.
    """
    _check_terms(n)
    if series_id == AUX_A:
        s = _signed_recip_sum(
            ((1, (2 * k + 1) ** 3 - (2 * k + 1)) for k in range(1, n + 1)), scale)
        s = fd_add(s, fd_from_ratio(3, 4, 1, scale))
        return _times_int(s, 4)
    if series_id == AUX_B:
        acc = FixedDec.from_int(0, scale)
        for k in range(1, n + 1):
            acc = fd_add(acc, fd_from_ratio(1, (4 * k - 2) ** 2 - 1, 1, scale))
        return _times_int(acc, 8)
    if series_id == AUX_C:
        s = _signed_recip_sum(
            ((4, (2 * k - 1) ** 5 + 4 * (2 * k - 1)) for k in range(1, n + 1)), scale)
        return _times_int(s, 4)
    if series_id == AUX_D:
        s = _signed_recip_sum(((1, (2 * k) ** 2 - 1) for k in range(1, n + 1)), scale)
        s = fd_add(s, fd_from_ratio(1, 2, 1, scale))
        return _times_int(s, 4)
    raise ValueError(f"not an auxiliary series id: {series_id!r}")


def arctan_series(x: FixedDec, n: int, scale: int) -> FixedDec:
    """n-term arctangent series x - x^3/3 + x^5/5 - ...

    Requires |x| <= 1 (the series diverges beyond).  For |x| < 1 the
    analytic error is within |x|**(2n+1) / (2n+1).
    """
    _check_terms(n)
    one = FixedDec.from_int(1, x.scale)
    if abs(x) > one:
        raise ValueError("arctan series needs |x| <= 1")
    xw = fd_rescale(x, scale)
    x2 = fd_mul(xw, xw)
    acc = FixedDec.from_int(0, scale)
    power = xw
    for k in range(1, n + 1):
        term = fd_divn(power, 2 * k - 1)
        acc = fd_add(acc, term if k % 2 == 1 else -term)
        if k < n:
            power = fd_mul(power, x2)
    return acc


def pi_sqrt12(n: int, scale: int) -> FixedDec:
    """sqrt(12) times the n-term sum 1 - 1/(3*3) + 1/(5*3^2) - ...

    Analytic error within sqrt(12) / ((2n+1) * 3**n).
    """
    _check_terms(n)
    s = _signed_recip_sum(
        ((1, (2 * k - 1) * 3 ** (k - 1)) for k in range(1, n + 1)), scale)
    root = fd_isqrt(FixedDec.from_int(12), scale)
    return fd_mul(root, s)


def madhava_pi_value(scale: int) -> FixedDec:
    """The attributed fraction 2,827,433,388,233 / 9e11, truncated at scale.

    Correct to the 10th decimal place; the 11th differs from pi.
    """
    if scale < 0:
        raise ValueError("scale must be >= 0")
    return fd_from_ratio(MADHAVA_CIRCUMFERENCE, CIRCLE_DIAMETER, 1, scale)


def pi_reference(scale: int) -> FixedDec:
    """Reference pi at the given scale.

    Up to 30 digits this truncates a stored constant (itself re-derived
    from pi_sqrt12 by the test suite); beyond that it is computed fresh
    from the sqrt12 series with a bound two digits past the request.
    """
    if scale < 0:
        raise ValueError("scale must be >= 0")
    intpart, frac = PI_REF_30.split(".")
    if scale <= len(frac):
        return fd_from_string(intpart + "." + frac[:scale] if scale else intpart)
    n = terms_for_digits(SQRT12, scale + 2)
    return fd_rescale(pi_sqrt12(n, scale + 10), scale)


@dataclass(frozen=True)
class CircumferenceReport:
    madhava: BigNat
    computed: BigNat
    delta: int


def circumference_check(scale: int = 20) -> CircumferenceReport:
    """Recompute the circumference of the diameter-9e11 circle and compare
    with the attributed 2,827,433,388,233.

    The reference pi comes from the sqrt12 series with its bound below
    1e-18, so the product is certain to within well under one unit; the
    product is then rounded to the nearest integer (half away from zero).
    """
    if scale < 20:
        raise ValueError("circumference check needs scale >= 20")
    n = terms_for_digits(SQRT12, 18)
    pi_val = pi_sqrt12(n, scale)
    product = fd_mul(pi_val, FixedDec.from_int(CIRCLE_DIAMETER))
    computed = fd_round(product, 0).mantissa
    madhava = BigNat.from_int(MADHAVA_CIRCUMFERENCE)
    return CircumferenceReport(
        madhava=madhava,
        computed=computed,
        delta=madhava.to_int() - computed.to_int(),
    )


# ---------------------------------------------------------------------------
# a-priori term selection
# ---------------------------------------------------------------------------

def _iroot(x: int, k: int) -> int:
    """Floor k-th root of a non-negative int (Newton, exact)."""
    if x == 0:
        return 0
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            return r
        r = nr


def _search_min(start: int, holds) -> int:
    n = max(1, start)
    while not holds(n):
        n += 1
    while n > 1 and holds(n - 1):
        n -= 1
    return n


def terms_for_digits(series_id: str, digits: int, cap: int = DEFAULT_TERM_CAP) -> int:
    """Smallest n whose analytic error bound (on the pi-normalized value)
    drops below 10**-digits.

    Bounds are the first omitted term for the alternating series, the
    sqrt12 tail formula, and for the all-positive aux-b the telescoped
    tail bound 4/(4n+1).  leibniz and aux-b shrink only like 1/n, so their
    n grows like 10**digits; requests whose n exceeds the cap are refused.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    p = 10**digits
    if series_id == LEIBNIZ:
        n = 2 * p  # smallest n with 4/(2n+1) < 10**-digits
    elif series_id == AUX_B:
        n = p  # smallest n with 4/(4n+1) < 10**-digits
    elif series_id == AUX_A:
        n = _search_min((_iroot(4 * p, 3) - 3) // 2,
                        lambda n: (2 * n + 3) ** 3 - (2 * n + 3) > 4 * p)
    elif series_id == AUX_C:
        n = _search_min((_iroot(16 * p, 5) - 1) // 2,
                        lambda n: (2 * n + 1) ** 5 + 4 * (2 * n + 1) > 16 * p)
    elif series_id == AUX_D:
        n = _search_min((_iroot(4 * p, 2) - 2) // 2,
                        lambda n: (2 * n + 2) ** 2 - 1 > 4 * p)
    elif series_id == SQRT12:
        sq = 12 * p * p
        n = _search_min(1, lambda n: ((2 * n + 1) * 3**n) ** 2 > sq)
    else:
        raise ValueError(f"unknown series id {series_id!r}")
    if n > cap:
        raise TermCountError(
            f"{series_id} needs {n} terms for {digits} digits, above the cap of {cap}")
    return n


# ---------------------------------------------------------------------------
# one-call evaluation with bound
# ---------------------------------------------------------------------------

def _drift(n: int, scale: int) -> FixedDec:
    # n per-term truncations plus a couple for the final scaling
    return FixedDec(1, BigNat.from_int(n + 4), scale)


def error_bound(series_id: str, n: int, scale: int, correction: str = NO_CORRECTION) -> FixedDec | None:
    """A-priori bound on |value - pi|, or None where no closed form is
    carried (the corrected Leibniz variants)."""
    if correction != NO_CORRECTION:
        return None
    if series_id == LEIBNIZ:
        analytic = fd_from_ratio(4, 2 * n + 1, 1, scale)
    elif series_id == AUX_A:
        analytic = fd_from_ratio(4, (2 * n + 3) ** 3 - (2 * n + 3), 1, scale)
    elif series_id == AUX_B:
        analytic = fd_from_ratio(4, 4 * n + 1, 1, scale)
    elif series_id == AUX_C:
        analytic = fd_from_ratio(16, (2 * n + 1) ** 5 + 4 * (2 * n + 1), 1, scale)
    elif series_id == AUX_D:
        analytic = fd_from_ratio(4, (2 * n + 2) ** 2 - 1, 1, scale)
    elif series_id == SQRT12:
        # ceil the root so the bound stays an upper bound
        root_up = fd_add(fd_isqrt(FixedDec.from_int(12), scale),
                         FixedDec(1, BigNat.from_int(1), scale))
        analytic = fd_divn(root_up, (2 * n + 1) * 3**n)
    else:
        raise ValueError(f"unknown series id {series_id!r}")
    return fd_add(analytic, _drift(n, scale))


def evaluate(spec: SeriesSpec) -> PiResult:
    """Evaluate a SeriesSpec at its working scale.  Deterministic: equal
    specs give bit-identical results."""
    if spec.series_id == LEIBNIZ:
        if spec.correction == NO_CORRECTION:
            value = leibniz_partial(spec.terms, spec.scale)
        else:
            value = leibniz_corrected(spec.terms, spec.correction, spec.scale)
    elif spec.series_id == SQRT12:
        value = pi_sqrt12(spec.terms, spec.scale)
    else:
        value = aux_series(spec.series_id, spec.terms, spec.scale)
    bound = error_bound(spec.series_id, spec.terms, spec.scale, spec.correction)
    return PiResult(value=value, terms_used=spec.terms, error_bound=bound)


def _check_terms(n: int) -> None:
    if n < 1:
        raise ValueError("term count must be >= 1")
