"""Shared oracle helpers.

Tests check the limb/FixedDec implementation against independent models:
Python ints for the natural-number ring and fractions.Fraction for exact
rational values.  Neither shares any code with the package internals.
"""

from fractions import Fraction

from madhava.bigfixed import FixedDec


def as_fraction(x: FixedDec) -> Fraction:
    return Fraction(x.sign * x.mantissa.to_int(), 10**x.scale)


def frac_close(x: FixedDec, target: Fraction, tol: Fraction) -> bool:
    return abs(as_fraction(x) - target) <= tol


PI_50 = Fraction(
    31415926535897932384626433832795028841971693993751,
    10**49,
)  # pi to 50 significant digits, for oracle-side comparisons only
