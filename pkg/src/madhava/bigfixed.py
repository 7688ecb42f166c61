"""Exact arbitrary-precision naturals and scaled decimals.

Every series value in this package flows through the two types defined
here; no float ever touches a computation path.

``BigNat``
    Unbounded non-negative integer stored as little-endian limbs in base
    10**9.  The power-of-ten base makes decimal scaling a pure limb/digit
    shift, so multiplying or dividing by 10**k is always exact.

``FixedDec``
    Signed scaled decimal: value = sign * mantissa * 10**-scale with an
    explicit, caller-visible scale.  Rescaling down, division and
    multiplication all truncate toward zero - never round.  Truncation
    keeps results bit-reproducible and plays nicely with alternating
    series error analysis; callers absorb the drift with guard digits.

Schoolbook algorithms throughout (operands stay under ~200 digits, so
asymptotically fast arithmetic would be pure overhead).  All values are
immutable after construction and every operation is a pure function, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import re

BASE = 10**9
LIMB_DIGITS = 9


class ScaleMismatchError(ValueError):
    """Raised when add/sub operands do not share a scale."""


# ---------------------------------------------------------------------------
# limb-level helpers (operate on little-endian lists of ints in [0, BASE))
# ---------------------------------------------------------------------------

def _trim(limbs: list[int]) -> list[int]:
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return limbs


def _add_limbs(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = []
    carry = 0
    for i in range(len(a)):
        s = a[i] + carry + (b[i] if i < len(b) else 0)
        if s >= BASE:
            out.append(s - BASE)
            carry = 1
        else:
            out.append(s)
            carry = 0
    if carry:
        out.append(1)
    return out


def _sub_limbs(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    # requires a >= b
    out = []
    borrow = 0
    for i in range(len(a)):
        d = a[i] - borrow - (b[i] if i < len(b) else 0)
        if d < 0:
            out.append(d + BASE)
            borrow = 1
        else:
            out.append(d)
            borrow = 0
    if borrow:
        raise ArithmeticError("BigNat subtraction underflow")
    return _trim(out)


def _mul_limbs(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        carry = 0
        for j, bj in enumerate(b):
            cur = out[i + j] + ai * bj + carry
            carry = cur // BASE
            out[i + j] = cur - carry * BASE
        out[i + len(b)] += carry
    return _trim(out)


def _cmp_limbs(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def _divrem_small(a: tuple[int, ...], d: int) -> tuple[list[int], int]:
    # single-limb divisor, 0 < d < BASE
    out = [0] * len(a)
    rem = 0
    for i in range(len(a) - 1, -1, -1):
        cur = rem * BASE + a[i]
        out[i] = cur // d
        rem = cur - out[i] * d
    return _trim(out), rem


def _divrem_limbs(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Knuth algorithm D in base 10**9.  Requires b nonzero."""
    if _cmp_limbs(a, b) < 0:
        return [], list(a)
    if len(b) == 1:
        q, r = _divrem_small(a, b[0])
        return q, [r] if r else []

    # D1: normalize so the top divisor limb is >= BASE // 2
    shift = BASE // (b[-1] + 1)
    if shift > 1:
        u = _mul_limbs(a, (shift,))
        v = tuple(_mul_limbs(b, (shift,)))
    else:
        u = list(a)
        v = b
    n = len(v)
    m = len(u) - n
    u.append(0)
    vt, vs = v[-1], v[-2]

    q = [0] * (m + 1)
    for j in range(m, -1, -1):
        # D3: estimate the quotient limb from the top two remainder limbs
        num = u[j + n] * BASE + u[j + n - 1]
        qhat = num // vt
        rhat = num - qhat * vt
        while qhat >= BASE or qhat * vs > rhat * BASE + u[j + n - 2]:
            qhat -= 1
            rhat += vt
            if rhat >= BASE:
                break
        # D4: multiply and subtract qhat * v from u[j .. j+n]
        borrow = 0
        for i in range(n):
            p = qhat * v[i] + borrow
            borrow = p // BASE
            sub = u[i + j] - (p - borrow * BASE)
            if sub < 0:
                sub += BASE
                borrow += 1
            u[i + j] = sub
        if u[j + n] < borrow:
            # D6: qhat was one too large; add v back
            qhat -= 1
            carry = 0
            for i in range(n):
                t = u[i + j] + v[i] + carry
                if t >= BASE:
                    u[i + j] = t - BASE
                    carry = 1
                else:
                    u[i + j] = t
                    carry = 0
            u[j + n] += carry - borrow
        else:
            u[j + n] -= borrow
        q[j] = qhat

    rem = _trim(u[:n])
    if shift > 1:
        rem, _ = _divrem_small(tuple(rem), shift)
    return _trim(q), rem


# ---------------------------------------------------------------------------
# BigNat
# ---------------------------------------------------------------------------

class BigNat:
    """Unbounded non-negative integer, little-endian base-10**9 limbs.

    Canonical form: the empty tuple is zero and the highest limb is
    otherwise nonzero.  Instances are immutable.
    """

    __slots__ = ("limbs",)

    def __init__(self, limbs: tuple[int, ...] = ()):
        object.__setattr__(self, "limbs", limbs)

    def __setattr__(self, name, value):
        raise AttributeError("BigNat is immutable")

    @classmethod
    def from_int(cls, n: int) -> "BigNat":
        if n < 0:
            raise ValueError("BigNat cannot hold a negative value")
        limbs = []
        while n:
            limbs.append(n % BASE)
            n //= BASE
        return cls(tuple(limbs))

    @classmethod
    def from_str(cls, s: str) -> "BigNat":
        if not s.isdigit():
            raise ValueError(f"not a decimal natural: {s!r}")
        limbs = []
        for i in range(len(s), 0, -LIMB_DIGITS):
            limbs.append(int(s[max(0, i - LIMB_DIGITS):i]))
        return cls(tuple(_trim(limbs)))

    def to_int(self) -> int:
        n = 0
        for limb in reversed(self.limbs):
            n = n * BASE + limb
        return n

    __int__ = to_int

    def is_zero(self) -> bool:
        return not self.limbs

    def num_digits(self) -> int:
        """Decimal digit count; zero has one digit."""
        if not self.limbs:
            return 1
        return (len(self.limbs) - 1) * LIMB_DIGITS + len(str(self.limbs[-1]))

    def __str__(self) -> str:
        if not self.limbs:
            return "0"
        parts = [str(self.limbs[-1])]
        parts.extend(str(l).zfill(LIMB_DIGITS) for l in reversed(self.limbs[:-1]))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BigNat({self})"

    def _cmp(self, other: "BigNat") -> int:
        return _cmp_limbs(self.limbs, other.limbs)

    def __eq__(self, other):
        return isinstance(other, BigNat) and self.limbs == other.limbs

    def __hash__(self):
        return hash(self.limbs)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __add__(self, other: "BigNat") -> "BigNat":
        return BigNat(tuple(_add_limbs(self.limbs, other.limbs)))

    def __sub__(self, other: "BigNat") -> "BigNat":
        if self._cmp(other) < 0:
            raise ArithmeticError("BigNat subtraction would go negative")
        return BigNat(tuple(_sub_limbs(self.limbs, other.limbs)))

    def __mul__(self, other: "BigNat") -> "BigNat":
        return BigNat(tuple(_mul_limbs(self.limbs, other.limbs)))

    def __divmod__(self, other: "BigNat") -> tuple["BigNat", "BigNat"]:
        if other.is_zero():
            raise ZeroDivisionError("BigNat division by zero")
        q, r = _divrem_limbs(self.limbs, other.limbs)
        return BigNat(tuple(q)), BigNat(tuple(r))

    def __floordiv__(self, other: "BigNat") -> "BigNat":
        return divmod(self, other)[0]

    def __mod__(self, other: "BigNat") -> "BigNat":
        return divmod(self, other)[1]

    def shift10(self, k: int) -> "BigNat":
        """Exact multiply by 10**k (k >= 0): limb shift plus a small multiply."""
        if k < 0:
            raise ValueError("shift10 takes k >= 0; use unshift10 to scale down")
        if self.is_zero() or k == 0:
            return self
        whole, rest = divmod(k, LIMB_DIGITS)
        limbs = (0,) * whole + self.limbs
        if rest:
            limbs = tuple(_mul_limbs(limbs, (10**rest,)))
        return BigNat(limbs)

    def unshift10(self, k: int) -> "BigNat":
        """Floor-divide by 10**k (k >= 0): drops the k lowest decimal digits."""
        if k < 0:
            raise ValueError("unshift10 takes k >= 0")
        if k == 0 or self.is_zero():
            return self
        whole, rest = divmod(k, LIMB_DIGITS)
        limbs = self.limbs[whole:]
        if rest and limbs:
            limbs = tuple(_divrem_small(limbs, 10**rest)[0])
        return BigNat(tuple(_trim(list(limbs))))

    def isqrt(self) -> "BigNat":
        """Largest r with r*r <= self (Newton iteration on integers)."""
        if self.is_zero():
            return self
        # start above the true root: 10**ceil(digits / 2)
        x = _NAT_ONE.shift10((self.num_digits() + 1) // 2)
        while True:
            y = BigNat(tuple(_divrem_small((x + self // x).limbs, 2)[0]))
            if y._cmp(x) >= 0:
                return x
            x = y


_NAT_ZERO = BigNat()
_NAT_ONE = BigNat((1,))


def _as_nat(v) -> BigNat:
    if isinstance(v, BigNat):
        return v
    if isinstance(v, int):
        return BigNat.from_int(v)
    raise TypeError(f"expected BigNat or int, got {type(v).__name__}")


# spec-named operation surface ------------------------------------------------

def nat_add(a: BigNat, b: BigNat) -> BigNat:
    """Exact sum in canonical form."""
    return _as_nat(a) + _as_nat(b)


def nat_mul(a: BigNat, b: BigNat) -> BigNat:
    """Exact schoolbook product."""
    return _as_nat(a) * _as_nat(b)


def nat_divrem(a: BigNat, b: BigNat) -> tuple[BigNat, BigNat]:
    """Exact (quotient, remainder) with a = q*b + r and 0 <= r < b."""
    return divmod(_as_nat(a), _as_nat(b))


# ---------------------------------------------------------------------------
# FixedDec
# ---------------------------------------------------------------------------

_FD_PATTERN = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?$")


class FixedDec:
    """Signed scaled decimal: sign * mantissa * 10**-scale.

    The scale is explicit and never changes silently.  Zero is canonical
    with sign +1.  Arithmetic contracts:

    * add/sub require equal scales and are exact at that scale;
    * mul forms the exact double-scale product, then truncates (toward
      zero) back to the larger input scale;
    * every division truncates toward zero.
    """

    __slots__ = ("sign", "mantissa", "scale")

    def __init__(self, sign: int, mantissa: BigNat, scale: int):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if scale < 0:
            raise ValueError("scale must be non-negative")
        mantissa = _as_nat(mantissa)
        if mantissa.is_zero():
            sign = 1
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "scale", scale)

    def __setattr__(self, name, value):
        raise AttributeError("FixedDec is immutable")

    # construction helpers ---------------------------------------------------

    @classmethod
    def from_int(cls, n: int, scale: int = 0) -> "FixedDec":
        sign = -1 if n < 0 else 1
        return cls(sign, BigNat.from_int(abs(n)).shift10(scale), scale)

    def is_zero(self) -> bool:
        return self.mantissa.is_zero()

    # value comparison (scales may differ; alignment is exact) ---------------

    def _cmp(self, other: "FixedDec") -> int:
        if self.sign != other.sign:
            return -1 if self.sign < other.sign else 1
        s = max(self.scale, other.scale)
        ma = self.mantissa.shift10(s - self.scale)
        mb = other.mantissa.shift10(s - other.scale)
        return ma._cmp(mb) * self.sign

    def __eq__(self, other):
        return isinstance(other, FixedDec) and self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    __hash__ = None

    def __neg__(self) -> "FixedDec":
        return FixedDec(-self.sign, self.mantissa, self.scale)

    def __abs__(self) -> "FixedDec":
        return FixedDec(1, self.mantissa, self.scale)

    def __add__(self, other: "FixedDec") -> "FixedDec":
        return fd_add(self, other)

    def __sub__(self, other: "FixedDec") -> "FixedDec":
        return fd_sub(self, other)

    def __mul__(self, other: "FixedDec") -> "FixedDec":
        return fd_mul(self, other)

    def __str__(self) -> str:
        return fd_to_string(self)

    def __repr__(self) -> str:
        return f"FixedDec({fd_to_string(self)})"


FD_ZERO = FixedDec(1, _NAT_ZERO, 0)


# spec-named operation surface ------------------------------------------------

def fd_from_ratio(num, den, sign: int = 1, scale: int = 0) -> FixedDec:
    """num/den at the given scale; mantissa = floor(num * 10**scale / den).

    Truncates toward zero, never rounds.  num and den are naturals (or
    non-negative ints); den must be nonzero.
    """
    num = _as_nat(num)
    den = _as_nat(den)
    if den.is_zero():
        raise ZeroDivisionError("fd_from_ratio with zero denominator")
    mant = num.shift10(scale) // den
    return FixedDec(sign, mant, scale)


def fd_add(a: FixedDec, b: FixedDec) -> FixedDec:
    """Exact sum; operands must share a scale."""
    if a.scale != b.scale:
        raise ScaleMismatchError(f"add/sub needs equal scales, got {a.scale} and {b.scale}")
    if a.sign == b.sign:
        return FixedDec(a.sign, a.mantissa + b.mantissa, a.scale)
    c = a.mantissa._cmp(b.mantissa)
    if c == 0:
        return FixedDec(1, _NAT_ZERO, a.scale)
    if c > 0:
        return FixedDec(a.sign, a.mantissa - b.mantissa, a.scale)
    return FixedDec(b.sign, b.mantissa - a.mantissa, a.scale)


def fd_sub(a: FixedDec, b: FixedDec) -> FixedDec:
    """Exact difference; operands must share a scale."""
    return fd_add(a, -b)


def fd_mul(a: FixedDec, b: FixedDec) -> FixedDec:
    """Exact product at scale a.scale + b.scale, truncated back to the
    larger input scale."""
    out_scale = max(a.scale, b.scale)
    mant = (a.mantissa * b.mantissa).unshift10(a.scale + b.scale - out_scale)
    return FixedDec(a.sign * b.sign, mant, out_scale)


def fd_div(a: FixedDec, b: FixedDec, scale: int) -> FixedDec:
    """Quotient truncated toward zero at the requested scale."""
    if b.is_zero():
        raise ZeroDivisionError("fd_div by zero")
    shift = scale + b.scale - a.scale
    if shift >= 0:
        num = a.mantissa.shift10(shift)
    else:
        num = a.mantissa.unshift10(-shift)
    return FixedDec(a.sign * b.sign, num // b.mantissa, scale)


def fd_divn(a: FixedDec, n, scale: int | None = None) -> FixedDec:
    """Divide by a natural (truncating); keeps a.scale unless told otherwise."""
    n = _as_nat(n)
    if n.is_zero():
        raise ZeroDivisionError("fd_divn by zero")
    scale = a.scale if scale is None else scale
    if scale >= a.scale:
        num = a.mantissa.shift10(scale - a.scale)
    else:
        num = a.mantissa.unshift10(a.scale - scale)
    return FixedDec(a.sign, num // n, scale)


def fd_rescale(a: FixedDec, scale: int) -> FixedDec:
    """Change scale: exact when raising, truncated toward zero when lowering."""
    if scale == a.scale:
        return a
    if scale > a.scale:
        return FixedDec(a.sign, a.mantissa.shift10(scale - a.scale), scale)
    return FixedDec(a.sign, a.mantissa.unshift10(a.scale - scale), scale)


def fd_round(a: FixedDec, scale: int) -> FixedDec:
    """Re-scale with round-half-away-from-zero on the magnitude.

    The only sanctioned departures from truncation are final-answer
    quantizations (integer circumference, sine-table entries); all
    intermediate arithmetic stays truncating.
    """
    if scale >= a.scale:
        return fd_rescale(a, scale)
    drop = a.scale - scale
    half = BigNat((5,)).shift10(drop - 1)
    return FixedDec(a.sign, (a.mantissa + half).unshift10(drop), scale)


def fd_isqrt(a: FixedDec, scale: int) -> FixedDec:
    """Floor square root at the requested scale: the largest r (a multiple
    of 10**-scale) with r*r <= a."""
    if a.sign < 0 and not a.is_zero():
        raise ValueError("fd_isqrt of a negative value")
    shift = 2 * scale - a.scale
    if shift >= 0:
        m = a.mantissa.shift10(shift)
    else:
        m = a.mantissa.unshift10(-shift)
    return FixedDec(1, m.isqrt(), scale)


def fd_to_string(a: FixedDec) -> str:
    """Decimal string with exactly `scale` fractional digits."""
    digits = str(a.mantissa)
    if a.scale == 0:
        body = digits
    else:
        digits = digits.rjust(a.scale + 1, "0")
        body = digits[:-a.scale] + "." + digits[-a.scale:]
    return ("-" if a.sign < 0 else "") + body


def fd_from_string(s: str) -> FixedDec:
    """Parse [+-]?digits[.digits]?; the scale is the fractional digit count."""
    m = _FD_PATTERN.match(s)
    if not m:
        raise ValueError(f"malformed decimal string: {s!r}")
    sign = -1 if m.group(1) == "-" else 1
    frac = m.group(3) or ""
    return FixedDec(sign, BigNat.from_str(m.group(2) + frac), len(frac))


def fd_floor_int(a: FixedDec) -> int:
    """Integer floor; exact (uses the sign and the dropped digits)."""
    whole = a.mantissa.unshift10(a.scale)
    n = whole.to_int()
    if a.sign < 0:
        frac_dropped = a.mantissa._cmp(whole.shift10(a.scale)) != 0
        return -n - (1 if frac_dropped else 0)
    return n
