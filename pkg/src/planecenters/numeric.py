"""Scalars: exact rationals, exact cyclotomic reals, and high-precision reals.

Exact scalars are ``int``/``Fraction`` and :class:`CyclotomicReal` (real
elements of a cyclotomic field, enough to place regular polygons exactly).
Constructed quantities that leave these fields (square roots, arc midpoints
of irrational angles) are ``mpf`` values of a private mpmath context, so the
library never touches mpmath's global precision.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

import mpmath

ctx = mpmath.MPContext()
ctx.prec = 256

_settings = {"eps": ctx.mpf(10) ** -9}

MPF = type(ctx.mpf(0))


def eps():
    """Tolerance (in turns, or relative for lengths) for constructed reals."""
    return _settings["eps"]


def set_tolerance(value) -> None:
    _settings["eps"] = ctx.mpf(str(value)) if not isinstance(value, MPF) else value


def set_precision(bits: int) -> None:
    if bits < 96:
        raise ValueError("precision below 96 bits is not supported")
    ctx.prec = bits


@contextmanager
def tolerance(value):
    old = _settings["eps"]
    set_tolerance(value)
    try:
        yield
    finally:
        _settings["eps"] = old


def is_exact(v) -> bool:
    return isinstance(v, (int, Fraction, CyclotomicReal))


def to_real(v):
    """Convert any supported scalar to an ``mpf`` of the private context."""
    if isinstance(v, MPF):
        return v
    if isinstance(v, int):
        return ctx.mpf(v)
    if isinstance(v, Fraction):
        return ctx.mpf(v.numerator) / v.denominator
    if isinstance(v, CyclotomicReal):
        return v.to_real()
    if isinstance(v, float):
        return ctx.mpf(v)
    raise TypeError(f"unsupported scalar {v!r}")


def as_fraction(v) -> Fraction:
    """Parse an int, Fraction, decimal string or ``"p/q"`` string exactly."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    from decimal import Decimal

    if isinstance(v, Decimal):
        return Fraction(v)
    if isinstance(v, float):
        # floats are taken by their shortest repr, i.e. their literal digits
        return Fraction(repr(v))
    raise TypeError(f"cannot read {v!r} as an exact rational")


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if not isinstance(q, (int, Fraction)):
        return None
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt(v):
    """Square root, exact when the argument is a rational square."""
    r = rational_sqrt(v)
    if r is not None:
        return r
    return ctx.sqrt(to_real(v))


def add(a, b):
    if is_exact(a) and is_exact(b):
        return a + b
    return to_real(a) + to_real(b)


def sub(a, b):
    if is_exact(a) and is_exact(b):
        return a - b
    return to_real(a) - to_real(b)


def mul(a, b):
    if is_exact(a) and is_exact(b):
        return a * b
    return to_real(a) * to_real(b)


def div(a, b):
    if is_exact(a) and is_exact(b):
        if isinstance(a, int) and isinstance(b, int):
            return Fraction(a, b)
        return a / b
    return to_real(a) / to_real(b)


def sign(v, scale=1) -> int:
    """Sign of ``v``; reals within ``eps * scale`` of zero count as zero."""
    if is_exact(v):
        return (v > 0) - (v < 0)
    if abs(v) <= eps() * to_real(scale):
        return 0
    return 1 if v > 0 else -1


def compare(a, b, scale=1) -> int:
    """Three-way comparison; exact when both sides are exact."""
    if is_exact(a) and is_exact(b):
        return (a > b) - (a < b)
    return sign(to_real(a) - to_real(b), scale)


# --- cyclotomic reals ------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_divexact(num, list(_cyclotomic_poly(d)))
    return tuple(num)


def _int_poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] // b[-1]
        q[i - db] = c
        if c:
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def _reduce_int(c: list, n: int) -> list:
    phi = _cyclotomic_poly(n)
    deg = len(phi) - 1
    for i in range(len(c) - 1, deg - 1, -1):
        t = c[i]
        if t:
            for j in range(deg):
                c[i - deg + j] -= t * phi[j]
            c[i] = 0
    return c[:deg] + [0] * (deg - len(c))


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _poly_trim(a)
    return q, a


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


@lru_cache(maxsize=None)
def _cos_table(n: int, prec: int):
    with ctx.workprec(prec):
        return tuple(ctx.cospi(ctx.mpf(2 * k) / n) for k in range(len(_cyclotomic_poly(n)) - 1))


@lru_cache(maxsize=None)
def _cos_table_float(n: int):
    return tuple(math.cos(2 * math.pi * k / n) for k in range(len(_cyclotomic_poly(n)) - 1))


class CyclotomicReal:
    """A real number in the cyclotomic field Q(zeta_n), stored exactly.

    The value is ``sum(nums[k] * zeta^k) / den`` in the power basis 1, zeta,
    ..., zeta^(phi(n)-1) with zeta = exp(2*pi*i/n); ``den`` is positive and
    shares no factor with all of ``nums``. Results that happen to be
    rational come back as ``Fraction`` so the rational path stays the common
    case. Elements of different fields are combined in the field of the lcm
    order.
    """

    __slots__ = ("n", "nums", "den")

    def __init__(self, n: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs))
        self.n = n
        self.nums, self.den = _normalize([int(c * den) for c in coeffs], den)

    @classmethod
    def _raw(cls, n: int, nums: tuple, den: int) -> "CyclotomicReal":
        obj = object.__new__(cls)
        obj.n, obj.nums, obj.den = n, nums, den
        return obj

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(x, self.den) for x in self.nums)

    @staticmethod
    def make(n: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        return _from_ints(n, [int(c * den) for c in coeffs], den)

    @staticmethod
    def _zeta_power(n: int, e: int) -> list:
        c = [Fraction(0)] * (e % n + 1)
        c[e % n] = Fraction(1)
        return c

    @classmethod
    def cos_turn(cls, q) -> "CyclotomicReal | Fraction":
        """cos(2*pi*q) for rational q."""
        q = Fraction(q) % 1
        n = math.lcm(q.denominator, 4)
        a = int(q * n)
        p = _poly_sub(cls._zeta_power(n, a), [-x for x in cls._zeta_power(n, -a)])
        return cls.make(n, [x / 2 for x in p])

    @classmethod
    def sin_turn(cls, q) -> "CyclotomicReal | Fraction":
        """sin(2*pi*q) for rational q."""
        q = Fraction(q) % 1
        n = math.lcm(q.denominator, 4)
        a = int(q * n)
        diff = _poly_sub(cls._zeta_power(n, a), cls._zeta_power(n, -a))
        # 1/(2i) = -i/2 = zeta^(3n/4) / 2
        p = _poly_mul(diff, cls._zeta_power(n, 3 * n // 4))
        return cls.make(n, [x / 2 for x in p])

    # -- coercion --

    def _lift(self, n: int) -> list:
        """Integer numerators in Q(zeta_n) (unreduced), over ``self.den``."""
        if n == self.n:
            return list(self.nums)
        step = n // self.n
        out = [0] * ((len(self.nums) - 1) * step + 1)
        for k, c in enumerate(self.nums):
            out[k * step] = c
        return out

    def _pair(self, other):
        """(n, a, da, b, db): both operands as integer numerators."""
        if isinstance(other, CyclotomicReal):
            n = math.lcm(self.n, other.n)
            return n, self._lift(n), self.den, other._lift(n), other.den
        if isinstance(other, (int, Fraction)):
            return self.n, list(self.nums), self.den, [other.numerator], other.denominator
        return None

    # -- arithmetic --

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return _real_fallback(self, other, "add")
        n, a, da, b, db = p
        den = da * db // math.gcd(da, db)
        fa, fb = den // da, den // db
        m = max(len(a), len(b))
        out = [(a[i] * fa if i < len(a) else 0) + (b[i] * fb if i < len(b) else 0) for i in range(m)]
        return _from_ints(n, out, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicReal._raw(self.n, tuple(-c for c in self.nums), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicReal)):
            return self + (-other)
        return _real_fallback(self, other, "sub")

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return _real_fallback(self, other, "mul")
        n, a, da, b, db = p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _from_ints(n, out, da * db)

    __rmul__ = __mul__

    def inverse(self):
        phi = [Fraction(x) for x in _cyclotomic_poly(self.n)]
        # extended Euclid: find s with s*a = 1 mod phi
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or (r1 and r1[0] == 0):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if not r1:
                raise ZeroDivisionError("not invertible")
        c = r1[0]
        return CyclotomicReal.make(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, CyclotomicReal):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return _real_fallback(self, other, "div")

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = Fraction(1)
        base = self
        while e:
            if e & 1:
                out = base * out
            base = base * base
            e >>= 1
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison --

    def sign(self) -> int:
        # den > 0, so the sign is that of the numerator sum
        bound = sum(abs(c) for c in self.nums)
        try:
            table = _cos_table_float(self.n)
            v = math.fsum(float(c) * t for c, t in zip(self.nums, table))
            if abs(v) > 1e-12 * float(bound) + 1e-300:
                return 1 if v > 0 else -1
        except OverflowError:
            pass
        prec = 128
        while prec <= 1 << 16:
            table = _cos_table(self.n, prec)
            with ctx.workprec(prec + 16):
                v = ctx.fsum(ctx.mpf(c) * t for c, t in zip(self.nums, table))
                err = ctx.mpf(bound) * ctx.ldexp(1, 8 - prec)
                if abs(v) > err:
                    return 1 if v > 0 else -1
            prec *= 2
        raise ArithmeticError("sign undetermined for a nonzero field element")

    def _cmp(self, other):
        if not isinstance(other, (int, Fraction, CyclotomicReal)):
            return None
        d = self - other
        if isinstance(d, CyclotomicReal):
            return d.sign()
        return (d > 0) - (d < 0)

    def __eq__(self, other):
        if not isinstance(other, (int, Fraction, CyclotomicReal)):
            return NotImplemented
        # the reduced power-basis form is canonical, so a zero difference
        # collapses to the rational 0
        d = self - other
        return not isinstance(d, CyclotomicReal) and d == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        # elements are never rational (those are returned as Fraction), so
        # they cannot collide with rational hashes; equal elements written in
        # different fields should be lifted to a common field before hashing
        return hash(("cyclo", self.n, self.nums, self.den))

    def __bool__(self):
        return True

    # -- conversion --

    def to_real(self):
        table = _cos_table(self.n, ctx.prec + 32)
        with ctx.workprec(ctx.prec + 32):
            v = ctx.fsum(ctx.mpf(c) * t for c, t in zip(self.nums, table)) / self.den
        return +v

    def __float__(self):
        return float(self.to_real())

    def __repr__(self):
        return f"CyclotomicReal({self.n}, ~{mpmath.nstr(self.to_real(), 20)})"


def _normalize(nums: list, den: int) -> tuple[tuple, int]:
    g = math.gcd(den, *nums)
    if g > 1:
        nums, den = [x // g for x in nums], den // g
    return tuple(nums), den


def _from_ints(n: int, nums: list, den: int):
    """Reduce integer numerators modulo the n-th cyclotomic polynomial;
    rational results come back as ``Fraction``."""
    deg = len(_cyclotomic_poly(n)) - 1
    red = _reduce_int(nums, n) if len(nums) > deg else nums + [0] * (deg - len(nums))
    if not any(red[1:]):
        return Fraction(red[0], den)
    t, d = _normalize(red, den)
    return CyclotomicReal._raw(n, t, d)


def _real_fallback(a, b, op):
    x, y = to_real(a), to_real(b)
    return {"add": x + y, "sub": x - y, "mul": x * y, "div": x / y}[op]


def cos_turn(q):
    """Exact cosine of a rational number of turns."""
    return _cos_turn(Fraction(q) % 1)


@lru_cache(maxsize=4096)
def _cos_turn(q: Fraction):
    if q * 4 % 1 == 0:
        return (Fraction(1), Fraction(0), Fraction(-1), Fraction(0))[int(q * 4)]
    return CyclotomicReal.cos_turn(q)


def sin_turn(q):
    """Exact sine of a rational number of turns."""
    return cos_turn(Fraction(1, 4) - Fraction(q))
