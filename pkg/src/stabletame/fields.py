"""Exact coefficient fields: the rationals and prime residue fields.

A Field owns the raw representation of its elements (gmpy2.mpq for the
rationals, plain ints in [0, p) for a prime field) and exposes closures
(`add`, `mul`, ...) over raw values so that polynomial inner loops pay no
dispatch cost.  The Scalar wrapper pairs a raw value with its field and is
the type that appears at API boundaries; raw values never cross fields.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

from .errors import FieldMismatch

_PRIME_LIMIT = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin, valid far past 2^31 with these bases
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """The rationals (p is None) or the residue field mod a prime p < 2^31."""

    __slots__ = ("p", "zero", "one", "add", "sub", "mul", "neg", "inv", "div")

    _rationals = None
    _primes: dict[int, "Field"] = {}

    def __init__(self, p: int | None = None):
        if p is not None:
            if not (2 <= p < _PRIME_LIMIT):
                raise ValueError(f"prime field modulus out of range: {p}")
            if not _is_prime(p):
                raise ValueError(f"modulus is not prime: {p}")
        self.p = p
        if p is None:
            self.zero = _mpq(0)
            self.one = _mpq(1)
            self.add = lambda a, b: a + b
            self.sub = lambda a, b: a - b
            self.mul = lambda a, b: a * b
            self.neg = lambda a: -a
            self.inv = _rat_inv
            self.div = lambda a, b: a / b
        else:
            self.zero = 0
            self.one = 1 % p
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: (a * b) % p
            self.neg = lambda a: (-a) % p
            self.inv = lambda a: pow(a, -1, p)
            self.div = lambda a, b: (a * pow(b, -1, p)) % p

    @classmethod
    def rationals(cls) -> "Field":
        if cls._rationals is None:
            cls._rationals = cls()
        return cls._rationals

    @classmethod
    def prime(cls, p: int) -> "Field":
        field = cls._primes.get(p)
        if field is None:
            field = cls._primes[p] = cls(p)
        return field

    def from_int(self, n: int):
        return _mpq(n) if self.p is None else n % self.p

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("scalar denominator is zero")
        if self.p is None:
            return _mpq(num, den)
        return num * pow(den, -1, self.p) % self.p

    def parse(self, text: str):
        """Parse a scalar literal: 'n' or 'n/d' (no whitespace)."""
        num, _, den = text.partition("/")
        return self.from_fraction(int(num), int(den) if den else 1)

    def format(self, raw) -> str:
        return str(raw)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F{self.p})"


def _rat_inv(a):
    if not a:
        raise ZeroDivisionError("inverse of zero")
    return 1 / a


def check_same_field(f: Field, g: Field) -> None:
    if f.p != g.p:
        raise FieldMismatch(f"{f!r} vs {g!r}")


class Scalar:
    """A field element tagged with its field; the boundary-level value type."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    @classmethod
    def from_int(cls, field: Field, n: int) -> "Scalar":
        return cls(field, field.from_int(n))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __add__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        check_same_field(self.field, other.field)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.value})"
