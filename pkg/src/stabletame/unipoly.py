"""Dense univariate polynomial helpers over an exact field.

Polynomials are lists of raw coefficients, lowest degree first, with no
trailing zeros ([] is the zero polynomial).  These are internal work
routines for the z-divisor probe and the operator-algebra gcd; they are
not part of the public API.
"""

from __future__ import annotations

from .fields import Field


def trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def degree(c: list) -> int:
    return len(c) - 1  # -1 for the zero polynomial


def add(a: list, b: list, field: Field) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    fadd = field.add
    for i, cb in enumerate(b):
        out[i] = fadd(out[i], cb)
    return trim(out)


def neg(a: list, field: Field) -> list:
    fneg = field.neg
    return [fneg(c) for c in a]

def sub(a: list, b: list, field: Field) -> list:
    return add(a, neg(b, field), field)


def mul(a: list, b: list, field: Field) -> list:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    fadd, fmul = field.add, field.mul
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = fadd(out[i + j], fmul(ca, cb))
    return trim(out)


def scale(a: list, s, field: Field) -> list:
    if not s:
        return []
    fmul = field.mul
    return [fmul(c, s) for c in a]


def divmod_exactfield(a: list, b: list, field: Field) -> tuple[list, list]:
    """Quotient and remainder; coefficients divide because F is a field."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    db, lead = len(b) - 1, b[-1]
    if len(rem) - 1 < db:
        return [], trim(rem)
    quo = [field.zero] * (len(rem) - db)
    fdiv, fsub, fmul = field.div, field.sub, field.mul
    for shift in range(len(rem) - db - 1, -1, -1):
        coef = rem[shift + db]
        if not coef:
            continue
        q = fdiv(coef, lead)
        quo[shift] = q
        for i, cb in enumerate(b):
            if cb:
                rem[shift + i] = fsub(rem[shift + i], fmul(q, cb))
    return trim(quo), trim(rem)


def monic(a: list, field: Field) -> list:
    if not a or a[-1] == field.one:
        return list(a)
    inv = field.inv(a[-1])
    fmul = field.mul
    return [fmul(c, inv) for c in a]


def gcd(a: list, b: list, field: Field) -> list:
    """Monic gcd via Euclid; gcd(0, 0) = 0."""
    a, b = list(a), list(b)
    while b:
        _, r = divmod_exactfield(a, b, field)
        a, b = b, r
    return monic(a, field)


def gcd_many(polys, field: Field) -> list:
    g: list = []
    for p in polys:
        g = gcd(g, p, field)
        if degree(g) == 0:
            break
    return g
