"""Exact rational scalars and vectors.

Scalars are ``gmpy2.mpq`` values (arbitrary-precision, canonical form with
positive denominator and coprime terms). Vectors are plain tuples of mpq.
Nothing in this module rounds.

Serialized form: an integer, or the string ``"p/q"`` with q > 0.
"""

import re
from fractions import Fraction
from math import gcd

from gmpy2 import mpq, mpz

from .errors import MalformedRational

Rat = mpq
ZERO = mpq(0)
ONE = mpq(1)

_RAT_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def rat(value) -> mpq:
    """Parse a rational from an int, "p/q" string, mpq, or Fraction.

    Floats and booleans are rejected: documents must stay exact.
    """
    if isinstance(value, bool):
        raise MalformedRational(value)
    if isinstance(value, (int, mpz)):
        return mpq(value)
    if isinstance(value, (mpq, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RAT_RE.match(text):
            raise MalformedRational(value)
        try:
            return mpq(text)
        except (ValueError, ZeroDivisionError):
            raise MalformedRational(value) from None
    raise MalformedRational(value)


def rat_str(q) -> "int | str":
    """Canonical document form: bare int when integral, else "p/q"."""
    q = mpq(q)
    if q.denominator == 1:
        return int(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values) -> tuple:
    return tuple(rat(v) for v in values)


def vec_str(v) -> list:
    return [rat_str(x) for x in v]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def smul(s, v):
    return tuple(s * a for a in v)


def norm1(v):
    return sum(abs(a) for a in v)


def norm2sq(v):
    return sum(a * a for a in v)


def primitive(v) -> tuple:
    """Scale a nonzero rational vector to coprime integers, keeping direction.

    Returns a tuple of Python ints with content 1.
    """
    denoms = [int(mpq(x).denominator) for x in v]
    scale = 1
    for d in denoms:
        scale = scale // gcd(scale, d) * d
    ints = [int(mpq(x) * scale) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(a // g for a in ints)
