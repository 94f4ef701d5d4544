"""Exact rational arithmetic substrate.

Every optimization value, weight, and invariant in this package is an exact
rational; floating point is never used. GMP-backed rationals from gmpy2 are
used when available (roughly an order of magnitude faster on the simplex
workload), with fractions.Fraction as a drop-in fallback. Both keep values
in lowest terms with a positive denominator and hash/compare compatibly
with each other and with ints.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

ZERO = Rational(0)
ONE = Rational(1)
HALF = Rational(1, 2)


def rat(numerator, denominator=1):
    """Exact rational in lowest terms."""
    return Rational(numerator, denominator)


def format_rational(x) -> str:
    """Render as ``num/den``, always including the denominator (``2/1``)."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str):
    """Parse ``num/den`` or a bare integer string."""
    body = text.strip()
    if "/" in body:
        num, den = body.split("/", 1)
        return Rational(int(num), int(den))
    return Rational(int(body))
