"""Exact rational scalars.

Every computation in this package happens over the rationals.  gmpy2's
``mpq`` is used when it is installed (it is several times faster than
``fractions.Fraction`` on the larger closure computations); Fraction is
a drop-in fallback.  Both keep values in lowest terms with a positive
denominator, hash identically, and print as ``p/q`` (or ``p`` when the
denominator is one), which is also the serialization format used by the
command-line reports.
"""

from __future__ import annotations

from fractions import Fraction

try:  # pragma: no cover - which branch runs depends on the environment
    from gmpy2 import mpq as QQ

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    QQ = Fraction
    HAVE_GMPY2 = False

ZERO = QQ(0)
ONE = QQ(1)


def qq(x) -> "QQ":
    """Coerce an int, string ('-3/2'), Fraction or QQ value to a scalar."""
    if isinstance(x, float):
        raise TypeError("floating point input is not allowed in exact arithmetic")
    return QQ(x)


def qq_str(x) -> str:
    """Render a scalar as 'p/q' (or 'p' for integers)."""
    return str(x)


def parse_qq(text: str) -> "QQ":
    """Parse 'p/q' or 'p' into a scalar; raises ValueError on junk."""
    return QQ(Fraction(text.strip()))


def is_integral(x) -> bool:
    return qq(x).denominator == 1


def as_int(x) -> int:
    v = qq(x)
    if v.denominator != 1:
        raise ValueError(f"{v} is not an integer")
    return int(v.numerator)


def int_pair(x) -> tuple[int, int]:
    """(numerator, denominator) as plain ints."""
    v = qq(x)
    return int(v.numerator), int(v.denominator)
