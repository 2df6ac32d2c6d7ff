"""Exact rational scalars.

Every public number in this package is a rational in lowest terms with a
positive denominator.  gmpy2.mpq is used when available (it is much faster
on large eliminations); fractions.Fraction is the drop-in fallback.
"""

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def qq(x):
    """Coerce ints, "p/q" strings, or rationals to the scalar type."""
    if isinstance(x, str):
        if "/" in x:
            num, den = x.split("/")
            return QQ(int(num), int(den))
        return QQ(int(x))
    return QQ(x)


def qq_str(x):
    """Render a scalar as "p" or "p/q" (used by the JSON formats)."""
    x = QQ(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%s/%s" % (x.numerator, x.denominator)
