"""Exact rational scalars.

``Rat`` is ``gmpy2.mpq`` when gmpy2 is importable and ``fractions.Fraction``
otherwise.  Both keep numerator and denominator coprime with a positive
denominator, so no wrapper class is needed.
"""

from __future__ import annotations

from fractions import Fraction

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as Rat

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    Rat = Fraction
    BACKEND = "fractions"

ZERO = Rat(0)
ONE = Rat(1)
HALF = Rat(1, 2)


def rat(value) -> "Rat":
    """Coerce ``value`` to ``Rat``.

    Accepts ints, Fractions, Rats and strings of the form ``"p"`` or ``"p/q"``.
    Floats are rejected: the interface is exact end to end.

    >>> rat("3/6")
    mpq(1,2)
    """
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use 'p/q'")
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return Rat(int(num), int(den))
        return Rat(int(text))
    if isinstance(value, Fraction):
        return Rat(value.numerator, value.denominator)
    return Rat(value)


def rat_str(value) -> str:
    """Render a rational as ``"p"`` or ``"p/q"``."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_rat(value) -> bool:
    return isinstance(value, (int, Rat, Fraction)) and not isinstance(value, bool)
