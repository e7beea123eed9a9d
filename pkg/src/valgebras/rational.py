"""Canonical rational strings: optional sign, integer, optional ``/den``."""
from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token) -> Fraction:
    if isinstance(token, (int, Fraction)):
        return Fraction(token)
    text = str(token).strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"bad rational token: {token!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {token!r}") from None


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
