"""Exact integer primitives.

Python ints are arbitrary precision, so every function here works at any
magnitude. The one non-standard piece is :func:`div_least_positive`, the
division whose remainder lies in ``[1, d]`` instead of ``[0, d)``.
"""

from __future__ import annotations

import math
from typing import NamedTuple


class DivResult(NamedTuple):
    quotient: int
    remainder: int


def _check_int(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")


def div_least_positive(c: int, d: int) -> DivResult:
    """Divide ``c`` by ``d`` keeping the remainder in ``1 <= r <= d``.

    When ``d`` divides ``c`` this returns ``(c // d - 1, d)``; otherwise it
    agrees with floor division.
    """
    _check_int("c", c)
    _check_int("d", d)
    if c < 1:
        raise ValueError(f"dividend must be >= 1, got {c}")
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    q = (c - 1) // d
    return DivResult(q, c - q * d)


def div_floor(c: int, d: int) -> DivResult:
    _check_int("c", c)
    _check_int("d", d)
    if c < 0:
        raise ValueError(f"dividend must be >= 0, got {c}")
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    q, r = divmod(c, d)
    return DivResult(q, r)


def gcd(a: int, b: int) -> int:
    _check_int("a", a)
    _check_int("b", b)
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be non-negative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)
