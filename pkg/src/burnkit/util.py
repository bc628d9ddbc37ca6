"""Small numeric helpers shared across modules."""

from __future__ import annotations

import math


def ceil_sqrt(x: int) -> int:
    """Smallest integer s with s*s >= x, exactly (no floats)."""
    if x <= 0:
        return 0
    s = math.isqrt(x)
    return s if s * s == x else s + 1


def ceil_sqrt_ratio(num: int, den: int) -> int:
    """Smallest integer s with s*s >= num/den, exactly."""
    if num <= 0:
        return 0
    s = math.isqrt(num // den)
    while s * s * den < num:
        s += 1
    return s
