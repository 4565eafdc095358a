from __future__ import annotations

import math

from summa.exceptions import DimensionError

# Lanczos approximation, g = 7, 9 coefficients
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def lanczos_gamma(z: float) -> float:
    """Gamma function of a real argument.

    Relative error is below 1e-13 on [1, 3]; arguments below 1/2 go through
    the reflection formula.
    """
    z = float(z)
    if z <= 0 and z == math.floor(z):
        raise DimensionError(f"gamma has a pole at {z}")
    if z < 0.5:
        return math.pi / (math.sin(math.pi * z) * lanczos_gamma(1 - z))

    z -= 1
    x = LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        x += coefficient / (z + i)
    t = z + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * math.exp(-t) * x


def harmonic_number(n: int) -> float:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0"""
    return math.fsum(1.0 / j for j in range(1, n + 1))
