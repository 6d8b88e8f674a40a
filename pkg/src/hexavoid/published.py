"""Reference values printed alongside the enumeration results.

Only tables copied verbatim live here; everything else is computed.
"""
from .perm import PatternFamily

# h-value table for HEX8, n = 1..12
HEX8_TABLE = {
    "alpha": (1, 2, 5, 14, 42, 132, 429, 1426, 4806, 16329, 55740, 190787),
    "beta": (0, 0, 1, 4, 14, 48, 165, 568, 1954, 6717, 23082, 79307),
    "gamma": (0, 0, 0, 1, 5, 20, 75, 271, 957, 3337, 11559, 39896),
    "delta": (0, 0, 0, 0, 1, 6, 25, 93, 333, 1172, 4083, 14137),
    "epsilon": (0, 0, 0, 0, 0, 1, 5, 19, 68, 240, 839, 2911),
}

HEX6_FIRST_VALUES = (1, 2, 5, 14, 42, 128, 389, 1179, 3572, 10825, 32810, 99446)

HEX8_GROWTH = 3.43526

# Five-digit roots and coefficients; real roots ascending, then the complex
# root with negative imaginary part.  The coefficients are normalized so
# that alpha_n = sum c_i R_i^(n-1).
SPECTRAL = {
    PatternFamily.HEX8: {
        "roots": (-0.49890, 0.21989, 1.95627, 3.43526, 0.44375 - 1.07682j),
        "coeffs": (0.00164, 0.13776, 0.57156, 0.24149, 0.02378 + 0.00080j),
    },
    PatternFamily.HEX6: {
        "roots": (-0.49569, 0.51154, 3.03090, 0.47662 - 1.03635j),
        "coeffs": (0.63205, 0.53110, 0.50154, -0.19482 + 0.11092j),
    },
}
