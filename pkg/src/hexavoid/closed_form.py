"""Spectral closed forms ``alpha_n = sum c_i R_i^(n-1)`` for HEX8 and HEX6.

The exponent is n-1, which is the normalization the published coefficient
tables use: with exponent n they would be off by a factor R_i each.

Roots of the characteristic polynomial come from Aberth iteration in
double precision and are then polished by Newton steps in mpmath at a
working precision (50 digits by default).  Double precision alone cannot
round alpha_n exactly once alpha_n passes 2**53 (HEX8 near n = 30), so the
evaluations use the polished values; the double-precision view is kept
for reports and comparisons with published tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .perm import PatternFamily
from .recurrences import RECURRENCES, alpha_sequence

DEFAULT_DPS = 50

class DegenerateSpectrum(ValueError):
    """The characteristic polynomial has a repeated root."""

    def __init__(self, family: PatternFamily, message: str):
        super().__init__(message)
        self.family = family


class PrecisionExhausted(ArithmeticError):
    """A rounded evaluation landed too far from every integer to trust."""


# -- polynomial helpers ------------------------------------------------------

def _strip(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
    return p


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        q = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= q * b[i]
        a = a[1:]
    return _strip(a or [Fraction(0)])


def _poly_gcd_degree(p: tuple[int, ...]) -> int:
    """Degree of gcd(p, p'); zero iff p is squarefree."""
    d = len(p) - 1
    a = [Fraction(c) for c in p]
    b = _strip([Fraction(c * (d - i)) for i, c in enumerate(p[:-1])])
    while any(b):
        a, b = b, _poly_rem(a, b)
    return len(a) - 1


def _superscript(k: int) -> str:
    return str(k).translate(str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹"))


def _repeated_factors(p: tuple[int, ...]) -> str:
    """Describe integer roots of multiplicity > 1, e.g. ``(x−1)³``."""
    parts = []
    const = next((c for c in reversed(p) if c != 0), 1)
    candidates = {r for d in range(1, abs(const) + 1) if const % d == 0 for r in (d, -d)}
    if p[-1] == 0:
        candidates.add(0)
    for r in sorted(candidates):
        q, mult = list(p), 0
        while len(q) > 1:
            acc, out = 0, []
            for c in q:
                acc = acc * r + c
                out.append(acc)
            if out[-1] != 0:
                break
            q, mult = out[:-1], mult + 1
        if mult > 1:
            sign = "−" if r > 0 else "+"
            parts.append(f"(x{sign}{abs(r)}){_superscript(mult)}" if r else f"x{_superscript(mult)}")
    return "".join(parts)


def format_polynomial(p: tuple[int, ...]) -> str:
    d = len(p) - 1
    terms = []
    for i, c in enumerate(p):
        e = d - i
        if c == 0:
            continue
        mag = abs(c)
        body = ("" if mag == 1 and e else str(mag)) + ("x" if e else "") + (_superscript(e) if e > 1 else "")
        sign = "−" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("−" if first_sign == "−" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def aberth_roots(p: tuple[int, ...] | np.ndarray, tol: float = 1e-15, max_iter: int = 500) -> np.ndarray:
    """All complex roots of ``p`` (highest degree first) by Aberth–Ehrlich iteration."""
    p = np.asarray(p, dtype=complex)
    p = p / p[0]
    d = len(p) - 1
    dp = p[:-1] * np.arange(d, 0, -1)
    radius = 1 + np.max(np.abs(p[1:]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    for _ in range(max_iter):
        ratio = np.polyval(p, z) / np.polyval(dp, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = (1.0 / diff).sum(axis=1) - 1.0  # drop the diagonal's 1/1
        step = ratio / (1 - ratio * repulsion)
        z = z - step
        if np.all(np.abs(step) <= tol * np.maximum(1.0, np.abs(z))):
            break
    return z


def _newton_polish(p: tuple[int, ...], z: complex, dps: int) -> mpmath.mpc:
    with mpmath.workdps(dps + 10):
        r = mpmath.mpc(z)
        coeffs = [mpmath.mpf(c) for c in p]
        dcoeffs = [c * (len(p) - 1 - i) for i, c in enumerate(coeffs[:-1])]
        for _ in range(100):
            step = mpmath.polyval(coeffs, r) / mpmath.polyval(dcoeffs, r)
            r -= step
            if abs(step) <= abs(r) * mpmath.mpf(10) ** (-dps - 5):
                break
        return r


# -- model ----------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralModel:
    """Roots and fitted coefficients of one family's closed form.

    ``roots``/``coeffs`` list the real roots in ascending order, then one
    representative (negative imaginary part) per conjugate pair.
    """

    family: PatternFamily
    char_coeffs: tuple[int, ...]
    roots: tuple[complex, ...]
    coeffs: tuple[complex, ...]
    residual_bound: float
    dps: int = DEFAULT_DPS
    _roots_mp: tuple = field(default=(), repr=False, compare=False)
    _coeffs_mp: tuple = field(default=(), repr=False, compare=False)

    def is_real(self, i: int) -> bool:
        return self.roots[i].imag == 0

    @property
    def all_roots(self) -> tuple[complex, ...]:
        """Every root, conjugates included."""
        out = []
        for r in self.roots:
            out.append(r)
            if r.imag != 0:
                out.append(r.conjugate())
        return tuple(out)

    def _terms(self, n: int, dominant_only: bool):
        for r, c in zip(self._roots_mp, self._coeffs_mp):
            if dominant_only and abs(r) < 1:
                continue
            term = c * r ** (n - 1)
            yield term.real if r.imag == 0 else 2 * term.real


def solve_model(family: PatternFamily, dps: int = DEFAULT_DPS) -> SpectralModel:
    """Roots and coefficients of ``family``'s closed form."""
    spec = RECURRENCES[family]
    p = spec.characteristic_polynomial()
    if _poly_gcd_degree(p) > 0:
        factors = _repeated_factors(p)
        detail = f" = {factors}" if factors else ""
        raise DegenerateSpectrum(
            family,
            f"{family.name}: characteristic polynomial {format_polynomial(p)}{detail} "
            "has a repeated root; no distinct-root closed form",
        )
    approx = aberth_roots(p)
    polished = [_newton_polish(p, complex(z), dps) for z in approx]

    with mpmath.workdps(dps):
        real, cplx = [], []
        for r in polished:
            if abs(r.imag) <= mpmath.mpf(10) ** (-dps // 2) * max(1, abs(r)):
                real.append(mpmath.mpc(r.real, 0))
            elif r.imag < 0:
                cplx.append(r)
        real.sort(key=lambda r: r.real)
        cplx.sort(key=lambda r: r.real)
        reps = real + cplx
        full = []
        for r in reps:
            full.append(r)
            if r.imag != 0:
                full.append(mpmath.conj(r))
        if len(full) != spec.order:
            raise ArithmeticError(f"root extraction for {family.name} lost conjugate pairing")

        base = alpha_sequence(spec.order, spec)
        vander = mpmath.matrix([[r ** (n - 1) for r in full] for n in range(1, spec.order + 1)])
        sol = mpmath.lu_solve(vander, mpmath.matrix(base))
        coeff_of = {id(r): sol[i] for i, r in enumerate(full)}
        # real roots carry real coefficients; drop the solver's rounding noise
        coeffs_mp = tuple(
            mpmath.mpc(coeff_of[id(r)].real, 0) if r.imag == 0 else coeff_of[id(r)] for r in reps
        )

        residual = max(abs(mpmath.polyval([mpmath.mpf(c) for c in p], mpmath.mpc(complex(r)))) for r in full)

    def to_complex(z) -> complex:
        return complex(float(z.real), float(z.imag))

    return SpectralModel(
        family=family,
        char_coeffs=p,
        roots=tuple(to_complex(r) for r in reps),
        coeffs=tuple(to_complex(c) for c in coeffs_mp),
        residual_bound=float(residual),
        dps=dps,
        _roots_mp=tuple(reps),
        _coeffs_mp=coeffs_mp,
    )


def eval_exact_form(model: SpectralModel, n: int) -> float:
    """The full spectral sum at ``n`` (its real part)."""
    with mpmath.workdps(model.dps):
        return float(mpmath.fsum(model._terms(n, dominant_only=False)))


def eval_rounded(model: SpectralModel, n: int) -> int:
    """Nearest integer to the sum over roots of modulus at least 1."""
    with mpmath.workdps(model.dps):
        s = mpmath.fsum(model._terms(n, dominant_only=True))
        nearest = int(mpmath.nint(s))
        gap = abs(s - nearest)
        # the fraction bits must survive, or the gap test below is vacuous
        spare_bits = mpmath.mp.prec - int(mpmath.mag(s))
    if spare_bits < 8:
        raise PrecisionExhausted(
            f"{model.family.name} n={n}: {model.dps} digits cannot resolve a value of {len(str(nearest))} digits"
        )
    if gap > 0.25:
        raise PrecisionExhausted(
            f"{model.family.name} n={n}: partial sum is {float(gap):.3g} from the nearest integer "
            f"at {model.dps} digits"
        )
    return nearest
