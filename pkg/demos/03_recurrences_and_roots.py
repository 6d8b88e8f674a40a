# From integer recurrences to closed forms.
# Each family size obeys a constant-coefficient linear recurrence; its
# characteristic roots give an explicit formula, and the roots inside the
# unit circle die off fast enough that rounding the rest is exact.

import numpy as np

from hexavoid.closed_form import DegenerateSpectrum, eval_exact_form, eval_rounded, format_polynomial, solve_model
from hexavoid.perm import PatternFamily
from hexavoid.recurrences import RECURRENCES, alpha_sequence, catalan, five_sequences

HEX8, HEX6, HEX4 = PatternFamily.HEX8, PatternFamily.HEX6, PatternFamily.HEX4

table = five_sequences(12)
for name, row in table.rows().items():
    print(f"{name:8s}", row)

model = solve_model(HEX8)
print(format_polynomial(model.char_coeffs))
for r, c in zip(model.roots, model.coeffs):
    print(f"  |R| = {abs(r):.5f}   R = {r:.5f}   c = {c:.5f}")

# numpy agrees on the roots (double precision is plenty for that part)
print(np.sort_complex(np.roots(model.char_coeffs)))

a = alpha_sequence(40)
print("alpha_40        =", a[-1])
print("full sum at 40  =", eval_exact_form(model, 40))
print("rounded at 40   =", eval_rounded(model, 40))
print("growth          =", a[-1] / a[-2], "vs Catalan", catalan(40) / catalan(39))

# HEX6: two small roots are dropped, and at n = 1, 2 they still matter
m6 = solve_model(HEX6)
exact6 = alpha_sequence(6, RECURRENCES[HEX6])
for n in range(1, 7):
    dominant = sum(
        (c * r ** (n - 1)).real * (1 if r.imag == 0 else 2)
        for r, c in zip(m6.roots, m6.coeffs) if abs(r) >= 1
    )
    print(n, exact6[n - 1], round(dominant, 4))

# HEX4 has a triple root at 1, so there's no distinct-root formula
try:
    solve_model(HEX4)
except DegenerateSpectrum as exc:
    print(exc)
