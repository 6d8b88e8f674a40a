import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hexavoid.closed_form import (
    DegenerateSpectrum, PrecisionExhausted, aberth_roots, eval_exact_form, eval_rounded, format_polynomial, solve_model,
)
from hexavoid.perm import PatternFamily
from hexavoid.recurrences import RECURRENCES, alpha_sequence

HEX8, HEX6, HEX4 = PatternFamily.HEX8, PatternFamily.HEX6, PatternFamily.HEX4


def _match(found, want):
    found, want = sorted(found, key=lambda z: (z.real, z.imag)), sorted(want, key=lambda z: (z.real, z.imag))
    return max(abs(a - b) for a, b in zip(found, want))


@pytest.mark.parametrize("family", [HEX8, HEX6])
def test_aberth_agrees_with_numpy(family):
    p = RECURRENCES[family].characteristic_polynomial()
    assert _match(aberth_roots(p), np.roots(p)) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=2, max_size=6, unique=True))
def test_aberth_recovers_planted_roots(roots):
    roots = np.array(roots)
    if np.min(np.abs(roots[:, None] - roots[None, :]) + np.eye(len(roots)) * 10) < 0.05:
        return
    assert _match(aberth_roots(np.poly(roots)), roots.astype(complex)) < 1e-7


def test_hex8_model_shape():
    model = solve_model(HEX8)
    assert len(model.roots) == 5 and len(model.all_roots) == 6
    assert model.residual_bound <= 1e-12
    assert abs(max(model.roots, key=abs) - 3.43526) < 1e-5
    assert all(model.is_real(i) for i in range(4)) and not model.is_real(4)
    # real roots carry real coefficients
    assert all(c.imag == 0 for c in model.coeffs[:4])


@pytest.mark.parametrize("family", [HEX8, HEX6])
def test_full_sum_reproduces_sequence(family):
    model = solve_model(family)
    exact = alpha_sequence(40, RECURRENCES[family])
    for n, a in enumerate(exact, start=1):
        assert abs(eval_exact_form(model, n) - a) <= 1e-9 * a


def test_hex8_rounding_is_exact_to_40():
    model = solve_model(HEX8)
    assert [eval_rounded(model, n) for n in range(1, 41)] == alpha_sequence(40)


def test_hex6_rounding_from_three():
    model = solve_model(HEX6)
    assert [eval_rounded(model, n) for n in range(3, 41)] == alpha_sequence(40, RECURRENCES[HEX6])[2:]


def test_hex6_rounding_gives_up_at_two():
    with pytest.raises(PrecisionExhausted):
        eval_rounded(solve_model(HEX6), 2)


def test_low_precision_is_reported():
    model = solve_model(HEX8, dps=15)
    with pytest.raises(PrecisionExhausted):
        eval_rounded(model, 40)


def test_hex4_is_degenerate():
    with pytest.raises(DegenerateSpectrum, match=r"\(x−1\)³") as info:
        solve_model(HEX4)
    assert info.value.family is HEX4


def test_format_polynomial():
    assert format_polynomial((1, -3, 3, -1)) == "x³ − 3x² + 3x − 1"
