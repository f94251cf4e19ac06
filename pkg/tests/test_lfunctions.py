import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primeraces import lfunctions as lf
from primeraces.errors import CapacityError, DomainError, ParseError

import published_tables as pub

mp.mp.dps = 30


def mp_zeta(s):
    return complex(mp.zeta(mp.mpc(s)))


def mp_beta4(s):
    s = mp.mpc(s)
    return complex(4**(-s) * (mp.zeta(s, mp.mpf(1) / 4)
                              - mp.zeta(s, mp.mpf(3) / 4)))


def mp_quadratic(q, s):
    s = mp.mpc(s)
    return complex(mp.power(q, -s) * mp.fsum(
        lf.legendre_symbol(r, q) * mp.zeta(s, mp.mpf(r) / q)
        for r in range(1, q)))


# ---------------------------------------------------------------------------
# logarithmic integrals

def test_li_at_two_is_zero():
    assert lf.li(2) == 0.0
    with pytest.raises(DomainError):
        lf.li(1.5)


def test_li_against_high_precision_oracle():
    for x in (10.0, 10**4, 10**8, 10**10):
        ref = float(mp.li(x, offset=True))
        assert lf.li(x) == pytest.approx(ref, abs=1e-5)


def test_li_overcounts():
    for x, pi_x, overcount, _ in pub.PI_OVERCOUNT_ROWS:
        assert abs(lf.gauss_overcount(x, pi_x) - overcount) <= 1
        # the 2-based integral lands within the same band
        assert abs(math.floor(lf.li(x) - pi_x) - overcount) <= 1


def test_riemann_overcounts():
    for x, pi_x, _, overcount in pub.PI_OVERCOUNT_ROWS:
        assert abs(lf.riemann_overcount(x, pi_x) - overcount) <= 1
    with pytest.raises(DomainError):
        lf.riemann_prediction(3.9)


def test_li_origin_constant():
    import mpmath as mp2
    assert lf.LI_AT_2 == pytest.approx(float(mp2.li(2)), abs=1e-14)
    assert lf.li_from_origin(10**6) == \
        pytest.approx(float(mp2.li(10**6)), abs=1e-6)


def test_li_tolerance_self_check():
    # halving the tolerance never moves the value by more than the prior one
    for x in (100.0, 10**6):
        tol = 1e-4
        prev = lf.li(x, lf.QuadratureConfig(abs_tol=tol))
        for _ in range(6):
            tol /= 2
            cur = lf.li(x, lf.QuadratureConfig(abs_tol=tol))
            assert abs(cur - prev) <= 2 * tol
            prev = cur


def test_li2_values():
    assert lf.li2(2) == 0.0
    ref = float(mp.quad(lambda t: 1 / mp.log(t)**2, [2, 1000]))
    assert lf.li2(1000) == pytest.approx(ref, abs=1e-6)
    with pytest.raises(DomainError):
        lf.li2(1.0)


def test_li2_tolerance_self_check():
    tol = 1e-4
    prev = lf.li2(10**6, lf.QuadratureConfig(abs_tol=tol))
    for _ in range(6):
        tol /= 2
        cur = lf.li2(10**6, lf.QuadratureConfig(abs_tol=tol))
        assert abs(cur - prev) <= 2 * tol
        prev = cur


# ---------------------------------------------------------------------------
# psi

def test_psi_rows():
    for x, nearest, diff in pub.PSI_ROWS:
        v = lf.chebyshev_psi(x)
        assert round(v) == nearest
        assert round(v) - x == diff


def test_psi_smallest():
    assert lf.chebyshev_psi(2) == pytest.approx(math.log(2), rel=1e-15)
    with pytest.raises(DomainError):
        lf.chebyshev_psi(1)


def test_psi_alternative_formula(primes_1e6):
    x = 10**5
    alt = 0.0
    for p in primes_1e6[primes_1e6 <= x]:
        p = int(p)
        m, v = 1, p
        while v * p <= x:
            v *= p
            m += 1
        alt += m * math.log(p)
    mine = lf.chebyshev_psi(x, primes_1e6)
    assert abs(mine - alt) <= 1e-9 * alt


def test_rh_inequality():
    for x, _, _ in pub.PSI_ROWS:
        assert lf.psi_rh_inequality_check(x)
    x = 10**4
    fake = x + 3 * math.sqrt(x) * math.log(x)**2
    assert not lf.psi_rh_inequality_check(x, fake)
    with pytest.raises(DomainError):
        lf.psi_rh_inequality_check(99)


# ---------------------------------------------------------------------------
# L evaluation

def test_classical_values():
    assert lf.evaluate_l(lf.ZETA, 2.0) == \
        pytest.approx(math.pi**2 / 6, abs=1e-6)
    assert lf.evaluate_l(lf.BETA4, 1.0) == \
        pytest.approx(math.pi / 4, abs=1e-6)


def test_zeta_half_against_extended_precision_oracle():
    ref = complex(mp.altzeta(mp.mpf("0.5")) / (1 - mp.sqrt(2)))
    assert abs(lf.evaluate_l(lf.ZETA, 0.5) - ref) < 1e-6


def test_domain_and_pole_errors():
    with pytest.raises(DomainError):
        lf.evaluate_l(lf.ZETA, -0.5 + 1j)
    with pytest.raises(DomainError):
        lf.evaluate_l(lf.ZETA, 1.0)
    # beta4 has no pole at 1
    assert abs(lf.evaluate_l(lf.BETA4, 1.0 + 0j) - math.pi / 4) < 1e-12


def test_dirichlet_series_agreement_absolute_regime():
    N = 200000
    n = np.arange(1, N + 1, dtype=float)
    for s in (2.0, 2.5 + 3j, 4.0 - 2j):
        # defining series, tail closed by its integral comparison terms
        direct = complex(np.sum(n ** (-s))) \
            + N ** (1 - s) / (s - 1) + 0.5 * N ** (-s)
        assert abs(lf.evaluate_l(lf.ZETA, s) - direct) < 1e-8


@given(st.floats(0.25, 3.0), st.floats(-40.0, 40.0))
@settings(max_examples=25, deadline=None)
def test_conjugate_symmetry(sigma, t):
    s = complex(sigma, t)
    if abs(s - 1) < 1e-6:
        return
    for lid in (lf.ZETA, lf.BETA4, lf.quadratic(7)):
        a = lf.evaluate_l(lid, s)
        b = lf.evaluate_l(lid, s.conjugate())
        assert b == pytest.approx(a.conjugate(), rel=1e-10, abs=1e-10)


def test_zeta_on_critical_line_against_oracle():
    for t in (14.0, 50.0, 240.0, 480.0):
        got = lf.evaluate_l(lf.ZETA, 0.5 + 1j * t)
        assert abs(got - mp_zeta(0.5 + 1j * t)) < 1e-9


def test_beta4_against_oracle():
    for s in (0.5, 0.5 + 6j, 0.75 + 100j, 2.0 - 3j):
        assert abs(lf.evaluate_l(lf.BETA4, s) - mp_beta4(s)) < 1e-9


@pytest.mark.parametrize("q", [3, 5, 7, 163])
def test_quadratic_against_oracle(q):
    for s in (0.75, 0.5 + 0.2029j, 1.5 + 3j, 0.5 + 10j):
        got = lf.evaluate_l(lf.quadratic(q), s, terms=64)
        assert abs(got - mp_quadratic(q, s)) < 1e-8


def test_quadratic_needs_odd_prime():
    for bad in (9, 4, 15):
        with pytest.raises(DomainError):
            lf.quadratic(bad)


def test_error_decreases_in_terms():
    s = 0.5 + 25j
    ref = mp_zeta(s)
    # term counts chosen so truncation still dominates double rounding
    errs = [abs(lf.evaluate_l(lf.ZETA, s, terms=n) - ref)
            for n in (24, 30, 36)]
    assert errs[2] < errs[1] < errs[0]


# ---------------------------------------------------------------------------
# zeros

def test_zeta_zeros_to_31():
    tab = lf.find_zeros(lf.ZETA, 31)
    assert len(tab) == 4
    assert tab.ordinates[0] == pytest.approx(pub.ZETA_ZEROS[0], abs=1e-3)
    for got, want in zip(tab.ordinates, pub.ZETA_ZEROS):
        assert got == pytest.approx(want, abs=1e-2)


def test_zeta_zero_residuals():
    tab = lf.find_zeros(lf.ZETA, 31)
    for g in tab.ordinates:
        assert abs(lf.evaluate_l(lf.ZETA, 0.5 + 1j * g, terms=160)) < 1e-6


def test_beta4_zeros_against_completed_function_oracle():
    tab = lf.find_zeros(lf.BETA4, 10)
    assert len(tab) >= 1
    for g in tab.ordinates:
        # extended-precision residual of the series at the found ordinate
        assert abs(mp_beta4(0.5 + 1j * float(g))) < 1e-8


def test_zero_caps_and_unsupported():
    with pytest.raises(CapacityError):
        lf.find_zeros(lf.ZETA, 501)
    with pytest.raises(DomainError):
        lf.find_zeros(lf.quadratic(7), 10)


# ---------------------------------------------------------------------------
# zero-table files

def test_zero_table_roundtrip(tmp_path):
    tab = lf.find_zeros(lf.ZETA, 31)
    path = tmp_path / "zeta.zeros"
    lf.write_zero_table(tab, path)
    back = lf.parse_zero_table(path, lf.ZETA)
    assert back.id == lf.ZETA
    assert np.allclose(back.ordinates, tab.ordinates, atol=1e-9)


def test_zero_table_two_lines(tmp_path):
    path = tmp_path / "z.zeros"
    path.write_text("14.134725\n21.022040\n")
    tab = lf.parse_zero_table(path, lf.ZETA)
    assert len(tab) == 2


def test_zero_table_comments_only(tmp_path):
    path = tmp_path / "z.zeros"
    path.write_text("# lfunction=beta4\n# empty\n")
    tab = lf.parse_zero_table(path)
    assert len(tab) == 0 and tab.id == lf.BETA4


def test_zero_table_negative_entry(tmp_path):
    path = tmp_path / "z.zeros"
    path.write_text("14.1\n-1.0\n")
    with pytest.raises(ParseError) as err:
        lf.parse_zero_table(path)
    assert err.value.line == 2


def test_zero_table_descending(tmp_path):
    path = tmp_path / "z.zeros"
    path.write_text("21.0\n14.1\n")
    with pytest.raises(ParseError) as err:
        lf.parse_zero_table(path)
    assert err.value.line == 2


def test_zero_table_header_mismatch(tmp_path):
    path = tmp_path / "z.zeros"
    path.write_text("# lfunction=beta4\n6.02\n")
    with pytest.raises(ParseError):
        lf.parse_zero_table(path, lf.ZETA)
