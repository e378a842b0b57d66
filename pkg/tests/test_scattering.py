import math
from math import gcd

import pytest
from hypothesis import given, strategies as st

from cuspbound.arith import divisors, euler_phi
from cuspbound.eisenstein_level1 import scattering_constant_level1, scattering_phi_level1
from cuspbound.gamma0 import Cusp, cusp_set, volume
from cuspbound.oracles import constant_at_pole, residue_at_pole
from cuspbound.scattering_gamma0 import (
    all_pair_reports, constant_0inf, constant_a_0, constant_a_inf, cusp_sum_a_0, cusp_sum_a_inf,
    scattering_const_0inf, scattering_const_a_0, scattering_const_a_inf, scattering_fn_0inf,
    scattering_fn_a_0, scattering_fn_a_inf,
)

C = 0.8671324277221846


def test_fn_0inf_examples():
    for s in (1.5, 2.0, 3.0):
        assert scattering_fn_0inf(s, 1) == scattering_phi_level1(s)
    expected = scattering_phi_level1(2.0) * 0.25 * (16 - 2) / (16 - 1)
    assert scattering_fn_0inf(2.0, 2) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(0.407066, abs=1e-6)


def test_fn_0inf_residue():
    res, _ = residue_at_pole(lambda s: scattering_fn_0inf(s, 6))
    assert res == pytest.approx(1 / (4 * math.pi), abs=1e-5)


@given(st.integers(1, 400), st.floats(1.1, 4.0))
def test_fn_specializations(N, s):
    base = scattering_fn_0inf(s, N)
    assert scattering_fn_a_inf(s, 1, N) == pytest.approx(base, rel=1e-12)
    assert scattering_fn_a_0(s, N, N) == pytest.approx(base, rel=1e-12)


def test_constant_0inf_examples():
    assert constant_0inf(1) == pytest.approx(C, abs=1e-13)
    assert constant_0inf(2) == pytest.approx(C / 3 + math.log(2) / (3 * math.pi), abs=1e-13)
    assert constant_0inf(2) == pytest.approx(0.36259, abs=1e-5)


def test_constant_a_inf_example():
    N, n = 4, 2
    hand = (math.pi * C / 3 + math.log(2 / 8) - 2 * math.log(2) / 3 + 2 * math.log(2)) / volume(N)
    assert constant_a_inf(n, N) == pytest.approx(hand, abs=1e-13)
    lim, _ = constant_at_pole(lambda s: scattering_fn_a_inf(s, n, N), 1 / volume(N))
    assert constant_a_inf(n, N) == pytest.approx(lim, abs=1e-6)


def test_specialization_identities():
    for N in range(1, 501):
        c = constant_0inf(N)
        assert abs(constant_a_inf(1, N) - c) <= 1e-12
        assert abs(constant_a_0(N, N) - c) <= 1e-12
    assert constant_a_0(1, 1) == pytest.approx(C, abs=1e-13)


@pytest.mark.parametrize("N", [2, 4, 6, 12, 36])
def test_reports_against_eps_limit(N):
    for rep in all_pair_reports(N):
        assert rep.constant == pytest.approx(rep.limit, abs=1e-6)
        assert rep.residue_check == pytest.approx(1.0, abs=1e-4)


def test_report_fields_and_json():
    rep = scattering_const_0inf(6)
    d = rep.to_dict()
    assert d["pair"] == ["0/1", "1/6"] and d["n"] == 1
    assert set(d["terms"]) == {"pi_over_3_C", "log_term", "prime_sum"}
    assert math.fsum(rep.terms.values()) / volume(6) == pytest.approx(rep.constant, abs=1e-14)
    assert len(all_pair_reports(12, check=False)) == 1 + 2 * 6


def test_report_rejects_non_cusps():
    with pytest.raises(ValueError):
        scattering_const_a_inf(Cusp(1, 5), 12, check=False)
    with pytest.raises(ValueError):
        constant_a_0(5, 12)


def test_constant_depends_only_on_denominator():
    N = 36
    for a in cusp_set(N):
        r = scattering_const_a_0(a, N, check=False)
        assert r.constant == constant_a_0(a.n, N)


def test_cusp_sums():
    assert cusp_sum_a_inf(1) == 0.0 and cusp_sum_a_0(1) == 0.0
    assert cusp_sum_a_inf(7) == pytest.approx(constant_0inf(7), abs=1e-14)
    assert cusp_sum_a_0(7) == pytest.approx(constant_0inf(7), abs=1e-14)
    assert cusp_sum_a_inf(12) == pytest.approx(-0.2510867799026189, abs=1e-12)
    assert cusp_sum_a_0(12) == pytest.approx(-0.2510867799026189, abs=1e-12)


@given(st.integers(2, 600))
def test_cusp_sum_weights_cover_all_classes(N):
    classes = sum(euler_phi(gcd(n, N // n)) for n in divisors(N))
    assert classes == len(cusp_set(N))
    assert len({str(a) for a in cusp_set(N) if a.n != N}) == classes - 1


def test_constants_use_level_one_constant():
    assert constant_0inf(11) * volume(11) == pytest.approx(
        math.pi * scattering_constant_level1() / 3 - math.log(11) + 2 * 11 * math.log(11) / 120, abs=1e-13)
