"""Tests for degree reports, boundary identities, and the verification harness."""

import pytest

from dualdeg.degree import (
    EXCEPTIONAL_ROWS,
    bernstein_degree,
    classify_regime,
    dim_U_sigma,
    exceptional_degree,
    hilbert_report,
    is_conjectural,
    iter_sigmas,
    mp_conjecture_probe,
    mp_window_boundary_check,
    not_identity_check,
    partitions_up_to,
    verify_all,
)
from dualdeg.dualpair import Setting, mp, ostar, upq


def test_partitions_up_to():
    assert partitions_up_to(0) == ((),)
    got = partitions_up_to(3)
    assert set(got) == {(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)}
    assert len(got) == len(set(got))


def test_iter_sigmas():
    assert ((), ()) in set(iter_sigmas(upq(2, 2, 1), 2))
    mp_sigmas = set(iter_sigmas(mp(3, 1), 2))
    assert () in mp_sigmas and (1,) in mp_sigmas
    # inadmissible shapes are filtered out
    assert all(len(s) <= 1 for s in iter_sigmas(mp(3, 1), 3))


def test_bernstein_degree_golden():
    report = bernstein_degree(ostar(3, 1), (1,))
    assert (report.q_count, report.p_count, report.degree) == (2, 1, 2)
    assert report.ok()
    report = bernstein_degree(upq(4, 5, 2), ((), ()))
    assert report.degree == 50
    # above the free threshold the degree of the trivial-label module is 1
    report = bernstein_degree(mp(3, 6), ())
    assert report.degree == 1


def test_report_fields():
    report = bernstein_degree(upq(2, 3, 1), ((1,), ()))
    assert report.regime == "k<=r"
    assert not report.conjectural
    names = [c.name for c in report.cross_checks]
    assert names == ["q-enumeration", "p-enumeration", "jellyfish"]
    assert all(c.status == "pass" for c in report.cross_checks)
    # a huge instance skips the enumerative oracles but still reports
    big = bernstein_degree(upq(10, 12, 5), ((4, 3), (2,)), limit=10)
    assert big.degree == big.q_count * big.p_count
    assert any(c.status == "skipped" for c in big.cross_checks)
    assert big.ok()


def test_degree_input_validation():
    with pytest.raises(ValueError):
        bernstein_degree(Setting("e6", k=2), ())
    with pytest.raises(ValueError):
        bernstein_degree(mp(3, 0), ())
    with pytest.raises(ValueError):
        bernstein_degree(mp(3, 1), (1, 1, 1, 1))


def test_classify_regime_and_conjectural():
    assert classify_regime(upq(3, 4, 2)) == "k<=r"
    assert classify_regime(upq(3, 4, 4)) == "r<k<s"
    assert classify_regime(upq(3, 4, 6)) == "k>=s"
    assert is_conjectural(mp(4, 5))
    assert is_conjectural(mp(4, 6))
    assert not is_conjectural(mp(4, 4))
    assert not is_conjectural(mp(4, 7))
    assert not is_conjectural(upq(4, 4, 5))


def test_not_identity():
    out = not_identity_check(ostar(3, 1), (1,))
    assert out["ok"] and out["dim_u"] == 2 and out["q_count"] == 2
    out = not_identity_check(mp(2, 1), (1,))
    assert out["ok"] and out["dim_u"] == 1
    out = not_identity_check(upq(2, 3, 2), ((1,), (1,)))
    assert out["ok"]
    out = not_identity_check(mp(3, 2), ())
    assert out["ok"] and out["q_count"] == 1
    with pytest.raises(ValueError):
        not_identity_check(mp(2, 3), ())


def test_dim_U_sigma():
    assert dim_U_sigma(ostar(3, 1), (1,)) == 2  # Sp(2) defining rep
    assert dim_U_sigma(mp(2, 1), (1,)) == 1  # O(1) sign character
    assert dim_U_sigma(upq(2, 3, 2), ((1,), (1,))) == 3  # GL(2) weight (1,-1)


def test_mp_conjecture_probe():
    with pytest.raises(ValueError):
        mp_conjecture_probe(2, 2, [()])  # n = 2 window is empty
    out = mp_conjecture_probe(3, 4, [(), (1,)])
    assert out["conjectural"]
    by_sigma = {e["sigma"]: e for e in out["entries"]}
    assert by_sigma[()]["degree"] == 1 * out["entries"][0]["p_count"]
    assert all(e["checks_ok"] for e in out["entries"])


def test_mp_window_boundary():
    for n in (3, 4):
        sigmas = list(iter_sigmas(mp(n, n), 2))
        out = mp_window_boundary_check(n, sigmas)
        assert out["ok"], out


def test_exceptional_degrees():
    by_system = {row.h_system: row for row in EXCEPTIONAL_ROWS}
    assert exceptional_degree(by_system["B3"], 0) == 1
    assert exceptional_degree(by_system["G2"], 0) == 1
    assert exceptional_degree(by_system["B4"], 0) == 3
    assert exceptional_degree(by_system["F4"], 0, 0) == 1
    assert exceptional_degree(by_system["B3"], 1) == 7
    assert exceptional_degree(by_system["G2"], 1) == 7
    for a in range(5):
        for b in range(5):
            exceptional_degree(by_system["F4"], a, b)
    with pytest.raises(ValueError):
        exceptional_degree(by_system["B3"], 1, 1)
    with pytest.raises(ValueError):
        exceptional_degree(by_system["B3"], -1)


def test_hilbert_report_rendering():
    out = hilbert_report(Setting("so-odd", n=3), 1)
    assert out["series"] == "(1 + t)/(1-t)^4"
    assert out["p_count"] == 2
    out = hilbert_report(Setting("e6"), 2)
    assert out["series"] == "1/(1-t)^16"
    assert out["p_count"] == 1


def test_verify_all():
    out = verify_all(seed=7)
    assert out["ok"], out
    names = {s["suite"] for s in out["suites"]}
    assert "criterion" in names and "random-determinant" in names
    single = verify_all(only="width")
    assert single["ok"] and len(single["suites"]) == 1
    with pytest.raises(ValueError):
        verify_all(only="no-such-suite")
