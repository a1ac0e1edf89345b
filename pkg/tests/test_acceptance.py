"""Acceptance gate: each test sweeps one headline identity and prints a
pass/fail line for it."""

import itertools

from dualdeg import diagrams, dualpair, jellyfish, posets, repdims
from dualdeg.degree import (
    EXCEPTIONAL_ROWS,
    dim_U_sigma,
    exceptional_degree,
    is_conjectural,
    iter_sigmas,
    mp_conjecture_probe,
    mp_window_boundary_check,
)
from dualdeg.dualpair import (
    Setting,
    count_Q_determinant,
    enumerate_Q,
    enumerate_T,
    free_threshold,
    in_Q_criteria,
    in_Q_definition,
    mp,
    ostar,
    real_rank,
    upq,
)
from dualdeg.tableaux import IntPolynomial


def _report(number, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"CRITERION {number}: {status}")
    assert not failures, failures[:5]


def _sweep_settings():
    out = []
    for p in range(1, 5):
        for q in range(1, 5):
            out.append(upq(p, q, 0))
    out += [mp(n, 0) for n in range(1, 5)]
    out += [ostar(n, 0) for n in range(2, 7)]
    return out


def _with_k(setting, k):
    return Setting(setting.family, k=k, p=setting.p, q=setting.q, n=setting.n)


def test_criterion_1_membership_criteria():
    failures = []
    for base in _sweep_settings():
        for k in range(1, free_threshold(base) + 2):
            setting = _with_k(base, k)
            for sigma in iter_sigmas(setting, 4):
                for T in enumerate_T(setting, sigma):
                    if in_Q_definition(setting, sigma, T) != in_Q_criteria(setting, sigma, T):
                        failures.append((setting, sigma, T))
    _report(1, failures)


def test_criterion_2_determinant_counts():
    failures = []
    for base in _sweep_settings():
        for k in range(1, free_threshold(base) + 2):
            setting = _with_k(base, k)
            for sigma in iter_sigmas(setting, 4):
                if count_Q_determinant(setting, sigma) != len(enumerate_Q(setting, sigma)):
                    failures.append((setting, sigma))
    _report(2, failures)


def test_criterion_3_product_counts():
    failures = []
    for base in _sweep_settings():
        for k in range(1, real_rank(base) + 1):
            if len(diagrams.diagram_D(base, k)) > 12:
                continue
            if diagrams.count_P_product(base, k) != len(diagrams.enumerate_P(base, k)):
                failures.append((base, k))
    _report(3, failures)


def _theta_sweep():
    out = []
    for p in range(1, 8):
        for q in range(p, 8):
            if p * q <= 28:
                out.append(upq(p, q, 0))
    out += [mp(n, 0) for n in range(2, 8)]
    out += [ostar(n, 0) for n in range(3, 9)]
    return out


def test_criterion_4_theta_bijection():
    failures = []
    for base in _theta_sweep():
        for k in range(1, min(3, real_rank(base)) + 1):
            pps = diagrams.enumerate_P(base, k)
            facets = {f.points for f in posets.enumerate_facets(base, k)}
            images = set()
            for pp in pps:
                f = posets.theta(base, k, pp)
                images.add(f.points)
                if posets.theta_inverse(base, k, f) != pp:
                    failures.append((base, k, "round-trip"))
            if images != facets or len(images) != len(pps):
                failures.append((base, k, "not a bijection"))
    _report(4, failures)


def test_criterion_5_corner_statistic():
    failures = []
    for base in _theta_sweep():
        for k in range(1, min(3, real_rank(base)) + 1):
            for pp in diagrams.enumerate_P(base, k):
                f = posets.theta(base, k, pp)
                if len(posets.corners(base, k, f)) != diagrams.c_statistic(pp):
                    failures.append((base, k, pp))
    _report(5, failures)


def test_criterion_6_jellyfish_factorization():
    failures = []
    cases = []
    for p in range(1, 6):
        for q in range(1, 6):
            if p * q <= 20:
                cases.append(upq(p, q, 0))
    cases += [ostar(n, 0) for n in range(3, 8) if n * (n - 1) // 2 <= 20]
    for base in cases:
        for k in range(1, min(2, free_threshold(base) - 1) + 1):
            setting = _with_k(base, k)
            maximal = {f.points for f in jellyfish.enumerate_maximal_F(setting, k)}
            for sigma in iter_sigmas(setting, 3):
                got = {
                    (j.tableau, j.family.points)
                    for j in jellyfish.enumerate_maximal_jellyfish(setting, sigma)
                }
                want = {
                    (T, pts)
                    for T in enumerate_Q(setting, sigma)
                    for pts in maximal
                }
                if got != want:
                    failures.append((setting, sigma))
    _report(6, failures)


def test_criterion_7_collapse_endpoints():
    failures = []
    for base in _sweep_settings():
        r, s = real_rank(base), free_threshold(base)
        for k in sorted(set(list(range(1, r + 1)) + [s, s + 1])):
            setting = _with_k(base, k)
            for sigma in iter_sigmas(setting, 3):
                q_count = count_Q_determinant(setting, sigma)
                if k <= r:
                    expected = dim_U_sigma(setting, sigma)
                    if q_count != expected:
                        failures.append((setting, sigma, "low", q_count, expected))
                if k >= s:
                    expected = repdims.dim_F_lambda(setting, sigma)
                    if q_count != expected:
                        failures.append((setting, sigma, "high", q_count, expected))
    _report(7, failures)


def test_criterion_8_pinned_series():
    failures = []
    for n in (3, 4, 5):
        num, exponent = diagrams.hilbert_series_orbit(Setting("so-odd", n=n), 1)
        if num != IntPolynomial([1, 1]) or exponent != 2 * n - 2:
            failures.append(("so-odd", n))
    for setting, k, expected in [
        (Setting("e6"), 2, 1),
        (Setting("e7"), 2, 3),
        (Setting("e7"), 3, 1),
    ]:
        if len(diagrams.enumerate_P(setting, k)) != expected:
            failures.append((setting.family, k))
    _report(8, failures)


def test_criterion_9_exceptional_polynomials():
    failures = []
    for row in EXCEPTIONAL_ROWS:
        for a in range(5):
            for b in range(5 if row.nparams == 2 else 1):
                try:
                    exceptional_degree(row, a, b)
                except AssertionError:
                    failures.append((row.group, row.h_system, a, b))
    _report(9, failures)


def test_criterion_10_poset_width():
    failures = []
    for base in _sweep_settings():
        if posets.width(posets.build_poset(base)) != real_rank(base):
            failures.append(base)
    _report(10, failures)


def test_criterion_11_metaplectic_window():
    failures = []
    for n in (2, 3, 4):
        sigmas = list(iter_sigmas(mp(n, n), 3))
        out = mp_window_boundary_check(n, sigmas)
        if not out["ok"]:
            failures.append(("boundary", n))
    for n in (3, 4):
        for k in range(n + 1, 2 * n - 1):
            setting = mp(n, k)
            if not is_conjectural(setting):
                failures.append(("flag", n, k))
            sigmas = list(iter_sigmas(setting, 3))
            probe = mp_conjecture_probe(n, k, sigmas)
            if not probe["conjectural"] or not all(e["checks_ok"] for e in probe["entries"]):
                failures.append(("probe", n, k))
    _report(11, failures)
