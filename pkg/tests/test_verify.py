"""Oracles, catalogue plumbing, campaign driver."""

import pytest

from qburge.qpoly import LaurentPoly, TruncatedSeries
from qburge.qcombinat import qbin, d_poly
from qburge.verify import (CATALOGUE, CampaignBudget, IdentityCase, SUITES,
                           check_identity, partition_oracle, positivity_scan,
                           product_series, run_campaign)


def lp(d):
    return LaurentPoly(dict(d))


def test_partition_oracle_trivia():
    assert partition_oracle(4, 2, 0, 0, 1, 1) == LaurentPoly.one()
    # a huge modulus makes both hook constraints vacuous: box counting
    for N in range(0, 4):
        for M in range(0, 4):
            assert partition_oracle(50, 10, N, M, 1, 1) == qbin(N + M, M)
    with pytest.raises(ValueError):
        partition_oracle(4, 2, 2, 2, 0, 1)
    with pytest.raises(ValueError):
        partition_oracle(4, 1, 6, 0, 1, 1)  # N-M outside the window


def test_hook_sum_matches_oracle_pinned():
    K, i, alpha, beta = 4, 2, 1, 1
    for N in range(0, 7):
        for M in range(0, 7):
            if not (beta - i <= N - M <= K - alpha - i):
                continue
            assert d_poly(K, i, N, M, alpha, beta) == \
                partition_oracle(K, i, N, M, alpha, beta), (N, M)


def test_product_series_self_check_and_reject():
    with pytest.raises(ValueError):
        product_series(1, 2, 5, 10)
    # clearing classes +-2 mod 5 leaves partitions into parts = +-1 mod 5
    s = product_series(2, 3, 5, 10)
    assert s.coeffs == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]


def test_positivity_scan():
    ok = positivity_scan(lp({0: 1, 1: 2, 2: 1}), "c", {"x": 1})
    assert ok.nonneg and ok.first_negative is None
    bad = positivity_scan(lp({0: 1, 3: -1}))
    assert not bad.nonneg and bad.first_negative == (3, -1)


def test_check_identity_pass():
    r = check_identity("main", {"a": 2, "b": 1, "L": 1, "M": 1})
    assert r.status == "pass"
    assert r.first_diff_exponent is None
    assert r.elapsed_ms >= 0


def test_check_identity_fail_reporting():
    fake = IdentityCase("fake", "polynomial", "", "",
                        lambda p: (LaurentPoly.one(), lp({0: 1, 2: 1})))
    r = check_identity(fake, {})
    assert r.status == "fail"
    assert r.first_diff_exponent == 2
    assert (r.lhs_coeff, r.rhs_coeff) == (0, 1)
    fake_s = IdentityCase("fake_s", "truncated-series", "", "",
                          lambda p: (TruncatedSeries(3, [1, 1, 1, 1]),
                                     TruncatedSeries(3, [1, 1, 0, 1])))
    r = check_identity(fake_s, {})
    assert r.status == "fail" and r.first_diff_exponent == 2


def test_catalogue_shape():
    assert set(CATALOGUE) >= {"main", "recip", "shifted", "even", "hookp",
                              "series_F", "section8"}
    for case in CATALOGUE.values():
        assert case.kind in ("polynomial", "truncated-series")
        assert case.description


def test_campaign_small_all_pass_and_deterministic():
    bud = CampaignBudget(a_max=3, lm_max=3, n_max=4, T=15, pos_l_max=5)
    for suite in SUITES:
        r1 = run_campaign(suite, bud)
        assert r1, suite
        assert all(r.status == "pass" for r in r1), suite
        r2 = run_campaign(suite, bud)
        assert [(r.case, r.params, r.status) for r in r1] == \
            [(r.case, r.params, r.status) for r in r2]


def test_campaign_unknown_suite():
    with pytest.raises(ValueError):
        run_campaign("nope")
