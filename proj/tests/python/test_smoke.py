import pytest

import efluct


def test_counts():
    assert efluct.catalan(5) == 42
    assert efluct.nc2_count_closed(2, 2) == 2
    assert len(efluct.enumerate_nc2_annular(2, 2)) == 2
    assert efluct.is_noncrossing_annular([(1, 4), (2, 3)], 2, 2)


def test_closed_matches_semiclosed():
    words = {"pure": ("x x", "x x"), "pure-adjoint": ("x x", "s s"), "alternating": ("x s", "x s")}
    for fam, (a, b) in words.items():
        for ch in ("complex", "real"):
            closed = efluct.cov_limit_closed(fam, 2 if fam != "alternating" else 1, 2 if fam != "alternating" else 1, ch)
            semi = efluct.cov_limit_semiclosed(a, b, ch)
            assert str(closed) == str(semi)


def test_oracle_and_mc():
    exact = efluct.exact_cov("x", "x", "complex")
    assert exact.evaluate(64, 0.5) == pytest.approx(0.5)
    est = efluct.estimate_cov("x", "x", N=32, gamma=0.5, reps=400, seed=7)
    assert abs(est.estimate.real - 0.5) <= 5 * est.se


def test_bad_input():
    with pytest.raises(efluct.InputError):
        efluct.cov_limit_closed("nonsense", 1, 1, "complex")
    with pytest.raises(efluct.InputError):
        efluct.moment_limit("x y")
