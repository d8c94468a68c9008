import math

import pytest

import airs_deploy as ad


def test_reference_wit_placement():
    p = ad.SystemParams()
    s = ad.optimal_index(p, ad.Mode.WIT)
    assert s.index == 5
    assert s.case_label == ad.CaseLabel.I
    assert s.case_name == "I"
    assert s.brute_force_agrees
    assert s.relaxed_index == pytest.approx(4.6138932045, rel=1e-9)


def test_reference_wpt_placement_is_last():
    p = ad.SystemParams()
    for np_ in (4, 16, 64, 256, 1000):
        assert ad.optimal_index(p.with_np(np_), ad.Mode.WPT).index == p.num_irs


def test_closed_form_matches_matrix_model():
    p = ad.SystemParams().with_np(36)
    p.num_irs = 4
    for l in range(1, p.num_irs + 1):
        r = ad.evaluate_matrix(p, l)
        assert r.snr == pytest.approx(ad.snr(p, l), rel=1e-8)
        assert r.power == pytest.approx(ad.power(p, l), rel=1e-8)


def test_link_budget_and_threshold():
    p = ad.SystemParams()
    lb = ad.derive_link_budget(p)
    assert 1.0 / lb.kappa_inter == pytest.approx(1412.5375446, rel=1e-9)
    assert ad.wit_saturation_np(p) == pytest.approx(821.6261849, rel=1e-9)
    assert ad.dbm_to_watts(30.0) == pytest.approx(1.0)


def test_baselines_and_ratios():
    p = ad.SystemParams()
    assert ad.middle_index(7) == 4
    assert ad.scheme_middle(p, ad.Mode.WIT).value <= ad.optimal_index(p, ad.Mode.WIT).objective.value
    r = ad.ratio_diagnostics(p, ad.Mode.WPT)
    assert r.vs_middle_formula == pytest.approx(r.vs_middle, rel=1e-10)
    assert r.rho1 is not None
    assert math.isfinite(ad.wpt_crossover_np(p))


def test_validation_and_errors():
    p = ad.SystemParams()
    p.num_irs = 0
    codes = [d.code for d in ad.validate(p)]
    assert codes == ["num_irs"]
    with pytest.raises(ValueError):
        ad.derive_link_budget(p)
    with pytest.raises(IndexError):
        ad.snr(ad.SystemParams(), 8)
