import pytest

from tensorlayers.diagrams import DiagramTuple, tuples_upto
from tensorlayers.symmetry import (
    CHECKS,
    CheckReport,
    check_ext_hom_duality,
    check_m_h_identity,
    check_rev_symmetry,
    check_t0_ext_symmetry,
    eight_index_sum,
    four_index_sum,
)
from tensorlayers.resolutions import ext_dim


def test_report_pass_tracks_counterexamples():
    rep = CheckReport("x", "r")
    assert rep.passed and rep.summary().startswith("PASS")
    rep.fail((1,), 2, 3)
    assert not rep.passed
    assert rep.to_dict()["pass"] is False
    assert "1 counterexamples" in rep.summary()


def test_rev_small():
    rep = check_rev_symmetry(t=0, max_boxes=2)
    assert rep.passed and rep.checked > 0


def test_rev_t1_three_boxes():
    rep = check_rev_symmetry(t=1, max_boxes=3)
    assert rep.passed, rep.counterexamples[:3]
    assert rep.checked == 575


def test_t0_ext_two_boxes():
    rep = check_t0_ext_symmetry(max_boxes=2)
    assert rep.passed, rep.counterexamples[:3]
    assert rep.skipped > 0


def test_eight_index_sum_against_ext():
    hits = 0
    for kap in tuples_upto(0, 2):
        for lam in tuples_upto(0, 2):
            s = eight_index_sum(kap, lam)
            q = (
                sum(kap.left[0]) - sum(lam.left[0]) + sum(lam.inner_right) - sum(kap.inner_right)
            )
            if s:
                hits += 1
                assert ext_dim(kap, lam, q, "TT") == s
    assert hits == 40


def test_four_index_sum_identity():
    x = DiagramTuple.empty(0)
    assert four_index_sum(x, x) == 1


@pytest.mark.parametrize("category,t", [("bfT_t0", 0), ("Tleft", 1), ("bfT", 1)])
def test_ext_hom_duality(category, t):
    rep = check_ext_hom_duality(category, t, max_boxes=2)
    assert rep.passed, rep.counterexamples[:3]


def test_ext_hom_rejects_unknown():
    with pytest.raises(ValueError):
        check_ext_hom_duality("nope")


def test_m_h_identity():
    rep = check_m_h_identity(max_boxes=4, sample_size=3)
    assert rep.passed and "sample" in rep.param_range


def test_reports_are_reproducible():
    a = check_t0_ext_symmetry(max_boxes=1).to_dict()
    b = check_t0_ext_symmetry(max_boxes=1).to_dict()
    assert a == b
    assert set(CHECKS) == {"rev", "t0_ext", "ext_hom", "m_h"}
