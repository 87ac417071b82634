import json

import pytest

from floerss import catalog
from floerss.catalog import (
    MISMATCH,
    REPRODUCED,
    circle_support,
    forcing_by_search,
    maslov,
    negative_threshold,
    strongly_negative,
)
from floerss.errors import OutOfRange

ALL = [s.name for s in catalog.scenarios()]


def test_registry_contents():
    assert set(ALL) >= {
        "cpn-2torsion",
        "cpnX",
        "cpncpn",
        "cpnX-sphere",
        "M-cover",
        "M-cover-2",
        "cpnM-sphere",
        "quadric",
        "hypersurface-simply-connected",
        "hypersurface-even-w",
        "hypersurface-odd-d",
        "hypersurface-lag-sphere",
        "hypersurface-negative",
        "hypersurface-2",
        "hypersurface-sphere",
        "sigma-cpncpn",
    }
    assert ALL == sorted(ALL)


@pytest.mark.parametrize("name", ALL)
def test_every_scenario_reproduces_at_defaults(name):
    rep = catalog.run(name)
    assert rep.verdict == REPRODUCED, rep.to_json()
    json.dumps(rep.to_json())


def test_reports_are_deterministic():
    a = catalog.run("quadric", {"n": 4}).to_json()
    b = catalog.run("quadric", {"n": 4}).to_json()
    assert a == b


def test_maslov_examples():
    m = maslov("cpn-2torsion", {"n": 4})
    assert m.N == 5 and m.k_forced
    assert maslov("hypersurface", {"n": 9, "d": 3}).N == 16
    assert maslov("quadric", {"n": 3}).N == 3
    assert maslov("cpnX", {"n": 2}).N == 6
    assert maslov("sigma-cpncpn", {"n": 3}).N == 6


def test_maslov_errors():
    with pytest.raises(OutOfRange):
        maslov("nonsense", {})
    with pytest.raises(OutOfRange):
        maslov("hypersurface", {"n": 3, "d": 6})
    with pytest.raises(OutOfRange):
        maslov("quadric", {})
    with pytest.raises(OutOfRange):
        maslov("hypersurface-2torsion", {"n": 4, "d": 5})


@pytest.mark.parametrize(
    "kind,params",
    [("cpn-2torsion", {"n": n}) for n in range(2, 9)]
    + [("quadric", {"n": n}) for n in range(3, 9)]
    + [("hypersurface-2torsion", {"n": n, "d": d}) for n in range(3, 11) for d in range(3, n + 2) if 2 * d <= n + 1],
)
def test_forcing_verdict_matches_search(kind, params):
    m = maslov(kind, params)
    assert m.k_forced == forcing_by_search(m)


def test_forcing_not_claimed_when_multiples_survive():
    m = maslov("hypersurface-2torsion", {"n": 4, "d": 4})
    assert m.N == 2 and m.k_forced is False
    assert forcing_by_search(m) is False


def test_strongly_negative_examples():
    assert strongly_negative(3, 6, 1)
    assert not strongly_negative(3, 5, 1)
    assert strongly_negative(3, 7, 2)
    assert not strongly_negative(3, 6, 2)
    with pytest.raises(OutOfRange):
        strongly_negative(2, 6, 1)
    with pytest.raises(OutOfRange):
        strongly_negative(3, 4, 1)
    with pytest.raises(OutOfRange):
        strongly_negative(3, 6, 0)


def test_thresholds_agree_on_a_grid():
    for n in range(3, 13):
        for d in range(n + 2, 3 * n + 8):
            for t in range(1, 5):
                assert strongly_negative(n, d, t) == negative_threshold(n, d, t)


def test_circle_support():
    assert circle_support(4) == (1, 1, 0, 1, 1)
    assert circle_support(2) == (1, 1, 1)


def test_unknown_scenario_and_parameter():
    with pytest.raises(OutOfRange):
        catalog.run("no-such-thing")
    with pytest.raises(OutOfRange):
        catalog.run("quadric", {"m": 3})
    with pytest.raises(OutOfRange):
        catalog.run("quadric", {"n": 2})
    with pytest.raises(OutOfRange):
        catalog.run("hypersurface-odd-d", {"n": 9, "d": 4})


def test_quadric_three_has_doubled_middle_class():
    rep = catalog.run("quadric", {"n": 3})
    assert rep.reproduced
    assert rep.details["beta2_gamma"] == [2]
    assert rep.details["beta_L"] == [(1, 1, 1, 1)]


def test_sigma_report_flags_dimension_reading():
    rep = catalog.run("sigma-cpncpn", {"n": 3})
    assert rep.reproduced
    assert rep.details["beta_L"] == [(1, 0, 0, 0, 0, 1)]
    assert "flag" in rep.details


def test_hypersurface_h2_identities_hold_on_every_solution():
    rep = catalog.run("hypersurface-even-w", {"n": 9, "d": 3})
    assert rep.reproduced
    assert rep.details["solutions_checked"] > 0
    assert rep.details["band_failures"] == [] and rep.details["palindrome_failures"] == []


def test_mismatch_is_reported_not_raised():
    # a two-point period admits the circle-bundle support even though 2 does not divide 7
    rep = catalog.run("cpnM-sphere", {"n": 2, "m": 4, "N_M": 1})
    assert rep.verdict == MISMATCH
    assert rep.derived["N"] == 2
    assert "N = 2" in rep.details["note"]


def test_two_point_period_is_the_only_source_of_mismatch():
    bad = []
    for n in range(1, 11):
        for m in range(1, 11):
            for nm in range(1, 13):
                if n + m < 3:
                    continue
                rep = catalog.run("cpnM-sphere", {"n": n, "m": m, "N_M": nm})
                if not rep.reproduced:
                    bad.append(rep.derived["N"])
    for n in range(3, 13):
        for d in range(3, n + 2):
            rep = catalog.run("hypersurface-lag-sphere", {"n": n, "d": d})
            if not rep.reproduced:
                bad.append(rep.derived["N"])
    assert bad and set(bad) == {2}
