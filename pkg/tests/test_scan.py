import json

import pytest

from retset import configs
from retset.groups import parse_group_file
from retset.scan import ResourceError, orbit_scan
from retset.subvariety import ConfigError, parse_equation_file


def setup(kind):
    if kind == "torus":
        G, g = parse_group_file(configs.torus_group())
        return G, g, parse_equation_file(configs.TORUS_EQUATIONS)
    G, g = parse_group_file(configs.example36_group())
    return G, g, parse_equation_file(configs.EXAMPLE36_EQUATIONS)


def test_exact_torus_scan():
    assert orbit_scan(*setup("torus"), 100, "exact").members == [2, 26, 50]


def test_monte_carlo_torus_scan_matches_exact():
    rep = orbit_scan(*setup("torus"), 100, seed=4)
    assert rep.members == [2, 26, 50] and rep.max_member_bound() < 1e-6


def test_example36_scan_contains_p_powers():
    rep = orbit_scan(*setup("e36"), 30)
    assert {0, 1, 5, 25} <= set(rep.members)


def test_window_zero():
    rep = orbit_scan(*setup("e36"), 0)
    assert [r.n for r in rep.rows] == [0] and set(rep.members) <= {0}


def test_members_independent_of_seed():
    a = orbit_scan(*setup("e36"), 200, seed=1).members
    b = orbit_scan(*setup("e36"), 200, seed=99).members
    assert a == b


def test_reports_are_reproducible():
    a = orbit_scan(*setup("e36"), 60, seed=7)
    b = orbit_scan(*setup("e36"), 60, seed=7)
    assert a.to_json() == b.to_json() and a.to_csv() == b.to_csv()
    assert json.loads(a.to_json())["members"] == a.members


def test_weak_field_refused():
    with pytest.raises(ConfigError):
        orbit_scan(*setup("e36"), 100, field_degree=2)


def test_weak_bounds_become_undecided():
    rep = orbit_scan(*setup("e36"), 30, s=1, field_degree=8)
    assert rep.undecided
    assert not set(rep.undecided) & set(rep.members)


def test_exact_curve_scan_limit():
    with pytest.raises(ResourceError):
        orbit_scan(*setup("e36"), 500, "exact")


def test_y_coordinates_rejected_in_monte_carlo():
    G, g, _ = setup("e36")
    V = parse_equation_file(configs.EXAMPLE36_EQUATIONS.replace("x0*y2 - x2*y0 - x2*y2", "x1*y2 - x2*y1"))
    with pytest.raises(ConfigError):
        orbit_scan(G, g, V, 10)
