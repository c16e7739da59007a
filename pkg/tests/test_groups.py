import pytest

from retset import configs
from retset.groups import ConfigError, group_add, group_mul, parse_group_file
from retset.poly import RatFunc


def test_torus_group_powers():
    G, g = parse_group_file(configs.torus_group())
    assert G.field.order == 25
    h = group_mul(26, g)
    t = RatFunc.t(G.field)
    alpha = G.constants["alpha"]
    assert h.coords[0][2] == t ** 26
    assert h.coords[0][0] == (t + alpha) ** 26


def test_group_mul_is_homomorphism():
    G, g = parse_group_file(configs.example36_group())
    assert group_add(group_mul(3, g), group_mul(4, g)) == group_mul(7, g)
    assert group_mul(0, g).coords[0].infinity


def test_supersingular_route_for_p_powers():
    G, g = parse_group_file(configs.example36_group())
    P = g.coords[0]
    h = group_mul(25, g).coords[0]
    assert h == P.curve.point(P.x.frob(4), None) or h.x == P.x.frob(4)


@pytest.mark.parametrize("text, msg", [
    ("[point]\ntorus t\n", "missing"),
    ("[group]\ntorus\n", "dim"),
    ("[group]\ncurve p=5 A=0 B=0\n", "singular"),
    ("[group]\nwidget\n", "unknown"),
])
def test_config_errors(text, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_group_file(text)


def test_point_must_lie_on_curve():
    bad = configs.example36_group().replace("sqrt(t^3 + 0*t + 1)", "sqrt(t^3 + 2)")
    with pytest.raises((ConfigError, ValueError)):
        parse_group_file(bad)
