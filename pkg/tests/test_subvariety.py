import pytest

from retset import checks, configs
from retset.groups import group_mul, parse_group_file
from retset.subvariety import (MEMBER, NON_MEMBER, PROBABLE, ConfigError, check_sum_witness,
                               contains, parse_equation_file)


@pytest.fixture(scope="module")
def torus():
    G, g = parse_group_file(configs.torus_group())
    return G, g, parse_equation_file(configs.TORUS_EQUATIONS)


@pytest.mark.parametrize("n, expected", [(2, MEMBER), (26, MEMBER), (50, MEMBER),
                                         (3, NON_MEMBER), (27, NON_MEMBER), (0, NON_MEMBER)])
def test_exact_torus_membership(torus, n, expected):
    G, g, V = torus
    assert contains(V, group_mul(n, g)).verdict == expected


def test_monte_carlo_membership(torus):
    G, g, V = torus
    v = contains(V, group_mul(26, g), "monte_carlo", s=5, seed=1)
    assert v.verdict == PROBABLE and v.error_bound < 1e-6
    assert contains(V, group_mul(27, g), "monte_carlo").verdict == NON_MEMBER


def test_segre_condition():
    G, g = parse_group_file(configs.example36_group())
    V = parse_equation_file(configs.EXAMPLE36_EQUATIONS)
    for n in (0, 1, 5, 25, 125):
        assert contains(V, group_mul(n, g)).verdict == MEMBER
    for n in (2, 3, 7):
        assert contains(V, group_mul(n, g)).verdict == NON_MEMBER


def test_layout_mismatch():
    G, g = parse_group_file(configs.torus_group())
    V = parse_equation_file(configs.EXAMPLE36_EQUATIONS)
    with pytest.raises(ConfigError):
        contains(V, g)


def test_unknown_name():
    G, g = parse_group_file(configs.torus_group())
    V = parse_equation_file(configs.TORUS_EQUATIONS.replace("alpha", "beta"))
    with pytest.raises((ConfigError, KeyError, ValueError)):
        contains(V, g)


@pytest.mark.parametrize("j", [0, 1])
def test_example54_witness(j):
    group, g0, factors = checks.example54_setup()
    w, target = checks.example54_witness(group, g0, factors, j)
    v = check_sum_witness(w, target, s=5)
    assert v.verdict == PROBABLE and v.error_bound < 1e-6


def test_corrupt_witness_fails_at_c3():
    group, g0, factors = checks.example54_setup()
    w, target = checks.example54_witness(group, g0, factors, 1, corrupt="C3")
    v = check_sum_witness(w, target)
    assert v.verdict == NON_MEMBER and v.failing_index == 3
