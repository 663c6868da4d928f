import pytest

from yangslice.chart import (
    ChartError,
    ChartFn,
    chart_bracket,
    chart_bracket_check,
    flow_derivative,
    moment_function,
    moment_map_flow_check,
    quantum_bracket_oracle,
    solve_structure_constant,
)
from yangslice.kscalar import KScalar
from yangslice.rational import Rat

b, c = ChartFn.b(), ChartFn.c()


@pytest.mark.parametrize("d", [1, 2, 3])
def test_structure_constant(d):
    assert solve_structure_constant(d) == b * d


@pytest.mark.parametrize("d", [1, 2, 3])
def test_literal_orientation_flips_sign(d):
    assert chart_bracket(c, b, d, orientation="literal") == b * (-d)


def test_unknown_orientation():
    with pytest.raises(ValueError):
        solve_structure_constant(1, orientation="sideways")


def test_bracket_is_antisymmetric_and_leibniz():
    f, g, h = b * c, c * c, b.inverse()
    assert chart_bracket(f, g) == -chart_bracket(g, f)
    assert chart_bracket(f, g * h) == chart_bracket(f, g) * h + g * chart_bracket(f, h)


def test_laurent_in_b():
    assert b * b.inverse() == ChartFn.const(1)
    assert chart_bracket(c, b.inverse()) == -b.inverse()


def test_moment_function_d2():
    assert moment_function(2) == b * KScalar.sqrt_d((2,), 0, -1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_flow_of_c(d):
    # c moves at speed -d^(1/2) b under the (-eps)-action
    assert flow_derivative(c, 0, d) == chart_bracket(moment_function(d), c, d)


def test_flow_fixes_b():
    assert not flow_derivative(b, 0, 2)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_moment_map_flow(d):
    assert all(r.passed for r in moment_map_flow_check(0, d))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_quantum_oracle(d):
    assert quantum_bracket_oracle(d) == (True, d)


def test_chart_bracket_check():
    results = chart_bracket_check()
    assert len(results) == 12 and all(r.passed for r in results)
