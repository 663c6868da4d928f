import random

import pytest

from yangslice.laurent import LPoly
from yangslice.rank1 import (
    CONSTRAINTS,
    Rank1SliceCoords,
    constraint_report,
    coords_from_point,
    minor_degree_check,
    mutate,
    random_rank1_point,
    rank1_reduce,
    reduce_via_inverse_map,
    worked_example,
)
from yangslice.rational import ONE, Rat

t = LPoly.t()


def test_worked_example_reduces_to_identity_block():
    red = rank1_reduce(worked_example())
    assert red.m == 0 and not red.b and not red.c
    assert red.d == LPoly.const(ONE) and red.a == t * t


def test_worked_example_matches_inverse_map():
    ex = worked_example(Rat(-2, 7))
    assert reduce_via_inverse_map(ex).same(rank1_reduce(ex))


def test_worked_example_is_in_the_slice():
    assert minor_degree_check(worked_example())


@pytest.mark.parametrize("lam, m", [(1, 1), (2, 2), (3, 2), (4, 3), (4, 5)])
def test_random_points_are_valid(lam, m):
    rng = random.Random(f"{lam}-{m}")
    for _ in range(5):
        p = random_rank1_point(rng, lam, m)
        assert minor_degree_check(p)
        assert coords_from_point(p.to_point(), lam).same(p)


@pytest.mark.parametrize("lam, m", [(2, 2), (3, 1), (4, 3)])
def test_closed_form_reduction_agrees(lam, m):
    rng = random.Random(f"red-{lam}-{m}")
    for _ in range(5):
        p = random_rank1_point(rng, lam, m, b_lead=1)
        closed = rank1_reduce(p)
        assert closed.same(reduce_via_inverse_map(p))
        assert closed.d == p.b and closed.m == m - 1


def test_reduction_needs_unit_leading_b():
    p = random_rank1_point(random.Random(1), 2, 2, b_lead=3)
    with pytest.raises(ValueError):
        rank1_reduce(p)


@pytest.mark.parametrize("name", CONSTRAINTS)
def test_each_mutation_breaks_its_constraint(name):
    rng = random.Random(name)
    p = random_rank1_point(rng, 3, 2)
    for _ in range(10):
        report = dict(constraint_report(mutate(rng, p, name)))
        assert not report[name]


def test_non_monic_d_is_rejected():
    p = Rank1SliceCoords(0, 1, LPoly.const(ONE) * Rat(1, 2), LPoly(), LPoly(), t * 2)
    assert not dict(constraint_report(p))["d monic of degree m"]


def test_unknown_mutation():
    with pytest.raises(ValueError):
        mutate(random.Random(0), worked_example(), "no such constraint")
