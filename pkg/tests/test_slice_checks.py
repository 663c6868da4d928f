from yangslice.slice_checks import (
    PGL2_CASES,
    membership_check,
    pgl2_inverse_pair_check,
    pgl2_sweep,
    pi_invariance_check,
    rank1_reduction_check,
    shift_square_check,
    sl3_spot_check,
)


def _ok(results):
    assert results and all(r.passed for r in results), [r for r in results if not r.passed]
    return results


def test_pgl2_case_list():
    assert len(PGL2_CASES) == 15
    assert (0, 1) in PGL2_CASES and (4, 5) in PGL2_CASES and (4, 6) not in PGL2_CASES


def test_pgl2_single_case():
    results = _ok(pgl2_inverse_pair_check(3, 2, samples=5))
    assert all(r.witness == "5/5" for r in results)


def test_pgl2_sweep_collects_points():
    points = []
    _ok(pgl2_sweep(samples=2, collect=points))
    assert len(points) == 2 * 5 * len(PGL2_CASES)


def test_sweep_is_seeded():
    a, b = [], []
    pgl2_sweep(samples=2, seed=7, cases=[(2, 1)], collect=a)
    pgl2_sweep(samples=2, seed=7, cases=[(2, 1)], collect=b)
    assert all(p.same(q) for p, q in zip(a, b))


def test_sl3_spot():
    _ok(sl3_spot_check(samples=3))


def test_rank1_reduction():
    _ok(rank1_reduction_check(samples=20))


def test_membership_with_mutations():
    points = []
    pgl2_sweep(samples=1, collect=points)
    _ok(membership_check(points, mutations=10))


def test_pi_invariance():
    _ok(pi_invariance_check(samples=5))


def test_shift_square():
    _ok(shift_square_check(samples=5))
