import pytest

from yangslice.rational import Rat

from yangslice.cartan import (
    CartanError,
    DominanceError,
    cartan,
    coroot_decomposition,
    is_antidominant,
    is_dominant,
    positive_roots,
    root_vector_normalisation,
    root_vector_pairing,
)


def test_a2_off_diagonal_form():
    assert cartan("A2").form(0, 1) == -1


def test_b2_form_is_symmetric():
    b2 = cartan("B2")
    assert b2.a == ((2, -1), (-2, 2)) and b2.d == (2, 1)
    assert b2.form(0, 1) == b2.form(1, 0) == -2


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "A3"])
def test_diagonal_form(name):
    dat = cartan(name)
    assert all(dat.form(i, i) == 2 * dat.d[i] for i in dat.nodes)


def test_column_convention_transposes():
    dat = cartan((((2, -2), (-1, 2)), None), convention="column")
    assert dat.a == ((2, -1), (-2, 2)) and dat.d == (2, 1)


def test_non_symmetrizable_matrix_rejected():
    with pytest.raises(CartanError):
        cartan((((2, -1, 0), (-1, 2, -1), (-1, 0, 2)), None))


def test_unknown_type_rejected():
    with pytest.raises(CartanError):
        cartan("G7")


@pytest.mark.parametrize(
    "name, lam, mu, m",
    [("A1", (2,), (0,), (1,)), ("A2", (1, 1), (0, 0), (1, 1)), ("B2", (0, 1), (0, 0), (1, 1)), ("B2", (1, 1), (1, 0), (1, 1))],
)
def test_coroot_decomposition(name, lam, mu, m):
    assert coroot_decomposition(cartan(name), lam, mu) == m


def test_half_integral_decomposition_is_a_dominance_error():
    with pytest.raises(DominanceError):
        coroot_decomposition(cartan("A1"), (1,), (0,))


def test_b2_lambda_11_mu_0_is_not_a_valid_pair():
    # m would be (2, 3/2)
    with pytest.raises(DominanceError):
        coroot_decomposition(cartan("B2"), (1, 1), (0, 0))


def test_mu_above_lambda_rejected():
    with pytest.raises(DominanceError):
        coroot_decomposition(cartan("A1"), (0,), (2,))


def test_positive_roots():
    assert set(positive_roots(cartan("A1"))) == {(1,)}
    assert set(positive_roots(cartan("A2"))) == {(1, 0), (0, 1), (1, 1)}
    assert set(positive_roots(cartan("B2"))) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert len(positive_roots(cartan("A3"))) == 6


def test_b2_long_root_is_alpha_1():
    b2 = cartan("B2")
    assert b2.root_form((1, 0), (1, 0)) == 4 and b2.root_form((0, 1), (0, 1)) == 2


@pytest.mark.parametrize("coords, dom, anti", [((0, 0), True, True), ((-1, -3), False, True), ((1, -1), False, False)])
def test_dominance_predicates(coords, dom, anti):
    assert is_dominant(coords) is dom and is_antidominant(coords) is anti


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_root_vectors_are_dual(name):
    dat = cartan(name)
    for beta in positive_roots(dat):
        seq, c = root_vector_normalisation(dat, beta)
        weight = 1
        for j in seq:
            weight *= dat.d[j]
        assert c * weight * root_vector_pairing(dat, seq, seq) == 1


def test_b2_mixed_root_normalisation():
    assert root_vector_normalisation(cartan("B2"), (1, 1))[1] == Rat(-1, 2)
