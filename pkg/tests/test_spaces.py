import random
from fractions import Fraction

import pytest

from qformlab.etaq import ligozat_check
from qformlab.qseries import GRADE, QSeries
from qformlab.spaces import (
    SPACE_DISCRIMINANTS,
    basis_expansions,
    build_basis,
    solve_in_basis,
    sturm_bound,
    verify_basis,
)

EXPECTED_DIMENSIONS = {-3: 12, -4: 12, -8: 10, -24: 10}
EXPECTED_EISENSTEIN = {-3: 8, -4: 8, -8: 4, -24: 4}


def test_sturm_bound():
    # weight 3 on Gamma_0(24): (3/12) * [SL2(Z) : Gamma_0(24)] = 12
    assert sturm_bound() == 12


def test_space_list():
    assert SPACE_DISCRIMINANTS == (-3, -4, -8, -24)


@pytest.mark.parametrize("disc", SPACE_DISCRIMINANTS)
def test_basis_shape(disc):
    basis = build_basis(disc)
    assert basis.dimension == EXPECTED_DIMENSIONS[disc]
    assert len(basis.eisenstein) == EXPECTED_EISENSTEIN[disc]
    assert len(basis.cusp) == basis.dimension - len(basis.eisenstein)
    assert len(basis.labels()) == basis.dimension


@pytest.mark.parametrize("disc", SPACE_DISCRIMINANTS)
def test_verify_basis(disc):
    rep = verify_basis(disc)
    assert rep.cusp_forms_ok
    assert rep.characters_ok
    assert rep.weights_ok
    assert rep.valuations_distinct
    assert rep.rank == EXPECTED_DIMENSIONS[disc]
    assert rep.rank_ok
    assert rep.ok


@pytest.mark.parametrize("disc", SPACE_DISCRIMINANTS)
def test_cusp_elements_are_certified(disc):
    basis = build_basis(disc)
    for f in basis.cusp:
        rep = ligozat_check(f)
        assert rep.is_holomorphic and rep.is_cuspidal
        assert rep.weight == 3
        assert rep.character.discriminant == disc


def test_cusp_valuations():
    assert [f.valuation24() // GRADE for f in build_basis(-3).cusp] == [1, 2, 3, 5]
    assert [f.valuation24() // GRADE for f in build_basis(-4).cusp] == [1, 2, 3, 4]
    assert [f.valuation24() // GRADE for f in build_basis(-8).cusp] == [1, 2, 3, 4, 5, 6]
    assert [f.valuation24() // GRADE for f in build_basis(-24).cusp] == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("disc", SPACE_DISCRIMINANTS)
def test_solve_in_basis_round_trip(disc):
    # random rational combinations resolve to their own coordinates
    basis = build_basis(disc)
    exps = basis_expansions(basis, 30)
    rng = random.Random(disc)
    for _ in range(3):
        coords = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in exps]
        f = QSeries.zero(30 * GRADE)
        for x, e in zip(coords, exps):
            if x:
                f = f + QSeries.from_terms(
                    ((ee, x * c) for ee, c in e.terms()), e.trunc
                )
        got = solve_in_basis(f, basis, exps)
        assert list(got) == coords


def test_solve_in_basis_rejects_nonmember(any_disc=-3):
    basis = build_basis(any_disc)
    exps = basis_expansions(basis, 30)
    f = QSeries.from_terms([(0, 1)], 30 * GRADE)  # the constant 1 is not in M_3
    with pytest.raises(ValueError):
        solve_in_basis(f, basis, exps)


def test_expansions_are_cached():
    basis = build_basis(-8)
    a = basis_expansions(basis, 25)
    b = basis_expansions(basis, 25)
    assert a is b
