from fractions import Fraction

import pytest

from qformlab.characters import chi, sigma_twisted
from qformlab.eisenstein import EisensteinSpec, eisenstein3, parse_e3
from qformlab.qseries import GRADE


def test_constant_terms():
    # -B_{3,chi}/6 when psi is trivial, else 0
    assert EisensteinSpec(chi(-3), chi(1)).constant_term() == Fraction(-1, 9)
    assert EisensteinSpec(chi(-4), chi(1)).constant_term() == Fraction(-1, 4)
    assert EisensteinSpec(chi(-8), chi(1)).constant_term() == Fraction(-3, 2)
    assert EisensteinSpec(chi(-24), chi(1)).constant_term() == -23
    assert EisensteinSpec(chi(1), chi(-4)).constant_term() == 0
    assert EisensteinSpec(chi(-3), chi(8)).constant_term() == 0


def test_oddness_required():
    with pytest.raises(ValueError):
        EisensteinSpec(chi(1), chi(1))
    with pytest.raises(ValueError):
        EisensteinSpec(chi(-3), chi(-4))
    with pytest.raises(ValueError):
        EisensteinSpec(chi(8), chi(12))


def test_scale_must_be_positive():
    with pytest.raises(ValueError):
        EisensteinSpec(chi(-4), chi(1), 0)


def test_coefficients_are_twisted_sums():
    c, p = chi(-4), chi(1)
    f = eisenstein3(c, p, 1, 20)
    for n in range(1, 20):
        assert f.qcoeff(n) == sigma_twisted(2, c, p, n)


def test_scaling_moves_coefficients():
    c, p = chi(1), chi(-8)
    base = eisenstein3(c, p, 1, 30)
    scaled = eisenstein3(c, p, 3, 30)
    assert scaled.qcoeff(0) == 0
    for n in range(1, 30):
        expect = base.qcoeff(n // 3) if n % 3 == 0 else 0
        assert scaled.qcoeff(n) == expect


def test_first_coefficients_chi4_triv():
    # -1/4 + q + q^2 - 8 q^3 + q^4 + 26 q^5 + ...
    f = eisenstein3(chi(-4), chi(1), 1, 6)
    assert [f.qcoeff(n) for n in range(6)] == [Fraction(-1, 4), 1, 1, -8, 1, 26]


def test_label_round_trip():
    spec = EisensteinSpec(chi(-3), chi(8), 2)
    assert spec.label() == "E3[-3,8,2]"
    assert parse_e3(spec.label()) == spec
    assert parse_e3("E3[1,-4]") == EisensteinSpec(chi(1), chi(-4), 1)


def test_parse_rejects_junk():
    for text in ("E3[]", "E3[-3]", "E2[-3,1]", "E3[-3,1,0]", "eta24[1]"):
        with pytest.raises(ValueError):
            parse_e3(text)


def test_precision_guard():
    with pytest.raises(ValueError):
        eisenstein3(chi(-4), chi(1), 1, 0)
    f = eisenstein3(chi(-4), chi(1), 1, 1)
    assert f.qcoeff(0) == Fraction(-1, 4)
    assert f.trunc == GRADE
