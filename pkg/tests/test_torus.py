import pytest
from hypothesis import given

from surfbraid import torus as T
from surfbraid.freewords import FreeWord, WordParseError, parse_word
from surfbraid.torus import IDENTITY, SIGMA, TorusBraid, pure

from .strategies import torus_elements, torus_pure

B = T.t2_B()
BB = TorusBraid(B)


def test_full_twist():
    assert B == parse_word("x y^-1 x^-1 y")
    assert (B.exponent_sum(1), B.exponent_sum(2)) == (0, 0)
    assert not B.is_palindrome()


def test_multiply_examples():
    assert pure("x") * pure("y", 0, 1) == pure("x y", 0, 1)
    assert SIGMA * SIGMA == BB
    p = TorusBraid(FreeWord.identity(), 1, 0, 1) * TorusBraid(FreeWord.identity(), 0, 1, 1)
    assert p == pure(B, 1, 1)


def test_invert_examples():
    assert pure("x", 1, 0).inverse() == pure("x^-1", -1, 0)
    assert IDENTITY.inverse() == IDENTITY
    q = SIGMA.inverse()
    assert q == TorusBraid(~B, 0, 0, 1)
    assert q * SIGMA == IDENTITY == SIGMA * q


def test_lsigma_examples():
    assert pure("x").lsigma() == TorusBraid(B * FreeWord.gen(1, -1), 1, 0)
    assert pure("y").lsigma() == TorusBraid(B * FreeWord.gen(2, -1), 0, 1)
    assert pure("1", 1, 0).lsigma() == pure("1", 1, 0)
    assert pure("x y").lsigma() == pure("x y^-1 x^-2", 1, 1)


def test_projection():
    assert pure("x y^-1", 3, -2).project_p1() == (3, -2)
    assert T.t2_project_p1(IDENTITY) == (0, 0)


def test_generator_table():
    t = T.t2_generator_table()
    assert t["rho21"] == pure("x")
    assert t["rho22"] == pure("y")
    assert t["rho11"] * t["B"].inverse() * t["rho21"] == pure("1", 1, 0)
    assert t["rho12"] * t["B"].inverse() * t["rho22"] == pure("1", 0, 1)
    assert t["rho11"] == pure("y^-1 x^-1 y", 1, 0)


def test_presentation_holds():
    rep = T.t2_verify_presentation()
    assert rep.ok, "\n".join(rep.lines())
    names = [c.name for c in rep.checks]
    assert sum(n.startswith("(vi)") for n in names) == 8
    assert any(n.startswith("(iv)") for n in names)


def test_parse_braid():
    assert T.parse_torus_braid("(x y^-1; 2, -1)") == pure("x y^-1", 2, -1)
    assert T.parse_torus_braid("(1; 0, 0)·s") == SIGMA
    assert T.parse_torus_braid(str(pure("x^2 y", 1, 3))) == pure("x^2 y", 1, 3)
    with pytest.raises(WordParseError):
        T.parse_torus_braid("(x; 1)")


def test_sigma_flag_validated():
    with pytest.raises(ValueError):
        TorusBraid(FreeWord.identity(), 0, 0, 2)


@given(torus_elements(), torus_elements(), torus_elements())
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == IDENTITY == a.inverse() * a


@given(torus_pure, torus_pure)
def test_lsigma_automorphism(p, q):
    assert (p * q).lsigma() == p.lsigma() * q.lsigma()
    assert p.lsigma().lsigma() == BB * p * BB.inverse()
    assert SIGMA * p * SIGMA.inverse() == p.lsigma()


@given(torus_pure)
def test_lsigma_formula_matches_generator_images(p):
    assert T.t2_lsigma_generatorwise(p) == p.lsigma()
    ls = p.lsigma()
    assert ls.project_p1() == (p.m + p.w.exponent_sum(1), p.n + p.w.exponent_sum(2))


@pytest.mark.parametrize("m", range(-10, 11, 5))
@pytest.mark.parametrize("n", range(-10, 11, 5))
def test_lsigma_fixes_centre(m, n):
    assert pure("1", m, n).lsigma() == pure("1", m, n)
