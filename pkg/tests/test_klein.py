import itertools

import pytest
from hypothesis import given

from surfbraid import klein as Kl
from surfbraid.freewords import FreeWord, parse_word
from surfbraid.klein import B_ELT, IDENTITY, SIGMA, KleinBraid, ZxZ, kpure, theta_apply

from .strategies import klein_elements, klein_pure, short_words, zxz

U, V = FreeWord.gen(1), FreeWord.gen(2)
B = Kl.k2_B()


def w(text):
    return parse_word(text, Kl.NAMES)


def test_zxz_examples():
    assert ZxZ(1, 1) * ZxZ(1, 0) == ZxZ(0, 1)
    assert ZxZ(3, -2) * ZxZ() == ZxZ(3, -2)
    assert ZxZ(2, 1).inverse() == ZxZ(2, -1)


def test_zxz_group_laws_exhaustive():
    R = range(-3, 4)
    els = [ZxZ(r, s) for r in R for s in R]
    for a, b, c in itertools.product(els[::3], els[::2], els[::5]):
        assert (a * b) * c == a * (b * c)
    for a in els:
        assert a * a.inverse() == ZxZ() == a.inverse() * a


def test_delta():
    assert Kl.delta(0) == 0 and Kl.delta(3) == 1 and Kl.delta(-2) == 0


def test_theta_examples():
    assert theta_apply(ZxZ(1, 0), U) == B * U * ~B
    assert theta_apply(ZxZ(0, 1), V) == V * B
    assert theta_apply(ZxZ(1, 1), U) == ~U
    assert theta_apply(ZxZ(1, 1), U) == theta_apply(ZxZ(1, 0), theta_apply(ZxZ(0, 1), U))


@given(zxz, zxz, short_words)
def test_theta_action_law(g1, g2, word):
    assert theta_apply(g1 * g2, word) == theta_apply(g1, theta_apply(g2, word))


@given(zxz, short_words, short_words)
def test_theta_is_automorphism(g, a, b):
    assert theta_apply(g, a * b) == theta_apply(g, a) * theta_apply(g, b)
    assert theta_apply(g.inverse(), theta_apply(g, a)) == a


def test_multiply_examples():
    assert kpure("1", 1, 0) * kpure("1", 0, 1) == kpure("1", 1, 1)
    assert kpure("1", 0, 1) * kpure("u") == KleinBraid(~B * ~U * B, 0, 1)
    assert SIGMA * SIGMA == B_ELT


def test_invert_examples():
    assert kpure("1", 1, 0).inverse() == kpure("1", -1, 0)
    assert kpure("u").inverse() == kpure("u^-1")
    p = kpure("u", 1, 1)
    assert p * p.inverse() == IDENTITY == p.inverse() * p


def test_lsigma_examples():
    assert kpure("u").lsigma() == KleinBraid(B * ~U * ~B, 1, 0)
    assert kpure("1", 0, 1).lsigma() == KleinBraid(B, 0, 1)
    assert kpure("v^2").lsigma() == KleinBraid(V ** -2 * ~B, 0, 2)


def test_projection():
    assert Kl.k2_project_p1(kpure("u v", 2, -1)) == ZxZ(2, -1)
    assert IDENTITY.project_p1() == ZxZ()


def test_generator_table():
    t = Kl.k2_generator_table()
    assert t["b2"] == kpure("v^-1")
    assert t["a2"] == kpure("v", 0, -1)
    assert t["b1"] * t["b2"] == kpure("u")


def test_section():
    p10 = Kl.k2_section_phi(ZxZ(1, 0))
    t = Kl.k2_generator_table()
    assert p10 == t["b1"] * t["a1"] * t["b2"] * t["a2"]
    assert p10.project_p1() == ZxZ(1, 0)
    assert Kl.k2_section_phi(ZxZ()) == IDENTITY
    assert Kl.section_report().ok


def test_lambda_t01_alternative_is_inverse():
    assert Kl.gamma(Kl.LAMBDA_T01_INVERSE) == kpure("1", 0, -1)
    assert Kl.gamma(Kl.LAMBDA_WORDS["t01"]) == kpure("1", 0, 1)


@pytest.mark.parametrize("report", [
    Kl.k2_verify_presentations, Kl.lambda_gamma_report, Kl.theta_lemma_report,
    Kl.lsigma_closed_form_report, Kl.rs_report,
])
def test_reports_hold(report):
    rep = report()
    assert rep.ok, "\n".join(rep.lines())


def test_presentation_named_relations():
    rep = Kl.k2_verify_presentations()
    text = "\n".join(rep.lines())
    for fragment in ("TR", "(iv)", "(3)"):
        assert fragment in text


def test_formula_one_sign():
    rng = range(-6, 7)
    assert all(kpure(U ** r).lsigma() == Kl.lsigma_closed_u(r, +1) for r in rng)
    assert [r for r in rng if kpure(U ** r).lsigma() == Kl.lsigma_closed_u(r, -1)] == [0]
    assert any("+r" in n for n in Kl.lsigma_closed_form_report().notes)


def test_lsigma_base_images_independent_route():
    derived = Kl.lsigma_base_from_presentation()
    assert derived == Kl.LSIGMA_BASE


@given(klein_elements(), klein_elements(), klein_elements())
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == IDENTITY


@given(klein_pure, klein_pure)
def test_lsigma_automorphism(p, q):
    assert (p * q).lsigma() == p.lsigma() * q.lsigma()
    assert p.lsigma().lsigma() == B_ELT * p * B_ELT.inverse()


@given(klein_pure)
def test_lsigma_projection_shift(p):
    phi = ZxZ()
    for c in p.w.letters:
        e = ZxZ(1, 0) if abs(c) == 1 else ZxZ(0, 1)
        phi = phi * (e if c > 0 else e.inverse())
    assert p.lsigma().project_p1() == phi * p.project_p1()


def test_parse_braid():
    assert Kl.parse_klein_braid("(u v^-1; 1, 2)") == kpure("u v^-1", 1, 2)
    assert Kl.parse_klein_braid(str(kpure("v u", -1, 3))) == kpure("v u", -1, 3)
    assert Kl.parse_klein_braid("(1; 0, 0)·s") == SIGMA
