import itertools

import pytest

from surfbraid.bu_decision import InvolutionId, verify_klein_witness, verify_torus_witness
from surfbraid.freewords import FreeWord
from surfbraid.homclass import KleinNormalForm, TorusClass, parse_klein_hom, parse_torus_class
from surfbraid.klein import KleinBraid, k2_B, kpure
from surfbraid.oracle import (CONSISTENT, COUNTEREXAMPLE, VERIFIED, AuditReport, SearchBounds,
                              audit_klein, audit_torus, check_palin2_small, check_palindrome_lemma,
                              crosscheck_decisions, search_klein_witness, search_torus_witness)
from surfbraid.torus import pure

TAU1, TAU2 = InvolutionId.TAU1, InvolutionId.TAU2


def test_bounds_validated():
    with pytest.raises(ValueError):
        SearchBounds(-1, 0)


def test_palindrome_lemma():
    assert check_palindrome_lemma(0).ok
    assert check_palindrome_lemma(0).checked == 1
    rep = check_palindrome_lemma(8)
    assert rep.ok and rep.checked > 0


def test_palin2_small_and_constructed_case():
    rep = check_palin2_small(SearchBounds(4, 0))
    assert rep.ok and rep.checked > 0
    # z = x^-2 with w = x^2 y^2 solves z w z^-1 = invert(invert_letters(w))
    x2, y2 = FreeWord.gen(1, 2), FreeWord.gen(2, 2)
    w = x2 * y2
    z = FreeWord.gen(1, -2)
    assert z * w * ~z == ~w.invert_letters()


def test_search_examples():
    assert search_torus_witness(parse_torus_class("1,0;0,2"), TAU2, SearchBounds(4, 2)) is None
    w = search_torus_witness(parse_torus_class("0,0;0,0"), TAU2, SearchBounds(0, 1))
    assert w.a == pure("1") and w.b == pure("1")
    w = search_torus_witness(parse_torus_class("1,0;0,1"), TAU1, SearchBounds(1, 1))
    assert w.a == pure("x") and w.b == pure("1", 0, 1)
    assert search_klein_witness(parse_klein_hom("(0,0),(1,2)"), SearchBounds(4, 2)) is None
    w = search_klein_witness(KleinNormalForm("A", 0, 0, 0).hom, SearchBounds(4, 1))
    assert w is not None and verify_klein_witness(KleinNormalForm("A", 0, 0, 0).hom, w).ok
    assert w.b in (KleinBraid(k2_B(), 0, 1), kpure("1", 0, 1))
    h = KleinNormalForm("A", 1, 0, 0).hom
    w = search_klein_witness(h, SearchBounds(5, 1))
    assert w is not None and verify_klein_witness(h, w).ok


@pytest.mark.parametrize("t", [(0, 1, 0, 1), (1, 0, 0, 1), (0, 0, 0, 0), (1, 1, 0, 0), (-1, 1, 1, 0),
                               (0, 2, 1, 0)])
@pytest.mark.parametrize("inv", [TAU1, TAU2])
def test_pruned_search_equals_literal_search(t, inv):
    c = TorusClass(*t)
    b = SearchBounds(1, 1)
    assert search_torus_witness(c, inv, b) == search_torus_witness(c, inv, b, prune=False)


@pytest.mark.parametrize("nf", [KleinNormalForm("A", 0, 0, 0), KleinNormalForm("A", 1, -1, 1),
                                KleinNormalForm("B", 1, 0), KleinNormalForm("A", 2, 0, 1)])
def test_pruned_klein_search_equals_literal(nf):
    b = SearchBounds(1, 1)
    assert search_klein_witness(nf.hom, b) == search_klein_witness(nf.hom, b, prune=False)


def test_parallel_search_matches_serial():
    c = parse_torus_class("1,0;0,1")
    b = SearchBounds(3, 2)
    assert search_torus_witness(c, TAU1, b, workers=3) == search_torus_witness(c, TAU1, b)
    h = KleinNormalForm("A", 1, 0, 0).hom
    assert search_klein_witness(h, SearchBounds(3, 1), workers=3) == search_klein_witness(h, SearchBounds(3, 1))


def test_search_results_verify():
    b = SearchBounds(2, 2)
    R = range(-1, 2)
    for t in itertools.product(R, R, R, R):
        c = TorusClass(*t)
        for inv in (TAU1, TAU2):
            w = search_torus_witness(c, inv, b)
            if w is not None:
                assert verify_torus_witness(c, w).ok


def test_crosscheck_default():
    rep = crosscheck_decisions(SearchBounds(3, 1), 2)
    assert rep.ok
    counts = rep.counts()
    assert counts[COUNTEREXAMPLE] == 0 and counts[VERIFIED] > 0 and counts[CONSISTENT] > 0


def test_tau1_range_one_all_verified():
    rep = audit_torus(TAU1, SearchBounds(3, 1), 1)
    assert len(rep.lines) == 81
    assert all(ln.status == VERIFIED for ln in rep.lines)


def test_klein_audit_matches_types():
    rep = audit_klein(SearchBounds(3, 1), 3)
    for ln in rep.lines:
        assert ln.status == (CONSISTENT if "type B" in ln.item else VERIFIED)


def test_audit_report_flags_counterexample():
    from surfbraid.oracle import AuditLine
    rep = AuditReport([AuditLine(VERIFIED, "a"), AuditLine(COUNTEREXAMPLE, "b", "bad")])
    assert not rep.ok and rep.counts()[COUNTEREXAMPLE] == 1
    assert rep.to_dict()["lines"][1]["status"] == COUNTEREXAMPLE
