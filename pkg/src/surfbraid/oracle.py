"""Brute-force checks independent of the decision procedures.

Searches enumerate candidates in a fixed order (words from
``enumerate_reduced``, then coordinates ascending), so the first witness
found is reproducible.  Pruning only skips candidates that provably fail a
coordinate condition; ``prune=False`` runs the literal enumeration.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Iterator, Optional

from . import _kernels as K
from .bu_decision import (InvolutionId, KleinWitness, TorusWitness, construct_klein_witness,
                          decide_klein, decide_torus, verify_klein_witness, verify_torus_witness)
from .freewords import FreeWord, sort_key
from .homclass import KleinHom, KleinNormalForm, TorusClass, klein_normal_form
from .klein import KleinBraid, ZxZ
from .torus import TorusBraid

VERIFIED = "VERIFIED"
CONSISTENT = "CONSISTENT"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

PARTS = (0, 1, -1, 2, -2)  # 0 is the empty word, otherwise the leading letter


@dataclass(frozen=True)
class SearchBounds:
    max_word_length: int = 3
    max_abs_coordinate: int = 1

    def __post_init__(self):
        if self.max_word_length < 0 or self.max_abs_coordinate < 0:
            raise ValueError("search bounds must be non-negative")


@dataclass
class LemmaReport:
    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def line(self) -> str:
        status = VERIFIED if self.ok else COUNTEREXAMPLE
        return f"{status} {self.name}: {self.checked} cases, {len(self.counterexamples)} counterexamples"


# -- palindromes ---------------------------------------------------------------

def check_palindrome_lemma(max_length: int = 12) -> LemmaReport:
    """A palindrome has an even x- or y-exponent sum."""
    rep = LemmaReport(f"palindrome parity, words of length <= {max_length}")
    for length in range(max_length + 1):
        for t in K.words_of_length(length):
            if not K.is_palindrome(t):
                continue
            rep.checked += 1
            if K.exp_sum(t, 1) % 2 and K.exp_sum(t, 2) % 2:
                rep.counterexamples.append(FreeWord._wrap(t))
    return rep


def check_palin2_small(bounds: SearchBounds = SearchBounds(6, 0)) -> LemmaReport:
    """If z w z^-1 = invert(invert_letters(w)) with w != 1 of even exponent sums, z has an even sum."""
    L = bounds.max_word_length
    rep = LemmaReport(f"conjugate-reversal parity, words of length <= {L}")
    words = [t for n in range(L + 1) for t in K.words_of_length(n)]
    for w in words:
        if not w or K.exp_sum(w, 1) % 2 or K.exp_sum(w, 2) % 2:
            continue
        target = K.inv(K.flip(w))
        for z in words:
            if K.mul(z, w) != K.mul(target, z):
                continue
            rep.checked += 1
            if K.exp_sum(z, 1) % 2 and K.exp_sum(z, 2) % 2:
                rep.counterexamples.append((FreeWord._wrap(z), FreeWord._wrap(w)))
    return rep


# -- search ---------------------------------------------------------------------

@lru_cache(maxsize=16)
def _words(max_length: int) -> tuple:
    return tuple(t for n in range(max_length + 1) for t in K.words_of_length(n))


def _in_part(t: tuple, part) -> bool:
    if part is None:
        return True
    return (not t) if part == 0 else (bool(t) and t[0] == part)


def _key(a, b) -> tuple:
    return (sort_key(a.w), a.m, a.n, sort_key(b.w), b.m, b.n)


def _torus_part(c: TorusClass, inv: InvolutionId, L: int, M: int, prune: bool, part) -> Optional[TorusWitness]:
    words = _words(L)
    coords = range(-M, M + 1)
    ok = lambda v: -M <= v <= M  # noqa: E731
    for wa in words:
        if not _in_part(wa, part):
            continue
        ex, ey = K.exp_sum(wa, 1), K.exp_sum(wa, 2)
        if not prune:
            a_coords = itertools.product(coords, coords)
        elif inv is InvolutionId.TAU2:
            # (ii) fixes p1(a); the coordinates of (i) force |wa| = -2 p1(a)
            if (ex, ey) != (-2 * c.b11, -2 * c.b21) or not (ok(c.b11) and ok(c.b21)):
                continue
            a_coords = [(c.b11, c.b21)]
        else:
            # (ii): 2 p1(a) + |wa| = beta(1,0)
            if (c.b11 - ex) % 2 or (c.b21 - ey) % 2:
                continue
            ma, na = (c.b11 - ex) // 2, (c.b21 - ey) // 2
            if not (ok(ma) and ok(na)):
                continue
            a_coords = [(ma, na)]
        for ma, na in a_coords:
            a = TorusBraid(FreeWord._wrap(wa), ma, na)
            for wb in words:
                fx, fy = K.exp_sum(wb, 1), K.exp_sum(wb, 2)
                if not prune:
                    b_coords = itertools.product(coords, coords)
                elif inv is InvolutionId.TAU2:
                    # (iii): 2 p1(b) + |wb| = beta(0,1)
                    if (c.b12 - fx) % 2 or (c.b22 - fy) % 2:
                        continue
                    mb, nb = (c.b12 - fx) // 2, (c.b22 - fy) // 2
                    if not (ok(mb) and ok(nb)):
                        continue
                    b_coords = [(mb, nb)]
                else:
                    # (iii) fixes p1(b); the coordinates of (i) force |wb| = 0
                    if fx or fy or not (ok(c.b12) and ok(c.b22)):
                        continue
                    b_coords = [(c.b12, c.b22)]
                for mb, nb in b_coords:
                    w = TorusWitness(a, TorusBraid(FreeWord._wrap(wb), mb, nb), inv)
                    if verify_torus_witness(c, w).ok:
                        return w
    return None


def _phi(t: tuple) -> ZxZ:
    g = ZxZ()
    for c in t:
        e = ZxZ(1, 0) if abs(c) == 1 else ZxZ(0, 1)
        g = g * (e if c > 0 else e.inverse())
    return g


def _klein_part(h: KleinHom, L: int, M: int, prune: bool, part) -> Optional[KleinWitness]:
    words = _words(L)
    coords = range(-M, M + 1)
    target = h.img01
    if prune and not (abs(target.r) <= M and abs(target.s) <= M):
        return None
    for wa in words:
        if not _in_part(wa, part):
            continue
        ph = _phi(wa)
        for ma, na in itertools.product(coords, coords):
            pa = ZxZ(ma, na)
            pla = ph * pa  # p1(l(a))
            if prune and pla * pa != h.img10:
                continue
            a = KleinBraid(FreeWord._wrap(wa), ma, na)
            for wb in words:
                if prune:
                    # p1 of (i): p1(l(a)) p1(l(b)) p1(a) = p1(b), and (iii) fixes p1(b)
                    if pla * _phi(wb) * target * pa != target:
                        continue
                    b_coords = [(target.r, target.s)]
                else:
                    b_coords = itertools.product(coords, coords)
                for mb, nb in b_coords:
                    w = KleinWitness(a, KleinBraid(FreeWord._wrap(wb), mb, nb))
                    if verify_klein_witness(h, w).ok:
                        return w
    return None


def _run_parts(fn, workers: int):
    if workers <= 1:
        return fn(None)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        found = [w for w in ex.map(fn, PARTS) if w is not None]
    return min(found, key=lambda w: _key(w.a, w.b)) if found else None


def search_torus_witness(c: TorusClass, inv: InvolutionId, bounds: SearchBounds,
                         prune: bool = True, workers: int = 1) -> Optional[TorusWitness]:
    inv = InvolutionId(inv)
    if inv is InvolutionId.TAU3:
        raise ValueError("tau3 is a Klein-bottle involution")
    fn = partial(_torus_part, c, inv, bounds.max_word_length, bounds.max_abs_coordinate, prune)
    w = _run_parts(fn, workers)
    assert w is None or verify_torus_witness(c, w).ok
    return w


def search_klein_witness(h: KleinHom, bounds: SearchBounds,
                         prune: bool = True, workers: int = 1) -> Optional[KleinWitness]:
    fn = partial(_klein_part, h, bounds.max_word_length, bounds.max_abs_coordinate, prune)
    w = _run_parts(fn, workers)
    assert w is None or verify_klein_witness(h, w).ok
    return w


# -- audit ------------------------------------------------------------------------

@dataclass(frozen=True)
class AuditLine:
    status: str
    item: str
    detail: str = ""

    def text(self) -> str:
        return f"{self.status} {self.item}" + (f": {self.detail}" if self.detail else "")


@dataclass
class AuditReport:
    lines: list[AuditLine] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[AuditLine]:
        return [ln for ln in self.lines if ln.status == COUNTEREXAMPLE]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def counts(self) -> dict[str, int]:
        out = {VERIFIED: 0, CONSISTENT: 0, COUNTEREXAMPLE: 0}
        for ln in self.lines:
            out[ln.status] += 1
        return out

    def extend(self, other: "AuditReport") -> None:
        self.lines.extend(other.lines)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "counts": self.counts(),
                "lines": [{"status": ln.status, "item": ln.item, "detail": ln.detail} for ln in self.lines]}


def torus_classes(class_range: int) -> Iterator[TorusClass]:
    R = range(-class_range, class_range + 1)
    for t in itertools.product(R, R, R, R):
        yield TorusClass(*t)


def klein_normal_forms(class_range: int) -> Iterator[KleinNormalForm]:
    for r in range(class_range + 1):
        for s in range(-class_range, class_range + 1):
            for i in (0, 1):
                yield KleinNormalForm("A", r, s, i)
            yield KleinNormalForm("B", r, s)


def _audit_item(found, verified: Optional[bool], bu: bool, label: str) -> AuditLine:
    if bu:
        if found is not None:
            return AuditLine(COUNTEREXAMPLE, label, f"bu=true but search found {found}")
        return AuditLine(CONSISTENT, label, "bu=true, no witness within bounds")
    if not verified:
        return AuditLine(COUNTEREXAMPLE, label, "bu=false but the constructed witness fails")
    seen = "search also finds one" if found is not None else "no witness within search bounds"
    return AuditLine(VERIFIED, label, f"bu=false, witness verified; {seen}")


def audit_torus(inv: InvolutionId, bounds: SearchBounds, class_range: int,
                search: bool = True, workers: int = 1) -> AuditReport:
    """Coordinates are searched within class magnitude + ``bounds.max_abs_coordinate``."""
    inv = InvolutionId(inv)
    rep = AuditReport()
    for c in torus_classes(class_range):
        d = decide_torus(c, inv)
        found = None
        if search:
            mag = max(abs(c.b11), abs(c.b12), abs(c.b21), abs(c.b22))
            b = SearchBounds(bounds.max_word_length, mag + bounds.max_abs_coordinate)
            found = search_torus_witness(c, inv, b, workers=workers)
        ok = None if d.bu else d.verification.ok
        rep.lines.append(_audit_item(found, ok, d.bu, f"torus {inv.value} {c}"))
    return rep


def audit_klein(bounds: SearchBounds, class_range: int, search: bool = True, workers: int = 1) -> AuditReport:
    rep = AuditReport()
    for nf in klein_normal_forms(class_range):
        h = nf.hom
        label = f"klein tau3 {h} type {nf.tag}"
        d = decide_klein(h)
        if d.bu != (nf.tag == "B") or klein_normal_form(h).params() != nf.params():
            rep.lines.append(AuditLine(COUNTEREXAMPLE, label, "verdict or normal form disagrees with type"))
            continue
        found = None
        if search:
            mag = max(abs(h.img10.r), abs(h.img01.r), abs(h.img01.s))
            found = search_klein_witness(h, SearchBounds(bounds.max_word_length,
                                                         mag + bounds.max_abs_coordinate), workers=workers)
        ok = None if d.bu else verify_klein_witness(h, construct_klein_witness(nf)).ok
        rep.lines.append(_audit_item(found, ok, d.bu, label))
    return rep


def crosscheck_decisions(bounds: SearchBounds = SearchBounds(), class_range: int = 2,
                         involutions=("tau1", "tau2", "tau3"), workers: int = 1) -> AuditReport:
    rep = AuditReport()
    for name in involutions:
        inv = InvolutionId(name)
        if inv is InvolutionId.TAU3:
            rep.extend(audit_klein(bounds, class_range, workers=workers))
        else:
            rep.extend(audit_torus(inv, bounds, class_range, workers=workers))
    return rep

