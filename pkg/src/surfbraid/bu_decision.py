"""Borsuk-Ulam decisions for self-maps of the torus and the Klein bottle.

A class fails the Borsuk-Ulam property exactly when a pair of pure braids
``(a, b)`` satisfies the three witness conditions of its involution.  The
constructions below produce such pairs; the verifiers check them by exact
computation in the braid models.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .formal import Report
from .freewords import FreeWord
from .homclass import KleinHom, KleinNormalForm, TorusClass, klein_hom_type, klein_normal_form
from .klein import B_ELT, KleinBraid, ZxZ, delta, k2_B, kpure
from .torus import TorusBraid

X = FreeWord.gen(1)
Y = FreeWord.gen(2)
U = FreeWord.gen(1)


class InvolutionId(str, Enum):
    TAU1 = "tau1"
    TAU2 = "tau2"
    TAU3 = "tau3"

    @property
    def surface(self) -> str:
        return "klein" if self is InvolutionId.TAU3 else "torus"

    @property
    def descriptor(self) -> dict:
        """The inclusion i: Z^2 -> pi1(M) of the orbit-space sequence and the quotient action."""
        return _DESCRIPTORS[self]


_DESCRIPTORS = {
    InvolutionId.TAU1: {"i": {"(1,0)": "(2,0)", "(0,1)": "(0,1)"}, "theta": "theta1",
                        "orientation": "preserving", "orbit_space": "torus"},
    InvolutionId.TAU2: {"i": {"(1,0)": "(1,0)", "(0,1)": "(0,2)"}, "theta": "theta2",
                        "orientation": "reversing", "orbit_space": "klein"},
    InvolutionId.TAU3: {"i": {"(1,0)": "(2,0)", "(0,1)": "(0,1)"}, "theta": "theta3",
                        "orientation": "preserving", "orbit_space": "klein"},
}


def parse_involution(text: str) -> InvolutionId:
    try:
        return InvolutionId(text.strip().lower())
    except ValueError:
        raise ValueError(f"unknown involution {text!r}; expected tau1, tau2 or tau3") from None


class HasBorsukUlam(ValueError):
    """Raised when a witness is requested for a class with the Borsuk-Ulam property."""


@dataclass(frozen=True)
class TorusWitness:
    a: TorusBraid
    b: TorusBraid
    lemma_tag: InvolutionId

    def __str__(self):
        return f"a = {self.a}, b = {self.b}"


@dataclass(frozen=True)
class KleinWitness:
    a: KleinBraid
    b: KleinBraid

    def __str__(self):
        return f"a = {self.a}, b = {self.b}"


Witness = Union[TorusWitness, KleinWitness]


@dataclass(frozen=True)
class Verification:
    """Outcome of the three witness conditions."""

    conditions: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(h for _, h in self.conditions)

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict[str, bool]:
        return dict(self.conditions)


@dataclass(frozen=True)
class Decision:
    surface: str
    involution: InvolutionId
    subject: str
    bu: bool
    reason: str
    witness: Optional[Witness] = None
    verification: Optional[Verification] = None
    normal_form: Optional[KleinNormalForm] = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        out = {
            "surface": self.surface,
            "involution": self.involution.value,
            "input": self.subject,
            "bu": self.bu,
            "reason": self.reason,
            "witness": None,
            "conditions": None,
        }
        if self.witness is not None:
            out["witness"] = {"a": str(self.witness.a), "b": str(self.witness.b)}
            out["conditions"] = self.verification.as_dict()
        if self.normal_form is not None:
            nf = self.normal_form
            out["normal_form"] = {"type": nf.tag, "r": nf.r, "s": nf.s,
                                  **({"i": nf.i} if nf.tag == "A" else {}),
                                  "image10": str(nf.hom.img10), "image01": str(nf.hom.img01),
                                  "conjugator": str(nf.conjugator)}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def lines(self) -> list[str]:
        d = self.to_dict()
        out = [f"surface: {d['surface']}", f"involution: {d['involution']}", f"input: {d['input']}"]
        if "normal_form" in d:
            nf = d["normal_form"]
            out.append(f"normal_form: type {nf['type']} images {nf['image10']},{nf['image01']}"
                       f" conjugator {nf['conjugator']}")
        out += [f"bu: {str(self.bu).lower()}", f"reason: {self.reason}"]
        if self.witness is not None:
            out.append(f"witness: {self.witness}")
            for name, holds in self.verification.conditions:
                out.append(f"condition {name}: {'holds' if holds else 'FAILS'}")
        out += [f"note: {n}" for n in self.notes]
        return out


# -- torus -------------------------------------------------------------------

def torus_has_bu(c: TorusClass, inv: InvolutionId) -> bool:
    inv = InvolutionId(inv)
    if inv is InvolutionId.TAU1:
        return False
    if inv is InvolutionId.TAU2:
        return (c.b11, c.b21) != (0, 0) and c.b12 % 2 == 0 and c.b22 % 2 == 0
    raise ValueError("tau3 acts on the Klein bottle, not the torus")


def construct_torus_witness(c: TorusClass, inv: InvolutionId) -> TorusWitness:
    inv = InvolutionId(inv)
    if torus_has_bu(c, inv):
        raise HasBorsukUlam(f"class {c} has the Borsuk-Ulam property for {inv.value}")
    b11, b12, b21, b22 = c.b11, c.b12, c.b21, c.b22
    if inv is InvolutionId.TAU1:
        r, i = divmod(b11, 2)
        s, j = divmod(b21, 2)
        a = TorusBraid(X ** i * Y ** j, r, s)
        b = TorusBraid(FreeWord.identity(), b12, b22)
    elif b12 % 2 and b22 % 2:
        r, s = (b12 - 1) // 2, (b22 - 1) // 2
        # third coordinate of a is b21; with b12 there it only verifies when b12 = b21
        a = TorusBraid(X ** (-2 * b11) * Y ** (-2 * b21), b11, b21)
        b = TorusBraid(Y ** (1 + 2 * b21) * ~X, r + 1, s - b21)
    elif b12 % 2:
        r, s = (b12 - 1) // 2, b22 // 2
        a = TorusBraid(X ** -b11 * Y ** (-2 * b21 - 1) * X ** -b11 * Y, b11, b21)
        b = TorusBraid(~X, r + 1, s)
    elif b22 % 2:
        r, s = b12 // 2, (b22 - 1) // 2
        a = TorusBraid(X ** (1 - 2 * b11) * Y ** -b21 * ~X * Y ** -b21, b11, b21)
        b = TorusBraid(X ** (1 - 2 * b11) * Y * ~X, b11 + r, s)
    else:
        a = TorusBraid(FreeWord.identity())
        b = TorusBraid(FreeWord.identity(), b12 // 2, b22 // 2)
    return TorusWitness(a, b, inv)


def literal_tau2_both_odd(c: TorusClass) -> TorusWitness:
    """The both-odd construction with b12 as the third coordinate of a, kept for comparison."""
    r, s = (c.b12 - 1) // 2, (c.b22 - 1) // 2
    a = TorusBraid(X ** (-2 * c.b11) * Y ** (-2 * c.b21), c.b11, c.b12)
    b = TorusBraid(Y ** (1 + 2 * c.b21) * ~X, r + 1, s - c.b21)
    return TorusWitness(a, b, InvolutionId.TAU2)


def verify_torus_witness(c: TorusClass, w: TorusWitness) -> Verification:
    a, b = w.a, w.b
    if w.lemma_tag is InvolutionId.TAU1:
        conds = (
            ("(i) a l(b) = b a", a * b.lsigma() == b * a),
            ("(ii) beta(1,0) = p1(a l(a))", (a * a.lsigma()).project_p1() == c.col10),
            ("(iii) beta(0,1) = p1(b)", b.project_p1() == c.col01),
        )
    elif w.lemma_tag is InvolutionId.TAU2:
        conds = (
            ("(i) a b l(a) = b", a * b * a.lsigma() == b),
            ("(ii) beta(1,0) = p1(a)", a.project_p1() == c.col10),
            ("(iii) beta(0,1) = p1(b l(b))", (b * b.lsigma()).project_p1() == c.col01),
        )
    else:
        raise ValueError("torus witnesses are for tau1 or tau2")
    return Verification(conds)


def decide_torus(c: TorusClass, inv: InvolutionId) -> Decision:
    inv = InvolutionId(inv)
    bu = torus_has_bu(c, inv)
    if inv is InvolutionId.TAU1:
        reason = "tau1-never: orientation-preserving involution, no class has the property"
    elif bu:
        reason = "tau2-criterion: (b11,b21) != (0,0) and b12, b22 even"
    else:
        reason = "tau2-criterion: b12 or b22 odd, or (b11,b21) = (0,0)"
    if bu:
        return Decision("torus", inv, str(c), True, reason)
    w = construct_torus_witness(c, inv)
    v = verify_torus_witness(c, w)
    return Decision("torus", inv, str(c), False, reason, w, v)


# -- Klein bottle ------------------------------------------------------------

def construct_klein_witness(nf: KleinNormalForm) -> KleinWitness:
    if nf.tag != "A":
        raise HasBorsukUlam("type B homomorphisms have the Borsuk-Ulam property")
    if nf.r < 0 or nf.i not in (0, 1):
        raise ValueError("not a normal form")
    m, odd = divmod(nf.r, 2)
    B = k2_B()
    if odd:
        a = kpure(U * B ** -m, m, 0)
        b = kpure(~U * B ** delta(nf.i + 1), nf.i, 2 * nf.s + 1)
    else:
        a = kpure(FreeWord.identity(), m, 0)
        b = kpure(B, nf.i, 2 * nf.s + 1)
    return KleinWitness(a, b)


def verify_klein_witness(h: KleinHom, w: KleinWitness) -> Verification:
    a, b = w.a, w.b
    la = a.lsigma()
    conds = (
        ("(i) l(a) l(b) sigma^2 a = b", la * b.lsigma() * B_ELT * a == b),
        ("(ii) beta(1,0) = p1(l(a) a)", (la * a).project_p1() == h.img10),
        ("(iii) beta(0,1) = p1(b)", b.project_p1() == h.img01),
    )
    return Verification(conds)


def decide_klein(h: KleinHom) -> Decision:
    """Type B classes have the property; type A classes get a witness for their normal form.

    The witness is checked against the normal form, not transported back along
    the conjugator.
    """
    nf = klein_normal_form(h)
    if klein_hom_type(h).tag == "B":
        return Decision("klein", InvolutionId.TAU3, str(h), True,
                        "tau3-lift: type B, lifts to the torus", normal_form=nf)
    w = construct_klein_witness(nf)
    v = verify_klein_witness(nf.hom, w)
    notes = () if nf.conjugator == ZxZ() else (
        f"witness is for the normal form, conjugate to the input by {nf.conjugator}",)
    return Decision("klein", InvolutionId.TAU3, str(h), False,
                    "tau3-lift: type A, does not lift to the torus", w, v, nf, notes)


def tau2_witness_report(bound: int = 3) -> Report:
    """Each tau2 construction case over all matrices with entries in [-bound, bound]."""
    report = Report("tau2 witness constructions")
    cases: dict[str, list[bool]] = {"b12, b22 odd": [], "b12 odd, b22 even": [],
                                    "b12 even, b22 odd": [], "(b11,b21) = 0, b12, b22 even": []}
    literal_hits = literal_total = 0
    R = range(-bound, bound + 1)
    for t in itertools.product(R, R, R, R):
        c = TorusClass(*t)
        if torus_has_bu(c, InvolutionId.TAU2):
            continue
        ok = verify_torus_witness(c, construct_torus_witness(c, InvolutionId.TAU2)).ok
        if c.b12 % 2 and c.b22 % 2:
            cases["b12, b22 odd"].append(ok)
            literal_total += 1
            if verify_torus_witness(c, literal_tau2_both_odd(c)).ok:
                literal_hits += 1
                if c.b12 != c.b21:
                    report.add(f"literal both-odd witness only when b12 = b21 ({c})", False)
        elif c.b12 % 2:
            cases["b12 odd, b22 even"].append(ok)
        elif c.b22 % 2:
            cases["b12 even, b22 odd"].append(ok)
        else:
            cases["(b11,b21) = 0, b12, b22 even"].append(ok)
    for name, oks in cases.items():
        report.add(f"{name}: {len(oks)} classes verify", all(oks))
    report.notes.append(
        f"both-odd case: a = (x^(-2 b11) y^(-2 b21), b11, b21) verifies everywhere; with b12 as the "
        f"third coordinate it verifies for {literal_hits} of {literal_total} classes, exactly those with b12 = b21")
    return report
