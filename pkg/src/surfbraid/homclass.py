"""Homotopy classes of self-maps as algebraic data.

Torus classes are 2x2 integer matrices; Klein-bottle classes are
endomorphisms of ``Z x| Z`` given by the images of ``(1,0)`` and ``(0,1)``.
Conjugation is ``h'(g) = c h(g) c^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .klein import ZxZ


class NotAHomomorphism(ValueError):
    pass


class ClassParseError(ValueError):
    pass


@dataclass(frozen=True)
class TorusClass:
    """Matrix with columns beta#(1,0) = (b11, b21) and beta#(0,1) = (b12, b22)."""

    b11: int
    b12: int
    b21: int
    b22: int

    @property
    def col10(self) -> tuple[int, int]:
        return (self.b11, self.b21)

    @property
    def col01(self) -> tuple[int, int]:
        return (self.b12, self.b22)

    def __str__(self):
        return f"{self.b11},{self.b12};{self.b21},{self.b22}"


def parse_torus_class(text: str) -> TorusClass:
    """``"b11,b12;b21,b22"``."""
    rows = text.strip().split(";")
    try:
        if len(rows) != 2:
            raise ValueError
        (b11, b12), (b21, b22) = (tuple(int(x) for x in row.split(",")) for row in rows)
    except ValueError:
        raise ClassParseError(f"bad torus class {text!r}; expected 'b11,b12;b21,b22'") from None
    return TorusClass(b11, b12, b21, b22)


@dataclass(frozen=True)
class KleinHom:
    img10: ZxZ
    img01: ZxZ

    def __str__(self):
        return f"{self.img10},{self.img01}"


@dataclass(frozen=True)
class KleinHomType:
    tag: str  # "A" or "B"
    r1: int = 0
    r2: int = 0
    r: int = 0
    s: int = 0


@dataclass(frozen=True)
class KleinNormalForm:
    tag: str
    r: int
    s: int
    i: int = 0
    conjugator: ZxZ = ZxZ()

    @property
    def hom(self) -> KleinHom:
        if self.tag == "A":
            return KleinHom(ZxZ(self.r, 0), ZxZ(self.i, 2 * self.s + 1))
        return KleinHom(ZxZ(0, 0), ZxZ(self.r, 2 * self.s))

    def params(self) -> tuple:
        return (self.tag, self.r, self.i, self.s) if self.tag == "A" else (self.tag, self.r, self.s)


def anticommutator_holds(img10: ZxZ, img01: ZxZ) -> bool:
    return img10 * img01 * img10 * img01.inverse() == ZxZ()


def validate_klein_hom(img10: ZxZ | tuple, img01: ZxZ | tuple) -> KleinHom:
    """Accept the pair iff it respects the relation u1 v1 u1 v1^-1 = 1."""
    a, b = ZxZ(*img10), ZxZ(*img01)
    if not anticommutator_holds(a, b):
        raise NotAHomomorphism(f"{a},{b} does not satisfy [u1, v1]' = 1")
    return KleinHom(a, b)


def klein_hom_type(h: KleinHom) -> KleinHomType:
    if h.img10.s == 0 and h.img01.s % 2 == 1:
        return KleinHomType("A", r1=h.img10.r, r2=h.img01.r, s=(h.img01.s - 1) // 2)
    if h.img10 == ZxZ() and h.img01.s % 2 == 0:
        return KleinHomType("B", r=h.img01.r, s=h.img01.s // 2)
    raise NotAHomomorphism(f"{h} is neither type A nor type B")


def klein_hom_conjugate(h: KleinHom, c: ZxZ) -> KleinHom:
    ci = c.inverse()
    return KleinHom(c * h.img10 * ci, c * h.img01 * ci)


def klein_normal_form(h: KleinHom) -> KleinNormalForm:
    t = klein_hom_type(h)
    if t.tag == "A":
        r1, r2 = t.r1, t.r2
        if r2 % 2 == 0:
            c = ZxZ(-r2 // 2, 0) if r1 >= 0 else ZxZ(r2 // 2, 1)
        else:
            c = ZxZ((-r2 + 1) // 2, 0) if r1 >= 0 else ZxZ((r2 + 1) // 2, 1)
        nf = KleinNormalForm("A", r=abs(r1), s=t.s, i=r2 % 2, conjugator=c)
    else:
        c = ZxZ(0, 1) if t.r < 0 else ZxZ()
        nf = KleinNormalForm("B", r=abs(t.r), s=t.s, conjugator=c)
    assert klein_hom_conjugate(h, nf.conjugator) == nf.hom
    return nf


def lifts_to_torus(h: KleinHom) -> bool:
    """Both images lie in the image {(r, s): s even} of Z + Z -> Z x| Z, (1,0)->(1,0), (0,1)->(0,2)."""
    return h.img10.s % 2 == 0 and h.img01.s % 2 == 0


_PAIR = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*,\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_klein_hom(text: str) -> KleinHom:
    """``"(r1,s1),(r2,s2)"``; raises NotAHomomorphism for invalid pairs."""
    m = _PAIR.match(text)
    if not m:
        raise ClassParseError(f"bad Klein hom {text!r}; expected '(r1,s1),(r2,s2)'")
    a, b, c, d = (int(x) for x in m.groups())
    return validate_klein_hom((a, b), (c, d))


def find_conjugator(h1: KleinHom, h2: KleinHom, bound: int) -> Optional[ZxZ]:
    """Some c with coordinates in [-bound, bound] and c h1 c^-1 = h2, if any."""
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            c = ZxZ(a, b)
            if klein_hom_conjugate(h1, c) == h2:
                return c
    return None
