"""The 2-string braid groups of the torus.

``P2(T^2)`` is modelled as ``F(x, y) + Z + Z``: a pure braid is a triple
``(w, m, n)`` with ``w`` a reduced word and ``(m, n)`` the central
coordinates.  ``B2(T^2)`` is the union of ``P2`` and the coset ``P2 * sigma``
with ``sigma**2 = (B, 0, 0)`` and ``B = [x, y^-1]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import _kernels as K
from .formal import Report, check_relations
from .freewords import FreeWord, WordParseError, format_word, parse_word

X = FreeWord.gen(1)
Y = FreeWord.gen(2)
NAMES = ("x", "y")

_XYI = (1, -2)       # x y^-1
_YXI = (2, -1)       # y x^-1
_B = (1, -2, -1, 2)  # [x, y^-1] = x y^-1 x^-1 y


def t2_B() -> FreeWord:
    """The full twist ``B = x y^-1 x^-1 y``."""
    return FreeWord._wrap(_B)


@dataclass(frozen=True, slots=True)
class TorusBraid:
    """``(w, m, n) * sigma**sigma``; with ``sigma == 0`` this is a pure braid."""

    w: FreeWord
    m: int = 0
    n: int = 0
    sigma: int = 0

    def __post_init__(self):
        if self.sigma not in (0, 1):
            raise ValueError("sigma flag must be 0 or 1")

    @property
    def is_pure(self) -> bool:
        return self.sigma == 0

    @property
    def pure(self) -> "TorusBraid":
        return self if self.sigma == 0 else TorusBraid(self.w, self.m, self.n)

    def __mul__(self, other: "TorusBraid") -> "TorusBraid":
        if not isinstance(other, TorusBraid):
            return NotImplemented
        if self.sigma:
            q = _lsigma_pure(other.w.letters, other.m, other.n)
        else:
            q = (other.w.letters, other.m, other.n)
        w = K.mul(self.w.letters, q[0])
        m = self.m + q[1]
        n = self.n + q[2]
        if self.sigma and other.sigma:
            w = K.mul(w, _B)
        return TorusBraid(FreeWord._wrap(w), m, n, (self.sigma + other.sigma) % 2)

    def inverse(self) -> "TorusBraid":
        winv = K.inv(self.w.letters)
        if not self.sigma:
            return TorusBraid(FreeWord._wrap(winv), -self.m, -self.n)
        # (p sigma)^-1 = B^-1 l_sigma(p^-1) sigma
        lw, lm, ln = _lsigma_pure(winv, -self.m, -self.n)
        return TorusBraid(FreeWord._wrap(K.mul(K.inv(_B), lw)), lm, ln, 1)

    __invert__ = inverse

    def __pow__(self, k: int) -> "TorusBraid":
        base = self if k >= 0 else self.inverse()
        acc = IDENTITY
        for _ in range(abs(k)):
            acc = acc * base
        return acc

    def lsigma(self) -> "TorusBraid":
        w, m, n = _lsigma_pure(self.w.letters, self.m, self.n)
        return TorusBraid(FreeWord._wrap(w), m, n, self.sigma)

    def project_p1(self) -> tuple[int, int]:
        return (self.m, self.n)

    def __str__(self):
        s = f"({format_word(self.w, NAMES)}; {self.m}, {self.n})"
        return s + "·s" if self.sigma else s

    def __repr__(self):
        return f"TorusBraid({self})"


TorusPureBraid = TorusBraid

IDENTITY = TorusBraid(FreeWord.identity())
SIGMA = TorusBraid(FreeWord.identity(), 0, 0, 1)


def _lsigma_pure(w: tuple, m: int, n: int) -> tuple:
    # l_sigma(w, m, n) = (x y^-1 w(x^-1, y^-1) y x^-1, m + |w|_x, n + |w|_y)
    free = K.mul(K.mul(_XYI, K.flip(w)), _YXI)
    return free, m + K.exp_sum(w, 1), n + K.exp_sum(w, 2)


def pure(w: FreeWord | str, m: int = 0, n: int = 0) -> TorusBraid:
    if isinstance(w, str):
        w = parse_word(w, NAMES)
    return TorusBraid(w, m, n)


def t2_multiply(p: TorusBraid, q: TorusBraid) -> TorusBraid:
    return p * q


def t2_invert(p: TorusBraid) -> TorusBraid:
    return p.inverse()


def t2_lsigma(p: TorusBraid) -> TorusBraid:
    """Conjugation by sigma."""
    return p.lsigma()


def t2_project_p1(p: TorusBraid) -> tuple[int, int]:
    return p.project_p1()


def t2_lsigma_generatorwise(p: TorusBraid) -> TorusBraid:
    """l_sigma assembled from the generator images only (x, y and the two central generators)."""
    lx = TorusBraid(FreeWord._wrap(K.mul(_B, (-1,))), 1, 0)
    ly = TorusBraid(FreeWord._wrap(K.mul(_B, (-2,))), 0, 1)
    imgs = {1: lx, -1: lx.inverse(), 2: ly, -2: ly.inverse()}
    acc = IDENTITY
    for c in p.w.letters:
        acc = acc * imgs[c]
    acc = acc * TorusBraid(FreeWord.identity(), p.m, p.n)
    return TorusBraid(acc.w, acc.m, acc.n, p.sigma)


def t2_generator_table() -> dict[str, TorusBraid]:
    """Images of rho11, rho12, rho21, rho22 and B in the model.

    The rho1k entries solve ``rho1k B^-1 rho2k = (1, e_k)``.
    """
    b = TorusBraid(t2_B())
    x = TorusBraid(X)
    y = TorusBraid(Y)
    return {
        "rho21": x,
        "rho22": y,
        "B": b,
        "rho11": TorusBraid(FreeWord.identity(), 1, 0) * x.inverse() * b,
        "rho12": TorusBraid(FreeWord.identity(), 0, 1) * y.inverse() * b,
    }


def torus_relations() -> list[tuple[str, str, str]]:
    """Relations (i)-(iv) of the presentation of P2(T^2) and the consequences (v), (vi)."""
    rels = [
        ("(i) [rho11, rho12^-1] = B", "rho11 rho12^-1 rho11^-1 rho12", "B"),
        ("(i) [rho21, rho22^-1] = B", "rho21 rho22^-1 rho21^-1 rho22", "B"),
    ]
    for k in (1, 2):
        r1, r2 = f"rho1{k}", f"rho2{k}"
        rels.append((f"(ii) k={k} a", f"{r2} {r1} {r2}^-1", f"B {r1} B^-1"))
        rels.append((f"(ii) k={k} b", f"{r2}^-1 {r1} {r2}", f"{r1} B^-1 {r1} B {r1}^-1"))
    rels += [
        ("(iii) a", "rho21 rho12 rho21^-1", "B rho12 rho11^-1 B rho11 B^-1"),
        ("(iii) b", "rho21^-1 rho12 rho21",
         "B^-1 B rho11 B^-1 rho11^-1 rho12 B^-1 rho11 B rho11^-1"),
        ("(iv) a", "rho22 rho11 rho22^-1", "rho11 B^-1"),
        ("(iv) b", "rho22^-1 rho11 rho22", "rho11 B B^-1 rho12 B rho12^-1"),
    ]
    for k in (1, 2):
        r1, r2 = f"rho1{k}", f"rho2{k}"
        rels.append((f"(v) k={k}", f"{r2} B {r2}^-1", f"B {r1}^-1 B {r1} B^-1"))
    for i in (1, 2):
        for j in (1, 2):
            for k in (1, 2):
                r1, r2, rij = f"rho1{k}", f"rho2{k}", f"rho{i}{j}"
                rels.append((f"(vi) i={i} j={j} k={k}",
                             f"{r1} B^-1 {r2} {rij} {r2}^-1 B {r1}^-1", rij))
    return rels


def t2_verify_presentation() -> Report:
    """Evaluate every relation instance in the model; all must hold."""
    report = Report("P2(T^2) presentation")
    check_relations(report, torus_relations(), t2_generator_table(), IDENTITY)
    return report


_BRAID_RE = re.compile(r"^\s*\(\s*([^;]*);\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*(?:(?:·|\*|\.)\s*s)?\s*$")


def parse_torus_braid(text: str) -> TorusBraid:
    """Parse ``(w; m, n)`` or ``(w; m, n)·s``."""
    m = _BRAID_RE.match(text)
    if not m:
        raise WordParseError(f"bad torus braid {text!r}; expected '(w; m, n)' or '(w; m, n)·s'")
    sigma = 1 if text.rstrip().endswith("s") else 0
    return TorusBraid(parse_word(m.group(1), NAMES), int(m.group(2)), int(m.group(3)), sigma)
