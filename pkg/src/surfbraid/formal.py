"""Words over named generators, presentations, and verification records.

Formal words are tuples of ``(symbol, +1 | -1)`` pairs.  They are used to
state presentation relations and to evaluate them inside a concrete model
through a generator table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

FormalWord = tuple  # tuple[tuple[str, int], ...]

_ATOM = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_formal(text: str) -> FormalWord:
    """Parse ``"a1 sigma^-1 a1^2"``; ``1`` is the empty word."""
    out: list[tuple[str, int]] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _ATOM.match(tok)
        if not m:
            raise ValueError(f"bad atom {tok!r}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([(m.group(1), 1 if k > 0 else -1)] * abs(k))
    return tuple(out)


def format_formal(word: FormalWord) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        sym, e = word[i]
        j = i
        while j < len(word) and word[j] == (sym, e):
            j += 1
        k = (j - i) * e
        parts.append(sym if k == 1 else f"{sym}^{k}")
        i = j
    return " ".join(parts)


def free_reduce(word: Iterable[tuple[str, int]]) -> FormalWord:
    out: list[tuple[str, int]] = []
    for sym, e in word:
        if out and out[-1] == (sym, -e):
            out.pop()
        else:
            out.append((sym, e))
    return tuple(out)


def formal_inverse(word: FormalWord) -> FormalWord:
    return tuple((s, -e) for s, e in reversed(word))


def evaluate(word: FormalWord, table: Mapping[str, object], one):
    """Multiply out ``word`` in a model whose elements support ``*`` and ``inverse()``."""
    inverses: dict[str, object] = {}
    acc = one
    for sym, e in word:
        g = table[sym]
        if e < 0:
            if sym not in inverses:
                inverses[sym] = g.inverse()
            g = inverses[sym]
        acc = acc * g
    return acc


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[FormalWord, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            for sym, _ in r:
                if sym not in gens:
                    raise ValueError(f"relator mentions undeclared generator {sym!r}")

    @classmethod
    def from_relations(cls, generators: Sequence[str],
                       relations: Sequence[tuple[str, str, str]]) -> "Presentation":
        """Build from ``(name, lhs, rhs)`` triples; each becomes the relator lhs * rhs^-1."""
        rels = []
        names = []
        for name, lhs, rhs in relations:
            rels.append(free_reduce(parse_formal(lhs) + formal_inverse(parse_formal(rhs))))
            names.append(name)
        return cls(tuple(generators), tuple(rels), tuple(names))

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """First non-comment line lists generators; every further line is a relator.

        A relator line may be written ``lhs = rhs``.
        """
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty presentation")
        gens = tuple(lines[0].replace(",", " ").split())
        rels = []
        for ln in lines[1:]:
            if "=" in ln:
                lhs, rhs = ln.split("=", 1)
                rels.append(free_reduce(parse_formal(lhs) + formal_inverse(parse_formal(rhs))))
            else:
                rels.append(free_reduce(parse_formal(ln)))
        return cls(gens, tuple(rels))


@dataclass(frozen=True)
class Check:
    """One line of a verification report."""

    name: str
    holds: bool
    detail: str = ""

    def line(self) -> str:
        status = "holds" if self.holds else "FAILS"
        return f"{self.name}: {status}" + (f"  [{self.detail}]" if self.detail else "")


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, holds: bool, detail: str = "") -> Check:
        c = Check(name, bool(holds), detail)
        self.checks.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def lines(self) -> list[str]:
        return [f"== {self.title} =="] + [c.line() for c in self.checks] + [f"note: {n}" for n in self.notes]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "holds": c.holds, "detail": c.detail} for c in self.checks],
            "notes": list(self.notes),
        }


def check_relations(report: Report, relations: Sequence[tuple[str, str, str]],
                    table: Mapping[str, object], one,
                    equal: Callable[[object, object], bool] = lambda a, b: a == b) -> Report:
    for name, lhs, rhs in relations:
        left = evaluate(parse_formal(lhs), table, one)
        right = evaluate(parse_formal(rhs), table, one)
        report.add(name, equal(left, right), f"{lhs} = {rhs}")
    return report
