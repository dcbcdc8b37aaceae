"""Reidemeister-Schreier rewriting for a subgroup of index 2.

The transversal is ``{1, t}`` for a single generator ``t`` of odd parity.
Subgroup generators are ``rho(c, g) = c g rep(c g)^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .formal import FormalWord, Presentation, format_formal, free_reduce


class NotIndexTwo(ValueError):
    """The parity map does not cut out a subgroup of index 2."""


@dataclass(frozen=True)
class Rewritten:
    presentation: Presentation
    # subgroup generator name -> its expression c g rep(cg)^-1 in the parent generators
    definitions: dict[str, FormalWord]
    trivial: tuple[str, ...]
    # relator index in ``presentation.relators`` -> (source relator, coset label)
    sources: tuple[tuple[int, str], ...]


def rho_name(coset: str, gen: str) -> str:
    return f"rho({coset},{gen})"


def rs_rewrite_index2(pres: Presentation, parity: Mapping[str, int], odd_generator: str) -> Rewritten:
    if set(parity) != set(pres.generators):
        raise NotIndexTwo("parity must be given for every generator")
    if parity[odd_generator] % 2 != 1:
        raise NotIndexTwo(f"{odd_generator!r} must have odd parity")
    for k, r in enumerate(pres.relators):
        if sum(parity[s] for s, _ in r) % 2:
            raise NotIndexTwo(f"relator {k} ({format_formal(r)}) has odd parity")

    t = odd_generator
    reps: dict[int, FormalWord] = {0: (), 1: ((t, 1),)}
    label = {0: "1", 1: t}

    definitions: dict[str, FormalWord] = {}
    trivial = []
    for c in (0, 1):
        for g in pres.generators:
            target = (c + parity[g]) % 2
            word = free_reduce(reps[c] + ((g, 1),) + tuple((s, -e) for s, e in reversed(reps[target])))
            name = rho_name(label[c], g)
            if word:
                definitions[name] = word
            else:
                trivial.append(name)

    def tau(word: FormalWord, start: int = 0) -> FormalWord:
        out = []
        c = start
        for g, e in word:
            if e > 0:
                name = rho_name(label[c], g)
                c = (c + parity[g]) % 2
                if name in definitions:
                    out.append((name, 1))
            else:
                c = (c + parity[g]) % 2
                name = rho_name(label[c], g)
                if name in definitions:
                    out.append((name, -1))
        if c != start:
            raise NotIndexTwo("rewritten word does not close up")
        return free_reduce(out)

    relators = []
    sources = []
    for k, r in enumerate(pres.relators):
        for c in (0, 1):
            conj = reps[c] + r + tuple((s, -e) for s, e in reversed(reps[c]))
            relators.append(tau(conj))
            sources.append((k, label[c]))
    sub = Presentation(tuple(definitions), tuple(relators))
    return Rewritten(sub, definitions, tuple(trivial), tuple(sources))
