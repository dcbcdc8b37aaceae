"""Sampled audits of the sigma-conjugation automorphism in both braid models."""

from __future__ import annotations

import random
from typing import Callable

from . import klein, torus
from .formal import Report
from .freewords import reduce


def _sampler(make: Callable, seed: int) -> Callable:
    rng = random.Random(seed)

    def sample():
        w = reduce(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 8)))
        return make(w, rng.randint(-4, 4), rng.randint(-4, 4))

    return sample


def _automorphism_checks(report: Report, sample: Callable, B, sigma, pairs: int) -> None:
    hom = conj_b = via_sigma = True
    Binv = B.inverse()
    sinv = sigma.inverse()
    for _ in range(pairs):
        p, q = sample(), sample()
        if (p * q).lsigma() != p.lsigma() * q.lsigma():
            hom = False
        if p.lsigma().lsigma() != B * p * Binv:
            conj_b = False
        if sigma * p * sinv != p.lsigma():
            via_sigma = False
    report.add(f"l(pq) = l(p) l(q) on {pairs} sampled pairs", hom)
    report.add(f"l(l(p)) = B p B^-1 on {pairs} samples (so l is bijective)", conj_b)
    report.add(f"sigma p sigma^-1 = l(p) on {pairs} samples", via_sigma)


def t2_lsigma_report(pairs: int = 500, seed: int = 0) -> Report:
    report = Report("l_sigma audit (torus)")
    sample = _sampler(torus.TorusBraid, seed)
    _automorphism_checks(report, sample, torus.TorusBraid(torus.t2_B()), torus.SIGMA, pairs)
    agree = True
    for _ in range(pairs):
        p = sample()
        if torus.t2_lsigma_generatorwise(p) != p.lsigma():
            agree = False
    report.add(f"closed formula = generator-wise images on {pairs} samples", agree)
    t = torus.t2_generator_table()
    for k in (1, 2):
        r1, r2 = t[f"rho1{k}"], t[f"rho2{k}"]
        report.add(f"l(rho1{k}) = rho2{k}", r1.lsigma() == r2)
        report.add(f"l(rho2{k}) = B rho1{k} B^-1", r2.lsigma() == t["B"] * r1 * t["B"].inverse())
        z = r1 * t["B"].inverse() * r2
        report.add(f"rho1{k} B^-1 rho2{k} is fixed by l", z.lsigma() == z, str(z))
    return report


def k2_lsigma_report(pairs: int = 500, seed: int = 0) -> Report:
    report = Report("l_sigma audit (Klein bottle)")
    sample = _sampler(klein.KleinBraid, seed)
    _automorphism_checks(report, sample, klein.B_ELT, klein.SIGMA, pairs)
    return report
