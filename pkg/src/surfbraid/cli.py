"""Command-line front end.

Exit status: 0 on success, 1 when a check fails or the oracle finds a
counterexample, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import _kernels
from .bu_decision import (InvolutionId, KleinWitness, TorusWitness, decide_klein, decide_torus,
                          literal_tau2_both_odd, parse_involution, tau2_witness_report,
                          verify_klein_witness, verify_torus_witness)
from .formal import Report
from .freewords import WordParseError
from .homclass import (ClassParseError, NotAHomomorphism, klein_normal_form, parse_klein_hom,
                       parse_torus_class)
from .klein import (k2_verify_presentations, lambda_gamma_report, lsigma_closed_form_report,
                    parse_klein_braid, rs_report, section_report, theta_lemma_report)
from .lsigma_audit import k2_lsigma_report, t2_lsigma_report
from .oracle import (COUNTEREXAMPLE, VERIFIED, AuditLine, AuditReport, SearchBounds,
                     check_palin2_small, check_palindrome_lemma, crosscheck_decisions)
from .torus import parse_torus_braid, t2_verify_presentation


class UsageError(Exception):
    pass


_SURFACE = {"torus": "torus", "klein": "Klein bottle"}


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.machine:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _involution(args) -> InvolutionId:
    inv = parse_involution(args.involution)
    surface = args.surface or inv.surface
    if surface != inv.surface:
        raise UsageError(f"{inv.value} is an involution of the {_SURFACE[inv.surface]}, "
                         f"not the {_SURFACE[surface]}")
    return inv


def _subject(args, inv: InvolutionId):
    if inv.surface == "torus":
        if args.cls is None:
            raise UsageError("--class is required for the torus")
        return parse_torus_class(args.cls)
    if args.hom is None:
        raise UsageError("--hom is required for the Klein bottle")
    return parse_klein_hom(args.hom)


def _decide(args):
    inv = _involution(args)
    x = _subject(args, inv)
    return decide_torus(x, inv) if inv.surface == "torus" else decide_klein(x)


def cmd_decide(args) -> int:
    d = _decide(args)
    _emit(args, {"command": "decide", **d.to_dict()}, d.lines())
    return 0 if d.bu or d.verification.ok else 1


def cmd_witness(args) -> int:
    inv = _involution(args)
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b must be given together")
    if args.a is not None:
        x = _subject(args, inv)
        if inv.surface == "torus":
            w = TorusWitness(parse_torus_braid(args.a), parse_torus_braid(args.b), inv)
            v = verify_torus_witness(x, w)
        else:
            w = KleinWitness(parse_klein_braid(args.a), parse_klein_braid(args.b))
            v = verify_klein_witness(x, w)
        payload = {"command": "witness", "input": str(x), "involution": inv.value,
                   "witness": {"a": str(w.a), "b": str(w.b)}, "conditions": v.as_dict(), "ok": v.ok}
        lines = [f"input: {x}", f"witness: {w}"]
        lines += [f"condition {n}: {'holds' if h else 'FAILS'}" for n, h in v.conditions]
        _emit(args, payload, lines)
        return 0 if v.ok else 1

    d = _decide(args)
    payload = {"command": "witness", **d.to_dict()}
    lines = [ln for ln in d.lines() if not ln.startswith(("surface:", "involution:"))]
    if d.bu:
        lines.append("no witness: the class has the Borsuk-Ulam property")
    elif inv is InvolutionId.TAU2:
        c = parse_torus_class(args.cls)
        if c.b12 % 2 and c.b22 % 2:
            lit = literal_tau2_both_odd(c)
            lv = verify_torus_witness(c, lit)
            payload["literal_variant"] = {"a": str(lit.a), "b": str(lit.b),
                                          "conditions": lv.as_dict(), "ok": lv.ok}
            lines.append(f"variant with b12 as third coordinate of a: {lit} "
                         f"({'verifies' if lv.ok else 'fails'})")
    _emit(args, payload, lines)
    return 0 if d.bu or d.verification.ok else 1


def verification_reports() -> list[Report]:
    return [
        t2_verify_presentation(),
        k2_verify_presentations(),
        lambda_gamma_report(),
        theta_lemma_report(),
        lsigma_closed_form_report(),
        t2_lsigma_report(),
        k2_lsigma_report(),
        section_report(),
        rs_report(),
        tau2_witness_report(),
    ]


def cmd_verify(args) -> int:
    reports = verification_reports()
    ok = all(r.ok for r in reports)
    lines = [ln for r in reports for ln in r.lines()]
    lines.append(f"overall: {'all checks hold' if ok else 'FAILURES'}")
    _emit(args, {"command": "verify", "ok": ok, "reports": [r.to_dict() for r in reports]}, lines)
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    bounds = SearchBounds(args.max_word_length, args.max_coordinate)
    rep = AuditReport()
    for lemma in (check_palindrome_lemma(args.palindrome_length),
                  check_palin2_small(SearchBounds(args.palin2_length, 0))):
        status = VERIFIED if lemma.ok else COUNTEREXAMPLE
        detail = f"{lemma.checked} cases" + (
            f", counterexamples {[str(c) for c in lemma.counterexamples[:5]]}" if not lemma.ok else "")
        rep.lines.append(AuditLine(status, lemma.name, detail))
    invs = [parse_involution(i).value for i in args.involutions.split(",")] if args.involutions else \
        ["tau1", "tau2", "tau3"]
    rep.extend(crosscheck_decisions(bounds, args.class_range, invs, workers=args.workers))
    counts = rep.counts()
    lines = [] if args.summary else [ln.text() for ln in rep.lines]
    lines += [ln.text() for ln in rep.counterexamples] if args.summary else []
    lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in counts.items()))
    payload = {"command": "oracle", "bounds": {"max_word_length": bounds.max_word_length,
                                               "max_abs_coordinate": bounds.max_abs_coordinate},
               "class_range": args.class_range, **rep.to_dict()}
    _emit(args, payload, lines)
    return 0 if rep.ok else 1


def cmd_normal_form(args) -> int:
    h = parse_klein_hom(args.hom)
    nf = klein_normal_form(h)
    payload = {"command": "normal-form", "input": str(h), "type": nf.tag, "params": list(nf.params()[1:]),
               "image10": str(nf.hom.img10), "image01": str(nf.hom.img01), "conjugator": str(nf.conjugator)}
    _emit(args, payload, [f"input: {h}", f"type: {nf.tag}",
                          f"normal form: {nf.hom}", f"conjugator: {nf.conjugator}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfbraid",
                                description="Borsuk-Ulam decisions for self-maps of the torus and Klein bottle.")
    p.add_argument("--version", action="version", version=f"%(prog)s (kernels: {_kernels.IMPLEMENTATION})")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--machine", action="store_true", help="emit one JSON document")

    def subject(sp):
        sp.add_argument("--surface", choices=("torus", "klein"))
        sp.add_argument("--involution", required=True, help="tau1, tau2 (torus) or tau3 (klein)")
        sp.add_argument("--class", dest="cls", help="torus matrix 'b11,b12;b21,b22'")
        sp.add_argument("--hom", help="Klein homomorphism '(r1,s1),(r2,s2)'")
        common(sp)

    sp = sub.add_parser("decide", help="decide the Borsuk-Ulam property for one class")
    subject(sp)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("witness", help="print or check a witness pair (a, b)")
    subject(sp)
    sp.add_argument("--a", help="check this a instead of constructing one, e.g. '(x; 0, 0)'")
    sp.add_argument("--b", help="check this b, e.g. '(1; 0, 1)'")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("verify", help="run the exact model verification suite")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force lemma checks and decision cross-checks")
    sp.add_argument("--max-word-length", type=int, default=3)
    sp.add_argument("--max-coordinate", type=int, default=1,
                    help="coordinate bound beyond the class magnitude")
    sp.add_argument("--class-range", type=int, default=2)
    sp.add_argument("--palindrome-length", type=int, default=12)
    sp.add_argument("--palin2-length", type=int, default=6)
    sp.add_argument("--involutions", help="comma list, default tau1,tau2,tau3")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--summary", action="store_true", help="print only counterexamples and totals")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("normal-form", help="conjugacy normal form of a Klein homomorphism")
    sp.add_argument("--hom", required=True)
    common(sp)
    sp.set_defaults(func=cmd_normal_form)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ClassParseError, NotAHomomorphism, WordParseError, ValueError) as e:
        print(f"surfbraid: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
