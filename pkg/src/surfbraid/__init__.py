"""Borsuk-Ulam decisions for self-maps of the torus and the Klein bottle, via 2-string surface braids."""

from ._kernels import IMPLEMENTATION as KERNELS
from .bu_decision import (Decision, InvolutionId, KleinWitness, TorusWitness, construct_klein_witness,
                          construct_torus_witness, decide_klein, decide_torus, verify_klein_witness,
                          verify_torus_witness)
from .freewords import FreeWord, enumerate_reduced, format_word, parse_word
from .homclass import (KleinHom, KleinNormalForm, TorusClass, klein_hom_type, klein_normal_form,
                       lifts_to_torus, parse_klein_hom, parse_torus_class, validate_klein_hom)
from .klein import KleinBraid, ZxZ
from .oracle import SearchBounds, crosscheck_decisions, search_klein_witness, search_torus_witness
from .torus import TorusBraid

__all__ = [
    "KERNELS", "Decision", "InvolutionId", "KleinWitness", "TorusWitness", "construct_klein_witness",
    "construct_torus_witness", "decide_klein", "decide_torus", "verify_klein_witness",
    "verify_torus_witness", "FreeWord", "enumerate_reduced", "format_word", "parse_word", "KleinHom",
    "KleinNormalForm", "TorusClass", "klein_hom_type", "klein_normal_form", "lifts_to_torus",
    "parse_klein_hom", "parse_torus_class", "validate_klein_hom", "KleinBraid", "ZxZ", "SearchBounds",
    "crosscheck_decisions", "search_klein_witness", "search_torus_witness", "TorusBraid",
]
__version__ = "0.1.0"
