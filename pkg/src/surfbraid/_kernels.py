"""Select the word-kernel backend at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``SURFBRAID_PURE_PYTHON=1``
forces the fallback.
"""

import os

if os.environ.get("SURFBRAID_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as backend

IMPLEMENTATION = backend.IMPLEMENTATION
LETTER_ORDER = backend.LETTER_ORDER
reduce_letters = backend.reduce_letters
mul = backend.mul
inv = backend.inv
flip = backend.flip
exp_sum = backend.exp_sum
is_palindrome = backend.is_palindrome
power = backend.power
substitute = backend.substitute
words_of_length = backend.words_of_length

__all__ = [
    "IMPLEMENTATION", "LETTER_ORDER", "reduce_letters", "mul", "inv", "flip",
    "exp_sum", "is_palindrome", "power", "substitute", "words_of_length",
]
