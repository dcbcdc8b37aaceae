import importlib

import pytest
from hypothesis import given, strategies as st

from surfbraid import _kernels, _pykernels

from .strategies import letters

try:
    _ck = importlib.import_module("surfbraid._ckernels")
except ImportError:  # extension not built
    _ck = None

needs_ext = pytest.mark.skipif(_ck is None, reason="compiled kernels not built")


def test_selector_exports_full_api():
    for name in ("reduce_letters", "mul", "inv", "flip", "exp_sum", "is_palindrome", "power",
                 "substitute", "words_of_length", "LETTER_ORDER"):
        assert hasattr(_kernels, name)
    assert _kernels.IMPLEMENTATION in ("cython", "python")


def test_pure_python_forced_by_env(monkeypatch):
    monkeypatch.setenv("SURFBRAID_PURE_PYTHON", "1")
    mod = importlib.reload(_kernels)
    try:
        assert mod.IMPLEMENTATION == "python"
    finally:
        monkeypatch.delenv("SURFBRAID_PURE_PYTHON")
        importlib.reload(_kernels)


@needs_ext
def test_extension_is_selected_by_default():
    assert _kernels.IMPLEMENTATION == "cython"


@needs_ext
@given(letters, letters, st.integers(-4, 4))
def test_backends_agree(a, b, k):
    ra, rb = _pykernels.reduce_letters(tuple(a)), _pykernels.reduce_letters(tuple(b))
    assert _ck.reduce_letters(tuple(a)) == ra
    assert _ck.mul(ra, rb) == _pykernels.mul(ra, rb)
    assert _ck.inv(ra) == _pykernels.inv(ra)
    assert _ck.flip(ra) == _pykernels.flip(ra)
    assert _ck.power(ra, k) == _pykernels.power(ra, k)
    assert _ck.is_palindrome(ra) == _pykernels.is_palindrome(ra)
    assert _ck.substitute(ra, rb, ra) == _pykernels.substitute(ra, rb, ra)
    for g in (1, 2):
        assert _ck.exp_sum(ra, g) == _pykernels.exp_sum(ra, g)


@needs_ext
@pytest.mark.parametrize("length", range(6))
def test_backends_enumerate_identically(length):
    assert list(_ck.words_of_length(length)) == list(_pykernels.words_of_length(length))
