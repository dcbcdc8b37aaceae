from hypothesis import strategies as st

from surfbraid.freewords import FreeWord, reduce
from surfbraid.klein import KleinBraid, ZxZ
from surfbraid.torus import TorusBraid

letters = st.lists(st.sampled_from((1, -1, 2, -2)), max_size=12)
words = letters.map(reduce)
short_words = st.lists(st.sampled_from((1, -1, 2, -2)), max_size=6).map(reduce)
small = st.integers(-4, 4)
zxz = st.builds(ZxZ, small, small)


def torus_elements(sigma=st.sampled_from((0, 1))):
    return st.builds(TorusBraid, words, small, small, sigma)


def klein_elements(sigma=st.sampled_from((0, 1))):
    return st.builds(KleinBraid, short_words, small, small, sigma)


torus_pure = torus_elements(st.just(0))
klein_pure = klein_elements(st.just(0))
