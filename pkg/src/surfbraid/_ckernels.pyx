# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; drop-in twin of ``_pykernels``."""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"

LETTER_ORDER = (1, -1, 2, -2)


cdef inline tuple _to_tuple(int* buf, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return tuple(out)


def reduce_letters(seq):
    cdef tuple t = tuple(seq)
    cdef Py_ssize_t n = len(t), i, top = 0
    cdef int c
    if n == 0:
        return ()
    cdef int* buf = <int*> malloc(n * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            c = t[i]
            if top > 0 and buf[top - 1] == -c:
                top -= 1
            else:
                buf[top] = c
                top += 1
        return _to_tuple(buf, top)
    finally:
        free(buf)


def mul(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0:
        return b
    if nb == 0:
        return a
    i = na
    j = 0
    while i > 0 and j < nb and <int> a[i - 1] == -(<int> b[j]):
        i -= 1
        j += 1
    if j == 0:
        return a + b
    return a[:i] + b[j:]


def inv(tuple a):
    cdef Py_ssize_t n = len(a), i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = -(<int> a[n - 1 - i])
    return tuple(out)


def flip(tuple a):
    cdef Py_ssize_t n = len(a), i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = -(<int> a[i])
    return tuple(out)


def exp_sum(tuple a, int g):
    cdef Py_ssize_t i
    cdef int s = 0, c
    for i in range(len(a)):
        c = a[i]
        if c == g:
            s += 1
        elif c == -g:
            s -= 1
    return s


def is_palindrome(tuple a):
    cdef Py_ssize_t n = len(a), i
    for i in range(n // 2):
        if <int> a[i] != <int> a[n - 1 - i]:
            return False
    return True


def power(tuple a, long k):
    if k < 0:
        a = inv(a)
        k = -k
    cdef tuple out = ()
    cdef long i
    for i in range(k):
        out = mul(out, a)
    return out


def substitute(tuple a, tuple img1, tuple img2):
    """Image of ``a`` under the endomorphism g1 -> img1, g2 -> img2."""
    cdef Py_ssize_t n = len(a), n1 = len(img1), n2 = len(img2)
    cdef Py_ssize_t cap = n * (n1 if n1 > n2 else n2) + 1
    cdef Py_ssize_t i, k, top = 0, m
    cdef int c, d
    cdef int* i1 = <int*> malloc((n1 + 1) * sizeof(int))
    cdef int* i2 = <int*> malloc((n2 + 1) * sizeof(int))
    cdef int* buf = <int*> malloc(cap * sizeof(int))
    cdef int* src
    if i1 == NULL or i2 == NULL or buf == NULL:
        free(i1); free(i2); free(buf)
        raise MemoryError()
    try:
        for k in range(n1):
            i1[k] = img1[k]
        for k in range(n2):
            i2[k] = img2[k]
        for i in range(n):
            c = a[i]
            if c == 1 or c == -1:
                src = i1
                m = n1
            else:
                src = i2
                m = n2
            if c > 0:
                for k in range(m):
                    d = src[k]
                    if top > 0 and buf[top - 1] == -d:
                        top -= 1
                    else:
                        buf[top] = d
                        top += 1
            else:
                for k in range(m - 1, -1, -1):
                    d = -src[k]
                    if top > 0 and buf[top - 1] == -d:
                        top -= 1
                    else:
                        buf[top] = d
                        top += 1
        return _to_tuple(buf, top)
    finally:
        free(i1); free(i2); free(buf)


def words_of_length(int length):
    """All reduced words of exactly ``length`` letters, lexicographic in LETTER_ORDER."""
    if length == 0:
        return [()]
    cdef int order[4]
    order[0] = 1; order[1] = -1; order[2] = 2; order[3] = -2
    cdef int* idx = <int*> malloc(length * sizeof(int))
    cdef int* cur = <int*> malloc(length * sizeof(int))
    cdef list out = []
    cdef int depth = 0, prev, c
    if idx == NULL or cur == NULL:
        free(idx); free(cur)
        raise MemoryError()
    try:
        idx[0] = -1
        while depth >= 0:
            idx[depth] += 1
            if idx[depth] > 3:
                depth -= 1
                continue
            c = order[idx[depth]]
            prev = cur[depth - 1] if depth > 0 else 0
            if c == -prev:
                continue
            cur[depth] = c
            if depth == length - 1:
                out.append(_to_tuple(cur, length))
            else:
                depth += 1
                idx[depth] = -1
        return out
    finally:
        free(idx); free(cur)
