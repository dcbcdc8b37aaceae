"""Pure-Python word kernels.

Words are tuples of nonzero ints: ``1``/``-1`` for the first generator and
its inverse, ``2``/``-2`` for the second.  Every function here returns freely
reduced tuples when given freely reduced tuples.  The compiled module
``_ckernels`` exposes the same functions with the same semantics.
"""

IMPLEMENTATION = "python"

# enumeration order: g1 < g1^-1 < g2 < g2^-1
LETTER_ORDER = (1, -1, 2, -2)


def reduce_letters(seq):
    out = []
    for a in seq:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def mul(a, b):
    if not a:
        return b
    if not b:
        return a
    i = len(a)
    j = 0
    nb = len(b)
    while i > 0 and j < nb and a[i - 1] == -b[j]:
        i -= 1
        j += 1
    return a[:i] + b[j:]


def inv(a):
    return tuple(-c for c in reversed(a))


def flip(a):
    return tuple(-c for c in a)


def exp_sum(a, g):
    s = 0
    for c in a:
        if c == g:
            s += 1
        elif c == -g:
            s -= 1
    return s


def is_palindrome(a):
    # w(x^-1, y^-1)^-1 is the letter reversal of w
    n = len(a)
    for i in range(n // 2):
        if a[i] != a[n - 1 - i]:
            return False
    return True


def power(a, k):
    if k < 0:
        a = inv(a)
        k = -k
    out = ()
    for _ in range(k):
        out = mul(out, a)
    return out


def substitute(a, img1, img2):
    """Image of ``a`` under the endomorphism g1 -> img1, g2 -> img2."""
    images = {1: img1, -1: inv(img1), 2: img2, -2: inv(img2)}
    out = []
    for c in a:
        for d in images[c]:
            if out and out[-1] == -d:
                out.pop()
            else:
                out.append(d)
    return tuple(out)


def words_of_length(length):
    """All reduced words of exactly ``length`` letters, lexicographic in LETTER_ORDER."""
    if length == 0:
        return [()]
    out = []
    prefix = []

    def rec(depth):
        if depth == length:
            out.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else 0
        for c in LETTER_ORDER:
            if c == -last:
                continue
            prefix.append(c)
            rec(depth + 1)
            prefix.pop()

    rec(0)
    return out
