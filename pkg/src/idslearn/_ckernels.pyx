# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernels; see ``_pykernels`` for the reference semantics."""
from libc.stdlib cimport free, malloc


def walk(const int[::1] flat, Py_ssize_t k, Py_ssize_t q, tuple word):
    cdef Py_ssize_t s
    for s in word:
        q = flat[q * k + s]
    return q


def walk_many(const int[::1] flat, Py_ssize_t k, states, tuple word):
    cdef Py_ssize_t n = len(word), i, q
    cdef Py_ssize_t *syms = _symbols(word)
    out = []
    try:
        for q in states:
            for i in range(n):
                q = flat[q * k + syms[i]]
            out.append(q)
    finally:
        free(syms)
    return out


def accept_mask(const int[::1] flat, Py_ssize_t k, const unsigned char[::1] finals,
                const int[::1] states, tuple word):
    cdef Py_ssize_t n = len(word), m = states.shape[0], i, j, q
    out = bytearray(m)
    if m == 0:
        return out
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t *syms = _symbols(word)
    with nogil:
        for j in range(m):
            q = states[j]
            for i in range(n):
                q = flat[q * k + syms[i]]
            o[j] = finals[q]
    free(syms)
    return out


def accept_bits(const int[::1] flat, Py_ssize_t k, const unsigned char[::1] finals,
                Py_ssize_t q, words):
    cdef Py_ssize_t p, s, j = 0
    cdef object one = 1  # rows grow past 64 bits; shift a Python int, not a C int
    bits = 0
    for word in words:
        p = q
        for s in <tuple>word:
            p = flat[p * k + s]
        if finals[p]:
            bits |= one << j
        j += 1
    return bits


cdef Py_ssize_t *_symbols(tuple word) except NULL:
    cdef Py_ssize_t n = len(word), i
    cdef Py_ssize_t *syms = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    if syms == NULL:
        raise MemoryError()
    for i in range(n):
        syms[i] = word[i]
    return syms
