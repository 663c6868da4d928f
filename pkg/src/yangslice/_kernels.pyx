# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels; same contract as ``_kernels_py``."""

BITS = 24
FIELD = (1 << BITS) - 1

_BINOM = [[1]]


cdef list _binom_row(Py_ssize_t n):
    cdef list prev
    cdef Py_ssize_t i
    while len(_BINOM) <= n:
        prev = _BINOM[len(_BINOM) - 1]
        _BINOM.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return _BINOM[n]


def poly_mul(dict a, dict b, object radmask, tuple radslots):
    cdef dict out = {}
    cdef object ka, ca, kb, cb, key, coef, bit, d, prev
    cdef bint has_rad = radmask != 0
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = ka + kb
            coef = ca * cb
            if has_rad and (key & radmask):
                for bit, d in radslots:
                    if key & bit:
                        key = key - bit
                        coef = coef * d
            prev = out.get(key)
            if prev is None:
                out[key] = coef
            else:
                out[key] = prev + coef
    return {k: c for k, c in out.items() if c != 0}


def poly_shift(dict a, tuple shifts):
    cdef dict terms = a
    cdef dict out
    cdef object key, coef, c, base, unit, cpow, k2, prev
    cdef Py_ssize_t offset, e, j
    cdef list row
    for offset, c in shifts:
        if c == 0:
            continue
        out = {}
        unit = (<object>1) << offset
        for key, coef in terms.items():
            e = (key >> offset) & FIELD
            if e == 0:
                prev = out.get(key)
                out[key] = coef if prev is None else prev + coef
                continue
            base = key - e * unit
            row = _binom_row(e)
            cpow = 1
            for j in range(e, -1, -1):
                k2 = base + j * unit
                prev = out.get(k2)
                if prev is None:
                    out[k2] = coef * row[j] * cpow
                else:
                    out[k2] = prev + coef * row[j] * cpow
                cpow = cpow * c
        terms = out
    return {k: v for k, v in terms.items() if v != 0}
