"""Pure-Python sparse polynomial kernels.

Polynomials are dicts mapping a packed exponent key to a rational
coefficient.  Slot ``k`` of a key occupies bits ``[k*BITS, (k+1)*BITS)``, so
multiplying monomials is integer addition.  Radical slots hold 0 or 1; a
product that reaches 2 in such a slot is folded back to 0 and the coefficient
picks up the slot's symmetrizer.

The compiled module ``_kernels`` implements the same two functions with the
same signatures; ``kernels`` picks one at import.
"""

BITS = 24
FIELD = (1 << BITS) - 1


def poly_mul(a, b, radmask, radslots):
    """Product of two packed polynomials.

    ``radmask`` is the OR of ``2 << (k*BITS)`` over radical slots ``k``;
    ``radslots`` is a tuple of ``(2 << (k*BITS), d_k)`` pairs.
    """
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = ka + kb
            coef = ca * cb
            if key & radmask:
                for bit, d in radslots:
                    if key & bit:
                        key -= bit
                        coef *= d
            out[key] = get(key, 0) + coef
    return {k: c for k, c in out.items() if c != 0}


_BINOM = [[1]]


def _binom_row(n):
    while len(_BINOM) <= n:
        prev = _BINOM[-1]
        _BINOM.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return _BINOM[n]


def poly_shift(a, shifts):
    """Substitute x_k -> x_k + c_k for every ``(offset, c_k)`` in ``shifts``.

    ``offset`` is the bit offset ``k*BITS`` of the slot.
    """
    terms = a
    for offset, c in shifts:
        if c == 0:
            continue
        out = {}
        get = out.get
        unit = 1 << offset
        for key, coef in terms.items():
            e = (key >> offset) & FIELD
            if e == 0:
                out[key] = get(key, 0) + coef
                continue
            base = key - e * unit
            row = _binom_row(e)
            # (x + c)^e = sum_j binom(e, j) c^(e-j) x^j
            cpow = 1
            for j in range(e, -1, -1):
                k2 = base + j * unit
                out[k2] = get(k2, 0) + coef * row[j] * cpow
                cpow *= c
        terms = out
    return {k: c for k, c in terms.items() if c != 0}
