# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for truncated series over the integers mod p.

Same contracts as ``padicore._kernels.pyseries``; selected automatically
at import when present.
"""

from libc.stdlib cimport calloc, free

BACKEND = "compiled"

# For p below this bound, n*p*p fits comfortably in 64 bits for any
# realistic truncation order, so sums are reduced only once per output.
DEF SMALL_PRIME_BOUND = 1 << 15


cdef long long* _to_buffer(object seq, Py_ssize_t n, long long p) except NULL:
    cdef long long* buf = <long long*> calloc(n, sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef Py_ssize_t m = len(seq)
    if m > n:
        m = n
    for i in range(m):
        buf[i] = seq[i] % p
    return buf


def convolve_mod(a, b, Py_ssize_t n, long long p):
    """First n coefficients of the coefficient convolution of a and b."""
    cdef long long* ab = NULL
    cdef long long* bb = NULL
    cdef long long* out = NULL
    cdef Py_ssize_t i, j
    cdef long long ai, acc
    cdef bint small = p < SMALL_PRIME_BOUND
    if n <= 0:
        return []
    ab = _to_buffer(a, n, p)
    try:
        bb = _to_buffer(b, n, p)
        out = <long long*> calloc(n, sizeof(long long))
        if bb == NULL or out == NULL:
            raise MemoryError()
        for i in range(n):
            ai = ab[i]
            if ai != 0:
                if small:
                    for j in range(n - i):
                        out[i + j] += ai * bb[j]
                else:
                    for j in range(n - i):
                        out[i + j] = (out[i + j] + ai * bb[j]) % p
        if small:
            for i in range(n):
                out[i] %= p
        return [out[i] for i in range(n)]
    finally:
        free(ab)
        if bb != NULL:
            free(bb)
        if out != NULL:
            free(out)


def compose_mod(f, g, Py_ssize_t n, long long p):
    """First n coefficients of f(g) mod p; requires g[0] == 0."""
    cdef long long* fb = NULL
    cdef long long* gb = NULL
    cdef long long* power = NULL
    cdef long long* nxt = NULL
    cdef long long* out = NULL
    cdef long long* tmp
    cdef Py_ssize_t i, k, j, lo, ord_g
    cdef long long pi, fj
    cdef bint small = p < SMALL_PRIME_BOUND
    if n == 0:
        return []
    if len(g) > 0 and g[0] % p != 0:
        raise ValueError("composition requires zero constant term")
    fb = _to_buffer(f, n, p)
    try:
        gb = _to_buffer(g, n, p)
        power = <long long*> calloc(n, sizeof(long long))
        nxt = <long long*> calloc(n, sizeof(long long))
        out = <long long*> calloc(n, sizeof(long long))
        if gb == NULL or power == NULL or nxt == NULL or out == NULL:
            raise MemoryError()
        out[0] = fb[0]
        ord_g = n
        for i in range(n):
            if gb[i] != 0:
                ord_g = i
                break
        power[0] = 1
        lo = 0
        for j in range(1, n):
            if j * ord_g >= n:
                break
            for i in range(n):
                nxt[i] = 0
            for i in range(lo, n - 1):
                pi = power[i]
                if pi != 0:
                    if small:
                        for k in range(1, n - i):
                            nxt[i + k] += pi * gb[k]
                    else:
                        for k in range(1, n - i):
                            nxt[i + k] = (nxt[i + k] + pi * gb[k]) % p
            if small:
                for i in range(n):
                    nxt[i] %= p
            tmp = power
            power = nxt
            nxt = tmp
            lo = j * ord_g
            if lo > n:
                lo = n
            fj = fb[j]
            if fj != 0:
                for i in range(lo, n):
                    pi = power[i]
                    if pi != 0:
                        out[i] = (out[i] + fj * pi) % p
        return [out[i] for i in range(n)]
    finally:
        free(fb)
        if gb != NULL:
            free(gb)
        if power != NULL:
            free(power)
        if nxt != NULL:
            free(nxt)
        if out != NULL:
            free(out)
