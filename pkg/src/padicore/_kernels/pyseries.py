"""Pure-Python kernels for truncated series over the integers mod p.

Same contracts as the compiled module ``padicore._fastseries``; this is
the fallback selected at import when the extension is unavailable, and the
baseline for the kernel benchmark.

Coefficient lists are little-endian (index = exponent) and reduced mod p.
"""

BACKEND = "pure"


def convolve_mod(a, b, n, p):
    """First n coefficients of the coefficient convolution of a and b."""
    out = [0] * n
    for i in range(min(len(a), n)):
        ai = a[i]
        if ai:
            for j in range(min(len(b), n - i)):
                bj = b[j]
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out


def compose_mod(f, g, n, p):
    """First n coefficients of f(g) mod p; requires g[0] == 0.

    Accumulates powers of g, using that g**j contributes nothing below
    index j, so the work shrinks as j grows.
    """
    if n == 0:
        return []
    if len(g) > 0 and g[0] % p != 0:
        raise ValueError("composition requires zero constant term")
    out = [0] * n
    out[0] = f[0] % p if f else 0
    ord_g = n
    for i in range(min(len(g), n)):
        if g[i] % p:
            ord_g = i
            break
    power = [0] * n
    power[0] = 1
    lo = 0  # power holds g**j with order >= lo
    for j in range(1, min(len(f), n)):
        if j * ord_g >= n:
            break
        new = [0] * n
        for i in range(lo, n - 1):
            pi = power[i]
            if pi:
                for k in range(1, min(len(g), n - i)):
                    gk = g[k]
                    if gk:
                        new[i + k] = (new[i + k] + pi * gk) % p
        power = new
        lo = min(j * ord_g, n)
        fj = f[j] % p
        if fj:
            for i in range(lo, n):
                pi = power[i]
                if pi:
                    out[i] = (out[i] + fj * pi) % p
    return out
