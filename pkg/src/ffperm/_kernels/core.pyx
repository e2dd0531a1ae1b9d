# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled batch kernels; same API and semantics as ffperm._kernels.pure.

All arithmetic is on canonical element indices.  Digit buffers are fixed-size
C arrays: field sizes are capped at 2**20, so extension degrees never exceed
20 digits.  Small fields additionally get a q x q multiplication table.
"""

import numpy as np

NAME = "compiled"

# q x q int32 multiplication tables up to this order (<= 4 MiB per field)
cdef long long _TABLE_LIMIT = 1024

_CTX = {}


cdef class _Ctx:
    cdef long long p, q
    cdef int n
    cdef long long[::1] mod
    cdef long long[::1] ppow
    cdef long long[:, ::1] digits
    cdef bint has_table
    cdef int[:, ::1] table
    cdef dict pow_maps

    def __init__(self, p, n, modulus):
        self.p = p
        self.n = n
        self.q = p ** n
        self.mod = np.asarray(modulus, dtype=np.int64)
        self.ppow = p ** np.arange(n, dtype=np.int64)
        allv = np.arange(self.q, dtype=np.int64)
        self.digits = (allv[:, None] // np.asarray(self.ppow)) % p
        self.pow_maps = {}
        self.has_table = False
        if n > 1 and self.q <= _TABLE_LIMIT:
            table = np.empty((self.q, self.q), dtype=np.int32)
            self._fill_table(table)
            self.table = table
            self.has_table = True

    def _fill_table(self, int[:, ::1] table):
        cdef long long x, y
        with nogil:
            for x in range(self.q):
                for y in range(x + 1):
                    table[x, y] = <int> _mul_digits(self, x, y)
                    table[y, x] = table[x, y]


cdef _Ctx _get_ctx(p, n, modulus):
    key = (p, n, tuple(modulus))
    ctx = _CTX.get(key)
    if ctx is None:
        ctx = _CTX[key] = _Ctx(p, n, modulus)
    return ctx


cdef inline long long _mul_digits(_Ctx c, long long x, long long y) nogil:
    """Coefficient convolution followed by reduction by the monic modulus."""
    cdef long long acc[48]
    cdef long long coef, out
    cdef int i, j, e, n = c.n
    if n == 1:
        return (x * y) % c.p
    for i in range(2 * n - 1):
        acc[i] = 0
    for i in range(n):
        if c.digits[x, i]:
            for j in range(n):
                acc[i + j] += c.digits[x, i] * c.digits[y, j]
    for e in range(2 * n - 2, n - 1, -1):
        coef = acc[e] % c.p
        if coef:
            for j in range(n):
                acc[e - n + j] -= coef * c.mod[j]
    out = 0
    for i in range(n - 1, -1, -1):
        out = out * c.p + (acc[i] % c.p + c.p) % c.p
    return out


cdef inline long long _mul(_Ctx c, long long x, long long y) nogil:
    if c.has_table:
        return c.table[x, y]
    return _mul_digits(c, x, y)


cdef inline long long _add(_Ctx c, long long x, long long y) nogil:
    cdef long long out
    cdef int i
    if c.n == 1:
        return (x + y) % c.p
    if c.p == 2:
        return x ^ y
    out = 0
    for i in range(c.n - 1, -1, -1):
        out = out * c.p + (c.digits[x, i] + c.digits[y, i]) % c.p
    return out


cdef inline long long _powll(_Ctx c, long long x, long long e) nogil:
    cdef long long result = 1, base = x
    while e:
        if e & 1:
            result = _mul(c, result, base)
        e >>= 1
        if e:
            base = _mul(c, base, base)
    return result


cdef _pow_map(_Ctx c, long long e):
    pm = c.pow_maps.get(e)
    if pm is None:
        out = np.empty(c.q, dtype=np.int64)
        cdef_fill_pow(c, out, e)
        pm = c.pow_maps[e] = out
    return pm


cdef cdef_fill_pow(_Ctx c, long long[::1] out, long long e):
    cdef long long x
    with nogil:
        for x in range(c.q):
            out[x] = _powll(c, x, e)


# ---------------------------------------------------------------------------
# public kernel API

def power_images(p, n, modulus, e):
    """[x**e for every x in GF(p^n)], canonical index order."""
    cdef _Ctx ctx = _get_ctx(p, n, modulus)
    cdef long long ee = e
    out = np.empty(ctx.q, dtype=np.int64)
    cdef_fill_pow(ctx, out, ee)
    return out.tolist()


def word_images(p, n, modulus, tokens, inv_exp):
    """Apply a token word ([(a, b) | None, ...], entry 0 first) to every
    element; None means the power map x -> x**inv_exp."""
    cdef _Ctx ctx = _get_ctx(p, n, modulus)
    cdef Py_ssize_t m = len(tokens), i
    kind_np = np.empty(m, dtype=np.int64)
    av_np = np.zeros(m, dtype=np.int64)
    bv_np = np.zeros(m, dtype=np.int64)
    cdef long long[::1] kind = kind_np, av = av_np, bv = bv_np
    for i, tok in enumerate(tokens):
        if tok is None:
            kind[i] = 1
        else:
            kind[i] = 0
            av[i] = tok[0]
            bv[i] = tok[1]
    pm_np = _pow_map(ctx, inv_exp) if np.any(kind_np) else np.empty(0, dtype=np.int64)
    cdef long long[::1] pm = pm_np
    out_np = np.empty(ctx.q, dtype=np.int64)
    cdef long long[::1] out = out_np
    cdef long long x, cur
    with nogil:
        for x in range(ctx.q):
            cur = x
            for i in range(m):
                if kind[i]:
                    cur = pm[cur]
                else:
                    cur = _add(ctx, _mul(ctx, av[i], cur), bv[i])
            out[x] = cur
    return out_np.tolist()


def poly_eval_images(p, n, modulus, coeffs, xs):
    """Horner evaluation of a coefficient-index polynomial at each x in xs."""
    cdef _Ctx ctx = _get_ctx(p, n, modulus)
    ca_np = np.asarray(coeffs, dtype=np.int64)
    xa_np = np.asarray(xs, dtype=np.int64)
    cdef long long[::1] ca = ca_np, xa = xa_np
    cdef Py_ssize_t nc = ca_np.shape[0], nx = xa_np.shape[0], i, j
    out_np = np.empty(nx, dtype=np.int64)
    cdef long long[::1] out = out_np
    cdef long long acc
    with nogil:
        for i in range(nx):
            acc = 0
            for j in range(nc - 1, -1, -1):
                acc = _add(ctx, _mul(ctx, acc, xa[i]), ca[j])
            out[i] = acc
    return out_np.tolist()


cdef _poly_mul_core(_Ctx ctx, long long[::1] f, long long[::1] g):
    """Reduced product as an int64 array (trailing zeros not stripped)."""
    cdef Py_ssize_t lf = f.shape[0], lg = g.shape[0]
    cdef Py_ssize_t L = lf + lg - 1, i, j, u, t
    cdef int n = ctx.n
    acc_np = np.zeros((L, n), dtype=np.int64)
    cdef long long[:, ::1] acc = acc_np
    cdef long long prod, enc
    with nogil:
        for i in range(lf):
            if f[i]:
                for j in range(lg):
                    if g[j]:
                        prod = _mul(ctx, f[i], g[j])
                        for u in range(n):
                            acc[i + j, u] += ctx.digits[prod, u]
    out_np = np.zeros(ctx.q if L > ctx.q else L, dtype=np.int64)
    cdef long long[::1] out = out_np
    cdef Py_ssize_t Lo = out.shape[0]
    with nogil:
        for i in range(L):
            t = i if i < ctx.q else i - (ctx.q - 1)
            if i != t:
                for u in range(n):
                    acc[t, u] += acc[i, u]
        for i in range(Lo):
            enc = 0
            for u in range(n - 1, -1, -1):
                enc = enc * ctx.p + acc[i, u] % ctx.p
            out[i] = enc
    return out_np


def poly_mul_reduce(p, n, modulus, f, g):
    """Product of two reduced coefficient-index polynomials, reduced mod
    x^q - x, trailing zeros stripped."""
    cdef _Ctx ctx = _get_ctx(p, n, modulus)
    if len(f) > ctx.q or len(g) > ctx.q:
        raise ValueError("poly_mul_reduce operands must be reduced (degree < q)")
    if not len(f) or not len(g):
        return []
    fa = np.asarray(f, dtype=np.int64)
    ga = np.asarray(g, dtype=np.int64)
    out = _poly_mul_core(ctx, fa, ga).tolist()
    while out and not out[-1]:
        out.pop()
    return out


def poly_pow_reduce(p, n, modulus, f, e):
    """f**e in the function ring, reducing after every product."""
    cdef _Ctx ctx = _get_ctx(p, n, modulus)
    cdef long long ee = e
    result = np.asarray([1], dtype=np.int64)
    base = np.asarray(f, dtype=np.int64)
    while ee:
        if ee & 1:
            result = _poly_mul_core(ctx, result, base)
        ee >>= 1
        if ee:
            base = _poly_mul_core(ctx, base, base)
    out = result.tolist()
    while out and not out[-1]:
        out.pop()
    return out
