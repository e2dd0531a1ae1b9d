"""Vectorized numpy implementation of the batch kernels.

This backend is the fallback used when the compiled extension is not
available.  Both backends expose the same five functions; all of them work
on canonical element indices (plain int lists in, lists out) and identify
the field by (p, n, modulus) so the kernels stay decoupled from the
high-level FieldSpec objects.

Per-field state (digit matrices, small multiplication tables, power maps)
is cached in a module-level dict keyed by (p, n, modulus).
"""

from __future__ import annotations

import numpy as np

NAME = "pure"

#: Full q x q multiplication tables are built for extension fields up to
#: this order; beyond it multiplication falls back to digit convolution.
_TABLE_LIMIT = 256

_CTX: dict = {}


class _Ctx:
    __slots__ = ("p", "n", "q", "mod", "ppow", "all", "digits",
                 "mul_table", "pow_maps")

    def __init__(self, p: int, n: int, modulus):
        self.p = p
        self.n = n
        self.q = p ** n
        self.mod = np.asarray(modulus, dtype=np.int64)
        self.ppow = p ** np.arange(n, dtype=np.int64)
        self.all = np.arange(self.q, dtype=np.int64)
        self.digits = (self.all[:, None] // self.ppow) % p  # (q, n)
        self.pow_maps: dict[int, np.ndarray] = {}
        self.mul_table = None
        if n > 1 and self.q <= _TABLE_LIMIT:
            dx = self.digits[:, None, :]  # (q, 1, n)
            dy = self.digits[None, :, :]  # (1, q, n)
            acc = np.zeros((self.q, self.q, 2 * n - 1), dtype=np.int64)
            for u in range(n):
                for v in range(n):
                    acc[:, :, u + v] += dx[:, :, u] * dy[:, :, v]
            self.mul_table = self._encode(self._reduce_digits(acc))

    def _decode(self, x: np.ndarray) -> np.ndarray:
        return (x[..., None] // self.ppow) % self.p

    def _encode(self, d: np.ndarray) -> np.ndarray:
        return (d * self.ppow).sum(axis=-1)

    def _reduce_digits(self, acc: np.ndarray) -> np.ndarray:
        """Fold digit positions >= n back down using the monic modulus."""
        p, n = self.p, self.n
        for e in range(2 * n - 2, n - 1, -1):
            c = acc[..., e] % p
            for j in range(n):
                acc[..., e - n + j] -= c * self.mod[j]
        return acc[..., :n] % p


def _get_ctx(p: int, n: int, modulus) -> _Ctx:
    key = (p, n, tuple(modulus))
    ctx = _CTX.get(key)
    if ctx is None:
        ctx = _CTX[key] = _Ctx(p, n, modulus)
    return ctx


def _mul(ctx: _Ctx, x, y):
    """Elementwise product of index arrays (broadcasting allowed)."""
    if ctx.n == 1:
        return (x * y) % ctx.p
    if ctx.mul_table is not None:
        return ctx.mul_table[x, y]
    dx, dy = ctx._decode(np.asarray(x)), ctx._decode(np.asarray(y))
    shape = np.broadcast_shapes(dx.shape[:-1], dy.shape[:-1])
    acc = np.zeros(shape + (2 * ctx.n - 1,), dtype=np.int64)
    for u in range(ctx.n):
        for v in range(ctx.n):
            acc[..., u + v] += dx[..., u] * dy[..., v]
    return ctx._encode(ctx._reduce_digits(acc))


def _add(ctx: _Ctx, x, y):
    if ctx.n == 1:
        return (x + y) % ctx.p
    if ctx.p == 2:
        return x ^ y
    dx, dy = ctx._decode(np.asarray(x)), ctx._decode(np.asarray(y))
    return ctx._encode((dx + dy) % ctx.p)


def _pow(ctx: _Ctx, x: np.ndarray, e: int) -> np.ndarray:
    """Elementwise x**e by square-and-multiply (0**0 == 1)."""
    result = None
    base = x
    while e:
        if e & 1:
            result = base if result is None else _mul(ctx, result, base)
        e >>= 1
        if e:
            base = _mul(ctx, base, base)
    if result is None:
        return np.ones_like(x)
    return result


def _pow_map(ctx: _Ctx, e: int) -> np.ndarray:
    pm = ctx.pow_maps.get(e)
    if pm is None:
        pm = ctx.pow_maps[e] = _pow(ctx, ctx.all, e)
    return pm


# ---------------------------------------------------------------------------
# public kernel API

def power_images(p: int, n: int, modulus, e: int) -> list[int]:
    """[x**e for every x in GF(p^n)], canonical index order."""
    ctx = _get_ctx(p, n, modulus)
    return _pow(ctx, ctx.all, e).tolist()


def word_images(p: int, n: int, modulus, tokens, inv_exp: int) -> list[int]:
    """Apply a token word to every field element.

    ``tokens`` is a list whose entries are either an (a, b) index pair for
    the affine map x -> a*x + b, or None for the power map x -> x**inv_exp.
    Entry 0 is applied first.
    """
    ctx = _get_ctx(p, n, modulus)
    cur = ctx.all.copy()
    for tok in tokens:
        if tok is None:
            cur = _pow_map(ctx, inv_exp)[cur]
        else:
            a, b = tok
            cur = _mul(ctx, np.int64(a), cur)
            if b:
                cur = _add(ctx, cur, np.int64(b))
    return cur.tolist()


def poly_eval_images(p: int, n: int, modulus, coeffs, xs) -> list[int]:
    """Horner evaluation of a coefficient-index polynomial at each x in xs."""
    ctx = _get_ctx(p, n, modulus)
    xa = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xa)
    for c in reversed(coeffs):
        acc = _mul(ctx, acc, xa)
        if c:
            acc = _add(ctx, acc, np.int64(c))
    return acc.tolist()


def poly_mul_reduce(p: int, n: int, modulus, f, g) -> list[int]:
    """Product of two coefficient-index polynomials, reduced mod x^q - x.

    Inputs must already be reduced (length <= q); the single exponent fold
    x^e -> x^(e - (q-1)) for e >= q then suffices.  Trailing zeros are
    stripped from the result.
    """
    ctx = _get_ctx(p, n, modulus)
    q = ctx.q
    if len(f) > q or len(g) > q:
        raise ValueError("poly_mul_reduce operands must be reduced (degree < q)")
    if not f or not g:
        return []
    fa = np.asarray(f, dtype=np.int64)
    ga = np.asarray(g, dtype=np.int64)
    if n == 1:
        rows = np.convolve(fa, ga) % p  # (L,)
    else:
        fd, gd = ctx._decode(fa), ctx._decode(ga)
        acc = np.zeros((len(f) + len(g) - 1, 2 * n - 1), dtype=np.int64)
        for u in range(n):
            for v in range(n):
                acc[:, u + v] += np.convolve(fd[:, u], gd[:, v])
        rows = ctx._reduce_digits(acc)  # (L, n)
    if len(rows) > q:
        head, tail = rows[:q].copy(), rows[q:]
        head[1:1 + len(tail)] += tail
        rows = head % p
    out = rows if n == 1 else ctx._encode(rows)
    out = out.tolist()
    while out and not out[-1]:
        out.pop()
    return out


def poly_pow_reduce(p: int, n: int, modulus, f, e: int) -> list[int]:
    """f**e in the function ring, reducing mod x^q - x after every product."""
    result = [1]
    base = list(f)
    while e:
        if e & 1:
            result = poly_mul_reduce(p, n, modulus, result, base)
        e >>= 1
        if e:
            base = poly_mul_reduce(p, n, modulus, base, base)
    return result
