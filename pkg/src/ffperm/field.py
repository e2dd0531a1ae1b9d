"""Exact arithmetic in GF(p^n).

A field is described by a :class:`FieldSpec`: characteristic p, extension
degree n and a monic irreducible modulus polynomial over F_p.  Elements are
coefficient vectors of length n over F_p, constant term first.  The canonical
index of an element is sum(c[i] * p**i); base-p decoding of the index recovers
the coefficients.  Indexing is a bijection onto range(q) and is the element
representation used for ordering, cycle notation and all JSON I/O.

For n == 1 the modulus is normalised to x and arithmetic is plain mod-p.
Multiplication reduces the product polynomial by the modulus; inverses are
computed as x**(q-2) (an extended-Euclidean routine is kept alongside as a
cross-check).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

#: Every verification routine walks all q elements, so field sizes are capped.
MAX_FIELD_SIZE = 1 << 20


def is_prime(m: int) -> bool:
    """Trial-division primality test, adequate for m <= MAX_FIELD_SIZE."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def split_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, n) with q == p**n and p prime, or None otherwise."""
    if q < 2:
        return None
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    m, n = q, 0
    while m % p == 0:
        m //= p
        n += 1
    return (p, n) if m == 1 else None


def _digits(value: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(value % p)
        value //= p
    return out


def _index(coeffs, p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


# ---------------------------------------------------------------------------
# F_p[x] helpers on plain coefficient lists (constant first, no trailing zeros)

def _fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo monic den over F_p."""
    num = _fp_trim([c % p for c in num])
    d = len(den) - 1
    while len(num) - 1 >= d and num:
        c = num[-1]
        s = len(num) - 1 - d
        for j, m in enumerate(den):
            num[s + j] = (num[s + j] - c * m) % p
        _fp_trim(num)
    return num


def _fp_is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(poly)/2."""
    n = len(poly) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for c in range(p ** d):
            den = _digits(c, p, d) + [1]
            if not _fp_mod(poly, den, p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n over F_p, coefficients constant
    term first.

    "Smallest" reads the n non-leading coefficients as a base-p integer, so
    the choice is deterministic and element indexing is reproducible across
    runs.  For n == 1 this is the polynomial x.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if p ** n > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p}^{n} exceeds {MAX_FIELD_SIZE}")
    if n == 1:
        return (0, 1)
    for c in range(p ** n):
        cand = _digits(c, p, n) + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("an irreducible of every degree exists")


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^n) with a fixed modulus polynomial.

    ``modulus`` is monic of degree n, constant term first; if omitted it
    defaults to :func:`find_irreducible`.  For n == 1 the modulus is always
    normalised to x and plays no role in arithmetic.
    """

    p: int
    n: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.n!r}")
        q = self.p ** self.n
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds {MAX_FIELD_SIZE}")
        if self.n == 1:
            mod = (0, 1)
        elif self.modulus is None:
            mod = find_irreducible(self.p, self.n)
        else:
            mod = tuple(int(c) for c in self.modulus)
            if len(mod) != self.n + 1:
                raise ValueError(
                    f"modulus must have {self.n + 1} coefficients, got {len(mod)}")
            if mod[-1] != 1:
                raise ValueError("modulus must be monic")
            if any(not 0 <= c < self.p for c in mod):
                raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
            if not _fp_is_irreducible(list(mod), self.p):
                raise ValueError(f"modulus {list(mod)} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "_q", q)

    @property
    def q(self) -> int:
        return self._q

    @classmethod
    def from_order(cls, q: int) -> "FieldSpec":
        """Build the default field of order q; q must be a prime power."""
        pn = split_prime_power(q)
        if pn is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(*pn)

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise ValueError(f"element index {index} out of range [0, {self.q})")
        return FieldElement(self, tuple(_digits(index, self.p, self.n)))

    def from_coeffs(self, coeffs) -> "FieldElement":
        return FieldElement(self, tuple(int(c) % self.p for c in coeffs))

    def elements(self) -> list["FieldElement"]:
        """All q elements in canonical-index order 0, 1, ..., q-1."""
        return [self.element(i) for i in range(self.q)]

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def extension(self, k: int) -> "FieldSpec":
        """The default field of order q^k (same p, degree n*k)."""
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        return FieldSpec(self.p, self.n * k)

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, data: dict) -> "FieldSpec":
        return cls(int(data["p"]), int(data["n"]),
                   tuple(int(c) for c in data["modulus"]))

    def __str__(self):
        return f"GF({self.p})" if self.n == 1 else f"GF({self.p}^{self.n})"


def _check_same_field(a: "FieldElement", b: "FieldElement"):
    if a.field != b.field:
        raise ValueError(f"elements belong to different fields: "
                         f"{a.field} vs {b.field}")


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^n): coefficient vector over F_p, constant first."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.n:
            raise ValueError(
                f"expected {self.field.n} coefficients, got {len(self.coeffs)}")
        if any(not 0 <= c < self.field.p for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.field.p})")

    @property
    def index(self) -> int:
        """Canonical index: base-p value of the coefficient vector."""
        return _index(self.coeffs, self.field.p)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        _check_same_field(self, other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        _check_same_field(self, other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        _check_same_field(self, other)
        spec = self.field
        p, n = spec.p, spec.n
        if n == 1:
            return FieldElement(spec, ((self.coeffs[0] * other.coeffs[0]) % p,))
        acc = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    acc[i + j] += a * b
        mod = spec.modulus
        for e in range(2 * n - 2, n - 1, -1):
            c = acc[e] % p
            if c:
                for j in range(n):
                    acc[e - n + j] -= c * mod[j]
        return FieldElement(spec, tuple(c % p for c in acc[:n]))

    def __pow__(self, e: int) -> "FieldElement":
        """Square-and-multiply; 0**0 == 1."""
        if e < 0:
            raise ValueError("negative exponent; use inv()")
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inv(self) -> "FieldElement":
        """Multiplicative inverse via exponentiation to q-2."""
        if not self:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def _inv_euclid(self) -> "FieldElement":
        """Inverse via extended Euclid over F_p[x]; test cross-check for inv()."""
        if not self:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        spec = self.field
        p = spec.p
        if spec.n == 1:
            return FieldElement(spec, (pow(self.coeffs[0], -1, p),))
        # invariant: s * self == r and new_s * self == new_r  (mod modulus)
        r, new_r = list(spec.modulus), _fp_trim(list(self.coeffs))
        s, new_s = [], [1]
        while len(new_r) > 1:
            # divide r by new_r
            quot = [0] * (len(r) - len(new_r) + 1)
            rem = r[:]
            inv_lead = pow(new_r[-1], -1, p)
            while len(rem) >= len(new_r) and rem:
                c = (rem[-1] * inv_lead) % p
                sft = len(rem) - len(new_r)
                quot[sft] = c
                for j, m in enumerate(new_r):
                    rem[sft + j] = (rem[sft + j] - c * m) % p
                _fp_trim(rem)
            # s, new_s = new_s, s - quot * new_s
            prod = [0] * (len(quot) + len(new_s) - 1)
            for i, a in enumerate(quot):
                for j, b in enumerate(new_s):
                    prod[i + j] = (prod[i + j] + a * b) % p
            nxt = [((s[i] if i < len(s) else 0) - (prod[i] if i < len(prod) else 0)) % p
                   for i in range(max(len(s), len(prod)))]
            r, new_r = new_r, rem
            s, new_s = new_s, _fp_trim(nxt)
        # now new_r is a nonzero constant; scale new_s by its inverse
        scale = pow(new_r[0], -1, p)
        out = [(c * scale) % p for c in new_s]
        out += [0] * (spec.n - len(out))
        return FieldElement(spec, tuple(out))

    def __str__(self):
        return str(self.index)

    def __repr__(self):
        return f"FieldElement({self.index} in {self.field})"
