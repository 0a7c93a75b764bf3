"""Finite-field arithmetic over GF(p^k) at desk scale.

Elements are length-k coefficient tuples over GF(p), little-endian in the
root of the modulus polynomial.  Fields are constructed with the
lexicographically smallest monic irreducible modulus, so every run of the
toolkit agrees on element order and on Reed-Solomon evaluation points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

DEFAULT_ORDER_CAP = 4096

Element = tuple[int, ...]


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        k, rest = 0, q
        while rest % p == 0:
            rest //= p
            k += 1
        return (p, k) if rest == 1 else None
    return (q, 1)  # q itself prime


# ---------- polynomial helpers over GF(p), little-endian coefficient tuples ----------

def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo b; b must be monic."""
    r = list(a)
    db = len(b) - 1
    while len(_poly_trim(tuple(r))) - 1 >= db:
        r = list(_poly_trim(tuple(r)))
        shift = len(r) - 1 - db
        lead = r[-1]
        for j, bj in enumerate(b):
            r[shift + j] = (r[shift + j] - lead * bj) % p
    return _poly_trim(tuple(r))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            div = _digits(idx, p, d) + (1,)
            if not _poly_mod(poly, div, p):
                return False
    return True


def _digits(idx: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(idx % p)
        idx //= p
    return tuple(out)


@dataclass(frozen=True)
class Field:
    """GF(p^k) with a fixed monic irreducible modulus of degree k."""

    p: int
    k: int
    modulus: tuple[int, ...]  # length k+1, little-endian, monic

    @property
    def q(self) -> int:
        return self.p**self.k

    # Canonical element order: element(i) has coefficient vector equal to the
    # base-p digits of i; element(0) = 0, element(1) = 1.
    def element(self, index: int) -> Element:
        if not 0 <= index < self.q:
            raise FieldError(f"element index {index} out of range for GF({self.q})")
        return _digits(index, self.p, self.k)

    def index(self, a: Element) -> int:
        self._check(a)
        return sum(c * self.p**i for i, c in enumerate(a))

    def elements(self) -> list[Element]:
        return [self.element(i) for i in range(self.q)]

    def zero(self) -> Element:
        return (0,) * self.k

    def one(self) -> Element:
        return (1,) + (0,) * (self.k - 1)

    def _check(self, a: Element) -> None:
        if len(a) != self.k or any(not 0 <= c < self.p for c in a):
            raise FieldError(f"{a!r} is not an element of GF({self.p}^{self.k})")

    def add(self, a: Element, b: Element) -> Element:
        self._check(a), self._check(b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return tuple((-x) % self.p for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        self._check(a), self._check(b)
        prod = _poly_mod(_poly_mul(a, b, self.p), self.modulus, self.p)
        return prod + (0,) * (self.k - len(prod))

    def pow(self, a: Element, e: int) -> Element:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out, base = self.one(), a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: Element) -> Element:
        self._check(a)
        if a == self.zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(a, self.q - 2)


@lru_cache(maxsize=None)
def field_make(p: int, k: int, order_cap: int = DEFAULT_ORDER_CAP) -> Field:
    """Build GF(p^k) with the lexicographically smallest monic irreducible modulus.

    Candidate moduli x^k + c_{k-1} x^{k-1} + ... + c_0 are scanned in increasing
    order of the integer sum(c_i p^i), so the result is deterministic.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if p**k > order_cap:
        raise FieldError(f"field order {p**k} exceeds cap {order_cap}")
    for idx in range(p**k):
        poly = _digits(idx, p, k) + (1,)
        if _is_irreducible(poly, p):
            return Field(p, k, poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_for_order(q: int, order_cap: int = DEFAULT_ORDER_CAP) -> Field:
    """GF(q) for a prime-power q."""
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"{q} is not a prime power")
    return field_make(pk[0], pk[1], order_cap)
