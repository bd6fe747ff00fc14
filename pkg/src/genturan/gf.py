"""Finite fields GF(q) for prime powers q <= 128.

Elements are integers 0..q-1 read as base-p coefficient vectors of a
polynomial in the field generator.  Arithmetic goes through precomputed
tables, which is plenty for the field sizes used in graph constructions.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import PreconditionError

# Monic irreducible polynomials (Conway polynomials), coefficients listed from
# the constant term up, leading 1 omitted.
IRREDUCIBLE = {
    (2, 2): (1, 1),
    (2, 3): (1, 1, 0),
    (2, 4): (1, 1, 0, 0),
    (2, 5): (1, 0, 1, 0, 0),
    (2, 6): (1, 1, 0, 1, 1, 0),
    (2, 7): (1, 1, 0, 0, 0, 0, 0),
    (3, 2): (2, 2),
    (3, 3): (1, 2, 0),
    (3, 4): (2, 0, 0, 2),
    (5, 2): (2, 4),
    (5, 3): (3, 3, 0),
    (7, 2): (3, 6),
    (11, 2): (2, 7),
}

MAX_ORDER = 128


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q = p**m`` and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while q % p:
        p += 1
    m = 0
    x = q
    while x % p == 0:
        x //= p
        m += 1
    return (p, m) if x == 1 else None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


class GF:
    """The field with ``q`` elements."""

    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise PreconditionError("q a prime power", f"{q} is not a prime power")
        if q > MAX_ORDER:
            raise PreconditionError(f"q <= {MAX_ORDER}", f"field order {q} outside the table")
        self.q = q
        self.p, self.m = pm
        p, m = pm
        if m == 1:
            self.add_table = [[(a + b) % p for b in range(p)] for a in range(p)]
            self.mul_table = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            low = IRREDUCIBLE[(p, m)]
            self.add_table = [[self._vadd(a, b) for b in range(q)] for a in range(q)]
            self.mul_table = [[self._pmul(a, b, low) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add_table[a][b] == 0) for a in range(q)]
        self.inv = [None] + [next(b for b in range(1, q) if self.mul_table[a][b] == 1) for a in range(1, q)]

    def _digits(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _vadd(self, a, b):
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _pmul(self, a, b, low):
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce using x^m = -(low)
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, l in enumerate(low):
                    prod[deg - m + i] = (prod[deg - m + i] - c * l) % p
        return self._undigits(prod[:m])

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul_table[r][a]
        return r

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul_table[x][a]
            k += 1
        return k

    def generator(self) -> int:
        """Least element generating the multiplicative group."""
        return next(a for a in range(1, self.q) if self.order(a) == self.q - 1)

    def subgroup(self, order: int) -> frozenset[int]:
        """The unique multiplicative subgroup of the given order."""
        if order < 1 or (self.q - 1) % order:
            raise PreconditionError("order divides q-1", f"no subgroup of order {order} in GF({self.q})*")
        g = self.pow(self.generator(), (self.q - 1) // order)
        out, x = set(), 1
        for _ in range(order):
            out.add(x)
            x = self.mul_table[x][g]
        return frozenset(out)


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
