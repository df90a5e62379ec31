"""Arithmetic in GF(2^m) with log/antilog tables.

Elements are plain ints in ``[0, 2**m)``; bit ``j`` is the coefficient of
``alpha**j`` in the polynomial basis, where ``alpha`` is the class of ``x``
modulo the field's modulus polynomial.
"""

from __future__ import annotations

from functools import lru_cache

MAX_DEGREE = 16

# Conway polynomials for small m (the usual computer-algebra defaults).
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10001101111,
    11: 0b100000000101,
    12: 0b1000011101011,
    13: 0b10000000011011,
    14: 0b100000010101001,
    15: 0b1000000000110101,
    16: 0b10000000000101101,
}


class FieldError(ValueError):
    """Invalid field construction or invalid subfield request."""


class ZeroInverseError(ZeroDivisionError):
    pass


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def gf2_poly_is_irreducible(f: int) -> bool:
    """Irreducibility of a GF(2)[x] polynomial by trial division."""
    deg = f.bit_length() - 1
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if _gf2_mod(f, d) == 0:
            return False
    return True


class GF2m:
    """The field GF(2^m) defined by an irreducible binary modulus.

    Parameters
    ----------
    m : int
        Extension degree, ``1 <= m <= 16``.
    modulus : int, optional
        Bit vector of the degree-``m`` modulus polynomial (bit ``i`` is the
        coefficient of ``x**i``). Defaults to the Conway polynomial.
    p : int
        Characteristic. Only 2 is supported.

    Instances are immutable; the exp/log tables are built once.
    """

    def __init__(self, m: int, modulus: int | None = None, p: int = 2):
        if p != 2:
            raise FieldError(f"unsupported characteristic {p}; only p = 2 is implemented")
        if not 1 <= m <= MAX_DEGREE:
            raise FieldError(f"extension degree m must be in [1, {MAX_DEGREE}], got {m}")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if modulus.bit_length() - 1 != m:
            raise FieldError(f"modulus 0x{modulus:X} does not have degree {m}")
        if not gf2_poly_is_irreducible(modulus):
            raise FieldError(f"modulus 0x{modulus:X} is reducible over GF(2)")
        self.p = 2
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self._build_tables()

    def _build_tables(self) -> None:
        q1 = self.order - 1
        # x need not be primitive for an arbitrary irreducible modulus.
        gen = next(g for g in range(2, self.order) if self._order_of(g) == q1) if q1 > 1 else 1
        exp = [0] * (2 * q1)
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = _gf2_mod(_clmul(v, gen), self.modulus)
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        self.generator = gen
        self._exp = tuple(exp)
        self._log = tuple(log)

    def _order_of(self, g: int) -> int:
        v, k = g, 1
        while v != 1:
            v = _gf2_mod(_clmul(v, g), self.modulus)
            k += 1
        return k

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, modulus=0x{self.modulus:X})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __reduce__(self):
        return (GF2m, (self.m, self.modulus))

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldError(f"{a} is not an element of GF(2^{self.m})")
        return a

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverseError("0 has no multiplicative inverse")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log of ``a`` to the base ``self.generator``."""
        if a == 0:
            raise ZeroInverseError("log of 0 is undefined")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.order - 1)]

    def elements(self) -> list[int]:
        """All field elements in ascending coordinate order."""
        return list(range(self.order))

    def _check_subfield(self, s: int) -> None:
        if s < 1 or self.m % s:
            raise FieldError(f"GF(2^{s}) is not a subfield of GF(2^{self.m})")

    def rel_trace(self, a: int, s: int) -> int:
        """Trace from GF(2^m) down to GF(2^s): sum of a^(2^(i*s))."""
        self._check_subfield(s)
        out, term = 0, a
        for _ in range(self.m // s):
            out ^= term
            term = self.pow(term, 1 << s)
        return out

    def rel_norm(self, a: int, s: int) -> int:
        """Norm from GF(2^m) down to GF(2^s): product of a^(2^(i*s))."""
        self._check_subfield(s)
        out, term = 1, a
        for _ in range(self.m // s):
            out = self.mul(out, term)
            term = self.pow(term, 1 << s)
        return out

    def abs_trace(self, a: int) -> int:
        return self.rel_trace(a, 1)


@lru_cache(maxsize=None)
def get_field(m: int, modulus: int | None = None) -> GF2m:
    """Shared, cached field instance."""
    return GF2m(m, modulus)


def enumerate_field(field: GF2m) -> list[int]:
    return field.elements()
