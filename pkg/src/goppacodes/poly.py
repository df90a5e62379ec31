"""Dense univariate polynomials over GF(2^m), plus a small expression parser.

Coefficients are stored low degree first with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import re
from typing import Iterable

from .field import GF2m, FieldError

MAX_EXPONENT = 10_000


class PolynomialError(ValueError):
    pass


class PolySyntaxError(PolynomialError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class Polynomial:
    """Immutable polynomial over a :class:`GF2m`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF2m, coeffs: Iterable[int] = ()):
        c = [field.check(int(a)) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, field: GF2m, coeffs: list[int]) -> "Polynomial":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def zero(cls, field: GF2m) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: GF2m) -> "Polynomial":
        return cls(field, [1])

    @classmethod
    def x(cls, field: GF2m) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: GF2m, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def from_exponents(cls, field: GF2m, exponents: Iterable[int]) -> "Polynomial":
        """Binary polynomial with the given exponents (repeats cancel)."""
        exps = list(exponents)
        c = [0] * (max(exps, default=-1) + 1)
        for e in exps:
            c[e] ^= 1
        return cls._raw(field, c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r}, m={self.field.m})"

    def __str__(self) -> str:
        return self.render()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial(self.field, [other])
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def _same_field(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.field, [other])
        if other.field != self.field:
            raise PolynomialError("polynomials over different fields")
        return other

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] ^= v
        return Polynomial._raw(self.field, out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._same_field(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        mul = self.field.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] ^= mul(a, b)
        return Polynomial._raw(self.field, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        mul = self.field.mul
        return Polynomial._raw(self.field, [mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial._raw(self.field, [0] * k + list(self.coeffs))

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        divisor = self._same_field(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        r = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        if len(r) - 1 < dd:
            return Polynomial.zero(f), self
        inv_lead = f.inv(d[-1])
        q = [0] * (len(r) - dd)
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i]
            if c == 0:
                continue
            c = f.mul(c, inv_lead)
            q[i - dd] = c
            for j in range(dd + 1):
                if d[j]:
                    r[i - dd + j] ^= f.mul(c, d[j])
        return Polynomial._raw(f, q), Polynomial._raw(f, r[:dd])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise PolynomialError("negative polynomial exponent")
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead()))

    def derivative(self) -> "Polynomial":
        # characteristic 2: i * a_i vanishes for even i
        return Polynomial._raw(
            self.field, [a if i % 2 else 0 for i, a in enumerate(self.coeffs)][1:]
        )

    def __call__(self, a: int) -> int:
        return self.eval(a)

    def eval(self, a: int) -> int:
        mul = self.field.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = mul(acc, a) ^ c
        return acc

    def roots(self) -> set[int]:
        """All roots in the base field, by exhaustive evaluation."""
        if self.is_zero():
            raise PolynomialError("the zero polynomial has undefined roots")
        return {a for a in self.field.elements() if self.eval(a) == 0}

    def is_squarefree(self) -> bool:
        return gcd(self, self.derivative()).degree == 0

    def is_irreducible(self) -> bool:
        """Ben-Or test: gcd(f, x^(q^i) - x mod f) = 1 for i <= deg f / 2."""
        n = self.degree
        if n < 1:
            raise PolynomialError("irreducibility is undefined for constant polynomials")
        if n == 1:
            return True
        f = self.monic()
        x = Polynomial.x(self.field)
        q = self.field.order
        h = x
        for _ in range(n // 2):
            h = h.powmod(q, f)
            if gcd(f, h - x).degree != 0:
                return False
        return True

    def render(self) -> str:
        """Text form accepted by :func:`parse_poly`, highest degree first."""
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1:
                terms.append(mono or "1")
            else:
                cs = f"0x{c:X}"
                terms.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(terms)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.one(f), Polynomial.zero(f)
    t0, t1 = Polynomial.zero(f), Polynomial.one(f)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = f.inv(r0.lead())
    return r0.scale(c), s0.scale(c), t0.scale(c)


def inverse_mod(a: Polynomial, modulus: Polynomial) -> Polynomial:
    g, s, _ = xgcd(a % modulus, modulus)
    if g.degree != 0:
        raise PolynomialError("polynomial is not invertible modulo the given modulus")
    return s % modulus


def trace_poly(field: GF2m, s: int) -> Polynomial:
    """x + x^(2^s) + x^(2^(2s)) + ... with m/s terms."""
    if s < 1 or field.m % s:
        raise FieldError(f"GF(2^{s}) is not a subfield of GF(2^{field.m})")
    return Polynomial.from_exponents(field, [1 << (i * s) for i in range(field.m // s)])


def norm_poly(field: GF2m, s: int) -> Polynomial:
    """x^(1 + 2^s + 2^(2s) + ...) with m/s terms in the exponent."""
    if s < 1 or field.m % s:
        raise FieldError(f"GF(2^{s}) is not a subfield of GF(2^{field.m})")
    return Polynomial.monomial(field, sum(1 << (i * s) for i in range(field.m // s)))


# -- expression parser -------------------------------------------------------
#
#   expr   := term ('+' term)*
#   term   := factor ('*'? factor)*
#   factor := atom ('^' uint)?
#   atom   := 'x' | uint | hex | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(0[xX][0-9a-fA-F]+)|(\d+)|(x)|(.))", re.DOTALL)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        start = mt.start(mt.lastindex)
        hexv, dec, var, other = mt.groups()
        if hexv is not None:
            tokens.append(("hex", hexv, start))
        elif dec is not None:
            tokens.append(("int", dec, start))
        elif var is not None:
            tokens.append(("x", var, start))
        elif other.strip():
            if other not in "+*^()":
                raise PolySyntaxError(f"unexpected character {other!r}", text, start)
            tokens.append((other, other, start))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: GF2m):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        self.take("end")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] == "+":
            self.i += 1
            p = p + self.term()
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.i += 1
            elif kind not in ("x", "int", "hex", "("):
                return p
            p = p * self.factor()

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.i += 1
            _, digits, pos = self.take("int")
            e = int(digits)
            if e > MAX_EXPONENT:
                raise PolySyntaxError(f"exponent {e} exceeds {MAX_EXPONENT}", self.text, pos)
            base = base**e
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        f = self.field
        if kind == "x":
            self.i += 1
            return Polynomial.x(f)
        if kind == "int":
            self.i += 1
            return Polynomial(f, [int(value) % 2])
        if kind == "hex":
            self.i += 1
            v = int(value, 16)
            if v >= f.order:
                raise PolySyntaxError(f"{value} is not an element of GF(2^{f.m})", self.text, pos)
            return Polynomial(f, [v])
        if kind == "(":
            self.i += 1
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "end" else repr(value)
        raise PolySyntaxError(f"unexpected {what}", self.text, pos)


def parse_poly(text: str, field: GF2m) -> Polynomial:
    """Parse e.g. ``"(x^17 + 1)^6"`` or ``"0x1D*x^2 + x + 1"`` over ``field``."""
    return _Parser(text, field).parse()

