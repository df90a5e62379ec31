"""Binary Goppa codes C(L, g).

The parity-check matrix is built in alternant form,
``H[j][i] = alpha_i^j / g(alpha_i)`` for ``j < deg g``, and expanded to
GF(2). :func:`definitional_member` checks the defining congruence
``sum c_i / (x - alpha_i) = 0 mod g`` directly and serves as an
independent oracle for the matrix route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .code import LinearCode
from .field import GF2m
from .gf2 import BitMatrix, binary_expand, nullspace
from .poly import Polynomial, PolynomialError, inverse_mod


class GoppaError(ValueError):
    pass


class EmptySupportError(GoppaError):
    pass


def max_support(field: GF2m, g: Polynomial) -> list[int]:
    """All non-roots of ``g``, in ascending coordinate order."""
    if g.is_zero():
        raise GoppaError("the Goppa polynomial must be nonzero")
    L = [a for a in field.elements() if g.eval(a) != 0]
    if not L:
        raise EmptySupportError(f"{g.render()} vanishes on all of GF(2^{field.m})")
    return L


@dataclass(frozen=True)
class GoppaSpec:
    """Field, Goppa polynomial and ordered support of a binary Goppa code."""

    field: GF2m
    g: Polynomial
    support: tuple[int, ...]

    def __post_init__(self):
        if self.g.field != self.field:
            raise GoppaError("Goppa polynomial is defined over a different field")
        if self.g.degree < 1:
            raise GoppaError("the Goppa polynomial must have degree >= 1")
        object.__setattr__(self, "support", tuple(self.field.check(a) for a in self.support))
        if not self.support:
            raise EmptySupportError("the support must be nonempty")
        if len(set(self.support)) != len(self.support):
            raise GoppaError("support elements must be distinct")
        bad = [a for a in self.support if self.g.eval(a) == 0]
        if bad:
            raise GoppaError(f"g vanishes on support element(s) {bad[:5]}")

    @classmethod
    def maximal(cls, field: GF2m, g: Polynomial) -> "GoppaSpec":
        return cls(field, g, tuple(max_support(field, g)))

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def t(self) -> int:
        return self.g.degree

    def field_parity_check(self) -> list[list[int]]:
        """The t x n alternant matrix over GF(2^m)."""
        f = self.field
        ginv = [f.inv(self.g.eval(a)) for a in self.support]
        rows = []
        col = list(ginv)
        for _ in range(self.t):
            rows.append(list(col))
            col = [f.mul(c, a) for c, a in zip(col, self.support)]
        return rows


def build_parity_check(spec: GoppaSpec) -> BitMatrix:
    """Binary ``m*t x n`` parity-check matrix of C(L, g)."""
    return binary_expand(spec.field_parity_check(), spec.field)


def build_goppa_code(spec: GoppaSpec) -> LinearCode:
    return LinearCode(nullspace(build_parity_check(spec)))


def goppa_code(field: GF2m, g: Polynomial, support: Sequence[int] | None = None) -> LinearCode:
    spec = GoppaSpec.maximal(field, g) if support is None else GoppaSpec(field, g, tuple(support))
    return build_goppa_code(spec)


def definitional_member(c: int | Sequence[int], spec: GoppaSpec) -> bool:
    """Evaluate the Goppa congruence for the binary vector ``c`` literally."""
    if not isinstance(c, int):
        if len(c) != spec.n:
            raise GoppaError(f"vector length {len(c)} != n = {spec.n}")
        c = sum(1 << i for i, b in enumerate(c) if b)
    inverses = _inverse_terms(spec)
    total = Polynomial.zero(spec.field)
    for i, term in enumerate(inverses):
        if (c >> i) & 1:
            total = total + term
    return (total % spec.g).is_zero()


@lru_cache(maxsize=32)
def _inverse_terms(spec: GoppaSpec) -> tuple[Polynomial, ...]:
    """``(x - alpha_i)^-1 mod g`` for every support element."""
    out = []
    for a in spec.support:
        try:
            out.append(inverse_mod(Polynomial(spec.field, [a, 1]), spec.g))
        except PolynomialError as exc:
            raise AssertionError(f"x - {a} is not invertible mod g; support invariant broken") from exc
    return tuple(out)
