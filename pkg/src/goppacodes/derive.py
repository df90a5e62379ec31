"""Code transformations: puncture, shorten, extend, lengthen, Construction X."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .code import DEFAULT_ENUM_LIMIT, CodeRecord, LinearCode
from .gf2 import BitMatrix, in_row_space, rref

KINDS = ("puncture", "shorten", "extend-parity", "lengthen-zero", "construction-x")


class DerivationError(ValueError):
    pass


def _check_position(code: LinearCode, position: int) -> None:
    if not 0 <= position < code.n:
        raise IndexError(f"position {position} out of range for length {code.n}")


def _delete_column(v: int, p: int) -> int:
    low = v & ((1 << p) - 1)
    return low | ((v >> (p + 1)) << p)


def puncture(code: LinearCode, position: int) -> LinearCode:
    """Delete coordinate ``position`` from every codeword."""
    _check_position(code, position)
    return LinearCode(BitMatrix((_delete_column(r, position) for r in code.rows), code.n - 1))


def shorten(code: LinearCode, position: int) -> LinearCode:
    """Keep the codewords vanishing at ``position``, then delete it."""
    _check_position(code, position)
    bit = 1 << position
    rows = list(code.rows)
    hits = [i for i, r in enumerate(rows) if r & bit]
    if hits:
        pivot = rows[hits[0]]
        for i in hits[1:]:
            rows[i] ^= pivot
        del rows[hits[0]]
    return LinearCode(BitMatrix((_delete_column(r, position) for r in rows), code.n - 1))


def extend_parity(code: LinearCode) -> LinearCode:
    n = code.n
    return LinearCode(BitMatrix(((r | ((r.bit_count() & 1) << n)) for r in code.rows), n + 1))


def lengthen_zero(code: LinearCode, extra: int = 1) -> LinearCode:
    if extra < 1:
        raise DerivationError("lengthening needs extra >= 1")
    return LinearCode(BitMatrix(code.rows, code.n + extra))


def construction_x(c1: LinearCode, c2: LinearCode, c3: LinearCode) -> LinearCode:
    """Construction X from a code, a subcode and an auxiliary code.

    Rows of ``c2`` get ``n3`` zeros appended; the complement of ``c2`` in
    ``c1`` (greedy over ``c1``'s rows) is paired with the rows of ``c3``.
    The result is ``[n1 + n3, k1, >= min(d2, d1 + d3)]``.
    """
    if c2.n != c1.n:
        raise DerivationError(f"subcode length {c2.n} != code length {c1.n}")
    if not c2.is_subcode_of(c1):
        raise DerivationError("second code is not a subcode of the first")
    if c3.k != c1.k - c2.k:
        raise DerivationError(f"auxiliary code must have dimension {c1.k - c2.k}, got {c3.k}")
    span = list(c2.rows)
    complement = []
    R, piv = rref(BitMatrix(span, c1.n))
    for r in c1.rows:
        if not in_row_space(r, R, piv):
            complement.append(r)
            span.append(r)
            R, piv = rref(BitMatrix(span, c1.n))
    n1 = c1.n
    rows = list(c2.rows) + [r | (h << n1) for r, h in zip(complement, c3.rows)]
    return LinearCode(BitMatrix(rows, n1 + c3.n))


def find_puncture_position(
    code: LinearCode, limit: int = DEFAULT_ENUM_LIMIT, lane_bits: int | None = None
) -> int:
    """Smallest coordinate in the support of some minimum-weight codeword."""
    _, union = code.min_weight_support(limit, lane_bits)
    if not union:
        raise DerivationError("the zero code has no minimum-weight codeword")
    return (union & -union).bit_length() - 1


@dataclass
class DerivationStep:
    """One transformation in a derivation chain.

    ``positions`` applies to puncture/shorten (empty means choose with
    :func:`find_puncture_position` for puncture, position 0 for shorten);
    ``count`` repeats a position-free puncture or sets the number of zero
    coordinates for ``lengthen-zero``. Construction X takes its subcode and
    auxiliary code as lists of 0/1 row strings.
    """

    kind: str
    positions: list[int] = field(default_factory=list)
    count: int = 1
    note: str = ""
    subcode: list[str] | None = None
    auxiliary: list[str] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DerivationError(f"unknown derivation kind {self.kind!r}; expected one of {KINDS}")
        if len(set(self.positions)) != len(self.positions):
            raise DerivationError("duplicate positions")
        if self.count < 1:
            raise DerivationError("count must be >= 1")
        if self.kind == "construction-x" and (self.subcode is None or self.auxiliary is None):
            raise DerivationError("construction-x needs 'subcode' and 'auxiliary' generators")

    @classmethod
    def from_dict(cls, obj: dict) -> "DerivationStep":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise DerivationError(f"not a derivation step: {obj!r}")
        unknown = set(obj) - {"kind", "positions", "count", "note", "subcode", "auxiliary"}
        if unknown:
            raise DerivationError(f"unknown step fields {sorted(unknown)}")
        return cls(
            kind=obj["kind"],
            positions=[int(p) for p in obj.get("positions", [])],
            count=int(obj.get("count", 1)),
            note=obj.get("note", ""),
            subcode=obj.get("subcode"),
            auxiliary=obj.get("auxiliary"),
        )

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.positions:
            out["positions"] = list(self.positions)
        if self.count != 1:
            out["count"] = self.count
        if self.note:
            out["note"] = self.note
        if self.subcode is not None:
            out["subcode"] = self.subcode
            out["auxiliary"] = self.auxiliary
        return out

    def describe(self) -> str:
        bits = [self.kind]
        if self.positions:
            bits.append("@" + ",".join(map(str, self.positions)))
        if self.count != 1:
            bits.append(f"x{self.count}")
        return "".join(bits)


def load_steps(text: str) -> list[DerivationStep]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise DerivationError("a derivation file must hold a JSON list of steps")
    return [DerivationStep.from_dict(s) for s in data]


def _check_positions(code: LinearCode, positions: Iterable[int]) -> None:
    for p in positions:
        _check_position(code, p)


def apply_step(
    code: LinearCode, step: DerivationStep, limit: int = DEFAULT_ENUM_LIMIT, lane_bits: int | None = None
) -> LinearCode:
    if step.kind == "puncture":
        if step.positions:
            _check_positions(code, step.positions)
            for p in sorted(step.positions, reverse=True):
                code = puncture(code, p)
            return code
        for _ in range(step.count):
            code = puncture(code, find_puncture_position(code, limit, lane_bits))
        return code
    if step.kind == "shorten":
        positions = step.positions or [0]
        _check_positions(code, positions)
        for p in sorted(positions, reverse=True):
            code = shorten(code, p)
        return code
    if step.kind == "extend-parity":
        return extend_parity(code)
    if step.kind == "lengthen-zero":
        return lengthen_zero(code, step.count)
    c2 = LinearCode.from_strings(step.subcode) if step.subcode else LinearCode.zero(code.n)
    c3 = LinearCode.from_strings(step.auxiliary) if step.auxiliary else LinearCode.zero(0)
    return construction_x(code, c2, c3)


def apply_chain(
    code: LinearCode,
    steps: Sequence[DerivationStep],
    limit: int = DEFAULT_ENUM_LIMIT,
    lane_bits: int | None = None,
    provenance: str = "",
) -> tuple[LinearCode, list[CodeRecord]]:
    """Apply ``steps`` in order, re-enumerating after each one.

    Returns the final code and one record per step.
    """
    trace = []
    for step in steps:
        code = apply_step(code, step, limit, lane_bits)
        provenance = f"{provenance} | {step.describe()}" if provenance else step.describe()
        trace.append(CodeRecord.from_code(code, provenance, limit, lane_bits))
    return code, trace

