"""Binary linear codes: canonical generator, weight distribution, duals.

Weight distributions are computed by exhaustive Gray-code traversal of the
message space. The top ``lane_bits`` message bits are fixed per lane and all
lanes step through the same Gray sequence of the remaining bits together,
so every step is one vectorised XOR + popcount over the lane axis. The
merged histogram does not depend on the lane split.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .gf2 import BitMatrix, DimensionError, in_row_space, rref

DEFAULT_ENUM_LIMIT = 28
LANE_BITS_ENV = "GOPPACODES_LANE_BITS"
DEFAULT_LANE_BITS = 10
MAX_LANE_BITS = 12


class EnumerationRefused(RuntimeError):
    def __init__(self, k: int, limit: int):
        super().__init__(f"refusing to enumerate 2^{k} codewords (limit is k <= {limit})")
        self.k = k
        self.limit = limit


class InvalidDistribution(ValueError):
    pass


def default_lane_bits() -> int:
    raw = os.environ.get(LANE_BITS_ENV)
    if raw is None:
        return DEFAULT_LANE_BITS
    b = int(raw)
    if not 0 <= b <= MAX_LANE_BITS:
        raise ValueError(f"{LANE_BITS_ENV} must be in [0, {MAX_LANE_BITS}], got {b}")
    return b


@dataclass(frozen=True)
class WeightDistribution:
    """Counts ``A_0 .. A_n`` of codewords by Hamming weight."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if not self.counts:
            raise InvalidDistribution("a distribution needs at least A_0")
        if any(c < 0 for c in self.counts):
            raise InvalidDistribution("negative codeword count")

    @classmethod
    def from_nonzero(cls, n: int, terms: dict[int, int] | Sequence[tuple[int, int]]) -> "WeightDistribution":
        items = terms.items() if isinstance(terms, dict) else terms
        counts = [0] * (n + 1)
        for w, a in items:
            counts[int(w)] += int(a)
        return cls(tuple(counts))

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def k(self) -> int:
        t = self.total
        if t & (t - 1):
            raise InvalidDistribution(f"total {t} is not a power of two")
        return t.bit_length() - 1

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def nonzero(self) -> list[tuple[int, int]]:
        return [(w, a) for w, a in enumerate(self.counts) if a]

    @property
    def min_distance(self) -> int | None:
        """Smallest positive weight present; None for the zero code."""
        return next((w for w, a in enumerate(self.counts) if w and a), None)

    def is_symmetric(self) -> bool:
        return self.counts == self.counts[::-1]

    def render(self) -> str:
        """``sum A_w x^w y^(n-w)`` in descending w, like the usual display."""
        n = self.n
        terms = []
        for w in range(n, -1, -1):
            a = self.counts[w]
            if not a:
                continue
            parts = [] if a == 1 else [str(a)]
            for var, e in (("x", w), ("y", n - w)):
                if e == 1:
                    parts.append(var)
                elif e > 1:
                    parts.append(f"{var}^{e}")
            terms.append(" ".join(parts) or "1")
        return " + ".join(terms) or "0"

    def lengthened(self, extra: int) -> "WeightDistribution":
        return WeightDistribution(self.counts + (0,) * extra)


def krawtchouk_row(w: int, n: int) -> list[int]:
    """``[K_0(w), ..., K_n(w)]`` for length n, by the three-term recurrence."""
    out = [1]
    if n == 0:
        return out
    out.append(n - 2 * w)
    for j in range(1, n):
        nxt = (n - 2 * w) * out[j] - (n - j + 1) * out[j - 1]
        out.append(nxt // (j + 1))
    return out


def krawtchouk(j: int, w: int, n: int) -> int:
    """Direct binomial-sum definition (used as an independent check)."""
    return sum((-1) ** s * comb(w, s) * comb(n - w, j - s) for s in range(j + 1))


def macwilliams_dual(W: WeightDistribution, n: int | None = None, k: int | None = None) -> WeightDistribution:
    """Dual distribution ``A'_j = 2^-k sum_w A_w K_j(w; n)``, exact."""
    n = W.n if n is None else n
    k = W.k if k is None else k
    if n != W.n:
        raise InvalidDistribution(f"distribution has length {W.n}, expected {n}")
    if W.total != 1 << k:
        raise InvalidDistribution(f"counts sum to {W.total}, expected 2^{k}")
    acc = [0] * (n + 1)
    for w, a in W.nonzero():
        for j, kj in enumerate(krawtchouk_row(w, n)):
            acc[j] += a * kj
    size = 1 << k
    out = []
    for j, v in enumerate(acc):
        q, r = divmod(v, size)
        if r or q < 0:
            raise InvalidDistribution(f"dual coefficient A'_{j} = {v}/2^{k} is not a nonnegative integer")
        out.append(q)
    return WeightDistribution(tuple(out))


def _to_words(v: int, nwords: int) -> list[int]:
    return [(v >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(nwords)]


def _from_words(words: Sequence[int]) -> int:
    return sum(int(w) << (64 * i) for i, w in enumerate(words))


def _gray_enumerate(
    rows: Sequence[int], n: int, lane_bits: int, track_min: bool = False
) -> tuple[list[int], int, int]:
    """Histogram of codeword weights over all 2^k messages.

    Returns ``(counts, min_weight, support_union)``; the last two are only
    meaningful with ``track_min`` and describe the nonzero codewords of
    smallest weight.
    """
    k = len(rows)
    nwords = max(1, (n + 63) // 64)
    b = min(lane_bits, k)
    low = [np.array(_to_words(r, nwords), dtype=np.uint64) for r in rows[: k - b]]
    lanes = np.zeros((1, nwords), dtype=np.uint64)
    for r in rows[k - b :]:
        rw = np.array(_to_words(r, nwords), dtype=np.uint64)
        lanes = np.concatenate([lanes, lanes ^ rw])
    counts = np.zeros(n + 1, dtype=np.int64)
    best = n + 1
    union = np.zeros(nwords, dtype=np.uint64)

    def visit(cw: np.ndarray) -> None:
        nonlocal best, union
        wts = np.bitwise_count(cw).sum(axis=1, dtype=np.intp)
        counts[:] += np.bincount(wts, minlength=n + 1)
        if track_min:
            pos = wts[wts > 0]
            if pos.size:
                mw = int(pos.min())
                if mw <= best:
                    hit = np.bitwise_or.reduce(cw[wts == mw], axis=0)
                    union = hit if mw < best else union | hit
                    best = mw

    cw = lanes.copy()
    visit(cw)
    for step in range(1, 1 << (k - b)):
        cw ^= low[(step & -step).bit_length() - 1]
        visit(cw)
    return [int(c) for c in counts], best, _from_words(union)


class LinearCode:
    """Binary linear code held by its RREF generator matrix.

    Parameters
    ----------
    generator : BitMatrix
        Any spanning set of rows; it is reduced to canonical RREF and
        dependent rows are dropped.
    """

    def __init__(self, generator: BitMatrix):
        R, pivots = rref(generator)
        self.generator = R
        self.pivots = tuple(pivots)
        self.n = R.ncols
        self.k = R.nrows

    @classmethod
    def from_rows(cls, rows: Sequence[int], n: int) -> "LinearCode":
        return cls(BitMatrix(rows, n))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "LinearCode":
        return cls(BitMatrix.from_strings(lines))

    @classmethod
    def zero(cls, n: int) -> "LinearCode":
        return cls(BitMatrix([], n))

    @classmethod
    def repetition(cls, n: int) -> "LinearCode":
        return cls(BitMatrix([(1 << n) - 1], n))

    @classmethod
    def full(cls, n: int) -> "LinearCode":
        return cls(BitMatrix.identity(n))

    def __repr__(self) -> str:
        return f"LinearCode[{self.n}, {self.k}]"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearCode) and self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.generator)

    @property
    def rows(self) -> tuple[int, ...]:
        return self.generator.rows

    def contains(self, v: int | Sequence[int]) -> bool:
        if not isinstance(v, int):
            if len(v) != self.n:
                raise DimensionError(f"vector length {len(v)} != code length {self.n}")
            v = sum(1 << i for i, b in enumerate(v) if b)
        elif v >> self.n:
            raise DimensionError(f"vector does not fit in length {self.n}")
        return in_row_space(v, self.generator, self.pivots)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return self.n == other.n and all(other.contains(r) for r in self.rows)

    def encode(self, message: int) -> int:
        cw = 0
        for i, r in enumerate(self.rows):
            if (message >> i) & 1:
                cw ^= r
        return cw

    def codewords(self) -> Iterator[int]:
        for msg in range(1 << self.k):
            yield self.encode(msg)

    def _check_limit(self, limit: int) -> None:
        if self.k > limit:
            raise EnumerationRefused(self.k, limit)

    def weight_distribution(
        self, limit: int = DEFAULT_ENUM_LIMIT, lane_bits: int | None = None
    ) -> WeightDistribution:
        self._check_limit(limit)
        b = default_lane_bits() if lane_bits is None else lane_bits
        counts, _, _ = _gray_enumerate(self.rows, self.n, b)
        return WeightDistribution(tuple(counts))

    def min_distance(self, limit: int = DEFAULT_ENUM_LIMIT, lane_bits: int | None = None) -> int | None:
        return self.weight_distribution(limit, lane_bits).min_distance

    def min_weight_support(
        self, limit: int = DEFAULT_ENUM_LIMIT, lane_bits: int | None = None
    ) -> tuple[WeightDistribution, int]:
        """Distribution plus the union (as an int) of all minimum-weight supports."""
        self._check_limit(limit)
        b = default_lane_bits() if lane_bits is None else lane_bits
        counts, _, union = _gray_enumerate(self.rows, self.n, b, track_min=True)
        return WeightDistribution(tuple(counts)), union

    def dual(self) -> "LinearCode":
        from .gf2 import nullspace

        return LinearCode(nullspace(self.generator))


@dataclass
class CodeRecord:
    """Parameters and (when certified) the distribution of one code."""

    n: int
    k: int
    d: int | None = None
    distribution: WeightDistribution | None = None
    provenance: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.distribution is not None:
            if self.distribution.n != self.n or self.distribution.total != 1 << self.k:
                raise InvalidDistribution(f"distribution inconsistent with [{self.n}, {self.k}]")
            dmin = self.distribution.min_distance
            if self.d is None:
                self.d = dmin
            elif self.d != dmin:
                raise InvalidDistribution(f"d = {self.d} but the distribution gives {dmin}")

    @classmethod
    def from_code(
        cls,
        code: LinearCode,
        provenance: str = "",
        limit: int = DEFAULT_ENUM_LIMIT,
        lane_bits: int | None = None,
    ) -> "CodeRecord":
        """Enumerate when ``k <= limit``; otherwise record only ``n, k``."""
        if code.k > limit:
            return cls(code.n, code.k, provenance=provenance)
        W = code.weight_distribution(limit, lane_bits)
        return cls(code.n, code.k, distribution=W, provenance=provenance)

    @property
    def params(self) -> tuple[int, int, int | None]:
        return self.n, self.k, self.d

    def to_dict(self) -> dict:
        out: dict = {"n": self.n, "k": self.k}
        if self.d is not None:
            out["d"] = self.d
        if self.distribution is not None:
            out["A"] = [[w, str(a)] for w, a in self.distribution.nonzero()]
        out["provenance"] = self.provenance
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, obj: dict) -> "CodeRecord":
        dist = None
        if "A" in obj:
            dist = WeightDistribution.from_nonzero(obj["n"], [(w, int(a)) for w, a in obj["A"]])
        known = {"n", "k", "d", "A", "provenance"}
        return cls(
            n=int(obj["n"]),
            k=int(obj["k"]),
            d=None if obj.get("d") is None else int(obj["d"]),
            distribution=dist,
            provenance=obj.get("provenance", ""),
            extra={key: v for key, v in obj.items() if key not in known},
        )

    @classmethod
    def from_json(cls, text: str) -> "CodeRecord":
        return cls.from_dict(json.loads(text))
