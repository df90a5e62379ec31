"""Catalog of claimed codes and one-command verification.

Each entry names a construction (a Goppa code, or a parent entry plus a
derivation chain), its expected ``[n, k, d]``, optionally its full weight
distribution, and the previously best known distance for comparison.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .code import DEFAULT_ENUM_LIMIT, LinearCode, WeightDistribution
from .derive import DerivationStep, apply_step
from .field import get_field
from .goppa import GoppaSpec, build_goppa_code
from .gf2 import row_space_equal
from .poly import parse_poly


class CatalogError(ValueError):
    pass


class MissingDataError(CatalogError):
    pass


@dataclass
class CatalogEntry:
    id: str
    construction: dict
    n: int
    k: int
    d: int | None = None
    distribution: WeightDistribution | None = None
    prior_best_d: int | None = None
    source: str = ""

    def __post_init__(self):
        W = self.distribution
        if W is not None:
            if W.n != self.n:
                raise CatalogError(f"{self.id}: distribution length {W.n} != n = {self.n}")
            if W.total != 1 << self.k:
                raise CatalogError(f"{self.id}: distribution sums to {W.total}, not 2^{self.k}")
            if self.d is not None and W.min_distance != self.d:
                raise CatalogError(f"{self.id}: d = {self.d} but distribution gives {W.min_distance}")
        c = self.construction
        if ("goppa" in c) == ("from" in c):
            raise CatalogError(f"{self.id}: construction needs exactly one of 'goppa' or 'from'")

    @property
    def parent(self) -> str | None:
        return self.construction.get("from")

    @property
    def steps(self) -> list[DerivationStep]:
        return [DerivationStep.from_dict(s) for s in self.construction.get("steps", [])]

    @classmethod
    def from_dict(cls, obj: dict) -> "CatalogEntry":
        n = int(obj["n"])
        dist = None
        if "A" in obj:
            dist = WeightDistribution.from_nonzero(n, [(w, int(a)) for w, a in obj["A"]])
        return cls(
            id=obj["id"],
            construction=obj["construction"],
            n=n,
            k=int(obj["k"]),
            d=obj.get("d"),
            distribution=dist,
            prior_best_d=obj.get("prior_best_d"),
            source=obj.get("source", ""),
        )

    def to_dict(self) -> dict:
        out: dict = {"id": self.id, "construction": self.construction, "n": self.n, "k": self.k}
        if self.d is not None:
            out["d"] = self.d
        if self.distribution is not None:
            out["A"] = [[w, str(a)] for w, a in self.distribution.nonzero()]
        if self.prior_best_d is not None:
            out["prior_best_d"] = self.prior_best_d
        out["source"] = self.source
        return out


@dataclass
class FieldCheck:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerificationReport:
    """Outcome of rebuilding one entry.

    ``status`` is ``PASS`` when every checked field matches, ``FAIL`` on
    any mismatch, ``PARTIAL`` when the distance could not be enumerated
    (only ``n``, ``k`` and any design-distance check were compared), and
    ``ERROR`` when the construction itself failed.
    """

    id: str
    status: str
    checks: list[FieldCheck] = field(default_factory=list)
    n: int | None = None
    k: int | None = None
    d: int | None = None
    distribution: WeightDistribution | None = None
    note: str = ""
    seconds: float = 0.0

    @property
    def failed_fields(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "mismatches": self.failed_fields,
            "seconds": round(self.seconds, 3),
        }
        if self.note:
            out["note"] = self.note
        return out


class Catalog:
    def __init__(self, entries: list[CatalogEntry]):
        ids = [e.id for e in entries]
        if len(set(ids)) != len(ids):
            raise CatalogError("duplicate catalog ids")
        self.entries = {e.id: e for e in entries}
        for e in entries:
            if e.parent is not None and e.parent not in self.entries:
                raise CatalogError(f"{e.id}: unknown parent {e.parent!r}")

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: str) -> CatalogEntry:
        try:
            return self.entries[key]
        except KeyError:
            raise CatalogError(f"no catalog entry {key!r}") from None

    @classmethod
    def from_dict(cls, obj: dict) -> "Catalog":
        return cls([CatalogEntry.from_dict(e) for e in obj["entries"]])

    @classmethod
    def load(cls, path: str | Path | None = None) -> "Catalog":
        """Load ``path``, or the catalog shipped with the package."""
        if path is None:
            text = resources.files("goppacodes").joinpath("data/catalog.json").read_text()
        else:
            text = Path(path).read_text()
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps({"version": 1, "entries": [e.to_dict() for e in self]}, indent=1)

    def enumerable(self, limit: int = DEFAULT_ENUM_LIMIT) -> list[CatalogEntry]:
        return [e for e in self if e.k <= limit]


def _build_goppa(spec: dict) -> tuple[GoppaSpec, LinearCode]:
    m = int(spec["m"])
    modulus = spec.get("modulus")
    field_ = get_field(m, None if modulus is None else int(str(modulus), 0))
    g = parse_poly(spec["poly"], field_)
    support = spec.get("support", "maximal")
    if support == "maximal":
        gs = GoppaSpec.maximal(field_, g)
    else:
        gs = GoppaSpec(field_, g, tuple(int(str(a), 0) for a in support))
    return gs, build_goppa_code(gs)


class Verifier:
    """Rebuilds catalog entries, memoising intermediate codes and distributions."""

    def __init__(self, catalog: Catalog, limit: int = DEFAULT_ENUM_LIMIT, lane_bits: int | None = None):
        self.catalog = catalog
        self.limit = limit
        self.lane_bits = lane_bits
        self._codes: dict[str, LinearCode] = {}
        self._dists: dict[str, WeightDistribution] = {}

    def code(self, entry_id: str) -> LinearCode:
        if entry_id not in self._codes:
            e = self.catalog[entry_id]
            if e.parent is None:
                code = _build_goppa(e.construction["goppa"])[1]
            else:
                code = self.code(e.parent)
                for step in e.steps:
                    code = apply_step(code, step, self.limit, self.lane_bits)
            self._codes[entry_id] = code
        return self._codes[entry_id]

    def distribution(self, entry_id: str) -> WeightDistribution:
        if entry_id not in self._dists:
            self._dists[entry_id] = self.code(entry_id).weight_distribution(self.limit, self.lane_bits)
        return self._dists[entry_id]

    def verify(self, entry: CatalogEntry | str) -> VerificationReport:
        e = self.catalog[entry] if isinstance(entry, str) else entry
        t0 = time.perf_counter()
        try:
            report = self._verify(e)
        except Exception as exc:  # reported, not raised
            report = VerificationReport(e.id, "ERROR", note=f"{type(exc).__name__}: {exc}")
        report.seconds = time.perf_counter() - t0
        return report

    def _verify(self, e: CatalogEntry) -> VerificationReport:
        code = self.code(e.id)
        checks = [FieldCheck("n", e.n, code.n), FieldCheck("k", e.k, code.k)]
        report = VerificationReport(e.id, "PASS", checks, n=code.n, k=code.k)
        design = e.construction.get("design_check")
        if design is not None:
            gs, _ = _build_goppa(e.construction["goppa"])
            doubled = build_goppa_code(GoppaSpec(gs.field, parse_poly(design, gs.field), gs.support))
            checks.append(FieldCheck("design_check", True, row_space_equal(code.generator, doubled.generator)))
        if code.k > self.limit:
            report.note = f"k = {code.k} exceeds the enumeration limit {self.limit}; d not certified"
            report.status = "FAIL" if report.failed_fields else "PARTIAL"
            return report
        W = self.distribution(e.id)
        report.d = W.min_distance
        report.distribution = W
        if e.d is not None:
            checks.append(FieldCheck("d", e.d, W.min_distance))
        if e.distribution is not None:
            checks.append(FieldCheck("distribution", e.distribution, W))
        if report.failed_fields:
            report.status = "FAIL"
        return report


def verify_entry(entry: CatalogEntry | str, catalog: Catalog | None = None, **kwargs) -> VerificationReport:
    catalog = catalog or Catalog.load()
    return Verifier(catalog, **kwargs).verify(entry)


def improvement_margin(entry: CatalogEntry, verified_d: int | None = None) -> int:
    """Verified (or expected) distance minus the previous best known distance."""
    if entry.prior_best_d is None:
        raise MissingDataError(f"{entry.id} has no prior best-known distance")
    d = entry.d if verified_d is None else verified_d
    if d is None:
        raise MissingDataError(f"{entry.id} has no distance to compare")
    return d - entry.prior_best_d
