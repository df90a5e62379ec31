"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 enumeration refused (the record is still printed, without ``d``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .catalog import Catalog, CatalogError, Verifier, improvement_margin
from .code import (
    DEFAULT_ENUM_LIMIT,
    MAX_LANE_BITS,
    CodeRecord,
    LinearCode,
    default_lane_bits,
)
from .derive import DerivationError, apply_chain, load_steps
from .field import FieldError, GF2m, get_field
from .goppa import GoppaError, GoppaSpec, build_goppa_code
from .gf2 import BitMatrix, DimensionError
from .poly import PolynomialError, parse_poly

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_REFUSED = 3


class ConfigError(ValueError):
    pass


@dataclass
class CliConfig:
    m: int = 8
    modulus: int | None = None
    goppa_poly: str | None = None
    support: str = "maximal"
    limit: int = DEFAULT_ENUM_LIMIT
    lane_bits: int = 10
    output: str = "json"

    def __post_init__(self):
        if not 0 <= self.lane_bits <= MAX_LANE_BITS:
            raise ConfigError(f"lane-split exponent must be in [0, {MAX_LANE_BITS}], got {self.lane_bits}")
        if self.limit < 0:
            raise ConfigError("enumeration limit must be nonnegative")
        try:
            self.field = get_field(self.m, self.modulus)
        except FieldError as exc:
            raise ConfigError(str(exc)) from exc

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        lane_bits = args.lanes if args.lanes is not None else default_lane_bits()
        return cls(
            m=args.m,
            modulus=args.modulus,
            goppa_poly=getattr(args, "goppa_poly", None),
            support=getattr(args, "support", "maximal"),
            limit=args.limit,
            lane_bits=lane_bits,
            output=args.format or getattr(args, "default_format", "json"),
        )

    def goppa_spec(self) -> GoppaSpec:
        if not self.goppa_poly:
            raise ConfigError("--goppa-poly is required")
        g = parse_poly(self.goppa_poly, self.field)
        if self.support == "maximal":
            return GoppaSpec.maximal(self.field, g)
        tokens = Path(self.support).read_text().split()
        return GoppaSpec(self.field, g, tuple(int(t, 0) for t in tokens))


def _hex(text: str) -> int:
    return int(text, 16) if not text.lower().startswith("0x") else int(text, 0)


def _emit_record(record: CodeRecord, fmt: str) -> None:
    if fmt == "json":
        print(record.to_json())
        return
    d = "?" if record.d is None else record.d
    print(f"[{record.n}, {record.k}, {d}]  {record.provenance}")
    if record.distribution is not None:
        print(record.distribution.render())


def _refused_or_ok(record: CodeRecord) -> int:
    return EXIT_OK if record.d is not None or record.k == 0 else EXIT_REFUSED


def cmd_build(args: argparse.Namespace) -> int:
    cfg = CliConfig.from_args(args)
    spec = cfg.goppa_spec()
    code = build_goppa_code(spec)
    prov = f"binary Goppa code over GF(2^{cfg.m}) mod 0x{cfg.field.modulus:X}, g = {cfg.goppa_poly}, |L| = {spec.n}"
    if args.export_generator:
        Path(args.export_generator).write_text(code.generator.dumps())
    record = CodeRecord.from_code(code, prov, cfg.limit, cfg.lane_bits)
    _emit_record(record, cfg.output)
    return _refused_or_ok(record)


def _input_code(args: argparse.Namespace, cfg: CliConfig) -> tuple[LinearCode, str]:
    sources = [bool(args.generator), bool(args.catalog_id), bool(args.goppa_poly)]
    if sum(sources) != 1:
        raise ConfigError("give exactly one of --generator, --catalog-id, --goppa-poly")
    if args.generator:
        return LinearCode(BitMatrix.loads(Path(args.generator).read_text())), f"generator {args.generator}"
    if args.catalog_id:
        cat = Catalog.load(args.catalog)
        return Verifier(cat, cfg.limit, cfg.lane_bits).code(args.catalog_id), args.catalog_id
    return build_goppa_code(cfg.goppa_spec()), f"Goppa g = {cfg.goppa_poly}"


def cmd_derive(args: argparse.Namespace) -> int:
    cfg = CliConfig.from_args(args)
    code, prov = _input_code(args, cfg)
    steps = load_steps(Path(args.steps).read_text())
    code, trace = apply_chain(code, steps, cfg.limit, cfg.lane_bits, provenance=prov)
    if not trace:
        record = CodeRecord.from_code(code, prov, cfg.limit, cfg.lane_bits)
    else:
        record = trace[-1]
    record.extra["trace"] = [
        {"step": s.to_dict(), "n": r.n, "k": r.k, "d": r.d} for s, r in zip(steps, trace)
    ]
    if args.export_generator:
        Path(args.export_generator).write_text(code.generator.dumps())
    _emit_record(record, cfg.output)
    if cfg.output == "text":
        for t in record.extra["trace"]:
            print(f"  {t['step']['kind']:<15} -> [{t['n']}, {t['k']}, {t['d']}]")
    return _refused_or_ok(record)


def cmd_wd(args: argparse.Namespace) -> int:
    cfg = CliConfig.from_args(args)
    code = LinearCode(BitMatrix.loads(Path(args.generator_file).read_text()))
    record = CodeRecord.from_code(code, f"generator {args.generator_file}", cfg.limit, cfg.lane_bits)
    _emit_record(record, cfg.output)
    return _refused_or_ok(record)


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = CliConfig.from_args(args)
    catalog = Catalog.load(args.catalog)
    if args.all:
        entries = list(catalog)
    elif args.all_enumerable or not args.ids:
        entries = catalog.enumerable(cfg.limit)
    else:
        entries = [catalog[i] for i in args.ids]
    verifier = Verifier(catalog, cfg.limit, cfg.lane_bits)
    reports = [verifier.verify(e) for e in entries]
    rows = []
    for e, r in zip(entries, reports):
        margin = ""
        if e.prior_best_d is not None and r.d is not None:
            margin = f"+{improvement_margin(e, r.d)}"
        params = f"[{r.n}, {r.k}, {'?' if r.d is None else r.d}]"
        detail = ",".join(r.failed_fields) or r.note
        rows.append(f"{r.status:<8}{e.id:<18}{params:<18}{margin:<5}{r.seconds:8.2f}s  {detail}")
    payload = {
        "passed": sum(r.status == "PASS" for r in reports),
        "total": len(reports),
        "reports": [r.to_dict() for r in reports],
    }
    if cfg.output == "json":
        print(json.dumps(payload))
    else:
        print("\n".join(rows))
        print(f"{payload['passed']}/{payload['total']} PASS")
    if args.report:
        Path(args.report).write_text(json.dumps(payload, indent=1) + "\n")
    bad = any(r.status in ("FAIL", "ERROR") for r in reports)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_field_info(args: argparse.Namespace) -> int:
    cfg = CliConfig.from_args(args)
    f: GF2m = cfg.field
    info = {
        "m": f.m,
        "order": f.order,
        "modulus": f"0x{f.modulus:X}",
        "modulus_poly": _render_gf2(f.modulus),
        "generator": f"0x{f.generator:X}",
        "x_is_primitive": f.generator == 2 or f.m == 1,
        "subfields": [s for s in range(1, f.m + 1) if f.m % s == 0],
    }
    if cfg.output == "json":
        print(json.dumps(info))
    else:
        for key, v in info.items():
            print(f"{key}: {v}")
    return EXIT_OK


def _render_gf2(v: int) -> str:
    terms = []
    for i in range(v.bit_length() - 1, -1, -1):
        if (v >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=8, help="extension degree of GF(2^m)")
    common.add_argument("--modulus", type=_hex, default=None, help="field modulus as hex, e.g. 0x11D")
    common.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT, help="largest k to enumerate")
    common.add_argument("--lanes", type=int, default=None, help="lane-split exponent b (0..12)")
    common.add_argument("--format", choices=("json", "text"), default=None, help="default: text for verify, json otherwise")

    goppa = argparse.ArgumentParser(add_help=False)
    goppa.add_argument("--goppa-poly", help='Goppa polynomial, e.g. "(x^17+1)^6"')
    goppa.add_argument("--support", default="maximal", help="'maximal' or a file of field elements")

    parser = argparse.ArgumentParser(prog="goppacodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common, goppa], help="build a binary Goppa code")
    p.add_argument("--export-generator", metavar="FILE")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("derive", parents=[common, goppa], help="apply a derivation chain")
    p.add_argument("--generator", metavar="FILE", help="input generator matrix (text format)")
    p.add_argument("--catalog-id", help="start from a catalog entry")
    p.add_argument("--catalog", help="catalog JSON file (default: shipped catalog)")
    p.add_argument("--steps", "--derive-file", dest="steps", required=True, metavar="FILE")
    p.add_argument("--export-generator", metavar="FILE")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", parents=[common], help="verify catalog entries")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true", help="every entry, including non-enumerable ones")
    p.add_argument("--all-enumerable", action="store_true")
    p.add_argument("--catalog", help="catalog JSON file (default: shipped catalog)")
    p.add_argument("--report", metavar="FILE", help="write the JSON report here")
    p.set_defaults(func=cmd_verify, default_format="text")

    p = sub.add_parser("field-info", parents=[common], help="describe GF(2^m)")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("wd", parents=[common], help="weight distribution of a generator file")
    p.add_argument("generator_file")
    p.set_defaults(func=cmd_wd)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ConfigError,
        FieldError,
        PolynomialError,
        GoppaError,
        DerivationError,
        CatalogError,
        DimensionError,
        IndexError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
