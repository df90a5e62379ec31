import copy
import json

import pytest

from goppacodes.catalog import (
    Catalog,
    CatalogEntry,
    CatalogError,
    MissingDataError,
    Verifier,
    improvement_margin,
)
from goppacodes.code import LinearCode


@pytest.fixture(scope="module")
def catalog():
    return Catalog.load()


@pytest.fixture(scope="module")
def verifier(catalog):
    return Verifier(catalog)


def triples(catalog):
    return [(e.n, e.k, e.d) for e in catalog]


def test_coverage(catalog):
    got = triples(catalog)
    assert len(got) == len(set(got)) == 31
    records = [(239, 21, 103), (240, 21, 104), (241, 21, 104)]
    related = [(239, 123, 35), (55, 16, 19)]
    punct = [(239 - i, 21, 103 - i) for i in range(1, 13)]
    short = [(239, 20, 104)] + [(239 - i, 20, 104 - i) for i in range(1, 8)]
    lengthen = [(241 + i, 21, 104) for i in range(1, 7)]
    assert sorted(got) == sorted(records + related + punct + short + lengthen)
    assert len(catalog.enumerable()) == 30


def test_internal_consistency(catalog):
    for e in catalog:
        if e.distribution is not None:
            assert e.distribution.total == 1 << e.k
            assert e.distribution.min_distance == e.d


def test_load_rejects_inconsistent_entries(catalog):
    raw = json.loads(catalog.to_json())
    bad = copy.deepcopy(raw)
    bad["entries"][0]["d"] = 105
    with pytest.raises(CatalogError):
        Catalog.from_dict(bad)
    bad = copy.deepcopy(raw)
    bad["entries"][0]["A"][1][1] = "62245"
    with pytest.raises(CatalogError):
        Catalog.from_dict(bad)
    bad = copy.deepcopy(raw)
    bad["entries"][5]["construction"]["from"] = "nope"
    with pytest.raises(CatalogError):
        Catalog.from_dict(bad)


def test_json_roundtrip(catalog, tmp_path):
    p = tmp_path / "cat.json"
    p.write_text(catalog.to_json())
    again = Catalog.load(p)
    assert triples(again) == triples(catalog)


def test_verify_goppa_239(verifier):
    r = verifier.verify("goppa-239")
    assert r.status == "PASS"
    assert (r.n, r.k, r.d) == (239, 21, 103)
    assert len(r.distribution.nonzero()) == 12


def test_verify_goppa_241(verifier):
    r = verifier.verify("goppa-241")
    assert r.status == "PASS" and r.d == 104
    assert r.distribution[240] == 1 and r.distribution[241] == 0


def test_corrupted_entry_fails(catalog, verifier):
    e = catalog["goppa-239"]
    bad = CatalogEntry(e.id, e.construction, e.n, e.k, d=105, prior_best_d=98)
    r = verifier.verify(bad)
    assert r.status == "FAIL" and r.failed_fields == ["d"]


def test_construction_failure_is_reported(catalog):
    entry = CatalogEntry("broken", {"goppa": {"m": 8, "poly": "(x^17+1"}}, 239, 21, 103)
    r = Verifier(Catalog([entry])).verify(entry)
    assert r.status == "ERROR" and "PolySyntaxError" in r.note


def test_non_enumerable_entry_is_partial(verifier):
    r = verifier.verify("goppa-239-k123")
    assert r.status == "PARTIAL"
    assert (r.n, r.k, r.d) == (239, 123, None)
    assert r.failed_fields == []
    assert any(c.name == "design_check" and c.ok for c in r.checks)


def test_improvement_margin(catalog):
    assert improvement_margin(catalog["goppa-239"]) == 5
    assert improvement_margin(catalog["goppa-240"]) == 6
    assert improvement_margin(catalog["goppa-241"]) == 5
    assert improvement_margin(catalog["goppa-239"], verified_d=103) == 5
    with pytest.raises(MissingDataError):
        improvement_margin(catalog["goppa-55"])


def test_verifier_memoises_chain(verifier):
    verifier.verify("goppa-239-p2")
    assert "goppa-239-p1" in verifier._codes
    assert isinstance(verifier.code("goppa-239-p1"), LinearCode)
