import json
from collections import Counter

import pytest

from mvkit import CLAIMS, MvError, chain, cross_check_catalog, generate_catalog, run_campaign, summarize
from mvkit.errors import SizeGuardError


def ids(n):
    return [e.algebra_id for e in generate_catalog(n)]


def test_catalog_contents():
    assert ids(2) == ["S2"]
    assert ids(4) == ["S2", "S3", "S2xS2", "S4"]
    assert {"S2xS2xS2", "S2xS4"} <= set(ids(8))
    assert ids(9) == ["S2", "S3", "S2xS2", "S4", "S5", "S2xS3", "S6", "S7",
                      "S2xS2xS2", "S2xS4", "S8", "S3xS3", "S9"]
    with pytest.raises(MvError):
        generate_catalog(1)


@pytest.mark.parametrize("n,classes", [
    (2, {"2": ["S2"]}),
    (3, {"2": ["S2"], "3": ["S3"]}),
    (4, {"2": ["S2"], "3": ["S3"], "4": ["S2xS2", "S4"]}),
])
def test_cross_check(n, classes):
    v = cross_check_catalog(n)
    assert v.holds and v.witness["classes"] == classes


def test_cross_check_guard():
    with pytest.raises(SizeGuardError):
        cross_check_catalog(6)


def test_t416_one_line_per_center_element():
    cat = generate_catalog(6)
    lines = list(run_campaign(cat, ["T4.16"]))
    expected = sum(int(e.algebra.idempotent.sum()) for e in cat)
    assert len(lines) == expected and all(v.holds for v in lines)


def test_r42_on_s3():
    lines = list(run_campaign([("S3", chain(3))], ["R4.2"]))
    assert [v.params for v in lines] == [(("a", 0),), (("a", 1),), (("a", 2),)]
    assert [v.verdict for v in lines] == ["holds", "holds", "counterexample"]


def test_empty_catalog_and_unknown_claim():
    with pytest.raises(MvError):
        list(run_campaign([]))
    with pytest.raises(MvError):
        list(run_campaign([("S2", chain(2))], ["T9.99"]))


def test_every_claim_emits_for_every_algebra():
    lines = list(run_campaign(generate_catalog(4)))
    seen = Counter((v.algebra, v.claim) for v in lines)
    for aid in ids(4):
        for claim in CLAIMS:
            assert seen[(aid, claim)] >= 1, (aid, claim)


def test_records_are_sorted_json():
    v = next(run_campaign([("S2", chain(2))], ["T4.16"]))
    rec = json.loads(v.to_json())
    assert list(rec) == sorted(rec) == ["algebra", "claim", "params", "verdict", "witness"]


def test_summarize_orders_by_registry():
    s = summarize(run_campaign([("S3", chain(3))], ["T4.16", "P2.3"]))
    assert list(s) == ["P2.3", "T4.16"]
