import json

import pytest

from metricdeform import catalog
from metricdeform.cohomology import cohomology
from metricdeform.deformation import is_metric_infinitesimal, nr_bracket
from metricdeform.superalg import SuperAlgebra, fingerprint

import oracles


def test_get_and_list():
    e = catalog.get("g_2|2_1")
    assert len(e.cocycles) == 4
    assert catalog.get("osp(1,2)").h2_even == 0
    assert len(catalog.names()) >= 16
    with pytest.raises(catalog.CatalogError):
        catalog.get("nonexistent")


@pytest.mark.parametrize("name", catalog.names())
def test_verify_entry(name):
    rep = catalog.verify_entry(name)
    assert rep["pass"], {k: v for k, v in rep.items() if isinstance(v, dict) and not v["pass"]}


def test_g42_3_jump_confirmed():
    row = catalog.summary_row("g_4|2_3")
    assert row["jump"] == [{"target": "osp(1,2)+C_1|0", "verified": True}]


def test_g5_report_lists_both_forms_and_jump():
    rep = catalog.verify_entry("g_2|4_5")
    assert set(rep["metric"]["forms"]) == {"first", "second"}
    kinds = {(d["kind"], d["target"]) for d in rep["deformations"]["records"] if d["pass"]}
    assert ("jump", "g_2|4_2") in kinds and ("jump", "g_2|4_3(lambda)") in kinds


def test_export_roundtrip():
    doc = json.loads(json.dumps(catalog.export("g_2|4_4")))
    g = SuperAlgebra.from_doc(doc["algebra"])
    assert g == catalog.get("g_2|4_4").algebra
    assert [c["label"] for c in doc["cocycles"]] == ["f1", "f2"]


def test_summary_table_matches_stated_rows():
    out = catalog.verify_all(["g_4|2_1", "g_4|2_2(1/2)", "g_4|2_3"])
    rows = {r["name"]: r for r in out["table"]}
    assert rows["g_4|2_1"]["h2_even"] == 3
    assert [j["target"] for j in rows["g_4|2_2(1/2)"]["jump"]] == ["g_4|2_3", "osp(1,2)+C_1|0"]
    assert all(j["verified"] for j in rows["g_4|2_2(1/2)"]["jump"])


def test_jump_targets_differ_from_source():
    for name in catalog.names():
        e = catalog.get(name)
        for r in e.deformations:
            if r.kind == "jump":
                assert fingerprint(catalog.get(r.target).algebra) != fingerprint(e.algebra)


def test_self_brackets_of_real_cocycles():
    # the real infinitesimal cocycles used in the deformation arguments
    assert nr_bracket(*[catalog.get("g_2|4_4").combination("f1")] * 2).is_zero()
    assert nr_bracket(*[catalog.get("g_2|4_2").combination("f2")] * 2).is_zero()
    assert not nr_bracket(*[catalog.get("g_2|4_4").combination("f2")] * 2).is_zero()


@pytest.mark.parametrize("name", ["g_2|2_1", "g_4|2_1", "g_2|4_2", "g_2|4_5"])
def test_not_real_agrees_with_jacobi_oracle(name):
    e = catalog.get(name)
    for x in e.real:
        assert oracles.self_bracket_zero_on_jacobi(e.algebra, e.combination(x))
    for x in e.not_real:
        assert not oracles.self_bracket_zero_on_jacobi(e.algebra, e.combination(x))


@pytest.mark.parametrize("name", ["g_4|2_2(1/2)", "g_2|4_3(1)"])
def test_beyond_stated_constraint(name):
    """Combinations that admit an invariant form mod t^2 although the stated constraint excludes them."""
    e = catalog.get(name)
    assert e.beyond_stated
    for x in e.beyond_stated:
        assert is_metric_infinitesimal(e.algebra, None, e.combination(x))[0]
        assert oracles.metric_mod_t2(e.algebra, e.combination(x))


def test_family_representatives_generic():
    e = catalog.get("g_2|4_3(lambda)")
    H = cohomology(e.algebra, 2)
    assert H.dim == 2
    special = e.algebra.substitute({"lambda": 1})
    assert cohomology(special, 2).dim == 4
