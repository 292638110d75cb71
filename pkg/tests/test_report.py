import json

import jsonschema
import pytest
from hypothesis import given, strategies as st

from galois_polylog.report import REPORT_SCHEMA, VerificationReport, make_report

text = st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=12)


def test_status_follows_residual():
    assert make_report("a", "ref", 0).status == "pass"
    assert make_report("a", "ref", "x - y").status == "fail"
    rep = make_report("a", "ref", "1e-20")
    rep.tol = 1e-12
    assert rep.status == "pass"


def test_ok_needs_intermediates():
    rep = make_report("a", "ref", 0)
    rep.add("step", "ref", "x")
    assert rep.status == "pass" and not rep.ok


def test_from_dict_rejects_inconsistent_status():
    data = make_report("a", "ref", "x").to_dict()
    data["status"] = "pass"
    with pytest.raises(ValueError):
        VerificationReport.from_dict(data)


@given(text, text, st.one_of(st.just("0"), text), st.lists(st.tuples(text, text, text), max_size=3))
def test_json_round_trip(cid, ref, residual, inter):
    rep = make_report(cid, ref, residual)
    for item in inter:
        rep.add(*item)
    data = json.loads(rep.to_json())
    jsonschema.validate(data, REPORT_SCHEMA)
    assert VerificationReport.from_dict(data).to_dict() == data
