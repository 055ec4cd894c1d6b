import json

from qverify.report import Check, Report
from qverify.series import Window, compare, one, term


def test_series_check_json_shape():
    w = Window(1)
    chk = Check.from_comparison("demo", compare(one(w), one(w) + term(1, w, q=1), w))
    r = Report("verify", {"identity": "demo"})
    r.add(chk)
    data = json.loads(r.to_json())
    assert data["status"] == "fail"
    assert data["run"]["command"] == "verify"
    assert data["checks"][0]["mismatches"] == [{"monomial": {"q": 1, "a": 0, "b": 0, "c": 0}, "lhs": 0, "rhs": 1}]
    assert data["totals"]["failed"] == 1
    assert r.exit_code() == 1


def test_counterexamples_are_truncated_but_counted():
    chk = Check("many")
    for i in range(30):
        chk.fail({"i": i})
    d = chk.as_dict(5)
    assert d["count"] == 30
    assert len(d["counterexamples"]) == 5
    assert d["truncated"]


def test_expected_failures_are_not_unexpected():
    r = Report("x", {})
    bad = Check("printed", expected=False)
    bad.fail({})
    r.add(bad)
    r.add(Check("fine"))
    assert not r.passed
    assert r.unexpected == []
    assert r.exit_code() == 1


def test_timestamp_follows_source_date_epoch(monkeypatch):
    r = Report("x", {})
    monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)
    assert r.as_dict()["run"]["timestamp"] is None
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    assert r.as_dict()["run"]["timestamp"] == "1970-01-01T00:00:00+00:00"


def test_tsv_and_text_outputs():
    r = Report("x", {})
    r.add(Check("fine"))
    assert r.to_tsv().splitlines()[0] == "name\tstatus\texpected\tcount\tchecked"
    assert "fine" in r.to_text()
