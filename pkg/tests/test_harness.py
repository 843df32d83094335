import json
import shutil

import pytest

from api_evolve import harness

from conftest import CORPUS


def test_normalize_ws():
    assert harness.normalize_ws("a  b\t c \n\n  d\n") == "a b c\nd"
    assert harness.normalize_ws("") == ""


def test_full_corpus_passes():
    summary = harness.run_corpus(CORPUS)
    assert summary.ok
    assert summary.total >= 20
    assert len(summary.cases) >= 5
    assert all(c.passed >= 4 for c in summary.cases)
    assert summary.accuracy == 1.0


def test_empty_corpus(tmp_path):
    summary = harness.run_corpus(tmp_path)
    assert summary.total == 0
    assert summary.ok
    assert summary.accuracy == 1.0


def test_wrong_expected_file_fails_only_that_target(tmp_path):
    root = tmp_path / "corpus"
    shutil.copytree(CORPUS / "cases" / "vibrate", root / "cases" / "vibrate")
    (root / "cases" / "vibrate" / "expected" / "basic.java").write_text(
        "class Wrong { }\n")
    summary = harness.run_corpus(root)
    (case,) = summary.cases
    assert case.failed == 1
    assert case.passed >= 3
    assert any(t == "basic.java" for t, _ in case.errors)


def test_broken_case_does_not_abort_others(tmp_path):
    root = tmp_path / "corpus"
    shutil.copytree(CORPUS / "cases" / "vibrate", root / "cases" / "vibrate")
    bad = root / "cases" / "broken"
    bad.mkdir()
    (bad / "mapping.txt").write_text("garbage\n")
    summary = harness.run_corpus(root)
    by_name = {c.name: c for c in summary.cases}
    assert by_name["broken"].errors
    assert by_name["vibrate"].failed == 0 and not by_name["vibrate"].errors
    assert not summary.ok


def test_deterministic_summary():
    a = harness.run_corpus(CORPUS)
    b = harness.run_corpus(CORPUS)
    assert a.table() == b.table()
    assert a.to_json_dict() == b.to_json_dict()


def test_main_table_and_json(tmp_path, capsys):
    out = tmp_path / "summary.json"
    rc = harness.main([str(CORPUS), "--json", str(out)])
    assert rc == 0
    table = capsys.readouterr().out
    assert "100.0% accuracy" in table
    data = json.loads(out.read_text())
    assert data["passed"] == data["targets"]
    assert data["accuracy"] == 1.0


def test_main_nonzero_on_failure(tmp_path, capsys):
    root = tmp_path / "corpus"
    shutil.copytree(CORPUS / "cases" / "vibrate", root / "cases" / "vibrate")
    (root / "cases" / "vibrate" / "expected" / "basic.java").write_text("x\n")
    assert harness.main([str(root)]) == 1
