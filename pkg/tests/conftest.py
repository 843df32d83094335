import re
import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

CORPUS = REPO / "corpus"
FIXTURES = Path(__file__).resolve().parent / "fixtures"

from api_evolve import sigmap  # noqa: E402


@pytest.fixture(scope="session")
def vibrate_mapping():
    return sigmap.ApiMapping(
        sigmap.parse_signature("android.os.Vibrator#vibrate(long)"),
        sigmap.parse_signature("android.os.Vibrator#vibrate(android.os.VibrationEffect)"))


@pytest.fixture(scope="session")
def minute_mapping():
    return sigmap.ApiMapping(
        sigmap.parse_signature("android.widget.TimePicker#getCurrentMinute()"),
        sigmap.parse_signature("android.widget.TimePicker#getMinute()"))


@pytest.fixture(scope="session")
def vibrate_example():
    return (CORPUS / "cases" / "vibrate" / "example.java").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def minute_example():
    return (CORPUS / "cases" / "get_current_minute" / "example.java").read_text(encoding="utf-8")


_CRITERION_TITLES = {
    1: "update patch regenerated token-exactly in under 1 s",
    2: "then branch is one inlined call, else branch byte-identical",
    3: "zero-argument rename updates an assignment site, golden equality",
    4: "three call sites in one file yield three guarded blocks",
    5: "re-applying every patch to its own output changes nothing",
    6: "resolver agrees with forward interpreter on 200 random programs",
    7: "denormalize inverts normalize; no temporaries survive updates",
    8: "print(parse(t)) == t over every corpus and fixture file",
    9: "golden corpus passes 100% in under 10 s",
    10: "published command lines succeed end to end",
}

_CRITERION_RE = re.compile(r"test_acceptance\.py::test_(\d+)_")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call":
                continue
            m = _CRITERION_RE.search(getattr(rep, "nodeid", ""))
            if m:
                results[int(m.group(1))] = outcome == "passed"
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line("%s  criterion %2d: %s" % (
            "PASS" if results[number] else "FAIL",
            number, _CRITERION_TITLES.get(number, "")))


def corpus_java_files():
    files = sorted(CORPUS.glob("cases/*/targets/*.java"))
    files += sorted(CORPUS.glob("cases/*/example.java"))
    files += sorted(FIXTURES.glob("*.java"))
    return files
