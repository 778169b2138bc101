from pathlib import Path

import pytest

from fuzzydet import parse_automaton

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def ex1():
    return parse_automaton((DATA / "ex1.fza").read_text(), "ex1.fza")


@pytest.fixture
def fig2():
    return parse_automaton((DATA / "fig2.cdfa").read_text(), "fig2.cdfa")


@pytest.fixture
def fig2_dup():
    return parse_automaton((DATA / "fig2_dup.cdfa").read_text(), "fig2_dup.cdfa")


def pytest_terminal_summary(terminalreporter):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::" in getattr(rep, "nodeid", "") and rep.when == "call" \
                    or (outcome != "passed" and "test_acceptance.py::" in getattr(rep, "nodeid", "")):
                results[rep.nodeid] = "PASS" if outcome == "passed" else "FAIL"
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(results):
        terminalreporter.write_line(f"{results[nodeid]}  {nodeid.split('::', 1)[1]}")
