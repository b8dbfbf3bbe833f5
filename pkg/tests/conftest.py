from __future__ import annotations

from pathlib import Path

import pytest

from namerelevance import Resources, load_default_resources, load_wordlist

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def default_resources() -> Resources:
    return load_default_resources()


@pytest.fixture(scope="session")
def small_model():
    return load_wordlist(FIXTURES / "wordlist_small.txt")


@pytest.fixture(scope="session")
def small_resources(small_model, default_resources) -> Resources:
    """The 30-word fixture vocabulary with the bundled filter/lemma files."""
    return Resources(
        segmentation=small_model,
        stopwords=default_resources.stopwords,
        common_words=default_resources.common_words,
        lemma_rules=default_resources.lemma_rules,
    )


@pytest.fixture()
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(report, "when", "call") == "call":
                label = "PASS" if outcome == "passed" else "FAIL"
                lines.append((nodeid, label))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for nodeid, label in sorted(lines):
            terminalreporter.write_line(f"{label}  {nodeid.split('::')[-1]}")
