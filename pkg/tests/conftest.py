import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semitop.corpus import curated  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def curated_corpus():
    return curated()


@pytest.fixture(scope="session")
def corpus_dir():
    return ROOT / "corpus"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
