import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypermaps.hypermap import Hypermap  # noqa: E402
from hypermaps.io import data_dir, load_hypermap  # noqa: E402
from hypermaps.perm import Permutation  # noqa: E402


def P(img):
    return Permutation(img)


def H(s, a):
    return Hypermap(Permutation(s), Permutation(a))


@pytest.fixture
def example():
    def load(name):
        return load_hypermap(data_dir() / f"{name}.hm")

    return load


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
