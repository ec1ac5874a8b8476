from pathlib import Path

import pytest

from matchroid import io

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


@pytest.fixture(scope="session")
def prefs_3x3():
    """3x3 preference instance whose induced family has five members."""
    return io.load_stable_instance(DATA / "prefs_3x3.json")


@pytest.fixture(scope="session")
def weights_3x2():
    """3x2 weighted instance whose induced family is a two-step chain."""
    return io.load_weighted_instance(DATA / "weights_3x2.json")
