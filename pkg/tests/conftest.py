import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from viccheda.resources import default_data_dir, load_resources

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def resources():
    return load_resources()


@pytest.fixture(scope="session")
def freq_dir():
    return default_data_dir() / "frequencies"


@pytest.fixture(scope="session")
def corpus50_path():
    return DATA_DIR / "corpus50.tsv"
