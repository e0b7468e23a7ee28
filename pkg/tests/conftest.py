import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# keep the on-disk cache inside the build tree but per-session fresh unless
# the caller pins MAASSLIFT_CACHE_DIR themselves
os.environ.setdefault("MAASSLIFT_CACHE_DIR", str(Path(__file__).parent / ".cache"))


@pytest.fixture(scope="session")
def generators_12k():
    """Jacobi cusp generators with |D| up to 11700 (covers every consumer)."""
    from maasslift.jacobi import jacobi_generators

    return jacobi_generators(11700)


@pytest.fixture(scope="session")
def phi10(generators_12k):
    return generators_12k[0]


@pytest.fixture(scope="session")
def phi12(generators_12k):
    return generators_12k[1]


@pytest.fixture(scope="session")
def f18():
    from maasslift.level1 import newform

    return newform(18, prec=40)


@pytest.fixture(scope="session")
def f22():
    from maasslift.level1 import newform

    return newform(22, prec=40)


@pytest.fixture(scope="session")
def f54():
    from maasslift.level1 import newform

    return newform(54, prec=40)
