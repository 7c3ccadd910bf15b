from __future__ import annotations

import pytest

from formlab import load_bundled_catalog


@pytest.fixture(scope="session")
def catalog():
    return load_bundled_catalog()


@pytest.fixture(scope="session")
def by_name(catalog):
    return {e.name: e for e in catalog}
