import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from algdd import iris


@pytest.fixture(scope="session")
def iris_decl():
    return iris.declaration()


@pytest.fixture(scope="session")
def iris_forest():
    return iris.forest()


@pytest.fixture(scope="session")
def iris_diagrams():
    return iris.all_diagrams()


@pytest.fixture(scope="session")
def iris_workspace(tmp_path_factory):
    ws = tmp_path_factory.mktemp("iris-ws")
    iris.write_workspace(ws)
    return ws
