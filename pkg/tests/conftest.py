import json

import pytest

from solvcoh.cli import main
from solvcoh.lie import LieAlgebra, catalog_build


@pytest.fixture
def heisenberg():
    return LieAlgebra(3, {(0, 1): {2: 1}}, name="h3")


@pytest.fixture
def abelian3():
    return LieAlgebra(3, name="R3")


@pytest.fixture
def g518():
    return catalog_build("g5.18+R")


@pytest.fixture
def g35():
    return catalog_build("g3.5+R3")


@pytest.fixture
def g610():
    return catalog_build("g6.10")


@pytest.fixture
def run_cli(capsys):
    """Run the command line and return the exit status and the parsed JSON document."""
    def run(*argv):
        status = main(list(argv))
        out = capsys.readouterr().out
        return status, (json.loads(out) if out.strip().startswith("{") else out)
    return run
