from tempfile import NamedTemporaryFile

import pytest

from qgroups.hopf import builtin


@pytest.fixture(scope="session")
def slq2():
    return builtin("slq2")


@pytest.fixture(scope="session")
def suq2():
    return builtin("suq2")


@pytest.fixture(scope="session")
def sl_t1_2():
    return builtin("sl_t1_2")


@pytest.fixture
def presentation_file():
    temp_qg_text = NamedTemporaryFile(suffix=".qg")
    content = """
        # SL_q(2) with entries split over lines
        matrix 2
        name split
        relation E s=0 t=2
        0 1
        -q 0
        relation E' s=2 t=0
        0 -q^-1 1 0
    """
    with open(temp_qg_text.name, "w") as fobj:
        fobj.write(content)
        fobj.seek(0)

    yield temp_qg_text
