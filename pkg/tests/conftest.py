import pytest

from grpn import build_parameters


@pytest.fixture
def spec4210():
    return build_parameters(4, 2, 1, (0,))


@pytest.fixture
def spec2210():
    return build_parameters(2, 2, 1, (0,))


@pytest.fixture
def spec2410():
    return build_parameters(2, 4, 1, (0,))


@pytest.fixture
def matrix_specs():
    rows = [
        (4, 2, 1, (0,)),
        (2, 2, 1, (0,)),
        (3, 3, 1, (0,)),
        (4, 2, 2, (0, 1)),
        (2, 4, 1, (0,)),
    ]
    return [build_parameters(*row) for row in rows]
