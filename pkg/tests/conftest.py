import pytest

from pshelix.helicoid import HelicoidParams

GOLDEN = 1.6180339887

# Published six-digit parameter pairs for the golden-ratio series of
# twisted columns, wave numbers 1..6.
MAGNETIC_GOLDEN = [
    (1, 1.90951, 0.127237),
    (2, 2.03576, 0.247275),
    (3, 2.27181, 0.353348),
    (4, 2.65802, 0.439982),
    (5, 3.25281, 0.504218),
    (6, 4.13094, 0.546398),
]

ELECTRIC_GOLDEN = [
    (1, 0.770862, 0.289255),
    (2, 0.849115, 0.533287),
    (3, 0.884453, 0.749346),
    (4, 0.902344, 0.939799),
    (5, 0.912336, 1.1074),
    (6, 0.918378, 1.25549),
]


@pytest.fixture
def magnetic1() -> HelicoidParams:
    return HelicoidParams(1.90951, 0.127237)


@pytest.fixture
def electric1() -> HelicoidParams:
    return HelicoidParams(0.770862, 0.289255)
