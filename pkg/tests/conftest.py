import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dyckzeta import enumerate_dyck  # noqa: E402

EXAMPLE_WORD = "1110101100011000"
EXAMPLE_ZETA = "1011010111001000"


@pytest.fixture(scope="session")
def dyck_upto_10():
    return {n: list(enumerate_dyck(n)) for n in range(1, 11)}
