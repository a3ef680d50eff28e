import pytest

from src.core.config import get_settings
from src.paths.core_paths import parse_path

# A 3_3-Dyck path of 28 steps touching -3, and its last-visit tuple after
# lifting by three units.
SAWTOOTH = "UDUUUDUUUUDUDUUUUUUUDUUUUUDD"
SAWTOOTH_PARTS = ["UUU" + SAWTOOTH[:13], "", "", SAWTOOTH[16:]]

# A non-negative 3-Dyck walk ending on level 3 and its four parts.
LADDER = "UUUDUUUUUDUUUDUUDUUUUDUUUUDUUUDUUUD"
LADDER_PARTS = ["UUUD", "UUUUDUUUDUUD", "UUUD", "UUUDUUUDUUUD"]


@pytest.fixture
def sawtooth():
    """
    The 28-step k=3 path bounded below by -3
    """
    return parse_path(SAWTOOTH, 3)


@pytest.fixture
def ladder():
    return parse_path(LADDER, 3)


@pytest.fixture(autouse=True)
def fresh_settings():
    """
    Drop the cached Settings so monkeypatched KDYCK_* variables take effect
    """
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
