import itertools

import pytest
from hypothesis import HealthCheck, settings

from genpal.encodings import ComplementMap

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

REV_MODELS = ("exact", "theta", "param", "op", "ct", "palstruct")
SYM_COMBOS = (
    ("exact", "outward"),
    ("theta", "outward"),
    ("param", "outward"),
    ("op", "outward"),
    ("ct", "outward"),
    ("ct", "inward"),
    ("palstruct", "outward"),
)


def complement_for_alphabet(size: int) -> ComplementMap:
    """Fixed-point-free pairing where possible: 0<->1, 2<->3, ..."""
    pairs = [(2 * k, 2 * k + 1) for k in range(size // 2)]
    return ComplementMap.from_pairs(pairs)


def all_strings(alphabet: int, max_len: int, min_len: int = 0):
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(alphabet), repeat=length)


@pytest.fixture(scope="session")
def wk_map() -> ComplementMap:
    return ComplementMap.watson_crick()
