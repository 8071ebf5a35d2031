import pytest

from ringcodes.fields import field
from ringcodes.rings import ring_construct

F2 = field(2)
F4 = field(2, 2)

# Ring fixtures small enough for brute-force checks.
SMALL_RINGS = [
    ("R", 1, None, F2),
    ("R", 2, None, F2),
    ("R", 3, None, F2),
    ("R", 4, None, field(3)),
    ("R", 3, None, F4),
    ("S", 2, None, F2),
    ("S", 3, None, F2),
    ("T", 2, 2, F2),
    ("T", 3, 2, F2),
    ("T", 2, 2, field(3)),
]


def small_ring_ids():
    return [ring_construct(*r).descriptor for r in SMALL_RINGS]


@pytest.fixture(params=SMALL_RINGS, ids=small_ring_ids())
def small_ring(request):
    return ring_construct(*request.param)
