import pytest

from lecalc import engine


@pytest.fixture
def checked_bases():
    """Run the engine with full basis re-verification for the duration of a
    test.  Slow, so only the small unit tests opt in."""
    previous = engine.CHECK_BASES
    engine.CHECK_BASES = True
    try:
        yield
    finally:
        engine.CHECK_BASES = previous
