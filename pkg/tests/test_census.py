"""Order-16 right Bol census against an external catalog file.

Set BOLKIT_CATALOG16_PATH to a loop file holding the 2038 right Bol loops
of order 16 in catalog order; otherwise these tests are skipped.
"""

import pytest

from src.catalog import census_summary, in_nu_population, nu_histogram, nu_set, read_loops
from src.config import settings
from src.loopcore import Loop

pytestmark = pytest.mark.skipif(
    settings.catalog16_path is None or not settings.catalog16_path.is_file(),
    reason="order-16 catalog not configured",
)


@pytest.fixture(scope="module")
def catalog16() -> list[Loop]:
    assert settings.catalog16_path is not None
    return read_loops(settings.catalog16_path)


@pytest.mark.slow
class TestOrderSixteenCensus:
    """Counts over the order-16 catalog."""

    def test_summary(self, catalog16: list[Loop]) -> None:
        """Test the census counts of the order-16 catalog."""
        summary = census_summary(catalog16)
        assert summary.total == 2038
        assert summary.central_squares == 1940
        assert summary.nu_population == 1773

    def test_histogram(self, catalog16: list[Loop]) -> None:
        """Test the nu histogram of the order-16 catalog."""
        population = [loop for loop in catalog16 if in_nu_population(loop)]
        histogram = nu_histogram(population)
        assert list(histogram) == list(range(17))
        assert {k: v for k, v in histogram.items() if v} == {0: 1145, 2: 454, 4: 160, 8: 14}

    def test_loop_181(self, catalog16: list[Loop]) -> None:
        """Catalog entry 181 has eight vertical left nucleus elements."""
        assert len(nu_set(catalog16[180])) == 8
