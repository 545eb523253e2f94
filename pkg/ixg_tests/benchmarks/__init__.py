"""IxG tests."""

from ixg_tests.benchmarks import maze
from ixg_tests.benchmarks import small
