import time

import pytest

from qzeta import RunConfig, execute


class TimedResult:
    def __init__(self, result, elapsed):
        self.result = result
        self.elapsed = elapsed
        self.seeds = result.seeds
        self.records = result.records
        self.config = result.config


@pytest.fixture(scope="session")
def paper_run():
    """The full default reproduction run, shared across test modules."""
    start = time.perf_counter()
    result = execute(RunConfig())
    elapsed = time.perf_counter() - start
    return TimedResult(result, elapsed)
