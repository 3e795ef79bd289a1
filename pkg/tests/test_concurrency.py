import time

import pytest

from haarpy.concurrency import parallel_map


def test_serial():
    assert parallel_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]
    assert parallel_map(str, []) == []


def test_threads_keep_order():
    def job(x):
        # later items finish first
        time.sleep((20 - x) / 1000)
        return -x

    assert parallel_map(job, range(20), workers=4) == [-x for x in range(20)]


def test_workers_validated():
    with pytest.raises(ValueError):
        parallel_map(abs, [1, 2], workers=0)
