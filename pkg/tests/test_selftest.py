import time

from higgslab.selftest import CASES, run_selftest
from higgslab.serialize import dumps


def test_selftest_passes_quickly_and_is_order_stable():
    t0 = time.perf_counter()
    serial = run_selftest(seed=2)
    assert time.perf_counter() - t0 < 60
    assert serial.passed, serial.summary()
    assert [c.name for c in serial.checks] == [name for name, _ in CASES]
    parallel = run_selftest(seed=2, parallel=True)
    assert dumps(serial.to_dict()) == dumps(parallel.to_dict())
