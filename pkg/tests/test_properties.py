import json

import numpy as np

from lidskii import properties


def test_all_properties_pass_at_small_scale():
    results = properties.run_all(0, "small")
    assert len(results) == len(properties.SMALL_COUNTS)
    failed = [r.name for r in results if not r.passed]
    assert failed == [], f"failing properties: {failed}"


def test_suite_json_is_byte_deterministic():
    a = json.dumps(properties.suite_json(3, "small"), sort_keys=True)
    b = json.dumps(properties.suite_json(3, "small"), sort_keys=True)
    assert a == b


def test_rejects_unknown_scale():
    import pytest

    with pytest.raises(ValueError):
        properties.run_all(0, "huge")


def test_individual_property_seed_isolation():
    r1 = properties.prop_water_fill(50, np.random.default_rng(5))
    r2 = properties.prop_water_fill(50, np.random.default_rng(5))
    assert r1.worst_margin == r2.worst_margin
    assert r1.passed


def test_small_scale_fits_runtime_budget():
    import time

    t0 = time.perf_counter()
    properties.run_all(7, "small")
    assert time.perf_counter() - t0 < 60.0
