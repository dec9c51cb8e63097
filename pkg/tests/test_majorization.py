import numpy as np
import pytest

from lidskii.majorization import majorization_path, majorizes, sort_desc, submajorizes


def test_sort_desc_examples():
    assert np.array_equal(sort_desc([1, 3, 2]), [3, 2, 1])
    assert np.array_equal(sort_desc([-1, -1]), [-1, -1])
    assert np.array_equal(sort_desc([0.5, 0.5, 1.5]), [1.5, 0.5, 0.5])


def test_sort_desc_rejects_nonfinite():
    with pytest.raises(ValueError):
        sort_desc([1.0, np.nan])
    with pytest.raises(ValueError):
        sort_desc([])


def test_submajorizes_examples():
    assert submajorizes([2, 0], [1, 0]).holds
    v = submajorizes([3, 1], [2, 2])
    assert v.holds and v.margin == pytest.approx(0.0)
    v = submajorizes([1, 1], [3, -3])
    assert not v.holds
    assert v.first_violation_index == 1


def test_submajorizes_truncates_unequal_lengths():
    # compares min(k, d) partial sums only
    assert submajorizes([5, 4, 3], [4, 2]).holds
    assert not submajorizes([1], [2, -10]).holds


def test_majorizes_examples():
    v = majorizes([3, 1], [2, 2])
    assert v.holds and v.strict
    # uniform vector is majorized by anything with the same trace
    assert majorizes([3, 1], [2, 2]).holds
    v = majorizes([2, -4], [1, -3])
    assert v.holds
    assert submajorizes([2, 4], [1, 3]).holds


def test_majorizes_trace_mismatch_flags_full_prefix():
    v = majorizes([3, 1], [2, 1])
    assert not v.holds
    assert v.first_violation_index == 2


def test_majorizes_requires_equal_lengths():
    with pytest.raises(ValueError):
        majorizes([1, 2, 3], [1, 2])


def test_reflexive_not_strict():
    v = majorizes([2, 1, 0], [2, 1, 0])
    assert v.holds and not v.strict


def test_majorization_path_endpoints():
    a, b = np.array([2.0, 0.0]), np.array([1.0, 1.0])
    assert np.allclose(majorization_path(a, b, 0.0), a)
    assert np.allclose(majorization_path(a, b, 1.0), b)
    mid = majorization_path(a, b, 0.5)
    assert np.allclose(mid, [1.5, 0.5])
    v = majorizes(a, mid)
    assert v.holds and v.strict


def test_majorization_path_rejects_unrelated():
    with pytest.raises(ValueError):
        majorization_path([1.0, 1.0], [2.0, 0.0], 0.5)  # (2,0) not majorized by (1,1)
    with pytest.raises(ValueError):
        majorization_path([2.0, 0.0], [1.0, 1.0], 1.5)


def test_path_strictly_inside_for_distinct_endpoints():
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = sort_desc(rng.standard_normal(5))
        b = np.full(5, np.mean(a))  # uniform vector, majorized by a
        for t in (0.25, 0.5, 0.9, 1.0):
            rho = majorization_path(a, b, t)
            v = majorizes(a, rho)
            assert v.holds
            if t > 0 and not np.allclose(a, b):
                assert not np.allclose(sort_desc(rho), a)
