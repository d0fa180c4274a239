import itertools

import numpy as np
import pytest

from src.invariants.zero_sum import (SchmidWitness, ZeroSumPreconditionError, achievable_sums, equal_pairs,
                                     has_zero_sum_completion, schmid_sweep, schmid_zero_sum, zerosum_completion)

def test_schmid_witnesses():
    assert schmid_zero_sum([1, 1, 1, 2], 3) == SchmidWitness(0, 1, (3,))
    assert schmid_zero_sum([2] * 6, 5) == SchmidWitness(0, 1, (2, 3, 4, 5))

def test_completion_examples():
    assert zerosum_completion([1, 1, 2, 2], 2, 3, 3) == (0,)
    assert zerosum_completion([1, 1, 2, 2, 2], 0, 1, 4) is None

def test_composite_counterexample_sums():
    assert achievable_sums([2, 2, 2], 4) == 0b0101
    assert not has_zero_sum_completion([2, 2, 2], 1, 4)

@pytest.mark.parametrize("seq, p", [([1, 1, 2], 3), ([1, 0, 1, 1], 3), ([3, 1, 1, 1], 3)])
def test_schmid_preconditions(seq, p):
    with pytest.raises(ZeroSumPreconditionError):
        schmid_zero_sum(seq, p)

def test_completion_requires_equal_pair():
    with pytest.raises(ZeroSumPreconditionError):
        zerosum_completion([1, 2, 1, 1], 0, 1, 3)
    with pytest.raises(ZeroSumPreconditionError):
        zerosum_completion([1, 2, 1, 1], 0, 0, 3)

@pytest.mark.parametrize("k1, k2", [(-1, 3), (3, -1), (0, 4), (-4, 2)])
def test_completion_rejects_out_of_range_indices(k1, k2):
    with pytest.raises(ZeroSumPreconditionError, match="must lie in"):
        zerosum_completion([1, 2, 1, 1], k1, k2, 3)

def test_short_sequences_without_length_check():
    assert schmid_zero_sum([1, 1, 2], 3, require_length=False) == SchmidWitness(0, 1, (2,))
    with pytest.raises(ZeroSumPreconditionError, match="no repeated pair"):
        schmid_zero_sum([1, 1, 1], 3, require_length=False)
    with pytest.raises(ZeroSumPreconditionError, match="no repeated value"):
        schmid_zero_sum([1, 2, 3, 4], 5, require_length=False)

@pytest.mark.parametrize("p", [3, 5])
def test_exhaustive_sweep_prime(p):
    result = schmid_sweep(p, exhaustive=True)
    assert result.passed
    assert result.sequences_checked == (p - 1) ** (p + 1)
    assert result.pairs_checked > 0

def test_sampled_sweep_p7():
    result = schmid_sweep(7, exhaustive=False, samples=100_000, seed=0)
    assert result.passed
    assert result.sequences_checked == 100_000

def test_composite_sweep_finds_failures():
    result = schmid_sweep(4, exhaustive=True)
    assert not result.passed
    assert ((1, 1, 2, 2, 2), 0, 1) in result.failures

def test_reachability_agrees_with_search():
    rng = np.random.default_rng(3)
    for _ in range(300):
        p = int(rng.choice([3, 4, 5, 6, 7]))
        seq = [int(x) for x in rng.integers(1, p, size=int(rng.integers(2, p + 2)))]
        for k1, k2 in equal_pairs(seq, p):
            rest = [seq[i] for i in range(len(seq)) if i not in (k1, k2)]
            found = zerosum_completion(seq, k1, k2, p)
            assert (found is not None) == has_zero_sum_completion(rest, seq[k1], p)
            if found is not None:
                assert (seq[k1] + sum(seq[i] for i in found)) % p == 0
                assert not set(found) & {k1, k2}

def test_subset_is_smallest():
    seq = [1, 1, 1, 1, 1, 2]
    subset = zerosum_completion(seq, 0, 1, 3)
    assert subset == (5,)
    smaller = [c for size in range(len(subset)) for c in itertools.combinations(range(2, 6), size)
               if (1 + sum(seq[i] for i in c)) % 3 == 0]
    assert not smaller
