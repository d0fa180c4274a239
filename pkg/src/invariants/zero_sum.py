"""Zero-sum completions of repeated values in sequences over Z/p.

Indices are 0-based. A completion of an equal pair (k1, k2) is a set of further
indices whose values, added to seq[k1], sum to zero mod p.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

logger = logging.getLogger(__name__)

class ZeroSumPreconditionError(ValueError):
    pass

class SchmidWitness(NamedTuple):
    k1: int
    k2: int
    subset: Tuple[int, ...]

@dataclass
class SchmidSweepResult:
    p: int
    exhaustive: bool
    sequences_checked: int = 0
    pairs_checked: int = 0
    failures: List[Tuple[Tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

def _check_entries(seq: Sequence[int], p: int) -> None:
    if p < 2:
        raise ZeroSumPreconditionError(f"p must be at least 2, got {p}")
    if any(x % p == 0 for x in seq):
        raise ZeroSumPreconditionError("sequence entries must be nonzero mod p")

def equal_pairs(seq: Sequence[int], p: int) -> Iterable[Tuple[int, int]]:
    for k1, k2 in itertools.combinations(range(len(seq)), 2):
        if (seq[k1] - seq[k2]) % p == 0:
            yield k1, k2

def zerosum_completion(seq: Sequence[int], k1: int, k2: int, p: int) -> Optional[Tuple[int, ...]]:
    """Smallest, then lexicographically first, completion of the pair (k1, k2), or None."""
    _check_entries(seq, p)
    if not (0 <= k1 < len(seq) and 0 <= k2 < len(seq)):
        raise ZeroSumPreconditionError(f"indices {k1} and {k2} must lie in 0..{len(seq) - 1}")
    if k1 == k2 or (seq[k1] - seq[k2]) % p != 0:
        raise ZeroSumPreconditionError(f"indices {k1} and {k2} do not form an equal pair")
    rest = [i for i in range(len(seq)) if i not in (k1, k2)]
    target = seq[k1] % p
    for size in range(1, len(rest) + 1):
        for subset in itertools.combinations(rest, size):
            if (target + sum(seq[i] for i in subset)) % p == 0:
                return subset
    return None

def schmid_zero_sum(seq: Sequence[int], p: int, require_length: bool = True) -> SchmidWitness:
    _check_entries(seq, p)
    if require_length and len(seq) < p + 1:
        raise ZeroSumPreconditionError(f"sequence needs at least p+1 = {p + 1} entries, got {len(seq)}")
    found_pair = False
    for k1, k2 in equal_pairs(seq, p):
        found_pair = True
        subset = zerosum_completion(seq, k1, k2, p)
        if subset is not None:
            return SchmidWitness(k1, k2, subset)
    if not found_pair:
        raise ZeroSumPreconditionError("sequence has no repeated value")
    raise ZeroSumPreconditionError("no repeated pair admits a zero-sum completion")

def _rotate(mask: int, shift: int, p: int) -> int:
    full = (1 << p) - 1
    return ((mask << shift) | (mask >> (p - shift))) & full if shift else mask

def achievable_sums(values: Iterable[int], p: int) -> int:
    """Bitmask of the residues reached by nonempty sub-multisets of values."""
    with_empty, nonempty = 1, 0
    for x in values:
        shifted = _rotate(with_empty, x % p, p)
        nonempty |= shifted
        with_empty |= shifted
    return nonempty

def has_zero_sum_completion(values: Iterable[int], target: int, p: int) -> bool:
    return bool(achievable_sums(values, p) >> ((-target) % p) & 1)

def _check_sequence(seq: Tuple[int, ...], p: int, result: SchmidSweepResult) -> None:
    positions = {}
    for i, x in enumerate(seq):
        positions.setdefault(x % p, []).append(i)
    for value, indices in positions.items():
        if len(indices) < 2:
            continue
        rest = [seq[i] for i in range(len(seq)) if i not in indices[:2]]
        completable = has_zero_sum_completion(rest, value, p)
        for k1, k2 in itertools.combinations(indices, 2):
            result.pairs_checked += 1
            if not completable:
                result.failures.append((seq, k1, k2))

def schmid_sweep(p: int, exhaustive: bool = True, samples: int = 0, seed: int = 0,
                 length: Optional[int] = None) -> SchmidSweepResult:
    """Check that every equal pair of every sequence over {1..p-1} is completable."""
    length = length or p + 1
    result = SchmidSweepResult(p=p, exhaustive=exhaustive)
    if exhaustive:
        sequences = itertools.product(range(1, p), repeat=length)
        total = (p - 1) ** length
    else:
        rng = np.random.default_rng(seed)
        sequences = (tuple(int(x) for x in row) for row in rng.integers(1, p, size=(samples, length)))
        total = samples
    for seq in tqdm(sequences, total=total, desc=f"zero-sum p={p}", disable=None, leave=False):
        result.sequences_checked += 1
        _check_sequence(seq, p, result)
    logger.debug(f"Zero-sum sweep p={p}: {result.sequences_checked} sequences, "
                 f"{result.pairs_checked} pairs, {len(result.failures)} failures")
    return result
