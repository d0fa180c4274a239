import os
import logging
import itertools
from typing import Dict, NamedTuple, Tuple

class GridEntry(NamedTuple):
    p: int
    r: int
    s: int
    weights: Tuple[int, ...]

# Engine limits
DEFAULT_SAMPLED_ORDERS = 12
DEFAULT_SEED = 0
MAX_BASIS_SIZE = 5000
MAX_FIELD_DEGREE = 16
MAX_EXPONENT = (1 << 16) - 1
WEIGHT_RANGE = (1, 1000)

# Zero-sum sweeps
SCHMID_SAMPLE_SIZE = 100_000
EXHAUSTIVE_SCHMID_MAX_P = 5

# Output
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUTPUT_DIR = os.environ.get("OUTPUT_DIR", os.path.join(BASE_DIR, "output"))

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Exit statuses of main.py
EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE_CAP = 3

GRID_PRIMES = (3, 5)
GRID_SHAPES = ((1, 0), (0, 1), (2, 0), (0, 2), (1, 1))
MAX_WEIGHT_VECTORS_PER_SHAPE = 4

def _grid() -> Dict[str, GridEntry]:
    grid = {}
    for p in GRID_PRIMES:
        for r, s in GRID_SHAPES:
            vectors = itertools.islice(itertools.product(range(1, p), repeat=r), MAX_WEIGHT_VECTORS_PER_SHAPE)
            for weights in vectors:
                label = f"p{p}_r{r}_s{s}" + (f"_a{''.join(map(str, weights))}" if weights else "")
                grid[label] = GridEntry(p=p, r=r, s=s, weights=tuple(weights))
    return grid

# Representations swept by the verification grid
ACCEPTANCE_GRID: Dict[str, GridEntry] = _grid()

def setup_logging(level: str = "INFO") -> None:
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        raise ValueError(f"Unknown log level: {level}")
    logging.basicConfig(level=numeric_level, format=LOG_FORMAT)
    logging.getLogger().setLevel(numeric_level)
