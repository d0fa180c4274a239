from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config import DEFAULT_SAMPLED_ORDERS, DEFAULT_SEED
from src.field_arith import BinaryFieldDescriptor, is_prime

class DihedralRep(BaseModel):
    """A reduced characteristic-two representation of D_{2p}.

    Variables are laid out as x_1..x_r, y_1..y_r, z_1..z_s, w_1..w_s; rho scales
    x_i by zeta^{a_i} and y_i by zeta^{-a_i} and fixes z_j, w_j.
    """
    model_config = ConfigDict(frozen=True)

    p: int
    r: int = 0
    s: int = 0
    weights: Optional[Tuple[int, ...]] = Field(default=None, validate_default=True)

    @field_validator("p")
    @classmethod
    def check_p(cls, v):
        if v < 3 or v % 2 == 0:
            raise ValueError(f"p must be an odd integer >= 3, got {v}")
        return v

    @field_validator("r", "s")
    @classmethod
    def check_counts(cls, v):
        if v < 0:
            raise ValueError("variable pair counts must be non-negative")
        return v

    @field_validator("weights")
    @classmethod
    def check_weights(cls, v, info):
        p, r = info.data.get("p"), info.data.get("r")
        if p is None or r is None:
            return v
        if v is None:
            return (1,) * r
        if len(v) != r:
            raise ValueError(f"expected {r} weights, got {len(v)}")
        if any(a % p == 0 for a in v):
            raise ValueError("weights must be nonzero mod p")
        return tuple(a % p for a in v)

    @model_validator(mode="after")
    def check_shape(self):
        if self.r == 0 and self.s == 0:
            raise ValueError("r and s cannot both be zero")
        return self

    @property
    def nvars(self) -> int:
        return 2 * self.r + 2 * self.s

    @property
    def group_order(self) -> int:
        return 2 * self.p

    @property
    def is_prime(self) -> bool:
        return is_prime(self.p)

    @property
    def variable_names(self) -> List[str]:
        return ([f"x{i}" for i in range(1, self.r + 1)] + [f"y{i}" for i in range(1, self.r + 1)]
                + [f"z{j}" for j in range(1, self.s + 1)] + [f"w{j}" for j in range(1, self.s + 1)])

    def label(self) -> str:
        weights = ",".join(map(str, self.weights))
        return f"p={self.p} r={self.r} s={self.s} weights=[{weights}]"

class OrderSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    perm: Optional[Tuple[int, ...]] = None
    weights: Optional[Tuple[int, ...]] = None
    name: Optional[str] = None

    @field_validator("kind")
    @classmethod
    def check_kind(cls, v):
        if v not in ("lex", "grlex", "grevlex", "weighted"):
            raise ValueError(f"unknown order kind: {v}")
        return v

    @model_validator(mode="after")
    def check_weights(self):
        if self.kind == "weighted" and not self.weights:
            raise ValueError("weighted orders need a weight vector")
        if self.weights is not None and any(w <= 0 for w in self.weights):
            raise ValueError("order weights must be positive")
        return self

class RunConfig(BaseModel):
    rep: DihedralRep
    orders: Optional[List[OrderSpec]] = None
    sampled_orders: int = DEFAULT_SAMPLED_ORDERS
    seed: int = DEFAULT_SEED
    hsop_degrees: Optional[List[int]] = None
    output: Optional[str] = None
    max_basis_size: Optional[int] = None
    jobs: int = 1

    @field_validator("sampled_orders")
    @classmethod
    def check_sampled_orders(cls, v):
        if v < 1:
            raise ValueError("sampled_orders must be at least 1")
        return v

    @field_validator("seed")
    @classmethod
    def check_seed(cls, v):
        if not 0 <= v < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @field_validator("hsop_degrees")
    @classmethod
    def check_hsop_degrees(cls, v):
        if v is not None and (not v or any(d < 1 for d in v)):
            raise ValueError("hsop_degrees must be a nonempty list of positive integers")
        return v

    @field_validator("jobs")
    @classmethod
    def check_jobs(cls, v):
        if v < 1:
            raise ValueError("jobs must be at least 1")
        return v

class VerificationChecks(BaseModel):
    buchberger_ok: bool
    ideal_equal: bool
    steinberg_ok: bool
    top_degree_ok: bool
    degree_bound_ok: bool
    witnesses_ok: bool

    def passed(self) -> bool:
        return all(self.model_dump().values())

class OrderVerification(BaseModel):
    order: str
    order_spec: OrderSpec
    gb_size: int
    lt_generators: List[str]
    dimension: int
    top_degree: int
    checks: VerificationChecks

class FormulaComparison(BaseModel):
    name: str
    expected: int
    computed: int

    @property
    def matches(self) -> bool:
        return self.expected == self.computed

class BoundComparison(BaseModel):
    name: str
    bound: int
    computed: int

    @property
    def holds(self) -> bool:
        return self.computed <= self.bound

class CoinvariantSummary(BaseModel):
    dimension: int
    top_degree: int
    standard_monomials: List[str]
    lt_generators: List[str]

class Report(BaseModel):
    config: RunConfig
    field: BinaryFieldDescriptor
    generator_counts: Dict[str, int]
    verifications: List[OrderVerification]
    coinvariants: Optional[CoinvariantSummary] = None
    formulas: List[FormulaComparison] = []
    bounds: List[BoundComparison] = []
    passed: bool

    @classmethod
    def assemble(cls, config: RunConfig, field: BinaryFieldDescriptor, generator_counts: Dict[str, int],
                 verifications: List[OrderVerification], coinvariants: Optional[CoinvariantSummary],
                 formulas: List[FormulaComparison], bounds: Optional[List[BoundComparison]] = None) -> "Report":
        bounds = bounds or []
        passed = (all(v.checks.passed() for v in verifications) and all(f.matches for f in formulas)
                  and all(b.holds for b in bounds))
        return cls(config=config, field=field, generator_counts=generator_counts, verifications=verifications,
                   coinvariants=coinvariants, formulas=formulas, bounds=bounds, passed=passed)
