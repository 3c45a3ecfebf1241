"""Request and response models for the certification service."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

__all__ = [
    "BudgetIn",
    "BudgetOut",
    "CaseSweepIn",
    "CaseSweepOut",
    "CheckOut",
    "ConstantsOut",
    "HealthOut",
    "HomologyIn",
    "HomologyOut",
    "SweepRowOut",
    "TubeIn",
    "TubeOut",
    "VerifyIn",
    "VerifyOut",
]


class HealthOut(BaseModel):
    status: str
    version: str


class ConstantsOut(BaseModel):
    circumradius_scale: float
    collar_ball_bound: float
    density_limit: float
    shell_gap_limit: float
    ideal_cell_volume: float
    collar_ball_volume: float
    quad_tol: float


class TubeIn(BaseModel):
    """Loxodromic tube query; give at most one of target_displacement, radius."""

    model_config = ConfigDict(extra="forbid")

    length: float = Field(gt=0.0, description="translation length of the core geodesic")
    twist: float = 0.0
    target_displacement: float | None = Field(
        default=None, description="solve for the radius where displacement reaches this"
    )
    radius: float | None = Field(default=None, ge=0.0, description="evaluate at this tube radius")

    @model_validator(mode="after")
    def _one_query(self):
        if self.target_displacement is not None and self.radius is not None:
            raise ValueError("give either target_displacement or radius, not both")
        return self


class TubeOut(BaseModel):
    length: float
    twist: float
    collar_radius: float
    collar_exit_radius: float
    within_margulis: bool
    radius: float | None = None
    displacement: float | None = None
    exit_radius: float | None = None
    tube_volume: float | None = None


class BudgetIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rank: int = Field(ge=2, description="number of group generators sharing the budget")
    known_lengths: list[float] = Field(default_factory=list)


class BudgetOut(BaseModel):
    status: str
    separation: float | None
    known_weight: float
    rank: int
    known_count: int


class CaseSweepIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    beta_min: float = Field(default=1.0001, gt=1.0)
    beta_max: float = 1.9999
    step: float = Field(default=1e-4, gt=0.0)
    quad_tol: float = Field(default=1e-10, gt=0.0)
    threads: int = Field(default=1, ge=1, le=64)


class SweepRowOut(BaseModel):
    beta: float
    case_id: str
    bound: float


class CaseSweepOut(BaseModel):
    rows: list[SweepRowOut]
    min_bound: float
    argmin_beta: float
    min_case: str


class HomologyIn(BaseModel):
    """A presentation matrix, optionally filled along a peripheral slope."""

    model_config = ConfigDict(extra="forbid")

    matrix: list[list[int]]
    lambda_class: list[int] | None = None
    mu_class: list[int] | None = None
    slope: tuple[int, int] | None = None
    primes: list[int] = Field(default_factory=lambda: [2, 3, 5])
    k: int | None = Field(default=None, ge=2, description="freeness rank for the gate")
    cup_rank: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _slope_needs_classes(self):
        if self.slope is not None and (self.lambda_class is None or self.mu_class is None):
            raise ValueError("slope filling needs both lambda_class and mu_class")
        return self


class HomologyOut(BaseModel):
    divisors: list[int]
    free_rank: int
    mod_p_dims: dict[int, int]
    gate: str | None = None
    filled: bool = False


class VerifyIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    quad_tol: float = Field(default=1e-10, gt=0.0)
    grid_step: float = Field(default=1e-4, gt=0.0)
    tol: float = Field(default=5e-4, gt=0.0)
    threads: int = Field(default=1, ge=1, le=64)


class CheckOut(BaseModel):
    name: str
    passed: bool
    measured: float | None
    threshold: float | None
    detail: str


class VerifyOut(BaseModel):
    passed: bool
    exit_status: int
    global_min: float
    global_case: str
    checks: list[CheckOut]
    report_text: str
