"""Displacement budgets for points moved by a rank-k free group.

At a point x of a hyperbolic 3-manifold whose fundamental group is k-free,
a suitable system of k loops based at x satisfies

    sum_j 1/(1 + e^(d_j)) <= 1/2,

where d_j is the length of the j-th loop.  Given m of the displacements,
the budget asks how large the remaining k - m must be: with all unknown
displacements equal to 2 rho the inequality pins the least admissible rho.
The weight 1/(1 + e^x) is evaluated as (1 - tanh(x/2))/2, which is exact in
both tails.
"""

import enum
import math
from dataclasses import dataclass, field

from cuspvol.tubes import exit_radius

__all__ = [
    "BudgetSolution",
    "BudgetStatus",
    "DisplacementBudget",
    "TubePointSeparation",
    "cusp_separation_bound",
    "displacement_weight",
    "solve_budget",
    "tube_point_separation",
    "weight_sum_holds",
]

#: Slack for the defining inequality check; the budget is closed under
#: limits, so equality within one rounding step still counts.
WEIGHT_SLACK = 1e-15


def displacement_weight(x):
    """1/(1 + e^x) = (1 - tanh(x/2))/2, monotone decreasing onto (0, 1)."""
    if not math.isfinite(x):
        raise ValueError(f"displacement must be finite, got {x}")
    return 0.5 * (1.0 - math.tanh(0.5 * x))


def weight_sum_holds(displacements, slack=WEIGHT_SLACK):
    """Whether sum of displacement weights is at most 1/2 (within slack)."""
    return sum(displacement_weight(d) for d in displacements) <= 0.5 + slack


@dataclass(frozen=True)
class DisplacementBudget:
    """rank elements total; known_lengths are the displacements already pinned."""

    rank: int
    known_lengths: tuple = ()

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 2:
            raise ValueError(f"rank must be an integer >= 2, got {self.rank}")
        lengths = tuple(float(value) for value in self.known_lengths)
        if len(lengths) > self.rank:
            raise ValueError(f"{len(lengths)} known lengths exceed rank {self.rank}")
        for value in lengths:
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"known displacements must be positive and finite, got {value}")
        object.__setattr__(self, "known_lengths", lengths)

    @property
    def known_count(self):
        return len(self.known_lengths)

    @property
    def unknown_count(self):
        return self.rank - len(self.known_lengths)

    def known_weight(self):
        return sum(displacement_weight(value) for value in self.known_lengths)

    def lhs(self, rho):
        """Budget left-hand side with every unknown displacement set to 2 rho."""
        if rho < 0.0:
            raise ValueError(f"separation must be nonnegative, got {rho}")
        return self.unknown_count * displacement_weight(2.0 * rho) + self.known_weight()


class BudgetStatus(enum.Enum):
    SOLVED = "SOLVED"
    INFEASIBLE = "INFEASIBLE"
    INFEASIBLE_AT_INFINITY = "INFEASIBLE_AT_INFINITY"
    DEGENERATE = "DEGENERATE"


@dataclass(frozen=True)
class BudgetSolution:
    status: BudgetStatus
    separation: float | None
    known_weight: float


def solve_budget(budget):
    """Least rho with budget.lhs(rho) <= 1/2, in closed form.

    * SOLVED: finite separation (0 when the budget already holds at rho=0).
    * INFEASIBLE: the known weights alone exceed 1/2 and unknowns remain;
      no separation helps.
    * INFEASIBLE_AT_INFINITY: the known weights alone consume exactly 1/2;
      the inequality is approached but never attained at finite rho.
    * DEGENERATE: nothing is unknown and the known weights exceed 1/2.
    """
    known = budget.known_weight()
    free = budget.unknown_count
    if free == 0:
        if known <= 0.5 + WEIGHT_SLACK:
            return BudgetSolution(BudgetStatus.SOLVED, 0.0, known)
        return BudgetSolution(BudgetStatus.DEGENERATE, None, known)
    target = 0.5 - known
    if target < 0.0:
        return BudgetSolution(BudgetStatus.INFEASIBLE, None, known)
    if target == 0.0:
        return BudgetSolution(BudgetStatus.INFEASIBLE_AT_INFINITY, None, known)
    if target / free >= 0.5:
        return BudgetSolution(BudgetStatus.SOLVED, 0.0, known)
    return BudgetSolution(BudgetStatus.SOLVED, 0.5 * math.log(free / target - 1.0), known)


@dataclass(frozen=True)
class TubePointSeparation:
    """Budget outcome at a point outside an embedded tube.

    The core loop contributes its length; the return trip through the tube
    contributes twice the exit radius.  below_margulis records whether the
    core is short enough (length < log(2 rank - 1)) for the rank-k thin-part
    hypothesis; the solution is reported either way.
    """

    solution: BudgetSolution
    exit_displacement: float
    below_margulis: bool
    budget: DisplacementBudget = field(repr=False)


def tube_point_separation(rank, length, tube_radius):
    """Separation budget for a point outside a radius-``tube_radius`` tube."""
    doubled = 2.0 * exit_radius(tube_radius, length)
    budget = DisplacementBudget(rank, (length, doubled))
    return TubePointSeparation(
        solution=solve_budget(budget),
        exit_displacement=doubled,
        below_margulis=length < math.log(2.0 * rank - 1.0),
        budget=budget,
    )


def cusp_separation_bound(beta, rank):
    """Distance bound -(1/2) log((beta - 1)/(rank - 2)) from the cusp boundary.

    beta is the maximal-cusp volume parameter, in (1, 2); rank >= 3.
    """
    if not isinstance(rank, int) or rank < 3:
        raise ValueError(f"rank must be an integer >= 3, got {rank}")
    if not 1.0 < beta < 2.0:
        raise ValueError(f"beta must lie in (1, 2), got {beta}")
    return -0.5 * math.log((beta - 1.0) / (rank - 2.0))
