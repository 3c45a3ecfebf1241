"""Certified volume bounds for cusped hyperbolic 3-manifolds.

The package computes, at controlled precision, the quantities behind a
volume lower bound for finite-volume hyperbolic 3-manifolds with a cusp
and a 3-free fundamental group:

* closed-form geometry of loxodromic isometries and their embedded tubes
  (:mod:`cuspvol.tubes`), with an independent matrix-model oracle
  (:mod:`cuspvol.halfspace`);
* the simplicial packing density of equal balls in hyperbolic 3-space and
  its horoball limit (:mod:`cuspvol.packing`);
* displacement budgets for points moved by a rank-k free group
  (:mod:`cuspvol.budget`);
* the piecewise volume optimization over the maximal-cusp volume parameter
  (:mod:`cuspvol.cases`);
* integer homology invariants and mod-p hypothesis gates
  (:mod:`cuspvol.homology`);
* a deterministic certification suite (:mod:`cuspvol.checks`), exposed
  through a FastAPI service (:mod:`cuspvol.service`) and a thin CLI client
  (:mod:`cuspvol.cli`).
"""

from cuspvol.budget import (
    BudgetSolution,
    BudgetStatus,
    DisplacementBudget,
    cusp_separation_bound,
    displacement_weight,
    solve_budget,
    tube_point_separation,
)
from cuspvol.cases import (
    CaseAnalysisReport,
    CaseBound,
    CaseId,
    analyze_cases,
    case_volume_bound,
    classify_case,
    claimed_case_floors,
    collar_case_value,
    remote_radius,
    split_case_value,
)
from cuspvol.halfspace import ModelIsometry, ModelPoint, model_distance, oracle_displacement
from cuspvol.homology import (
    ElementaryDivisors,
    GateResult,
    SmithDecomposition,
    cover_rank_bound,
    fill_slope,
    hypothesis_gate,
    mod_p_dim,
    nilpotent_quotient_dim,
    smith_normal_form,
)
from cuspvol.packing import (
    LimitConstants,
    SimplexPackingProfile,
    ball_volume,
    cell_volume,
    density,
    dihedral_angle,
    ideal_cell_volume,
    limit_constants,
    lobachevsky,
    packing_profile,
)
from cuspvol.tubes import (
    Loxodromic,
    collar_radius,
    displacement_at_radius,
    exit_radius,
    tube_radius,
    tube_volume,
)

__version__ = "0.1.0"
