"""FastAPI application exposing the certification toolkit.

Every endpoint is a pure function of its request; domain errors from the
core library (ValueError) surface as 422 responses with the original
message.  The CLI drives this app in-process through an ASGI transport, so
the service and the command line cannot drift apart.
"""

import math

from fastapi import FastAPI, HTTPException, Query

from cuspvol import __version__
from cuspvol.budget import DisplacementBudget, solve_budget
from cuspvol.cases import sweep_bounds
from cuspvol.checks import run_certification
from cuspvol.homology import elementary_divisors, fill_slope, hypothesis_gate, mod_p_dim
from cuspvol.packing import ball_volume, limit_constants
from cuspvol.report import emit_report
from cuspvol.service.schemas import (
    BudgetIn,
    BudgetOut,
    CaseSweepIn,
    CaseSweepOut,
    CheckOut,
    ConstantsOut,
    HealthOut,
    HomologyIn,
    HomologyOut,
    SweepRowOut,
    TubeIn,
    TubeOut,
    VerifyIn,
    VerifyOut,
)
from cuspvol.tubes import Loxodromic, displacement_at_radius, exit_radius, tube_radius, tube_volume
from cuspvol.tubes import collar_radius as collar_radius_of

__all__ = ["app", "create_app"]

_MARGULIS_RANK2 = math.log(3.0)


def _constants_payload(quad_tol: float) -> ConstantsOut:
    constants = limit_constants(quad_tol)
    return ConstantsOut(
        circumradius_scale=constants.circumradius_scale,
        collar_ball_bound=constants.collar_ball_bound,
        density_limit=constants.density_limit,
        shell_gap_limit=constants.shell_gap_limit,
        ideal_cell_volume=constants.ideal_cell_volume,
        collar_ball_volume=ball_volume(0.5 * math.log(3.0)),
        quad_tol=quad_tol,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="cuspvol",
        version=__version__,
        description="Certification service for cusped hyperbolic volume bounds.",
    )

    @app.get("/healthz", response_model=HealthOut)
    def healthz() -> HealthOut:
        return HealthOut(status="ok", version=__version__)

    @app.get("/constants", response_model=ConstantsOut)
    def constants(quad_tol: float = Query(default=1e-10, gt=0.0)) -> ConstantsOut:
        try:
            return _constants_payload(quad_tol)
        except (ValueError, ArithmeticError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/tube", response_model=TubeOut)
    def tube(request: TubeIn) -> TubeOut:
        try:
            iso = Loxodromic(request.length, request.twist)
            collar = collar_radius_of(request.length)
            payload = TubeOut(
                length=iso.length,
                twist=iso.twist,
                collar_radius=collar,
                collar_exit_radius=exit_radius(collar, iso.length),
                within_margulis=iso.length < _MARGULIS_RANK2,
            )
            radius = request.radius
            if request.target_displacement is not None:
                radius = tube_radius(iso, request.target_displacement)
                if radius is None:
                    raise ValueError(
                        f"target displacement {request.target_displacement} not reached:"
                        f" it must exceed the core length {iso.length}"
                    )
            if radius is not None:
                payload.radius = radius
                payload.displacement = displacement_at_radius(iso, radius)
                payload.exit_radius = exit_radius(radius, iso.length)
                payload.tube_volume = tube_volume(iso.length, radius)
            return payload
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/budget", response_model=BudgetOut)
    def budget(request: BudgetIn) -> BudgetOut:
        try:
            problem = DisplacementBudget(request.rank, tuple(request.known_lengths))
            solution = solve_budget(problem)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return BudgetOut(
            status=solution.status.value,
            separation=solution.separation,
            known_weight=solution.known_weight,
            rank=problem.rank,
            known_count=problem.known_count,
        )

    @app.post("/case-sweep", response_model=CaseSweepOut)
    def case_sweep(request: CaseSweepIn) -> CaseSweepOut:
        try:
            constants = limit_constants(request.quad_tol)
            pairs = sweep_bounds(
                constants,
                request.beta_min,
                request.beta_max,
                request.step,
                threads=request.threads,
            )
        except (ValueError, ArithmeticError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        rows = [
            SweepRowOut(beta=beta, case_id=bound.case_id.value, bound=bound.bound_value)
            for beta, bound in pairs
        ]
        best = min(rows, key=lambda row: row.bound)
        return CaseSweepOut(
            rows=rows,
            min_bound=best.bound,
            argmin_beta=best.beta,
            min_case=best.case_id,
        )

    @app.post("/homology", response_model=HomologyOut)
    def homology(request: HomologyIn) -> HomologyOut:
        try:
            matrix = request.matrix
            filled = False
            if request.slope is not None:
                matrix = fill_slope(
                    matrix, request.lambda_class, request.mu_class, request.slope[0], request.slope[1]
                )
                filled = True
            invariants = elementary_divisors(matrix)
            dims = {p: mod_p_dim(invariants, p) for p in request.primes}
            gate = None
            if request.k is not None:
                gate = hypothesis_gate(dims, request.k, cup_rank=request.cup_rank).value
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return HomologyOut(
            divisors=list(invariants.divisors),
            free_rank=invariants.free_rank,
            mod_p_dims=dims,
            gate=gate,
            filled=filled,
        )

    @app.post("/verify", response_model=VerifyOut)
    def verify(request: VerifyIn) -> VerifyOut:
        try:
            run = run_certification(
                quad_tol=request.quad_tol,
                grid_step=request.grid_step,
                tol=request.tol,
                threads=request.threads,
            )
        except (ValueError, ArithmeticError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return VerifyOut(
            passed=run.passed,
            exit_status=run.exit_status,
            global_min=run.case_report.global_min,
            global_case=run.case_report.global_case.value,
            checks=[
                CheckOut(
                    name=check.name,
                    passed=check.passed,
                    measured=check.measured,
                    threshold=check.threshold,
                    detail=check.detail,
                )
                for check in run.checks
            ],
            report_text=emit_report(run.to_mapping()),
        )

    return app


app = create_app()
