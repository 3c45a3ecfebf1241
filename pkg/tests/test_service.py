import math

import pytest
from fastapi.testclient import TestClient

from cuspvol.report import emit_report, parse_report
from cuspvol.service import create_app

EXPECTED_FAILING = {
    "headline_window",
    "headline_attained_in_collar_case",
    "case_floors_above_threshold",
    "split_monotonicity_claim",
    "printed_cubic_slope_identity",
}


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


@pytest.fixture(scope="module")
def verify_body(client):
    response = client.post("/verify", json={})
    assert response.status_code == 200
    return response.json()


def test_healthz(client):
    response = client.get("/healthz")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["version"]


def test_constants(client):
    body = client.get("/constants").json()
    assert body["circumradius_scale"] == pytest.approx(1.9318516525781364, abs=1e-15)
    assert body["collar_ball_bound"] == pytest.approx(0.9297813075926348, rel=1e-12)
    assert body["density_limit"] == pytest.approx(0.8532760881046086, rel=1e-12)
    assert body["shell_gap_limit"] == pytest.approx(0.2027325540540822, abs=1e-14)
    assert body["ideal_cell_volume"] == pytest.approx(1.0149416064096537, abs=1e-15)
    assert body["collar_ball_volume"] == pytest.approx(0.7373979095631877, abs=1e-15)
    assert body["quad_tol"] == 1e-10


def test_constants_quad_tol_override(client):
    body = client.get("/constants", params={"quad_tol": 1e-9}).json()
    assert body["quad_tol"] == 1e-9
    assert body["density_limit"] == pytest.approx(0.8532760881046086, rel=1e-9)


def test_tube_with_radius(client):
    body = client.post("/tube", json={"length": 0.5, "twist": 1.0, "radius": 1.0}).json()
    assert body["collar_radius"] == pytest.approx(0.9846721578999423, rel=1e-14)
    assert body["collar_exit_radius"] == pytest.approx(1.000731651395741, rel=1e-14)
    assert body["within_margulis"] is True
    assert body["displacement"] == pytest.approx(1.2808667292403704, rel=1e-14)
    assert body["exit_radius"] == pytest.approx(1.016023535414791, rel=1e-14)
    assert body["tube_volume"] == pytest.approx(2.169423422721429, rel=1e-14)


def test_tube_without_radius(client):
    body = client.post("/tube", json={"length": 0.5, "twist": 1.0}).json()
    assert body["collar_radius"] == pytest.approx(0.9846721578999423, rel=1e-14)
    assert body["radius"] is None
    assert body["displacement"] is None
    assert body["exit_radius"] is None
    assert body["tube_volume"] is None


def test_tube_with_target_displacement(client):
    body = client.post(
        "/tube", json={"length": 0.5, "twist": 1.0, "target_displacement": 2.0}
    ).json()
    assert body["radius"] == pytest.approx(1.4951741962042637, rel=1e-12)
    assert body["displacement"] == pytest.approx(2.0, rel=1e-14)


def test_tube_target_below_length(client):
    response = client.post(
        "/tube", json={"length": 0.5, "twist": 1.0, "target_displacement": 0.4}
    )
    assert response.status_code == 422
    assert "must exceed the core length" in response.json()["detail"]


def test_tube_rejects_radius_and_target_together(client):
    response = client.post(
        "/tube",
        json={"length": 0.5, "twist": 1.0, "radius": 1.0, "target_displacement": 2.0},
    )
    assert response.status_code == 422


def test_tube_rejects_nonpositive_length(client):
    assert client.post("/tube", json={"length": 0.0, "twist": 0.0}).status_code == 422
    assert client.post("/tube", json={"length": -1.0, "twist": 0.0}).status_code == 422


def test_tube_long_core_flag(client):
    body = client.post("/tube", json={"length": 1.2, "twist": 0.0}).json()
    assert body["within_margulis"] is False


def test_extra_fields_rejected(client):
    response = client.post(
        "/tube", json={"length": 0.5, "twist": 1.0, "radius": 1.0, "bogus": 3}
    )
    assert response.status_code == 422


def test_budget_solved(client):
    body = client.post("/budget", json={"rank": 2, "known_lengths": []}).json()
    assert body["status"] == "SOLVED"
    assert body["separation"] == pytest.approx(0.5493061443340549, abs=1e-16)
    assert body["known_weight"] == 0.0
    assert body["rank"] == 2
    assert body["known_count"] == 0


def test_budget_degenerate(client):
    body = client.post("/budget", json={"rank": 2, "known_lengths": [0.1, 0.1]}).json()
    assert body["status"] == "DEGENERATE"
    assert body["separation"] is None
    assert body["known_weight"] == pytest.approx(0.95004162504212, rel=1e-15)


def test_budget_validation(client):
    assert client.post("/budget", json={"rank": 1, "known_lengths": []}).status_code == 422
    assert (
        client.post("/budget", json={"rank": 2, "known_lengths": [-1.0]}).status_code == 422
    )


def test_case_sweep(client):
    body = client.post(
        "/case-sweep", json={"beta_min": 1.05, "beta_max": 1.08, "step": 0.01}
    ).json()
    assert [row["beta"] for row in body["rows"]] == pytest.approx(
        [1.05, 1.06, 1.07, 1.08], abs=1e-12
    )
    assert [row["bound"] for row in body["rows"]] == pytest.approx(
        [4.933554261141457, 4.918753810535041, 4.9237164173717645, 4.940328419974431],
        rel=1e-14,
    )
    assert all(row["case_id"] == "IVA" for row in body["rows"])
    assert body["min_bound"] == pytest.approx(4.918753810535041, rel=1e-14)
    assert body["argmin_beta"] == pytest.approx(1.06, abs=1e-12)
    assert body["min_case"] == "IVA"


def test_case_sweep_validation(client):
    assert (
        client.post(
            "/case-sweep", json={"beta_min": 1.0, "beta_max": 1.5, "step": 0.01}
        ).status_code
        == 422
    )
    assert (
        client.post(
            "/case-sweep", json={"beta_min": 1.05, "beta_max": 1.06, "step": 1.0}
        ).status_code
        == 422
    )


def test_homology_plain(client):
    body = client.post("/homology", json={"matrix": [[2, 0], [0, 4]]}).json()
    assert body["divisors"] == [2, 4]
    assert body["free_rank"] == 0
    assert body["mod_p_dims"] == {"2": 2, "3": 0, "5": 0}
    assert body["gate"] is None
    assert body["filled"] is False


def test_homology_filled_with_gate(client):
    body = client.post(
        "/homology",
        json={
            "matrix": [[0, 6, 9]],
            "lambda_class": [2, 0, 4],
            "mu_class": [1, 1, 1],
            "slope": [1, 2],
            "k": 2,
            "cup_rank": 0,
        },
    ).json()
    assert body["filled"] is True
    assert body["divisors"] == [1, 6]
    assert body["free_rank"] == 1
    assert body["mod_p_dims"] == {"2": 2, "3": 2, "5": 1}
    assert body["gate"] == "NEITHER"


def test_homology_slope_requires_classes(client):
    response = client.post("/homology", json={"matrix": [[2, 0], [0, 4]], "slope": [1, 2]})
    assert response.status_code == 422


def test_homology_rejects_bad_prime(client):
    response = client.post("/homology", json={"matrix": [[2, 0], [0, 4]], "primes": [4]})
    assert response.status_code == 422


def test_homology_rejects_nonprimitive_slope(client):
    response = client.post(
        "/homology",
        json={
            "matrix": [[0, 6, 9]],
            "lambda_class": [2, 0, 4],
            "mu_class": [1, 1, 1],
            "slope": [2, 4],
        },
    )
    assert response.status_code == 422


def test_verify_shape(verify_body):
    assert verify_body["passed"] is False
    assert verify_body["exit_status"] == 1
    assert len(verify_body["checks"]) == 41
    assert verify_body["global_min"] == pytest.approx(4.918493742009073, rel=1e-13)
    assert verify_body["global_case"] == "IVA"


def test_verify_failing_set_is_exactly_the_known_gaps(verify_body):
    failing = {check["name"] for check in verify_body["checks"] if not check["passed"]}
    assert failing == EXPECTED_FAILING
    for check in verify_body["checks"]:
        assert set(check) == {"name", "passed", "measured", "threshold", "detail"}


def test_verify_report_text_round_trips(verify_body):
    parsed = parse_report(verify_body["report_text"])
    assert parsed["run.passed"] is False
    assert parsed["run.exit_status"] == 1
    assert parsed["headline.global_min"] == pytest.approx(4.918493742009073, rel=1e-13)
    assert emit_report(parsed) == verify_body["report_text"]


def test_verify_deterministic(client, verify_body):
    again = client.post("/verify", json={})
    assert again.json()["report_text"] == verify_body["report_text"]
