"""Command-line client for the certification service.

Every subcommand talks HTTP to the FastAPI app, by default through an
in-process ASGI transport (no socket, no server to start), or to a running
instance via --server.  The CLI owns file I/O and formatting; all
computation happens behind the service boundary.

Exit codes: 0 success, 1 failed certification (verify only), 2 usage or
input error.
"""

import argparse
import asyncio
import math
import sys
from pathlib import Path

import httpx

__all__ = ["main"]


class ClientError(Exception):
    """Anything that should end the process with exit code 2."""


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def _print_table(pairs, stream=None):
    stream = stream or sys.stdout
    width = max(len(key) for key, _ in pairs)
    for key, value in pairs:
        print(f"{key.ljust(width)} = {_fmt(value)}", file=stream)


async def _request_async(server, method, path, payload, params):
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=300.0) as client:
            return await client.request(method, path, json=payload, params=params)
    from cuspvol.service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://cuspvol.internal", timeout=None
    ) as client:
        return await client.request(method, path, json=payload, params=params)


def _describe_error(response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list):
        parts = []
        for item in detail:
            location = ".".join(str(piece) for piece in item.get("loc", ()) if piece != "body")
            parts.append(f"{location}: {item.get('msg', 'invalid')}" if location else item.get("msg", "invalid"))
        return "; ".join(parts)
    return f"service returned status {response.status_code}: {response.text[:200]}"


def _request(args, method, path, payload=None, params=None) -> dict:
    try:
        response = asyncio.run(_request_async(args.server, method, path, payload, params))
    except httpx.HTTPError as exc:
        raise ClientError(f"service unreachable: {exc}") from exc
    if response.status_code == 200:
        return response.json()
    raise ClientError(_describe_error(response))


def _cmd_constants(args) -> int:
    data = _request(args, "GET", "/constants", params={"quad_tol": args.quad_tol})
    _print_table(
        [
            ("circumradius_scale", data["circumradius_scale"]),
            ("collar_ball_bound", data["collar_ball_bound"]),
            ("density_limit", data["density_limit"]),
            ("shell_gap_limit", data["shell_gap_limit"]),
            ("ideal_cell_volume", data["ideal_cell_volume"]),
            ("collar_ball_volume", data["collar_ball_volume"]),
        ]
    )
    return 0


def _cmd_case_sweep(args) -> int:
    data = _request(
        args,
        "POST",
        "/case-sweep",
        payload={
            "beta_min": args.beta_min,
            "beta_max": args.beta_max,
            "step": args.step,
            "quad_tol": args.quad_tol,
            "threads": args.threads,
        },
    )
    lines = ["beta,case_id,bound"]
    lines.extend(f"{_fmt(row['beta'])},{row['case_id']},{_fmt(row['bound'])}" for row in data["rows"])
    csv_text = "\n".join(lines) + "\n"
    summary = (
        f"minimum bound {_fmt(data['min_bound'])} in case {data['min_case']}"
        f" at beta = {_fmt(data['argmin_beta'])}"
    )
    if args.out:
        Path(args.out).write_text(csv_text)
        print(f"wrote {len(data['rows'])} rows to {args.out}")
        print(summary)
    else:
        sys.stdout.write(csv_text)
        print(summary, file=sys.stderr)
    return 0


def _cmd_budget(args) -> int:
    lengths = args.length or []
    count = args.m if args.m is not None else len(lengths)
    if count != len(lengths):
        if not lengths:
            raise ClientError(f"--m {count} requires {count} --length values")
        raise ClientError(f"--m {count} disagrees with {len(lengths)} --length values")
    data = _request(args, "POST", "/budget", payload={"rank": args.k, "known_lengths": lengths})
    rows = [
        ("status", data["status"]),
        ("rank", data["rank"]),
        ("known_count", data["known_count"]),
        ("known_weight", data["known_weight"]),
    ]
    if data["separation"] is None:
        rows.append(("separation", "unattainable"))
    else:
        rows.append(("separation", f"{data['separation']:.6f} (full: {_fmt(data['separation'])})"))
    _print_table(rows)
    return 0


def _cmd_tube(args) -> int:
    payload = {"length": args.length, "twist": args.twist}
    if args.target is not None:
        payload["target_displacement"] = args.target
    if args.radius is not None:
        payload["radius"] = args.radius
    data = _request(args, "POST", "/tube", payload=payload)
    rows = [
        ("length", data["length"]),
        ("twist", data["twist"]),
        ("collar_radius", data["collar_radius"]),
        ("collar_exit_radius", data["collar_exit_radius"]),
        ("within_margulis", data["within_margulis"]),
    ]
    for key in ("radius", "displacement", "exit_radius", "tube_volume"):
        if data.get(key) is not None:
            rows.append((key, data[key]))
    _print_table(rows)
    if not data["within_margulis"]:
        print(
            f"warning: length {_fmt(data['length'])} is not below log 3 = {_fmt(math.log(3.0))};"
            " the displacement identities hold but the short-geodesic hypotheses do not",
            file=sys.stderr,
        )
    return 0


def _cmd_homology(args) -> int:
    from cuspvol.homology import parse_matrix_text

    try:
        text = Path(args.matrix_file).read_text()
    except OSError as exc:
        raise ClientError(f"cannot read {args.matrix_file}: {exc}") from exc
    try:
        presentation = parse_matrix_text(text)
    except ValueError as exc:
        raise ClientError(f"{args.matrix_file}: {exc}") from exc
    payload = {
        "matrix": [list(row) for row in presentation.matrix],
        "primes": args.p,
    }
    if presentation.lambda_class is not None:
        payload["lambda_class"] = list(presentation.lambda_class)
    if presentation.mu_class is not None:
        payload["mu_class"] = list(presentation.mu_class)
    if args.slope is not None:
        payload["slope"] = args.slope
    if args.k is not None:
        payload["k"] = args.k
    if args.cup_rank is not None:
        payload["cup_rank"] = args.cup_rank
    data = _request(args, "POST", "/homology", payload=payload)
    rows_n = len(presentation.matrix)
    cols_n = len(presentation.matrix[0]) if rows_n else 0
    rows = [
        ("matrix", f"{rows_n} x {cols_n}"),
        ("filled", data["filled"]),
        ("divisors", " ".join(str(d) for d in data["divisors"]) or "none"),
        ("free_rank", data["free_rank"]),
    ]
    for prime, dim in sorted((int(p), dim) for p, dim in data["mod_p_dims"].items()):
        rows.append((f"mod_{prime}_dim", dim))
    if data["gate"] is not None:
        rows.append(("gate", data["gate"]))
    _print_table(rows)
    return 0


def _cmd_verify(args) -> int:
    data = _request(
        args,
        "POST",
        "/verify",
        payload={
            "quad_tol": args.quad_tol,
            "grid_step": args.grid_step,
            "tol": args.tol,
            "threads": args.threads,
        },
    )
    for check in data["checks"]:
        flag = "PASS" if check["passed"] else "FAIL"
        measured = "" if check["measured"] is None else f" measured={_fmt(check['measured'])}"
        threshold = "" if check["threshold"] is None else f" threshold={_fmt(check['threshold'])}"
        tail = "" if check["passed"] else f"; {check['detail']}"
        print(f"{flag} {check['name']:<38}{measured}{threshold}{tail}")
    total = len(data["checks"])
    good = sum(1 for check in data["checks"] if check["passed"])
    print(
        f"{good}/{total} checks passed; sweep minimum {_fmt(data['global_min'])}"
        f" in case {data['global_case']}"
    )
    if args.out:
        Path(args.out).write_text(data["report_text"])
        print(f"report written to {args.out}")
    return int(data["exit_status"])


def _cmd_serve(args) -> int:
    import uvicorn

    from cuspvol.service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _add_server_flag(parser):
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service (default: run the app in-process)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspvol",
        description="Certify the cusped-volume lower bound and its supporting quantities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the limiting packing constants")
    p.add_argument("--quad-tol", type=float, default=1e-10)
    _add_server_flag(p)
    p.set_defaults(handler=_cmd_constants)

    p = sub.add_parser("case-sweep", help="sweep beta and write per-beta bounds as CSV")
    p.add_argument("--beta-min", type=float, default=1.0001)
    p.add_argument("--beta-max", type=float, default=1.9999)
    p.add_argument("--step", type=float, default=1e-4)
    p.add_argument("--quad-tol", type=float, default=1e-10)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, help="CSV path (default: standard output)")
    _add_server_flag(p)
    p.set_defaults(handler=_cmd_case_sweep)

    p = sub.add_parser("budget", help="solve a displacement budget")
    p.add_argument("--k", type=int, required=True, help="number of generators sharing the budget")
    p.add_argument("--m", type=int, default=None, help="how many lengths are pinned (checked against --length)")
    p.add_argument(
        "--length",
        type=float,
        action="append",
        help="a pinned geodesic length (repeatable)",
    )
    _add_server_flag(p)
    p.set_defaults(handler=_cmd_budget)

    p = sub.add_parser("tube", help="evaluate tube displacement, radius, and volume")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--twist", type=float, default=0.0)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--target", type=float, default=None, help="displacement to solve the radius for")
    group.add_argument("--radius", type=float, default=None, help="tube radius to evaluate at")
    _add_server_flag(p)
    p.set_defaults(handler=_cmd_tube)

    p = sub.add_parser("homology", help="run a presentation matrix through the divisor pipeline")
    p.add_argument("matrix_file", help="text file: 'rows cols' then row-major entries")
    p.add_argument("--slope", type=int, nargs=2, default=None, metavar=("A", "B"))
    p.add_argument("--p", type=int, nargs="+", default=[2, 3, 5], help="primes for mod-p dimensions")
    p.add_argument("--k", type=int, default=None, help="freeness rank for the gate")
    p.add_argument("--cup-rank", type=int, default=None)
    _add_server_flag(p)
    p.set_defaults(handler=_cmd_homology)

    p = sub.add_parser("verify", help="run the full certification suite")
    p.add_argument("--quad-tol", type=float, default=1e-10)
    p.add_argument("--grid-step", type=float, default=1e-4)
    p.add_argument("--tol", type=float, default=5e-4)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, help="write the machine-readable report here")
    _add_server_flag(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8351)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
