"""Command-line front end.

A thin client over the operations layer: flag parsing and output
formatting only.  By default commands execute in-process; with
--server URL every command is forwarded to a running pshelix service
and the response is rendered identically.

Exit codes: 0 success, 1 computation error, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops
from .schemas import (
    ClassifyRequestModel,
    ProfileRequestModel,
    SolveRequestModel,
    SurfaceRequestModel,
    TableRequestModel,
    VerifyRequestModel,
)

_USAGE_EXIT = 2
_FAILURE_EXIT = 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pshelix",
        description="Pseudospherical helicoids: solve, classify, sample, verify.",
    )
    ap.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="forward the command to a running pshelix service at URL",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="parameters from (helicity, parity, wave number, aspect ratio)")
    sp.add_argument("--parity", type=int, choices=(-1, 1), required=True)
    sp.add_argument("--helicity", type=int, choices=(-1, 1), required=True)
    sp.add_argument("--wave-number", type=float, required=True)
    sp.add_argument("--aspect-ratio", type=float, required=True)
    sp.add_argument("--json", action="store_true", help="machine-readable output")

    cp = sub.add_parser("classify", help="type, invariants and spatial class of (mu, r)")
    cp.add_argument("--mu", type=float, required=True)
    cp.add_argument("--r", type=float, required=True)
    cp.add_argument("--helicity", type=int, choices=(-1, 1), default=-1)
    cp.add_argument("--tol", type=float, default=1e-9)
    cp.add_argument("--max-den", type=int, default=10000)
    cp.add_argument("--json", action="store_true")

    pp = sub.add_parser("profile", help="sample the planar profile to CSV")
    pp.add_argument("--mu", type=float, required=True)
    pp.add_argument("--r", type=float, required=True)
    pp.add_argument("--helicity", type=int, choices=(-1, 1), default=-1)
    pp.add_argument("--periods", type=int, default=1)
    pp.add_argument("--samples", type=int, default=256, help="samples per period")
    pp.add_argument("--out", required=True, metavar="FILE.csv")

    su = sub.add_parser("surface", help="sample the surface to a Wavefront OBJ")
    su.add_argument("--mu", type=float, required=True)
    su.add_argument("--r", type=float, required=True)
    su.add_argument("--helicity", type=int, choices=(-1, 1), default=-1)
    su.add_argument("--u-periods", type=int, default=1)
    su.add_argument("--v-turns", type=float, default=1.0)
    su.add_argument("--res-u", type=int, default=64)
    su.add_argument("--res-v", type=int, default=64)
    su.add_argument("--out", required=True, metavar="FILE.obj")

    vp = sub.add_parser("verify", help="numerical verification report for (mu, r)")
    vp.add_argument("--mu", type=float, required=True)
    vp.add_argument("--r", type=float, required=True)
    vp.add_argument("--helicity", type=int, choices=(-1, 1), default=-1)
    vp.add_argument("--samples", type=int, default=25)
    vp.add_argument("--h", type=float, default=1e-4)
    vp.add_argument("--seed", type=int, default=12345)
    vp.add_argument("--json", action="store_true")

    tp = sub.add_parser("table", help="series of twisted columns at fixed aspect ratio")
    tp.add_argument("--parity", type=int, choices=(-1, 1), required=True)
    tp.add_argument("--aspect-ratio", type=float, required=True)
    tp.add_argument("--max-n", type=int, required=True)
    tp.add_argument("--format", choices=("csv", "json"), default="csv")
    return ap


def _post(server: str, path: str, payload: dict):
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=300.0)
    if resp.status_code in (400, 422):
        raise ValueError(resp.text)
    resp.raise_for_status()
    return resp


def _report_lines(report: dict) -> list[str]:
    order = (
        "mu", "r", "m", "helicity", "parity", "pitch", "wavelength",
        "wave_number", "inner_radius", "outer_radius", "aspect_ratio",
    )
    lines = [f"{k} = {report[k]}" for k in order]
    sc = report["spatial_class"]
    tag = sc["kind"]
    if sc.get("p") is not None:
        tag += f" ({sc['p']}/{sc['q']})"
    lines.append(f"spatial_class = {tag}")
    for name, val in (report.get("residuals") or {}).items():
        lines.append(f"residual[{name}] = {val}")
    return lines


def _run_solve(args) -> int:
    req = SolveRequestModel(
        helicity=args.helicity,
        parity=args.parity,
        wave_number=args.wave_number,
        aspect_ratio=args.aspect_ratio,
    )
    if args.server:
        data = _post(args.server, "/solve", req.model_dump()).json()
    else:
        data = ops.solve_op(req).model_dump()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(_report_lines(data["report"])))
        print(f"m_root = {data['m_root']}")
        print(f"iterations = {data['iterations']}")
    return 0


def _run_classify(args) -> int:
    req = ClassifyRequestModel(
        mu=args.mu, r=args.r, helicity=args.helicity,
        tol=args.tol, max_denominator=args.max_den,
    )
    if args.server:
        data = _post(args.server, "/classify", req.model_dump()).json()
    else:
        data = ops.classify_op(req).model_dump()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(f"type = {data['kind']}")
        print("\n".join(_report_lines(data["report"])))
    return 0


def _run_profile(args) -> int:
    req = ProfileRequestModel(
        mu=args.mu, r=args.r, helicity=args.helicity,
        periods=args.periods, samples=args.samples,
    )
    if args.server:
        text = _post(args.server, "/profile.csv", req.model_dump()).text
    else:
        text = ops.profile_csv_op(req)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return 0


def _run_surface(args) -> int:
    req = SurfaceRequestModel(
        mu=args.mu, r=args.r, helicity=args.helicity,
        u_periods=args.u_periods, v_turns=args.v_turns,
        res_u=args.res_u, res_v=args.res_v,
    )
    if args.server:
        text = _post(args.server, "/surface.obj", req.model_dump()).text
    else:
        text = ops.surface_obj_op(req)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return 0


def _run_verify(args) -> int:
    req = VerifyRequestModel(
        mu=args.mu, r=args.r, helicity=args.helicity,
        samples=args.samples, h=args.h, seed=args.seed,
    )
    if args.server:
        data = _post(args.server, "/verify", req.model_dump()).json()
    else:
        data = ops.verify_op(req).model_dump()
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(f"max |K + 1|          = {data['max_abs_curvature_error']}")
        print(f"max form deviation   = {data['max_form_deviation']}")
        print(f"max sine-Gordon res. = {data['max_sg_residual']}")
        print(f"mirror deviation     = {data['mirror_max_deviation']}")
        print("PASS" if data["passed"] else "FAIL")
    return 0 if data["passed"] else _FAILURE_EXIT


def _run_table(args) -> int:
    req = TableRequestModel(
        parity=args.parity, aspect_ratio=args.aspect_ratio, max_n=args.max_n
    )
    if args.server:
        data = _post(args.server, "/table", req.model_dump()).json()
    else:
        data = ops.table_op(req).model_dump()
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("n,mu,r,pitch,wavelength")
        for row in data["rows"]:
            print(f"{row['n']},{row['mu']!r},{row['r']!r},{row['pitch']!r},{row['wavelength']!r}")
    return 0


_RUNNERS = {
    "solve": _run_solve,
    "classify": _run_classify,
    "profile": _run_profile,
    "surface": _run_surface,
    "verify": _run_verify,
    "table": _run_table,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except Exception as exc:  # numeric/IO/transport failures
        print(f"computation error: {exc}", file=sys.stderr)
        return _FAILURE_EXIT


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
