"""Operations layer: one function per workflow, pydantic models in and out.

Both front ends (the FastAPI service and the CLI) call these; neither
contains numerics of its own.  Domain violations surface as ValueError,
numeric breakdowns as ArithmeticError; the front ends map those to exit
codes / HTTP statuses.
"""

from __future__ import annotations

import io
import math

import numpy as np

from . import helicoid, mesh, sine_gordon, solver
from .invariants import invariants as compute_invariants, spatial_class as compute_spatial_class
from .helicoid import HelicoidParams
from .schemas import (
    ClassifyRequestModel,
    ClassifyResponseModel,
    HelicoidReport,
    ProfileRequestModel,
    SolveRequestModel,
    SolveResponseModel,
    SpatialClassModel,
    SurfaceRequestModel,
    TableRequestModel,
    TableResponseModel,
    TableRowModel,
    VerifyRequestModel,
    VerifyResponseModel,
)

__all__ = [
    "build_report",
    "solve_op",
    "classify_op",
    "table_op",
    "verify_op",
    "profile_csv_op",
    "surface_obj_op",
]


def build_report(
    p: HelicoidParams,
    tol: float = 1e-9,
    max_denominator: int = 10000,
    residuals: dict[str, float] | None = None,
) -> HelicoidReport:
    iv = compute_invariants(p)
    sc = compute_spatial_class(p, tol=tol, max_denominator=max_denominator)
    pq = sc.rational_approx or (None, None)
    return HelicoidReport(
        mu=p.mu,
        r=p.r,
        m=p.m,
        helicity=p.helicity,
        parity=iv.parity,
        pitch=iv.pitch,
        wavelength=iv.wavelength,
        wave_number=iv.wave_number,
        inner_radius=iv.inner_radius,
        outer_radius=iv.outer_radius,
        aspect_ratio=iv.aspect_ratio,
        spatial_class=SpatialClassModel(kind=sc.kind.value, p=pq[0], q=pq[1]),
        residuals=residuals or {},
    )


def solve_op(req: SolveRequestModel) -> SolveResponseModel:
    res = solver.solve(
        solver.SolveRequest(req.helicity, req.parity, req.wave_number, req.aspect_ratio)
    )
    p = res.params(req.helicity)
    report = build_report(p, residuals={"h_root": res.residual})
    return SolveResponseModel(report=report, m_root=res.m_root, iterations=res.iterations)


def classify_op(req: ClassifyRequestModel) -> ClassifyResponseModel:
    p = HelicoidParams(req.mu, req.r, req.helicity)
    report = build_report(p, tol=req.tol, max_denominator=req.max_denominator)
    return ClassifyResponseModel(kind=p.kind.value, report=report)


def table_op(req: TableRequestModel) -> TableResponseModel:
    rows = solver.series_table(req.parity, req.aspect_ratio, req.max_n)
    return TableResponseModel(
        parity=req.parity,
        aspect_ratio=req.aspect_ratio,
        rows=[TableRowModel(**row) for row in rows],
    )


def verify_op(req: VerifyRequestModel) -> VerifyResponseModel:
    """Seeded numerical verification report for one parameter pair.

    Samples regular points away from the singular set, checks the FD
    Gauss curvature against -1 and the FD forms against the closed ones
    (relative, floored at scale 1), runs the sine-Gordon residual over
    random space-time points, and runs the mirror identities.
    """
    p = HelicoidParams(req.mu, req.r, req.helicity)
    rng = np.random.default_rng(req.seed)
    Lam = helicoid.singular_spacing(p)
    margin = helicoid.SINGULAR_MARGIN

    max_curv = 0.0
    max_form = 0.0
    for _ in range(req.samples):
        frac = rng.uniform(margin / Lam + 0.01, 1.0 - margin / Lam - 0.01)
        u = (math.floor(rng.uniform(-2, 2)) + frac) * Lam
        v = rng.uniform(-1.0, 1.0)
        max_curv = max(max_curv, abs(helicoid.gauss_curvature(p, u, v, req.h) + 1.0))
        fd = helicoid.fd_fundamental_forms(p, u, v, req.h)
        cf = helicoid.closed_fundamental_forms(p, u)
        for name in ("g11", "g12", "g22", "h11", "h12", "h22"):
            a, b = getattr(fd, name), getattr(cf, name)
            max_form = max(max_form, abs(a - b) / max(1.0, abs(b)))

    pot = sine_gordon.PotentialParams(p.mu, p.r)
    max_sg = 0.0
    for _ in range(req.samples):
        s, t = rng.uniform(-3, 3), rng.uniform(-3, 3)
        max_sg = max(max_sg, abs(sine_gordon.sg_residual(pot, s, t)))

    rep2 = helicoid.mirror_pair_check(p.mu, p.r, req.samples, seed=req.seed)
    mirror_dev = rep2["max_dev_part2"]
    if p.mu < 1.0:
        # electric parameters have a mu < 0 mirror partner exercising part (1)
        partner = p.mu / (p.mu - 1.0)
        rep1 = helicoid.mirror_pair_check(partner, p.r, req.samples, seed=req.seed)
        mirror_dev = max(mirror_dev, rep1["max_dev_part1"], rep1["max_dev_part2"])

    passed = max_curv < 1e-4 and max_form < 1e-6 and max_sg < 1e-6 and mirror_dev < 1e-8
    return VerifyResponseModel(
        max_abs_curvature_error=max_curv,
        max_form_deviation=max_form,
        max_sg_residual=max_sg,
        mirror_max_deviation=mirror_dev,
        mirror_ok=mirror_dev < 1e-8,
        passed=passed,
    )


def profile_csv_op(req: ProfileRequestModel) -> str:
    p = HelicoidParams(req.mu, req.r, req.helicity)
    prof = mesh.sample_profile(p, req.periods, req.samples)
    buf = io.BytesIO()
    mesh.write_profile_csv(prof, buf)
    return buf.getvalue().decode("utf-8")


def surface_obj_op(req: SurfaceRequestModel) -> str:
    p = HelicoidParams(req.mu, req.r, req.helicity)
    m = mesh.sample_surface(p, req.u_periods, req.v_turns, req.res_u, req.res_v)
    buf = io.BytesIO()
    mesh.write_obj(m, buf)
    return buf.getvalue().decode("utf-8")
