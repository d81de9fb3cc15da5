"""Pydantic request/response models shared by the HTTP service and the CLI.

These are the wire formats: every numeric field in a response is finite,
and field names are stable across releases.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class SolveRequestModel(BaseModel):
    helicity: Literal[-1, 1]
    parity: Literal[-1, 1]
    wave_number: float = Field(gt=0)
    aspect_ratio: float = Field(gt=0)


class SpatialClassModel(BaseModel):
    kind: Literal["dense_in_shell", "immersed_cylinder", "twisted_column"]
    p: Optional[int] = None
    q: Optional[int] = None


class HelicoidReport(BaseModel):
    """Invariant snapshot attached to solve/classify responses."""

    mu: float
    r: float
    m: float
    helicity: int
    parity: int
    pitch: float
    wavelength: float
    wave_number: float
    inner_radius: float
    outer_radius: float
    aspect_ratio: float
    spatial_class: SpatialClassModel
    residuals: dict[str, float] = Field(default_factory=dict)


class SolveResponseModel(BaseModel):
    report: HelicoidReport
    m_root: float
    iterations: int


class ClassifyRequestModel(BaseModel):
    mu: float
    r: float
    helicity: Literal[-1, 1] = -1
    tol: float = Field(default=1e-9, gt=0)
    max_denominator: int = Field(default=10000, ge=1)


class ClassifyResponseModel(BaseModel):
    kind: Literal["magnetic", "electric"]
    report: HelicoidReport


class TableRequestModel(BaseModel):
    parity: Literal[-1, 1]
    aspect_ratio: float = Field(gt=0)
    max_n: int = Field(ge=1)


class TableRowModel(BaseModel):
    n: int
    mu: float
    r: float
    pitch: float
    wavelength: float


class TableResponseModel(BaseModel):
    parity: int
    aspect_ratio: float
    rows: list[TableRowModel]


class VerifyRequestModel(BaseModel):
    mu: float
    r: float
    helicity: Literal[-1, 1] = -1
    samples: int = Field(default=25, ge=1)
    h: float = Field(default=1e-4, gt=0)
    seed: int = 12345


class VerifyResponseModel(BaseModel):
    max_abs_curvature_error: float
    max_form_deviation: float
    max_sg_residual: float
    mirror_max_deviation: float
    mirror_ok: bool
    passed: bool


class ProfileRequestModel(BaseModel):
    mu: float
    r: float
    helicity: Literal[-1, 1] = -1
    periods: int = Field(default=1, ge=1)
    samples: int = Field(default=256, ge=8)


class SurfaceRequestModel(BaseModel):
    mu: float
    r: float
    helicity: Literal[-1, 1] = -1
    u_periods: int = Field(default=1, ge=1)
    v_turns: float = Field(default=1.0, gt=0)
    res_u: int = Field(default=64, ge=2)
    res_v: int = Field(default=64, ge=2)
