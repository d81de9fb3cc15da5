"""Profile polylines, surface meshes, and their serialization.

Sampling is uniform in the profile parameter with one twist: grid values
that land within half a step of an exact cusp parameter are snapped onto
it, so singular loci appear as exact sample points / mesh rows without
changing the vertex count.  Writers emit UTF-8 text with LF endings and
shortest round-trip float formatting, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from . import helicoid
from .helicoid import HelicoidParams
from .invariants import cusps as _cusps, invariants as _invariants

__all__ = [
    "PlanarProfilePolyline",
    "SurfaceMesh",
    "sample_profile",
    "sample_surface",
    "write_obj",
    "write_profile_csv",
]


@dataclass(frozen=True)
class PlanarProfilePolyline:
    u: list[float]
    points: list[tuple[float, float]]  # (x, z); the profile lives in y = 0
    cusp_indices: list[int]
    period_count: int


@dataclass(frozen=True)
class SurfaceMesh:
    vertices: np.ndarray  # (N, 3) float64
    faces: list[tuple[int, int, int]]
    singular_flags: list[bool]
    metadata: dict = field(default_factory=dict)


def _snapped_grid(p: HelicoidParams, span_periods: int, count: int) -> tuple[list[float], set[int]]:
    """Uniform grid of `count` values over [0, span_periods * T] with values
    within half a step of a cusp parameter replaced by the exact cusp.

    Returns (grid, indices of cusp samples)."""
    T = helicoid.period(p)
    hi = span_periods * T
    du = hi / (count - 1)
    us = [i * du for i in range(count)]
    us[-1] = hi
    cusp_params = _cusps(p, range(0, span_periods + 1), verify=False)
    # Nearest grid slot per cusp; when two cusps claim one slot (coarse
    # grids) the closer cusp wins.  floor(x + 1/2) keeps ties periodic.
    snapped: dict[int, float] = {}
    for c in cusp_params:
        if c > hi + 0.5 * du:
            continue
        i = min(count - 1, max(0, int(math.floor(c / du + 0.5))))
        if abs(i * du - c) <= 0.5 * du * (1.0 + 1e-9):
            if i not in snapped or abs(i * du - c) < abs(i * du - snapped[i]):
                snapped[i] = c
    for i, c in snapped.items():
        us[i] = c
    return us, set(snapped)


def sample_profile(
    p: HelicoidParams, periods: int, samples_per_period: int
) -> PlanarProfilePolyline:
    """Sample the planar profile over `periods` periods.

    Cusps become exact sample points; cusp_indices cover the half-open
    window [0, periods * T), so a magnetic period contributes one cusp
    and an electric period two.
    """
    if periods < 1:
        raise ValueError("periods must be >= 1")
    if samples_per_period < 8:
        raise ValueError("samples_per_period must be >= 8")
    count = periods * samples_per_period + 1
    us, cusp_idx = _snapped_grid(p, periods, count)
    pts = []
    for u in us:
        x, _, z = helicoid.planar_profile(p, u)
        pts.append((x, z))
    hi = periods * helicoid.period(p)
    cusps_in_window = sorted(i for i in cusp_idx if us[i] < hi - 1e-12 * max(1.0, hi))
    return PlanarProfilePolyline(
        u=us, points=pts, cusp_indices=cusps_in_window, period_count=periods
    )


def sample_surface(
    p: HelicoidParams,
    u_periods: int,
    v_turns: float,
    res_u: int,
    res_v: int,
) -> SurfaceMesh:
    """Triangulated grid sample of the surface.

    Vertices are row-major in (u, v): index = iu * res_v + iv.  Rows whose
    u is an exact cusp parameter (after snapping) are flagged singular.
    Metadata embeds the parameters and an invariants snapshot.
    """
    if res_u < 2 or res_v < 2:
        raise ValueError("resolutions must be >= 2")
    if u_periods < 1:
        raise ValueError("u_periods must be >= 1")
    us, cusp_idx = _snapped_grid(p, u_periods, res_u)
    vs = [v_turns * j / (res_v - 1) for j in range(res_v)]
    verts = np.empty((res_u * res_v, 3), dtype=float)
    flags = [False] * (res_u * res_v)
    for iu, u in enumerate(us):
        singular_row = iu in cusp_idx
        for iv, v in enumerate(vs):
            k = iu * res_v + iv
            verts[k] = helicoid.surface_point(p, u, v)
            flags[k] = singular_row
    faces: list[tuple[int, int, int]] = []
    for iu in range(res_u - 1):
        for iv in range(res_v - 1):
            a = iu * res_v + iv
            b = a + res_v
            faces.append((a, b, a + 1))
            faces.append((a + 1, b, b + 1))
    iv_snapshot = _invariants(p)
    meta = {
        "mu": p.mu,
        "r": p.r,
        "helicity": p.helicity,
        "kind": p.kind.value,
        "u_periods": u_periods,
        "v_turns": v_turns,
        "singular_rows": sorted(cusp_idx),
        "invariants": {
            "parity": iv_snapshot.parity,
            "pitch": iv_snapshot.pitch,
            "wavelength": iv_snapshot.wavelength,
            "wave_number": iv_snapshot.wave_number,
            "inner_radius": iv_snapshot.inner_radius,
            "outer_radius": iv_snapshot.outer_radius,
            "aspect_ratio": iv_snapshot.aspect_ratio,
        },
    }
    return SurfaceMesh(vertices=verts, faces=faces, singular_flags=flags, metadata=meta)


def _fmt(x: float) -> str:
    # repr() is the shortest decimal that round-trips a double (<= 17 digits)
    return repr(float(x))


def write_obj(mesh: SurfaceMesh, sink: io.BufferedIOBase) -> None:
    """Wavefront-style text: `v x y z` then 1-based `f i j k` lines."""
    out = ["# pshelix surface mesh"]
    md = mesh.metadata
    if md:
        out.append(
            "# mu={} r={} helicity={}".format(
                _fmt(md.get("mu", math.nan)), _fmt(md.get("r", math.nan)), md.get("helicity", 0)
            )
        )
    for vtx in mesh.vertices:
        out.append(f"v {_fmt(vtx[0])} {_fmt(vtx[1])} {_fmt(vtx[2])}")
    for a, b, c in mesh.faces:
        out.append(f"f {a + 1} {b + 1} {c + 1}")
    sink.write(("\n".join(out) + "\n").encode("utf-8"))


def write_profile_csv(profile: PlanarProfilePolyline, sink: io.BufferedIOBase) -> None:
    """CSV with header u,x,z,is_cusp; one row per sample."""
    cusp = set(profile.cusp_indices)
    lines = ["u,x,z,is_cusp"]
    for i, (u, (x, z)) in enumerate(zip(profile.u, profile.points)):
        lines.append(f"{_fmt(u)},{_fmt(x)},{_fmt(z)},{1 if i in cusp else 0}")
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))
