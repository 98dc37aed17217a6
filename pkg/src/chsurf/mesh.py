"""Triangle meshing of the circular surfaces, OBJ export, and figure presets.

The parameter rectangle [0, 2*d*pi) x [0, 2*pi) is sampled on a regular
grid, wrapped in both directions.  Rows where the curve crosses the z axis
are skipped (the affine parametrization is undefined there, so the mesh
keeps a hole), rows where the generating circle degenerates to a point are
collapsed to a single vertex, and each surviving quad is split into two
triangles with exact-zero slivers dropped.

Preset grid sizes are chosen so that every rational singular parameter of
a figure lands exactly on a grid row; degenerate rows then coincide with
the independently computed singular parameter sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import BinaryIO, Dict, List, Sequence, Tuple

from .congruence import CongruenceSpec
from .curve import CurveSpec, Placement, curve_point
from .surface import AXIS_EPS, SurfaceSpec, radicand

ZERO_AREA_EPS = 1e-14

FULL = "full"
COLLAPSED = "collapsed"
SKIPPED = "skipped"


@dataclass(frozen=True)
class MeshRow:
    index: int
    t: float
    kind: str
    vertex_start: int
    vertex_count: int


@dataclass
class Mesh:
    vertices: List[Tuple[float, float, float]] = field(default_factory=list)
    triangles: List[Tuple[int, int, int]] = field(default_factory=list)
    rows: List[MeshRow] = field(default_factory=list)
    ntheta: int = 0

    @property
    def degenerate_rows(self) -> List[int]:
        return [row.index for row in self.rows if row.kind != FULL]

    @property
    def skipped_rows(self) -> List[int]:
        return [row.index for row in self.rows if row.kind == SKIPPED]

    @property
    def collapsed_rows(self) -> List[int]:
        return [row.index for row in self.rows if row.kind == COLLAPSED]

    def row_parameters(self, kinds: Sequence[str]) -> List[float]:
        return [row.t for row in self.rows if row.kind in kinds]


def _triangle_area(a, b, c) -> float:
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    cx = uy * vz - uz * vy
    cy = uz * vx - ux * vz
    cz = ux * vy - uy * vx
    return 0.5 * math.sqrt(cx * cx + cy * cy + cz * cz)


def sample(spec: SurfaceSpec, nt: int, ntheta: int) -> Mesh:
    """Grid-sample the surface into a triangle mesh.

    ``nt`` rows cover one period of the curve parameter, ``ntheta`` columns
    one turn of each generating circle; both seams are closed by reusing the
    first row/column, never by duplicating vertices.
    """
    if nt < 8 or ntheta < 8:
        raise ValueError("nt and ntheta must be at least 8")
    period = spec.curve.parameter_period
    thetas = [2.0 * math.pi * j / ntheta for j in range(ntheta)]
    cos_t = [math.cos(v) for v in thetas]
    sin_t = [math.sin(v) for v in thetas]
    q = float(spec.congruence.q)
    axis_tol = AXIS_EPS * max(1.0, spec.extent)

    mesh = Mesh(ntheta=ntheta)
    for i in range(nt):
        t = period * i / nt
        x, y, z = curve_point(spec.curve, spec.placement, t)
        rho_sq = x * x + y * y
        rho = math.sqrt(rho_sq)
        start = len(mesh.vertices)
        if rho <= axis_tol:
            mesh.rows.append(MeshRow(i, t, SKIPPED, start, 0))
            continue
        value = radicand(spec, t)
        norm_sq = rho_sq + z * z
        if value == 0.0:
            # Point circle: the whole theta ring is one vertex at the center.
            factor = (norm_sq - q) / (2.0 * rho_sq)
            mesh.vertices.append((x * factor, y * factor, 0.0))
            mesh.rows.append(MeshRow(i, t, COLLAPSED, start, 1))
            continue
        root = math.sqrt(value)
        half_inv = 1.0 / (2.0 * rho_sq)
        z_scale = root / (2.0 * rho)
        for j in range(ntheta):
            along = (root * cos_t[j] + norm_sq - q) * half_inv
            mesh.vertices.append((x * along, y * along, z_scale * sin_t[j]))
        mesh.rows.append(MeshRow(i, t, FULL, start, ntheta))

    if all(row.kind == SKIPPED for row in mesh.rows):
        raise ValueError("every row degenerated: the curve lies on the z axis")

    scale = max(1.0, max(max(abs(c) for c in v) for v in mesh.vertices))
    area_floor = ZERO_AREA_EPS * scale * scale

    def emit(a: int, b: int, c: int) -> None:
        if _triangle_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]) > area_floor:
            mesh.triangles.append((a, b, c))

    for i in range(nt):
        row_a = mesh.rows[i]
        row_b = mesh.rows[(i + 1) % nt]
        if row_a.kind == SKIPPED or row_b.kind == SKIPPED:
            continue  # hole at an axis crossing
        if row_a.kind == COLLAPSED and row_b.kind == COLLAPSED:
            continue
        if row_a.kind == FULL and row_b.kind == FULL:
            for j in range(ntheta):
                k = (j + 1) % ntheta
                a0 = row_a.vertex_start + j
                a1 = row_a.vertex_start + k
                b0 = row_b.vertex_start + j
                b1 = row_b.vertex_start + k
                emit(a0, b0, b1)
                emit(a0, b1, a1)
            continue
        full_row, apex_row = (row_a, row_b) if row_a.kind == FULL else (row_b, row_a)
        apex = apex_row.vertex_start
        for j in range(ntheta):
            k = (j + 1) % ntheta
            emit(full_row.vertex_start + j, full_row.vertex_start + k, apex)
    return mesh


def export_obj(mesh: Mesh, sink: BinaryIO) -> None:
    """Write ASCII OBJ with LF endings and 17 significant digits per coordinate."""
    lines = []
    for x, y, z in mesh.vertices:
        lines.append(f"v {x:.17g} {y:.17g} {z:.17g}\n")
    for a, b, c in mesh.triangles:
        lines.append(f"f {a + 1} {b + 1} {c + 1}\n")
    sink.write("".join(lines).encode("ascii"))


def write_obj(mesh: Mesh, path: str) -> None:
    with open(path, "wb") as handle:
        export_obj(mesh, handle)


# -- figure presets ---------------------------------------------------------------


@dataclass(frozen=True)
class FigurePreset:
    key: str
    spec: SurfaceSpec
    nt: int
    ntheta: int
    description: str


def _preset(key, n, d, a, q, cx, cy, h, nt, ntheta, description) -> FigurePreset:
    spec = SurfaceSpec(
        CurveSpec(n, d, Fraction(a)),
        CongruenceSpec(Fraction(q)),
        Placement(Fraction(cx), Fraction(cy), Fraction(h)),
    )
    return FigurePreset(key, spec, nt, ntheta, description)


def _build_presets() -> Dict[str, FigurePreset]:
    presets = [
        # Parabolic family, pole of the curve at the coincident base points.
        _preset("3a", 7, 3, 0, 0, 0, 0, 0, 280, 96, "CH(7,3,0), q=0, plane z=0, pole on axis"),
        _preset("3b", 7, 3, "1/4", 0, 0, 0, 0, 280, 96, "CH(7,3,1/4), q=0, plane z=0, pole on axis"),
        _preset("3c", 7, 3, 1, 0, 0, 0, 0, 280, 96, "CH(7,3,1), q=0, plane z=0, pole on axis"),
        _preset("3d", 7, 3, "5/2", 0, 0, 0, 0, 280, 96, "CH(7,3,5/2), q=0, plane z=0, pole on axis"),
        # Elliptic family, isolated pole at a base point.
        _preset("4a", 3, 1, "5/4", 1, 0, 0, -1, 256, 96, "CH(3,1,5/4), q=1, plane z=-1, pole on axis"),
        _preset("4b", 2, 3, "5/4", 1, 0, 0, -1, 256, 96, "CH(2,3,5/4), q=1, plane z=-1, pole on axis"),
        _preset("4c", 7, 3, "5/4", 1, 0, 0, -1, 280, 96, "CH(7,3,5/4), q=1, plane z=-1, pole on axis"),
        # Hyperbolic family, curtate pole on the axis.
        _preset("5a", 9, 2, 2, -1, 0, 0, 0, 288, 96, "CH(9,2,2), q=-1, plane z=0, pole on axis"),
        _preset("5b", 9, 2, 2, -1, 0, 0, "1/2", 288, 96, "CH(9,2,2), q=-1, plane z=1/2, pole on axis"),
        _preset("5c", 9, 2, 2, -1, 0, 0, 1, 288, 96, "CH(9,2,2), q=-1, plane z=1, pole on axis"),
        _preset("6a", 7, 1, 2, -1, 0, 0, "3/4", 280, 96, "CH(7,1,2), q=-1, plane z=3/4, pole on axis"),
        _preset("6b", 7, 1, 2, -1, 0, 0, 0, 280, 96, "CH(7,1,2), q=-1, plane z=0, pole on axis"),
        _preset("6c", 7, 1, "3/2", -1, 0, 0, 0, 294, 96, "CH(7,1,3/2), q=-1, plane z=0, pole on axis"),
        # Parabolic family meeting the curve away from its pole; the pole is
        # offset along x so the named point sits at the axis (petal tip for
        # 7a/7c, the genuine triple point (-1/2, 0) of CH(3,2,1/2) for 7b).
        _preset("7a", 3, 1, 0, 0, -1, 0, 0, 256, 96, "CH(3,1,0), q=0, pole at (-1,0), tip on axis"),
        _preset("7b", 3, 2, "1/2", 0, "1/2", 0, 0, 256, 96, "CH(3,2,1/2), q=0, pole at (1/2,0), triple point on axis"),
        _preset("7c", 3, 2, 0, 0, -1, 0, 0, 256, 96, "CH(3,2,0), q=0, pole at (-1,0), tip on axis"),
        # Axis met at a regular point, base points elsewhere.
        _preset("8a", 3, 1, 0, 1, -1, 0, 0, 240, 96, "CH(3,1,0), q=1, pole at (-1,0), tip on axis"),
        _preset("8b", 3, 1, 0, -1, -1, 0, 0, 240, 96, "CH(3,1,0), q=-1, pole at (-1,0), tip on axis"),
        _preset("8c", 5, 1, 0, -1, -1, 0, 0, 240, 96, "CH(5,1,0), q=-1, pole at (-1,0), tip on axis"),
        # Curve avoiding the axis entirely; triple point at (1, 0, 0).
        _preset("9a", 3, 1, 0, 1, 1, 0, 0, 240, 96, "CH(3,1,0), q=1, pole at (1,0), axis avoided"),
        _preset("9b", 3, 1, 0, 0, 1, 0, 0, 240, 96, "CH(3,1,0), q=0, pole at (1,0), axis avoided"),
        _preset("9c", 3, 1, 0, -1, 1, 0, 0, 240, 96, "CH(3,1,0), q=-1, pole at (1,0), axis avoided"),
    ]
    return {preset.key: preset for preset in presets}


_PRESETS = _build_presets()


def preset_keys() -> List[str]:
    return sorted(_PRESETS)


def figure_preset(key: str) -> FigurePreset:
    try:
        return _PRESETS[key]
    except KeyError:
        raise ValueError(f"unknown figure preset {key!r}; known: {', '.join(preset_keys())}") from None
