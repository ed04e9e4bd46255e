"""Sweep-CSV parsing and grid validation.

The input format (produced by `superdiscord rra-sweep`) is a complete
rectangular grid: header ``c,x,theta_opt,super_discord`` and one row per
(c, x) cell, super-discord values nonnegative.
"""

import csv
from dataclasses import dataclass

import numpy as np

EXPECTED_HEADER = ["c", "x", "theta_opt", "super_discord"]


class SurfaceGridError(ValueError):
    """Malformed rows, duplicate cells or an incomplete grid."""


@dataclass(frozen=True)
class SurfaceGrid:
    """Dense super-discord surface: z[i, j] at (c_axis[i], x_axis[j])."""

    c_axis: np.ndarray
    x_axis: np.ndarray
    z: np.ndarray


def parse_rows(lines) -> list[tuple[float, float, float]]:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise SurfaceGridError("empty CSV") from None
    if header != EXPECTED_HEADER:
        raise SurfaceGridError(f"unexpected header {header!r}, want {EXPECTED_HEADER!r}")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 4:
            raise SurfaceGridError(f"line {lineno}: expected 4 fields, got {len(row)}")
        try:
            c, x, _theta, z = (float(tok) for tok in row)
        except ValueError as exc:
            raise SurfaceGridError(f"line {lineno}: {exc}") from None
        if z < 0.0:
            raise SurfaceGridError(f"line {lineno}: negative super_discord {z!r}")
        rows.append((c, x, z))
    if not rows:
        raise SurfaceGridError("no data rows")
    return rows


def build_grid(rows) -> SurfaceGrid:
    """Assemble the dense grid, requiring every (c, x) cell exactly once."""
    c_axis = sorted({c for c, _, _ in rows})
    x_axis = sorted({x for _, x, _ in rows})
    if len(rows) != len(c_axis) * len(x_axis):
        raise SurfaceGridError(
            f"incomplete grid: {len(rows)} rows for "
            f"{len(c_axis)} x {len(x_axis)} axis values"
        )
    c_index = {c: i for i, c in enumerate(c_axis)}
    x_index = {x: j for j, x in enumerate(x_axis)}
    z = np.full((len(c_axis), len(x_axis)), np.nan)
    for c, x, value in rows:
        i, j = c_index[c], x_index[x]
        if not np.isnan(z[i, j]):
            raise SurfaceGridError(f"duplicate cell c={c!r} x={x!r}")
        z[i, j] = value
    # duplicates elsewhere leave a hole, caught here
    if np.isnan(z).any():
        raise SurfaceGridError("grid has missing cells")
    return SurfaceGrid(c_axis=np.array(c_axis), x_axis=np.array(x_axis), z=z)


def load_grid(csv_path) -> SurfaceGrid:
    with open(csv_path, encoding="utf-8", newline="") as fh:
        return build_grid(parse_rows(fh))
