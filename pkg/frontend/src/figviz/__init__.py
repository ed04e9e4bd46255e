"""Surface figures for super-discord sweep CSVs."""

from .render import build_figure, save_png
from .surface import SurfaceGrid, SurfaceGridError, build_grid, load_grid

__version__ = "0.1.0"

__all__ = [
    "SurfaceGrid",
    "SurfaceGridError",
    "build_figure",
    "build_grid",
    "load_grid",
    "save_png",
]
