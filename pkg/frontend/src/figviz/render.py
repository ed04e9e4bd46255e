"""Figure construction and PNG output (headless, fixed 1200x900)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .surface import SurfaceGrid  # noqa: E402

FIGSIZE = (12.0, 9.0)
DPI = 100
COLORMAP = "viridis"


def build_figure(grid: SurfaceGrid, heatmap: bool = False, title: str | None = None):
    """Return (figure, axes); axis limits pinned to the data extents."""
    fig = plt.figure(figsize=FIGSIZE, dpi=DPI)
    c, x, z = grid.c_axis, grid.x_axis, grid.z
    if heatmap:
        ax = fig.add_subplot()
        mesh = ax.pcolormesh(c, x, z.T, cmap=COLORMAP, shading="nearest")
        fig.colorbar(mesh, ax=ax, label="D_w(B:A)")
    else:
        ax = fig.add_subplot(projection="3d")
        cc, xx = np.meshgrid(c, x, indexing="ij")
        ax.plot_surface(cc, xx, z, cmap=COLORMAP, linewidth=0, antialiased=True)
        ax.set_zlabel("D_w(B:A)")
        ax.set_zlim(0.0, max(float(z.max()), 1e-6))
    ax.set_xlabel("c")
    ax.set_ylabel("x")
    ax.set_xlim(float(c.min()), float(c.max()))
    ax.set_ylim(float(x.min()), float(x.max()))
    if title:
        ax.set_title(title)
    return fig, ax


def save_png(fig, png_path) -> None:
    # no bbox trimming: keep the advertised 1200x900 pixel canvas
    fig.savefig(png_path, dpi=DPI)
    plt.close(fig)
