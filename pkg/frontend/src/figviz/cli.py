"""`figviz render`: sweep CSV in, surface PNG out.

Exit codes: 0 success, 2 on malformed/incomplete input or unwritable output.
"""

import argparse
import sys

from .render import build_figure, save_png
from .surface import SurfaceGridError, load_grid


def cmd_render(args) -> int:
    try:
        grid = load_grid(args.csv)
    except (OSError, SurfaceGridError) as exc:
        print(f"figviz: cannot read grid from {args.csv!r}: {exc}", file=sys.stderr)
        return 2
    fig, _ = build_figure(grid, heatmap=args.heatmap, title=args.title)
    try:
        save_png(fig, args.out)
    except OSError as exc:
        print(f"figviz: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figviz", description="Render a super-discord sweep CSV as a surface figure."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render CSV to PNG")
    p.add_argument("--csv", required=True, help="input sweep CSV")
    p.add_argument("--out", required=True, help="output PNG (1200x900)")
    p.add_argument("--heatmap", action="store_true", help="2-D heatmap instead of 3-D surface")
    p.add_argument("--title", default=None, help="optional figure title")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
