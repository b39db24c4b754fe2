"""Shared bits for the demo scripts: an optional figure directory."""

import argparse
from pathlib import Path


def figure_dir(description):
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--figures", type=Path,
                        help="directory for PNG figures (needs matplotlib)")
    args = parser.parse_args()
    if args.figures is None:
        return None
    import matplotlib
    matplotlib.use("Agg")
    args.figures.mkdir(parents=True, exist_ok=True)
    return args.figures
