"""Emit DOT files for the specialization posets over a range of (d, j).

One file per pair, named hasse_d<d>_j<j>.dot, generic stratum drawn at the
bottom. Render with e.g. `dot -Tsvg hasse_d4_j5.dot -o hasse_d4_j5.svg`.

Usage:
    python3 scripts/hasse_gallery.py --max-j 6 --out-dir out/
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from binforms.cli import dispatch, CommandConfig


@dataclass(frozen=True)
class GalleryConfig:
    max_j: int
    out_dir: Path


def parse_args(argv: list[str] | None = None) -> GalleryConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-j", type=int, default=6)
    parser.add_argument("--out-dir", type=Path, default=Path("hasse_out"))
    args = parser.parse_args(argv)
    if args.max_j < 1:
        parser.error("--max-j must be >= 1")
    return GalleryConfig(max_j=args.max_j, out_dir=args.out_dir)


def run(cfg: GalleryConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    written = 0
    for j in range(1, cfg.max_j + 1):
        for d in range(1, j + 1):
            status, dot = dispatch(
                CommandConfig(command="hasse", fmt="dot", d=d, j=j))
            if status != 0:
                raise RuntimeError(f"hasse dispatch failed for d={d}, j={j}")
            path = cfg.out_dir / f"hasse_d{d}_j{j}.dot"
            path.write_text(dot + ("\n" if not dot.endswith("\n") else ""))
            written += 1
            nodes = dot.count("label=")
            edges = dot.count("->")
            print(f"{path}  ({nodes or 'n/a'} nodes, {edges} edges)")
    print(f"\nwrote {written} DOT files to {cfg.out_dir}/")
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
