#!/usr/bin/env python3
"""Regenerate tests/fixtures: twenty small graphs, each with a matching .td.

Usage: make_fixtures.py <path-to-kntw> <fixtures-dir>
"""
import random
import subprocess
import sys
from pathlib import Path

FAMILIES = [
    ("petersen", ["gkneser", "5", "2", "1"], "exact"),
    ("kneser_6_2", ["kneser", "6", "2"], "exact"),
    ("gkneser_6_3_2", ["gkneser", "6", "3", "2"], "star"),
    ("gkneser_5_3_1", ["gkneser", "5", "3", "1"], "exact"),
    ("gkneser_7_3_2", ["gkneser", "7", "3", "2"], "minfill"),
    ("johnson_5_2", ["johnson", "5", "2"], "exact"),
    ("johnson_6_3", ["johnson", "6", "3"], "exact"),
    ("jc_4_2", ["johnson-complement", "4", "2"], "exact"),
    ("jc_5_2", ["johnson-complement", "5", "2"], "exact"),
    ("jc_5_3", ["johnson-complement", "5", "3"], "six-bag"),
    ("jc_6_2", ["johnson-complement", "6", "2"], "exact"),
    ("jc_6_3", ["johnson-complement", "6", "3"], "six-bag"),
    ("jc_7_2", ["johnson-complement", "7", "2"], "exact"),
]


def write_gr(path, n, edges, comment):
    edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
    lines = [f"c {comment}", f"p tw {n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n")


def generic_graphs():
    yield "complete_5", 5, [(u, v) for u in range(1, 6) for v in range(u + 1, 6)]
    yield "cycle_6", 6, [(i, i % 6 + 1) for i in range(1, 7)]
    yield "path_8", 8, [(i, i + 1) for i in range(1, 8)]
    grid = []
    for r in range(3):
        for c in range(3):
            v = 3 * r + c + 1
            if c < 2:
                grid.append((v, v + 1))
            if r < 2:
                grid.append((v, v + 3))
    yield "grid_3x3", 9, grid
    yield "star_7", 7, [(1, v) for v in range(2, 8)]
    rng = random.Random(20240)
    for name, n, p in (("random_12", 12, 0.3), ("random_14", 14, 0.25)):
        yield name, n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]


def main():
    kntw, out = sys.argv[1], Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    jobs = []
    for name, args, method in FAMILIES:
        subprocess.run([kntw, "gen", *args, "-o", str(out / f"{name}.gr")], check=True)
        jobs.append((name, method))
    for name, n, edges in generic_graphs():
        write_gr(out / f"{name}.gr", n, edges, name.replace("_", " "))
        jobs.append((name, "exact"))
    for name, method in jobs:
        subprocess.run([kntw, "decompose", str(out / f"{name}.gr"), "--method", method,
                        "-o", str(out / f"{name}.td")], check=True, stderr=subprocess.DEVNULL)
    print(f"{len(jobs)} fixtures in {out}")


if __name__ == "__main__":
    main()
