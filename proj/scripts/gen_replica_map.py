#!/usr/bin/env python3
"""Generates the committed 400x400 benchmark map and its case list.

Fully deterministic: obstacles are hand-placed rectangles, one diagonal bar,
and one triangle, leaving street-like corridors 30+ cells wide.  The script
validates that every benchmark endpoint has a 10-cell clear radius and that
all six cases are solvable (4-connected BFS, which implies 8-connected too),
then writes data/replica_400.pgm (P5, black = obstacle) and
data/benchmark_cases.txt.

Run from the repository root:  python3 scripts/gen_replica_map.py
"""

from collections import deque
from pathlib import Path

W = H = 400

SOURCE = (25, 25)
GOALS = [
    ("case1", (180, 280)),
    ("case2", (280, 340)),
    ("case3", (250, 340)),
    ("case4", (330, 250)),
    ("case5", (270, 310)),
    ("case6", (320, 170)),
]

# Inclusive (x0, x1, y0, y1) rectangles.
RECTS = [
    (60, 120, 60, 140),    # block A
    (160, 240, 40, 100),   # block B
    (300, 360, 60, 120),   # block C
    (50, 100, 200, 260),   # block D
    (150, 210, 140, 220),  # block E
    (250, 305, 150, 210),  # block F
    (60, 140, 300, 360),   # block G
    (195, 250, 255, 300),  # block H (south-west corner chamfered below)
    (300, 350, 265, 330),  # block I
]

# 45-degree chamfer on block H's south-west corner: routes from the north-west
# wrap around that pivot, and a diagonal face there keeps the wrap shallow.
CHAMFER_H = 14  # cells with (x - 195) + (300 - y) < CHAMFER_H are cut

# 45-degree bar: cells with |x - y| <= 6 for x in [220, 280].
BAR_X = (220, 280)
BAR_HALF_WIDTH = 6

# Solid triangle (vertices in cell coordinates).
TRIANGLE = ((200, 120), (240, 120), (220, 160))


def build_grid():
    occ = bytearray(W * H)  # 1 = obstacle

    for x0, x1, y0, y1 in RECTS:
        for y in range(y0, y1 + 1):
            row = y * W
            for x in range(x0, x1 + 1):
                if (x0, y1) == (195, 300) and (x - x0) + (y1 - y) < CHAMFER_H:
                    continue
                occ[row + x] = 1

    for x in range(BAR_X[0], BAR_X[1] + 1):
        for y in range(x - BAR_HALF_WIDTH, x + BAR_HALF_WIDTH + 1):
            if 0 <= y < H:
                occ[y * W + x] = 1

    (ax, ay), (bx, by), (cx, cy) = TRIANGLE

    def edge(px, py, qx, qy, rx, ry):
        return (qx - px) * (ry - py) - (qy - py) * (rx - px)

    xs = range(min(ax, bx, cx), max(ax, bx, cx) + 1)
    ys = range(min(ay, by, cy), max(ay, by, cy) + 1)
    for y in ys:
        for x in xs:
            d1 = edge(ax, ay, bx, by, x, y)
            d2 = edge(bx, by, cx, cy, x, y)
            d3 = edge(cx, cy, ax, ay, x, y)
            if (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0):
                occ[y * W + x] = 1

    return occ


def check_clearance(occ, center, radius):
    cx, cy = center
    for y in range(max(0, cy - radius), min(H, cy + radius + 1)):
        for x in range(max(0, cx - radius), min(W, cx + radius + 1)):
            if (x - cx) ** 2 + (y - cy) ** 2 <= radius * radius and occ[y * W + x]:
                raise SystemExit(f"endpoint {center} has an obstacle within {radius} cells")


def bfs_distance(occ, start, goal):
    seen = bytearray(W * H)
    queue = deque([(start, 0)])
    seen[start[1] * W + start[0]] = 1
    while queue:
        (x, y), d = queue.popleft()
        if (x, y) == goal:
            return d
        for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if 0 <= nx < W and 0 <= ny < H:
                i = ny * W + nx
                if not seen[i] and not occ[i]:
                    seen[i] = 1
                    queue.append(((nx, ny), d + 1))
    return None


def main():
    occ = build_grid()

    check_clearance(occ, SOURCE, 10)
    for _, goal in GOALS:
        check_clearance(occ, goal, 10)

    for label, goal in GOALS:
        d = bfs_distance(occ, SOURCE, goal)
        if d is None:
            raise SystemExit(f"{label}: goal {goal} is unreachable from {SOURCE}")
        print(f"{label}: 4-connected BFS distance {d}")

    density = sum(occ) / (W * H)
    print(f"obstacle density: {density:.1%}")

    data_dir = Path(__file__).resolve().parent.parent / "data"
    data_dir.mkdir(exist_ok=True)

    header = f"P5\n{W} {H}\n255\n".encode()
    payload = bytes(0 if v else 255 for v in occ)
    (data_dir / "replica_400.pgm").write_bytes(header + payload)

    lines = ["# benchmark cases: label source_col,row goal_col,row\n"]
    sx, sy = SOURCE
    for label, (gx, gy) in GOALS:
        lines.append(f"{label} {sx},{sy} {gx},{gy}\n")
    (data_dir / "benchmark_cases.txt").write_text("".join(lines))

    print(f"wrote {data_dir / 'replica_400.pgm'} and {data_dir / 'benchmark_cases.txt'}")


if __name__ == "__main__":
    main()
