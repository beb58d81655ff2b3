#!/usr/bin/env python3
"""Writes fixtures/synthetic-geometric.rfx.

A 20-point chain x_0 > x_1 > ... > x_19 = 0 with gaps x_i - x_{i+1} = 1/(i+1)!,
squared-difference metric (s = 2), F(x_i) = x_{i+1} and F(x_19) = x_19, the
chain order {(x_i, x_j) : i <= j} as relation and phi(x_i) = 19 - i. Picard
steps shrink like 1/(n+1)^2 in ratio, so the orbit from x_0 exercises the
ratio, telescoping and eventual-decay diagnostics over 19 positive steps.
"""

import math
import pathlib
from fractions import Fraction

N = 20


def main() -> None:
    gaps = [Fraction(1, math.factorial(i + 1)) for i in range(N - 1)]
    coords = [float(sum(gaps[i:], Fraction(0))) for i in range(N)]

    lines = [
        "# Generated by tools/gen_synthetic_geometric.py; see the script for the construction.",
        "name = synthetic-geometric",
        "",
        "[space]",
        "points = " + " ".join(repr(c) for c in coords),
        "metric = squared-difference",
        "s = 2",
        "",
        "[relation]",
    ]
    for i in range(N):
        lines.append("pairs = " + " ".join(f"(@{i}, @{j})" for j in range(i, N)))
    lines += ["", "[map]"]
    lines += [f"image = @{i} -> @{min(i + 1, N - 1)}" for i in range(N)]
    lines += ["", "[potential]"]
    lines += [f"value = @{i} -> {N - 1 - i}" for i in range(N)]
    lines += ["", "[zeta]", "family = linear", "lambda = 0.9", "", "[solver]", "start = @0", "tol = 0", ""]

    out = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "synthetic-geometric.rfx"
    out.write_text("\n".join(lines))


if __name__ == "__main__":
    main()
