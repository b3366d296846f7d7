"""Per-user power budget: the pentagon and the orthogonal schemes inside it.

Builds the two-user achievable region for P1 = P2 = N = 1, marks the two
cancellation-order corners, and overlays the time-division chord and the
frequency-division arc.  The picture shows why orthogonal sharing gives
something away: only one frequency split touches the sum-rate face, and
pure time division never reaches it at all.

Run:  python demos/pentagon_vs_orthogonal.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from macregions import (
    ChannelConfig,
    PerUser,
    corner_points,
    fd_frontier,
    fd_rate_pair,
    fd_touch_split,
    hausdorff,
    sum_capacity,
    superposition_region,
    td_frontier,
)

HERE = pathlib.Path(__file__).resolve().parent


def main():
    ch = ChannelConfig(noise_power=1.0)
    budget = PerUser(p1=1.0, p2=1.0)

    region = superposition_region(budget, ch)
    a, b = corner_points(budget, ch)
    td = td_frontier(budget, ch)
    fd = fd_frontier(budget, ch)

    print("pentagon vertices (r1, r2):")
    for v in region.vertices:
        print(f"  ({v[0]:.10f}, {v[1]:.10f})")
    print(f"corner by decoding user 2 first: ({b.r1:.10f}, {b.r2:.10f})")
    print(f"corner by decoding user 1 first: ({a.r1:.10f}, {a.r2:.10f})")
    print(f"sum capacity: {sum_capacity(budget, ch):.10f} bits")

    touch = fd_touch_split(budget)
    touch_pair = fd_rate_pair(touch, budget, ch)
    print(f"frequency split {touch.alpha:.3f} attains the sum capacity: "
          f"{touch_pair.total:.10f}")
    print(f"gap between the two orthogonal frontiers (Hausdorff): "
          f"{hausdorff(td, fd):.6f} bits")

    fig, ax = plt.subplots(figsize=(6, 6))
    poly = np.vstack([region.vertices, region.vertices[0]])
    ax.fill(poly[:, 0], poly[:, 1], alpha=0.15, color="tab:blue",
            label="superposition region")
    ax.plot(poly[:, 0], poly[:, 1], color="tab:blue", lw=1.5)
    ax.plot(td.r1, td.r2, "--", color="tab:orange", lw=1.5,
            label="time division")
    ax.plot(fd.r1, fd.r2, color="tab:green", lw=1.5,
            label="frequency division")
    ax.plot([a.r1, b.r1], [a.r2, b.r2], "o", color="tab:blue")
    ax.plot(touch_pair.r1, touch_pair.r2, "s", color="tab:green")
    ax.annotate("decode user 1 first", (a.r1, a.r2),
                textcoords="offset points", xytext=(8, 4))
    ax.annotate("decode user 2 first", (b.r1, b.r2),
                textcoords="offset points", xytext=(8, 8))
    ax.set_xlabel("$R_1$ (bits / channel use)")
    ax.set_ylabel("$R_2$ (bits / channel use)")
    ax.set_title("Two-user Gaussian MAC at $P_1 = P_2 = N = 1$")
    ax.legend(loc="upper right")
    ax.set_aspect("equal")

    out = HERE / "pentagon_vs_orthogonal.png"
    fig.savefig(out, dpi=150, bbox_inches="tight")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
