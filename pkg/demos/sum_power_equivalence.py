"""Relaxing to a total-power cap collapses every scheme onto one triangle.

When the users may split a shared power budget, time division can burst at
full power in its slot, frequency division can pour the budget into its
band, and superposition can tilt the split between the decoding stages.
All three trace the same line r1 + r2 = log2(1 + P/N).  This script sweeps
the three frontiers at several budgets, prints the numerical certificate,
and overlays the curves (they are indistinguishable by construction).

Run:  python demos/sum_power_equivalence.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from macregions import (
    ChannelConfig,
    SumPower,
    fd_frontier,
    superposition_frontier,
    td_frontier,
    verify_equivalence,
)

HERE = pathlib.Path(__file__).resolve().parent


def main():
    ch = ChannelConfig(noise_power=1.0)

    print("per-budget certificates (resolution 4097, tolerance 1e-6):")
    print(f"{'P':>8} {'sum capacity':>14} {'sc vs td':>10} "
          f"{'sc vs fd':>10} {'td vs fd':>10}  verdict")
    for p_total in (0.25, 1.0, 2.0, 10.0, 100.0):
        rep = verify_equivalence(p_total, ch, resolution=4097)
        print(f"{p_total:8.2f} {rep.sum_capacity:14.8f} "
              f"{rep.sc_td:10.2e} {rep.sc_fd:10.2e} {rep.td_fd:10.2e}  "
              f"{'agree' if rep.verdict else 'DISAGREE'}")

    fig, ax = plt.subplots(figsize=(6, 6))
    for p_total, color in ((1.0, "tab:blue"), (4.0, "tab:orange"),
                           (15.0, "tab:green")):
        budget = SumPower(p_total)
        sc = superposition_frontier(budget, ch)
        td = td_frontier(budget, ch)
        fd = fd_frontier(budget, ch)
        ax.plot(sc.r1, sc.r2, color=color, lw=2.0,
                label=f"superposition, P = {p_total:g}")
        ax.plot(td.r1, td.r2, "--", color="k", lw=0.8)
        ax.plot(fd.r1, fd.r2, ":", color="k", lw=0.8)
    ax.set_xlabel("$R_1$ (bits / channel use)")
    ax.set_ylabel("$R_2$ (bits / channel use)")
    ax.set_title("Sum-power frontiers: three schemes, one line per budget")
    ax.legend(loc="upper right")
    ax.set_aspect("equal")

    out = HERE / "sum_power_equivalence.png"
    fig.savefig(out, dpi=150, bbox_inches="tight")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
