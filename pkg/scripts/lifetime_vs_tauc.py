#!/usr/bin/env python3
"""Fractional prethermal lifetime across the bath-correlation-time regimes.

Sweeps tau_c through the fast-fluctuation side (omega_0 tau_c < 1, no
plateau survives) and the slow side (omega_0 tau_c >> 1, lifetime grows
with tau_c).  Writes sweep_tauc.csv and lifetime_vs_tauc.svg.
"""

import argparse
from pathlib import Path

import numpy as np

from spinlocksim.config import RunConfig
from spinlocksim.sweeps import run_tauc_sweep, write_csv

HEADER = ("tau_c_s", "omega1_over_omegad", "fractional_lifetime", "plateau_found", "mx_pre")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--time-points", type=int, default=1200)
    ap.add_argument("--out", default="out")
    args = ap.parse_args(argv)

    # 1e-6..1e-5 ms sits below omega_0 tau_c = 1; 1e-3 ms and up sits far above.
    tau_grid = (1e-6, 3e-6, 1e-5, 1e-3, 2e-3, 4e-3, 8e-3, 1.6e-2)
    cfg = RunConfig(
        omega0_khz=1e4, omega1_khz=5.0, omega_d_khz=5.0, tau_c_ms=1e-3,
        times_two_pi=True, time_points=args.time_points,
        sweep_tau_c_ms=tau_grid,
    )
    rows = run_tauc_sweep(cfg, workers=args.workers)

    omega0 = 2.0 * np.pi * 1e7
    print(f"{'tau_c (s)':>12} {'w0*tau_c':>10} {'found':>6} {'mx_pre':>8} {'lifetime':>10}")
    for tc, _ratio, frac, found, mx_pre in rows:
        print(f"{tc:>12.3e} {omega0 * tc:>10.3g} {str(found):>6} "
              f"{mx_pre:>8.4f} {frac:>10.4g}")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "sweep_tauc.csv"
    write_csv(csv_path, HEADER, rows)
    print(f"wrote {csv_path}")

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0), constrained_layout=True)
    kept = [(tc, frac) for tc, _r, frac, found, _m in rows if found]
    if kept:
        xs, ys = zip(*kept)
        ax.loglog(np.asarray(xs) * omega0, ys, "o-")
    ax.set_xlabel("omega_0 tau_c")
    ax.set_ylabel("(t_th - t_pre) / t_pre")
    svg_path = out / "lifetime_vs_tauc.svg"
    fig.savefig(svg_path)
    plt.close(fig)
    print(f"wrote {svg_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
