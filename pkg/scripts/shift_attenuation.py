#!/usr/bin/env python3
"""Signal peak height versus chemical-shift strength for two lock ratios.

Sweeps alpha/omega_d at fixed tau_c, normalizes each curve by its
zero-shift peak, and overlays the omega_1/omega_d = 1 and 2 results.
Writes sweep_alpha.csv and shift_attenuation.svg.
"""

import argparse
from pathlib import Path

import numpy as np

from spinlocksim.config import RunConfig
from spinlocksim.sweeps import run_alpha_sweep, write_csv

HEADER = ("alpha_rad_s", "omega1_over_omegad", "peak_height", "mx_pre")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tau-c-ms", type=float, default=1e-4)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--time-points", type=int, default=1200)
    ap.add_argument("--out", default="out")
    args = ap.parse_args(argv)

    cfg = RunConfig(
        omega0_khz=1e4, omega1_khz=5.0, omega_d_khz=5.0,
        tau_c_ms=args.tau_c_ms, times_two_pi=True,
        time_points=args.time_points,
        sweep_alpha_over_omega_d=(0.0, 0.125, 0.25, 0.375, 0.5, 0.75, 1.0),
        sweep_omega1_over_omega_d=(1.0, 2.0),
    )
    rows = run_alpha_sweep(cfg, workers=args.workers)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "sweep_alpha.csv"
    write_csv(csv_path, HEADER, rows)
    print(f"wrote {csv_path}")

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    wd = 2.0 * np.pi * 5e3
    fig, ax = plt.subplots(figsize=(6.0, 4.0), constrained_layout=True)
    for ratio in sorted({r[1] for r in rows}):
        pts = [(alpha, peak) for alpha, rr, peak, _m in rows if rr == ratio]
        alphas, peaks = map(np.asarray, zip(*pts))
        ax.plot(alphas / wd, peaks / peaks[0], "o-", label=f"w1/wd = {ratio:g}")
        print(f"ratio {ratio:g}: normalized peaks "
              f"{np.array2string(peaks / peaks[0], precision=4)}")
    ax.set_xlabel("alpha / omega_d")
    ax.set_ylabel("peak height (normalized)")
    ax.legend()
    svg_path = out / "shift_attenuation.svg"
    fig.savefig(svg_path)
    plt.close(fig)
    print(f"wrote {svg_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
