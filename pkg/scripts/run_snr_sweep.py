#!/usr/bin/env python3
"""Secrecy rate vs SNR for every policy at the equal-power split.

Writes results/snr_sweep.csv (plus a .manifest) in the spirit of the main
comparison figure: the joint receive/jam policy against the conventional
baselines, default 6-relay scenario.
"""

import argparse
import pathlib
import sys

from relaysec import SystemConfig, SweepSpec, emit_results, monte_carlo
from relaysec.sim import POLICY_ORDER


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--slots", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20260808)
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument("--single-antenna", action="store_true")
    parser.add_argument("--out", default="results/snr_sweep.csv")
    args = parser.parse_args()

    config = SystemConfig(seed=args.seed,
                          warmup_slots=min(5, args.slots // 2))
    if args.single_antenna:
        config = config.single_antenna()
    sweep = SweepSpec(policies=POLICY_ORDER,
                      snr_db_grid=(0.0, 5.0, 10.0, 15.0, 20.0),
                      eta_grid=(1.0,), trials=args.trials,
                      slots_per_trial=args.slots, workers=args.workers)
    report = monte_carlo(config, sweep)
    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    emit_results(report, out)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
