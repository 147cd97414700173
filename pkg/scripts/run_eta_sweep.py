#!/usr/bin/env python3
"""Secrecy rate vs power split eta, with and without IRI cancellation.

Produces the two curves of the power-allocation study: transmitter power
eta*P against relay power (2-eta)*P, one run attempting interference
cancellation at the receiving relays and one with it disabled.
"""

import argparse
import pathlib
import sys

from relaysec import SystemConfig, SweepSpec, emit_results, monte_carlo


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--slots", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20260808)
    parser.add_argument("--snr", type=float, default=10.0)
    parser.add_argument("--gamma0", type=float, default=0.3)
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument("--outdir", default="results")
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sweep = SweepSpec(policies=("bf-rjfs",), snr_db_grid=(args.snr,),
                      eta_grid=(0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0),
                      trials=args.trials, slots_per_trial=args.slots,
                      workers=args.workers)
    for label, iri in (("with_iri_cancel", True), ("without_iri_cancel", False)):
        config = SystemConfig(seed=args.seed, gamma0=args.gamma0,
                              warmup_slots=min(5, args.slots // 2),
                              iri_cancellation=iri)
        report = monte_carlo(config, sweep)
        out = outdir / f"eta_sweep_{label}.csv"
        emit_results(report, out)
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
