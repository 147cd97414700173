"""Monte Carlo engine: seeded trials, SNR/eta sweeps, CSV emission.

Determinism contract: every random draw is keyed by (seed, stream, trial,
slot) through :func:`relaysec.channel.substream`, trials are aggregated in
trial-index order, and no timestamps enter the outputs, so a sweep produces
byte-identical files across reruns and across worker counts.

The printed rate formulas carry an implicit unit noise floor, so all powers
passed into the matrix-rate builders are divided by the destination node's
noise variance; the sweep driver keeps all node noise variances equal
(sigma^2 = P / 10^(SNR/10)), for which this normalization is exact.
"""

from __future__ import annotations

import concurrent.futures
import statistics
import struct
from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .channel import (STREAM_CALIBRATION, STREAM_CHANNEL, STREAM_POLICY,
                      gen_network_realization, substream)
from .config import SystemConfig, power_split
from .errors import ConfigError, NumericError
from .selection import POLICIES, fresh_state, slot_rate_report

POLICY_ORDER = tuple(POLICIES)

_CALIBRATION_SLOTS = 200
_Z95 = 1.959963984540054


def apply_power_split(config: SystemConfig, eta: float) -> tuple[float, float]:
    """(P_tx, P_relay_each) for a power split parameter eta in [0, 2]."""
    return power_split(config, eta)


@dataclass(frozen=True)
class SweepSpec:
    """Grid of sweep cells: every policy at every (SNR, eta) pair."""

    policies: tuple
    snr_db_grid: tuple = (0.0, 5.0, 10.0, 15.0, 20.0)
    eta_grid: tuple = (0.5, 0.75, 1.0, 1.25, 1.5, 1.75)
    trials: int = 2000
    slots_per_trial: int = 50
    workers: int = 1

    def __post_init__(self):
        if not self.policies:
            raise ConfigError("policy list must be nonempty")
        for name in self.policies:
            if name not in POLICIES:
                raise ConfigError(
                    f"unknown policy {name!r}; choose from {sorted(POLICIES)}")
        if not self.snr_db_grid or not self.eta_grid:
            raise ConfigError("snr and eta grids must be nonempty")
        for eta in self.eta_grid:
            if not (0.0 <= eta <= 2.0):
                raise ConfigError(f"eta grid value {eta} outside [0, 2]")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.slots_per_trial < 1:
            raise ConfigError("slots_per_trial must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


@dataclass(frozen=True)
class CellResult:
    policy: str
    snr_db: float
    eta: float
    mean_secrecy_rate: float
    std: float
    ci95: float | None          # None when trials == 1 (written as "na")
    trials: int
    clamp_events: int
    iri_feasible_frac: float
    silent_transmitter_events: int
    sinr_threshold: float


@dataclass(frozen=True)
class SecrecyReport:
    cells: tuple
    config: SystemConfig
    sweep: SweepSpec


def _run_trial_full(config: SystemConfig, policy: str, trial_index: int):
    """All per-slot rate reports of one seeded trial plus its diagnostics."""
    if policy not in POLICIES:
        raise ConfigError(f"unknown policy {policy!r}")
    step = POLICIES[policy]
    state = fresh_state(config)
    reports = []
    for slot in range(config.slots):
        try:
            rng = substream(config.seed, STREAM_CHANNEL, trial_index, slot)
            realization = gen_network_realization(config, slot, rng)
            prng = (substream(config.seed, STREAM_POLICY, trial_index, slot)
                    if policy == "random" else None)
            outcome, state = step(state, realization, config, prng)
            report, clamps = slot_rate_report(
                realization, config, outcome.replays,
                outcome.jamming_relays, outcome.transmitting_relays)
        except NumericError as exc:
            raise NumericError(
                f"policy {policy!r} trial {trial_index} slot {slot}: {exc}"
            ) from exc
        state.diag.clamp_events += clamps
        reports.append(report)
    return reports, state.diag


def run_trial(config: SystemConfig, policy: str, trial_index: int) -> list:
    """Per-slot RateReports of one trial; a pure function of (config, policy,
    trial_index) including the root seed inside the config."""
    return _run_trial_full(config, policy, trial_index)[0]


def _trial_summary(config: SystemConfig, policy: str, trial_index: int):
    reports, diag = _run_trial_full(config, policy, trial_index)
    retained = reports[config.warmup_slots:]
    mean = sum(r.secrecy_rate for r in retained) / len(retained)
    return (trial_index, mean, diag.phi_tests, diag.phi_feasible,
            diag.silent_transmitters, diag.clamp_events)


def _trial_worker(args):
    return _trial_summary(*args)


def _float_key(x: float) -> int:
    """Stable 64-bit key for a float, for content-addressed RNG substreams."""
    return int.from_bytes(struct.pack("<d", float(x)), "little")


def calibrate_threshold(config: SystemConfig, policy: str) -> float:
    """Median relay reception SINR over a seeded calibration pre-run.

    The pre-run executes the cell's own policy and settings for 200 slots
    with classification disabled (threshold 0), on a dedicated RNG stream
    keyed by (seed, policy, SNR, eta) so the result is independent of which
    other cells appear in a sweep.
    """
    cal_cfg = config.replace(sinr_threshold=0.0, slots=_CALIBRATION_SLOTS,
                             warmup_slots=0)
    key = (POLICY_ORDER.index(policy), _float_key(config.sigma2_i),
           _float_key(config.eta))
    state = fresh_state(cal_cfg)
    state.diag.collect_sinrs = True
    step = POLICIES[policy]
    for slot in range(cal_cfg.slots):
        rng = substream(cal_cfg.seed, STREAM_CALIBRATION, *key, slot, 0)
        realization = gen_network_realization(cal_cfg, slot, rng)
        prng = (substream(cal_cfg.seed, STREAM_CALIBRATION, *key, slot, 1)
                if policy == "random" else None)
        _, state = step(state, realization, cal_cfg, prng)
    if not state.diag.sinrs:
        return 0.0
    return float(statistics.median(state.diag.sinrs))


def _run_cell(cell_cfg: SystemConfig, policy: str, snr_db: float, eta: float,
              trials: int, workers: int) -> CellResult:
    args = [(cell_cfg, policy, t) for t in range(trials)]
    if workers > 1 and trials > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_trial_worker, args,
                                 chunksize=max(1, trials // (workers * 8))))
    else:
        rows = [_trial_summary(*a) for a in args]
    rows.sort(key=lambda row: row[0])
    means = np.array([row[1] for row in rows])
    phi_tests = sum(row[2] for row in rows)
    phi_feasible = sum(row[3] for row in rows)
    silent = sum(row[4] for row in rows)
    clamps = sum(row[5] for row in rows)
    mean = float(np.mean(means))
    if trials > 1:
        std = float(np.std(means, ddof=1))
        ci95 = _Z95 * std / np.sqrt(trials)
    else:
        std, ci95 = 0.0, None
    return CellResult(
        policy=policy, snr_db=snr_db, eta=eta, mean_secrecy_rate=mean,
        std=std, ci95=ci95, trials=trials, clamp_events=clamps,
        iri_feasible_frac=(phi_feasible / phi_tests if phi_tests else 0.0),
        silent_transmitter_events=silent,
        sinr_threshold=cell_cfg.sinr_threshold)


def monte_carlo(config: SystemConfig, sweep: SweepSpec) -> SecrecyReport:
    """Run every sweep cell and aggregate trial-mean secrecy rates.

    Cells are independent: each derives its RNG streams and its calibrated
    threshold from (seed, policy, SNR, eta) alone, so adding or removing grid
    points does not change the numbers of the remaining cells.
    """
    cells = []
    for policy in sweep.policies:
        for snr_db in sweep.snr_db_grid:
            for eta in sweep.eta_grid:
                cell_cfg = config.replace(
                    eta=eta, slots=sweep.slots_per_trial).with_snr_db(snr_db)
                if cell_cfg.sinr_threshold is None:
                    thr = calibrate_threshold(cell_cfg, policy)
                    cell_cfg = cell_cfg.replace(sinr_threshold=thr)
                cells.append(_run_cell(cell_cfg, policy, snr_db, eta,
                                       sweep.trials, sweep.workers))
    return SecrecyReport(cells=tuple(cells), config=config, sweep=sweep)


CSV_HEADER = ("policy,snr_db,eta,mean_secrecy_rate,std,ci95,trials,"
              "clamp_events,iri_feasible_frac")


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def emit_results(report: SecrecyReport, path) -> None:
    """Write the per-cell CSV plus a ``<path>.manifest`` key-value file
    recording config, sweep, seed, calibrated thresholds, and code version.
    Both files are byte-deterministic for a given (config, sweep)."""
    lines = [CSV_HEADER]
    for cell in report.cells:
        ci = "na" if cell.ci95 is None else _fmt(cell.ci95)
        lines.append(",".join([
            cell.policy, _fmt(cell.snr_db), _fmt(cell.eta),
            _fmt(cell.mean_secrecy_rate), _fmt(cell.std), ci,
            str(cell.trials), str(cell.clamp_events),
            _fmt(cell.iri_feasible_frac)]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")

    manifest = [f"version = {__version__}"]
    for name in ("N_t", "N_r", "N_e", "N_i", "N_k", "M", "N", "Q", "T", "K",
                 "P", "gamma0", "buffer_capacity", "warmup_slots", "seed",
                 "iri_cancellation", "consume_on_jam", "worst_sinr_seeding",
                 "selection_noise_floor", "rate_unit"):
        manifest.append(f"{name} = {getattr(report.config, name)}")
    manifest.append(f"sinr_threshold = "
                    f"{'auto' if report.config.sinr_threshold is None else report.config.sinr_threshold}")
    manifest.append(f"policies = {','.join(report.sweep.policies)}")
    manifest.append(f"snr_db_grid = {','.join(map(_fmt, report.sweep.snr_db_grid))}")
    manifest.append(f"eta_grid = {','.join(map(_fmt, report.sweep.eta_grid))}")
    manifest.append(f"trials = {report.sweep.trials}")
    manifest.append(f"slots_per_trial = {report.sweep.slots_per_trial}")
    for cell in report.cells:
        manifest.append(
            f"threshold.{cell.policy}.snr{_fmt(cell.snr_db)}.eta{_fmt(cell.eta)}"
            f" = {_fmt(cell.sinr_threshold)}")
    with open(str(path) + ".manifest", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(manifest) + "\n")
