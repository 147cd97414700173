"""Per-slot relay/jammer role assignment: the joint receive/jam policy, the
conventional baselines, and the exhaustive assignment oracle.

Role semantics shared by the whole simulator:

* ``receiving_relays`` listen to the source this slot and push a classified
  reception record into their buffer.
* ``transmitting_relays`` replay a buffered signal; their replays are the
  users' signal source.
* ``jamming_relays`` are the transmitting relays whose replays also degrade
  the eavesdroppers.  The joint policies use one set for both roles; the
  conventional baselines forward without bothering the eavesdroppers, so
  their jamming set is empty.

A transmitting relay with an empty buffer stays silent for the slot and
contributes nothing anywhere (counted in the diagnostics).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import rates
from .buffers import BufferedSignal, RelayBuffer, classify_signal
from .config import SystemConfig, power_split
from .errors import ConfigError
from .link_metrics import relayed_link_power, source_link_power


@dataclass(frozen=True)
class SelectionOutcome:
    receiving_relays: tuple       # sorted relay ids, |.| == T
    jamming_relays: tuple         # sorted relay ids, |.| <= K
    transmitting_relays: tuple    # sorted relay ids serving the users
    metric_per_candidate: dict    # relay id -> scalarized selection metric
    policy_name: str
    replays: dict                 # relay id -> BufferedSignal actually replayed
    objective: float | None = None  # oracle: maximized slot secrecy rate


@dataclass
class DiagCounters:
    phi_tests: int = 0
    phi_feasible: int = 0
    silent_transmitters: int = 0
    clamp_events: int = 0
    collect_sinrs: bool = False
    sinrs: list = field(default_factory=list)


@dataclass
class PolicyState:
    """Single-owner per-trial state: buffers plus the jammer set picked at the
    end of the previous slot."""

    buffers: dict                 # relay id -> RelayBuffer
    previous_outcome: SelectionOutcome | None
    slot: int
    pending_jammers: tuple | None = None
    pending_jammer_metrics: dict = field(default_factory=dict)
    diag: DiagCounters = field(default_factory=DiagCounters)


def fresh_state(config: SystemConfig) -> PolicyState:
    buffers = {q: RelayBuffer(q, config.buffer_capacity)
               for q in range(1, config.Q + 1)}
    return PolicyState(buffers=buffers, previous_outcome=None, slot=0)


# ---------------------------------------------------------------------------
# metric primitives


def _source_dets(realization) -> dict:
    su = realization.su_stack
    dets = np.linalg.det(su @ np.swapaxes(su.conj(), -1, -2)).real
    return {q + 1: float(d) for q, d in enumerate(dets)}


def initial_ranking(realization) -> list:
    """Relay ids by descending real det(H_q H_q^H); ties by ascending id."""
    dets = _source_dets(realization)
    return sorted(dets, key=lambda q: (-dets[q], q))


def scalarize_metric(Gamma_e: np.ndarray, Gamma_c: np.ndarray,
                     base: float = 2.0) -> float:
    """logdet(I + Gamma_c) - logdet(I + Gamma_e): the scalar that ranks a
    candidate's matrix SINR against the eavesdropper reference."""
    Gamma_e = np.asarray(Gamma_e)
    Gamma_c = np.asarray(Gamma_c)
    if Gamma_e.shape != Gamma_c.shape or Gamma_e.shape[0] != Gamma_e.shape[1]:
        raise ValueError("expected square matrices of equal size")
    return (rates.logdet_identity_plus(Gamma_c, base)
            - rates.logdet_identity_plus(Gamma_e, base))


def _replay_snapshots(state: PolicyState, relay_ids) -> dict:
    """Snapshot each relay would replay now; silent relays are absent."""
    out = {}
    for k in relay_ids:
        rec = state.buffers[k].peek_jamming()
        if rec is not None:
            out[k] = rec.snapshot
    return out


def _stored_factors(snapshots: np.ndarray, p_tx_eff: float, N_t: int) -> np.ndarray:
    """Stack of I + (p/N_t) Hs Hs^H over a (A, N_i, N_t) snapshot stack."""
    grams = snapshots @ np.swapaxes(snapshots.conj(), -1, -2)
    return np.eye(snapshots.shape[1]) + (p_tx_eff / N_t) * grams


def _eav_interference(realization, config: SystemConfig, replays: dict,
                      jammer_ids, p_tx_eff: float, p_rel_eff: float) -> np.ndarray:
    """Aggregate jamming covariance at the eavesdroppers from the active
    jammers' replays (matches rates.eav_interference_sum term by term)."""
    active = [k for k in sorted(jammer_ids) if k in replays]
    if not active:
        return np.zeros((config.N_e, config.N_e))
    snaps = np.stack([np.asarray(replays[k].snapshot) for k in active])
    factors = _stored_factors(snaps, p_tx_eff, config.N_t)
    H_ke = realization.re_stack[[k - 1 for k in active]]
    gram_ke = np.einsum("keab,kecb->kac", H_ke, H_ke.conj())
    return (p_rel_eff / config.N_k) * np.einsum("kac,kcd->ad", gram_ke, factors)


def _eav_reference_logdet(realization, config: SystemConfig, Delta: np.ndarray,
                          p_tx_eff: float) -> float:
    """Mean over eavesdroppers of logdet(I + Gamma_e) given the interference
    floor; candidate-independent reference for the receive-side metric."""
    H_e = realization.se_stack
    signals = (p_tx_eff / config.N_t) * np.einsum("eab,ecb->eac", H_e, H_e.conj())
    gammas = np.linalg.solve(np.eye(config.N_e) + Delta, signals)
    logs = rates.logdet_identity_plus_stack(gammas, config.log_base, "neginf")
    finite = logs[np.isfinite(logs)]
    return float(np.mean(finite)) if finite.size else 0.0


# ---------------------------------------------------------------------------
# receive-side and jam-side selection


def select_receiving_relays(state: PolicyState, realization,
                            config: SystemConfig, jammers: tuple,
                            replays: dict | None = None) -> tuple:
    """Pick the T receivers among relays not jamming this slot.

    Candidates are ranked by logdet(I + Gamma_m) minus the eavesdropper
    reference log-det, where Gamma_m = (I + D_m)^{-1} H_m H_m^H and D_m sums
    the inter-relay interference of the active jammers' replays at candidate
    m.  Returns (ids, metric map); the metric map is empty when the pool is
    exactly T (forced set).
    """
    pool = [q for q in sorted(state.buffers) if q not in set(jammers)]
    if len(pool) < config.T:
        raise ConfigError(
            f"receive pool has {len(pool)} relays but T={config.T}")
    if len(pool) == config.T:
        return tuple(pool), {}

    p_tx, p_rel = power_split(config)
    p_tx_e = p_tx / config.sigma2_e
    p_rel_e = p_rel / config.sigma2_e
    if replays is None:
        replays = {k: rec for k in jammers
                   if (rec := state.buffers[k].peek_jamming()) is not None}
    active = [k for k in sorted(jammers) if k in replays]

    su = realization.su_stack[[m - 1 for m in pool]]
    G_m = su @ np.swapaxes(su.conj(), -1, -2)
    if active:
        snaps = np.stack([np.asarray(replays[k].snapshot) for k in active])
        snap_grams = snaps @ np.swapaxes(snaps.conj(), -1, -2)
        rows = [[realization.rr_row(k, m) for m in pool] for k in active]
        H_km = realization.rr_stack[rows]            # (A, C, N_i, N_k)
        D_m = np.einsum("kcab,kbd,kced->cae", H_km, snap_grams, H_km.conj())
    else:
        D_m = np.zeros_like(G_m)
    if config.selection_noise_floor:
        D_m = D_m + (config.N_i * config.sigma2_i) * np.eye(config.N_i)
    gammas = np.linalg.solve(np.eye(config.N_i) + D_m, G_m)
    logdets = rates.logdet_identity_plus_stack(gammas, config.log_base, "neginf")

    Delta = _eav_interference(realization, config, replays, jammers,
                              p_tx_e, p_rel_e)
    ref = _eav_reference_logdet(realization, config, Delta, p_tx_e)
    metrics = {m: float(ld - ref) for m, ld in zip(pool, logdets)}
    chosen = sorted(pool, key=lambda m: (-metrics[m], m))[:config.T]
    return tuple(sorted(chosen)), metrics


def select_jamming_relays(state: PolicyState, realization,
                          config: SystemConfig, current_jammers: tuple = (),
                          replays: dict | None = None) -> tuple:
    """Pick the K relays that will jam (and serve the users) next slot.

    Every relay is a candidate; disjointness from the receivers is restored
    when the next slot's receive pool excludes the picked set.  A candidate n
    is scored with its own replayable snapshot: delivered-signal matrix
    Gamma_n = sum_r H_nr Hs Hs^H H_nr^H against its eavesdropper-side leak
    (I + Delta)^{-1} (P/N_k) sum_e H_ne Hs Hs^H H_ne^H, where Delta is the
    interference floor created by the currently active jammers.  Relays with
    empty buffers rank last; ties break by ascending id.
    """
    if config.K == 0:
        return (), {}
    pool = sorted(state.buffers)
    p_tx, p_rel = power_split(config)
    p_tx_e = p_tx / config.sigma2_e
    p_rel_e = p_rel / config.sigma2_e

    if replays is None:
        replays = {k: rec for k in current_jammers
                   if (rec := state.buffers[k].peek_jamming()) is not None}
    own = _replay_snapshots(state, pool)
    eligible = [n for n in pool if n in own]
    metrics = {n: 0.0 for n in pool}

    if eligible:
        idx = [n - 1 for n in eligible]
        snaps = np.stack([np.asarray(own[n]) for n in eligible])
        snap_grams = snaps @ np.swapaxes(snaps.conj(), -1, -2)
        H_nr = realization.ru_stack[idx]              # (C, M, N_r, N_k)
        gamma_n = np.einsum("cuab,cbd,cued->cae", H_nr, snap_grams, H_nr.conj())
        H_ne = realization.re_stack[idx]              # (C, N, N_e, N_k)
        leak = (p_rel_e / config.N_k) * np.einsum(
            "ceab,cbd,cefd->caf", H_ne, snap_grams, H_ne.conj())
        Delta = _eav_interference(realization, config, replays,
                                  current_jammers, p_tx_e, p_rel_e)
        gamma_e = np.linalg.solve(np.eye(config.N_e) + Delta, leak)
        ld_n = rates.logdet_identity_plus_stack(gamma_n, config.log_base, "neginf")
        ld_e = rates.logdet_identity_plus_stack(gamma_e, config.log_base, "neginf")
        for n, a, b in zip(eligible, ld_n, ld_e):
            # degenerate determinants rank the candidate last, not crash a trial
            metrics[n] = float(a - b) if np.isfinite(a) and np.isfinite(b) else -np.inf

    has = {n: (1 if n in own else 0) for n in pool}
    chosen = sorted(pool, key=lambda n: (-has[n], -metrics[n], n))[:config.K]
    return tuple(sorted(chosen)), metrics


# ---------------------------------------------------------------------------
# shared slot machinery


def _resolve_replays(state: PolicyState, transmitters, config: SystemConfig,
                     forward_only: bool) -> dict:
    """Pick the record each transmitting relay sends this slot.

    Joint policies replay via peek (reusable jamming signal) unless
    ``consume_on_jam``; the conventional baselines deliver and consume their
    oldest forward-class record.
    """
    replays = {}
    for k in sorted(transmitters):
        buf = state.buffers[k]
        if forward_only:
            rec = buf.pop_forward()
        else:
            rec = buf.peek_jamming()
            if rec is not None and config.consume_on_jam:
                buf.remove(rec)
        if rec is None:
            state.diag.silent_transmitters += 1
        else:
            replays[k] = rec
    return replays


def _receive_and_store(state: PolicyState, realization, config: SystemConfig,
                       receivers, replays: dict) -> None:
    """Compute each receiver's reception SINR (with per-pair IRI cancellation
    where feasible), classify it, and push the record."""
    threshold = config.sinr_threshold
    if threshold is None:
        raise ConfigError(
            "sinr_threshold is unresolved (None); set a value or run through "
            "monte_carlo, which calibrates it per sweep cell")
    p_tx, p_rel = power_split(config)
    active = sorted(replays)
    receivers = sorted(receivers)
    H_rx = realization.su_stack[[i - 1 for i in receivers]]   # (R, N_i, N_t)
    gamma_S = (p_tx / config.N_t) * np.einsum(
        "rab,rab->r", H_rx, H_rx.conj()).real
    residuals = np.zeros(len(receivers))
    if active:
        snaps = np.stack([np.asarray(replays[k].snapshot) for k in active])
        rows = [[realization.rr_row(k, i) for i in receivers] for k in active]
        H_ki = realization.rr_stack[rows]                     # (A, R, N_i, N_k)
        prod = np.einsum("krab,kbc->krac", H_ki, snaps)
        powers = (p_rel / config.N_k) * np.einsum(
            "krab,krab->kr", prod, prod.conj()).real
        if config.iri_cancellation:
            signal = ((p_tx / config.sigma2_i / config.N_t)
                      * np.einsum("rab,rcb->rac", H_rx, H_rx.conj())
                      + np.eye(config.N_i))
            interference = (p_rel / config.sigma2_i / config.N_k) * np.einsum(
                "krab,krcb->krac", H_ki, H_ki.conj())
            dets = np.linalg.det(np.linalg.solve(signal, interference))
            feasible = dets.real >= config.gamma0
            state.diag.phi_tests += feasible.size
            state.diag.phi_feasible += int(np.count_nonzero(feasible))
            residuals = np.where(feasible, 0.0, powers).sum(axis=0)
        else:
            residuals = powers.sum(axis=0)
    noise = config.N_i * config.sigma2_i
    for idx, i in enumerate(receivers):
        sinr = float(gamma_S[idx] / (residuals[idx] + noise))
        if state.diag.collect_sinrs:
            state.diag.sinrs.append(sinr)
        state.buffers[i].push(BufferedSignal(
            snapshot=realization.H_source_relay[i], sinr_at_reception=sinr,
            slot=realization.slot,
            signal_class=classify_signal(sinr, threshold)))


def slot_rate_report(realization, config: SystemConfig, replays: dict,
                     jammers: tuple, transmitters: tuple) -> tuple:
    """Per-slot achievable rates for a role assignment.

    The users are served by the transmitting relays' replays; the
    eavesdroppers see the source plus interference from the jamming relays'
    replays.  Returns (RateReport, clamp_event_count).
    """
    p_tx, p_rel = power_split(config)
    base = config.log_base
    clamps = 0

    active_tx = [k for k in sorted(transmitters) if k in replays]
    if active_tx:
        snaps = np.stack([np.asarray(replays[k].snapshot) for k in active_tx])
        factors = _stored_factors(snaps, p_tx / config.sigma2_r, config.N_t)
        users = [t % config.M for t in range(config.T)]
        H_u = realization.ru_stack[[k - 1 for k in active_tx]][:, users]
        H_u = np.swapaxes(H_u, 0, 1)                 # (T, A, N_r, N_k)
        gram_u = np.einsum("tkab,tkcb->tkac", H_u, H_u.conj())
        terms = np.einsum("tkac,kcd->tad", gram_u, factors)
        user_gammas = (p_rel / config.sigma2_r / config.N_k) * terms
    else:
        user_gammas = np.zeros((config.T, config.N_r, config.N_r))

    user_rates, user_clamps = rates.clamped_logdet_rate_stack(user_gammas, base)
    clamps += user_clamps

    Delta = _eav_interference(realization, config, replays, jammers,
                              p_tx / config.sigma2_e, p_rel / config.sigma2_e)
    H_e = realization.se_stack
    signals = (p_tx / config.sigma2_e / config.N_t) * np.einsum(
        "eab,ecb->eac", H_e, H_e.conj())
    eav_gammas = np.linalg.solve(np.eye(config.N_e) + Delta, signals)
    eav_rates, eav_clamps = rates.clamped_logdet_rate_stack(eav_gammas, base)
    clamps += eav_clamps

    diffs = user_rates[:, None] - eav_rates[None, :]
    secrecy = float(np.sum(np.maximum(diffs, 0.0)))
    report = rates.RateReport(user_rates=tuple(map(float, user_rates)),
                              eav_rates=tuple(map(float, eav_rates)),
                              secrecy_rate=secrecy)
    return report, clamps


def _advanced(state: PolicyState, outcome: SelectionOutcome,
              pending: tuple | None = None,
              pending_metrics: dict | None = None) -> PolicyState:
    return PolicyState(buffers=state.buffers, previous_outcome=outcome,
                       slot=state.slot + 1, pending_jammers=pending,
                       pending_jammer_metrics=pending_metrics or {},
                       diag=state.diag)


# ---------------------------------------------------------------------------
# policies


def bf_rjfs_step(state: PolicyState, realization, config: SystemConfig,
                 rng=None) -> tuple:
    """One slot of the joint receive/jam function selection.

    Slot 0 seeds the jammer set from the source-channel determinant ranking
    (best first unless ``worst_sinr_seeding``); afterwards the jammers are the
    set picked at the end of the previous slot.  Receivers are selected from
    the remaining pool, reception records are classified and buffered, and
    the next slot's jammers are then chosen with the jam-side metric.
    """
    if state.pending_jammers is not None:
        jammers = state.pending_jammers
        jam_metrics = dict(state.pending_jammer_metrics)
    elif state.slot == 0:
        dets = _source_dets(realization)
        ranking = sorted(dets, key=lambda q: (-dets[q], q))
        picked = (ranking[-config.K:] if config.worst_sinr_seeding
                  else ranking[:config.K]) if config.K else []
        jammers = tuple(sorted(picked))
        jam_metrics = {q: dets[q] for q in jammers}
    else:
        jammers, jam_metrics = select_jamming_relays(state, realization, config)

    replays = _resolve_replays(state, jammers, config, forward_only=False)
    receivers, rx_metrics = select_receiving_relays(
        state, realization, config, jammers, replays)
    outcome = SelectionOutcome(
        receiving_relays=receivers, jamming_relays=jammers,
        transmitting_relays=jammers,
        metric_per_candidate={**jam_metrics, **rx_metrics},
        policy_name="bf-rjfs", replays=replays)
    _receive_and_store(state, realization, config, receivers, replays)
    next_jammers, next_metrics = select_jamming_relays(
        state, realization, config, current_jammers=jammers, replays=replays)
    return outcome, _advanced(state, outcome, next_jammers, next_metrics)


def _baseline_step(state: PolicyState, realization, config: SystemConfig,
                   receivers, transmitters, metrics, name: str) -> tuple:
    replays = _resolve_replays(state, transmitters, config, forward_only=True)
    outcome = SelectionOutcome(
        receiving_relays=tuple(sorted(receivers)), jamming_relays=(),
        transmitting_relays=tuple(sorted(transmitters)),
        metric_per_candidate=metrics, policy_name=name, replays=replays)
    _receive_and_store(state, realization, config, receivers, replays)
    return outcome, _advanced(state, outcome)


def policy_conventional_bf(state: PolicyState, realization,
                           config: SystemConfig, rng=None) -> tuple:
    """Buffer-aided forwarding without jamming: the T strongest source links
    receive; of the rest, the T relays with the strongest aggregate
    relay-to-user channels deliver a stored forward-class record."""
    ids = sorted(state.buffers)
    su = realization.su_stack
    rx_vals = np.einsum("qab,qab->q", su, su.conj()).real
    rx_power = {q: float(rx_vals[q - 1]) for q in ids}
    receivers = sorted(ids, key=lambda q: (-rx_power[q], q))[:config.T]
    rest = [q for q in ids if q not in set(receivers)]
    ru = realization.ru_stack
    tx_vals = np.einsum("quab,quab->q", ru, ru.conj()).real
    tx_power = {q: float(tx_vals[q - 1]) for q in rest}
    transmitters = sorted(rest, key=lambda q: (-tx_power[q], q))[:config.T]
    metrics = {**rx_power, **tx_power}
    return _baseline_step(state, realization, config, receivers, transmitters,
                          metrics, "conventional-bf")


def policy_max_link(state: PolicyState, realization, config: SystemConfig,
                    rng=None) -> tuple:
    """Strongest-link scheduling: merge all source->relay links (non-full
    buffers preferred) and relay->user links (non-empty buffers only), then
    greedily fill T receive and up to T transmit roles in descending link
    strength, one role per relay."""
    ids = sorted(state.buffers)
    su, ru = realization.su_stack, realization.ru_stack
    rx_vals = np.einsum("qab,qab->q", su, su.conj()).real
    tx_vals = np.einsum("quab,quab->qu", ru, ru.conj()).real.max(axis=1)
    links = []
    for q in ids:
        eligible = 0 if state.buffers[q].is_full else 1
        links.append((eligible, float(rx_vals[q - 1]), "rx", q))
        if len(state.buffers[q]) > 0:
            links.append((1, float(tx_vals[q - 1]), "tx", q))
    links.sort(key=lambda item: (-item[0], -item[1], item[3], item[2]))
    receivers, transmitters, assigned = [], [], set()
    for _, power, kind, q in links:
        if q in assigned:
            continue
        if kind == "rx" and len(receivers) < config.T:
            receivers.append(q)
            assigned.add(q)
        elif kind == "tx" and len(transmitters) < config.T:
            transmitters.append(q)
            assigned.add(q)
    metrics = {q: power for _, power, kind, q in links if kind == "rx"}
    return _baseline_step(state, realization, config, receivers, transmitters,
                          metrics, "max-link")


def policy_max_ratio(state: PolicyState, realization, config: SystemConfig,
                     rng=None) -> tuple:
    """Rank relays by legitimate-power-to-eavesdropper-leakage ratio; the top
    T receive, and of the rest the top T by the transmit-side analogue of the
    same ratio deliver."""
    ids = sorted(state.buffers)
    own = _replay_snapshots(state, ids)

    def leakage(q):
        snap = own.get(q)
        if snap is None:
            return 0.0
        return sum(relayed_link_power(H, snap)
                   for H in realization.H_relay_eav[q])

    floor = config.N_e * config.sigma2_e
    rx_ratio = {q: source_link_power(realization.H_source_relay[q])
                / (leakage(q) + floor) for q in ids}
    receivers = sorted(ids, key=lambda q: (-rx_ratio[q], q))[:config.T]
    rest = [q for q in ids if q not in set(receivers)]

    def delivered(q):
        snap = own.get(q)
        if snap is None:
            return 0.0
        return sum(relayed_link_power(H, snap)
                   for H in realization.H_relay_user[q])

    tx_ratio = {q: delivered(q) / (leakage(q) + floor) for q in rest}
    transmitters = sorted(rest, key=lambda q: (-tx_ratio[q], q))[:config.T]
    metrics = {**rx_ratio, **tx_ratio}
    return _baseline_step(state, realization, config, receivers, transmitters,
                          metrics, "max-ratio")


def policy_random(state: PolicyState, realization, config: SystemConfig,
                  rng: np.random.Generator) -> tuple:
    """Uniformly random disjoint receive and jam sets (lower baseline)."""
    if rng is None:
        raise ValueError("the random policy needs an rng substream")
    ids = np.array(sorted(state.buffers))
    perm = rng.permutation(len(ids))
    receivers = tuple(sorted(int(ids[j]) for j in perm[:config.T]))
    jammers = tuple(sorted(int(ids[j])
                           for j in perm[config.T:config.T + config.K]))
    replays = _resolve_replays(state, jammers, config, forward_only=False)
    outcome = SelectionOutcome(
        receiving_relays=receivers, jamming_relays=jammers,
        transmitting_relays=jammers, metric_per_candidate={},
        policy_name="random", replays=replays)
    _receive_and_store(state, realization, config, receivers, replays)
    return outcome, _advanced(state, outcome)


_ORACLE_GUARD = 100_000


def exhaustive_oracle(state: PolicyState, realization, config: SystemConfig,
                      rng=None) -> tuple:
    """Enumerate every disjoint (receive, jam) assignment, score each by the
    slot secrecy rate it would achieve with the current buffers, and take the
    argmax (ties: lexicographically smallest id sets).

    Refuses to run when C(Q,T) * C(Q-T,K) exceeds 100000.
    """
    ids = sorted(state.buffers)
    count = math.comb(config.Q, config.T) * math.comb(config.Q - config.T, config.K)
    if count > _ORACLE_GUARD:
        raise ConfigError(
            f"oracle would enumerate {count} assignments (> {_ORACLE_GUARD})")
    peeked = {q: rec for q in ids
              if (rec := state.buffers[q].peek_jamming()) is not None}
    best = None
    for rx in itertools.combinations(ids, config.T):
        rest = [q for q in ids if q not in set(rx)]
        for jam in itertools.combinations(rest, config.K):
            replays = {k: peeked[k] for k in jam if k in peeked}
            report, _ = slot_rate_report(realization, config, replays, jam, jam)
            if best is None or report.secrecy_rate > best[0]:
                best = (report.secrecy_rate, rx, jam)
    score, rx, jam = best
    replays = _resolve_replays(state, jam, config, forward_only=False)
    outcome = SelectionOutcome(
        receiving_relays=tuple(rx), jamming_relays=tuple(jam),
        transmitting_relays=tuple(jam), metric_per_candidate={},
        policy_name="oracle", replays=replays, objective=score)
    _receive_and_store(state, realization, config, rx, replays)
    return outcome, _advanced(state, outcome)


POLICIES = {
    "bf-rjfs": bf_rjfs_step,
    "conventional-bf": policy_conventional_bf,
    "max-link": policy_max_link,
    "max-ratio": policy_max_ratio,
    "random": policy_random,
    "oracle": exhaustive_oracle,
}
