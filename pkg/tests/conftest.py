import numpy as np
import pytest

from relaysec.buffers import BufferedSignal, classify_signal
from relaysec.channel import (STREAM_INSTANCE, NetworkRealization,
                              gen_network_realization, substream)
from relaysec.config import SystemConfig
from relaysec.selection import fresh_state


def cn_matrix(rng, rows, cols):
    return np.sqrt(0.5) * (rng.standard_normal((rows, cols))
                           + 1j * rng.standard_normal((rows, cols)))


def random_psd(rng, n, extra=2):
    H = cn_matrix(rng, n, n + extra)
    return H @ H.conj().T


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def small_config(**overrides):
    """Q=4 scenario small enough for exhaustive enumeration in tests."""
    defaults = dict(N_t=2, N_r=2, N_e=2, N_i=2, N_k=2, M=2, N=2,
                    Q=4, T=2, K=2, sinr_threshold=1.0,
                    slots=5, warmup_slots=0, trials=4, buffer_capacity=4)
    defaults.update(overrides)
    return SystemConfig(**defaults)


def realization_from_arrays(config, slot, su, se, rr_map, re, ru):
    """Assemble a NetworkRealization from explicit per-link arrays.

    su: (Q, N_i, N_t); se: (N, N_e, N_t); rr_map: {(k, i): (N_i, N_k)};
    re: (Q, N, N_e, N_k); ru: (Q, M, N_r, N_k).
    """
    Q, M, N = config.Q, config.M, config.N
    su = np.asarray(su, dtype=complex)
    se = np.asarray(se, dtype=complex)
    re = np.asarray(re, dtype=complex)
    ru = np.asarray(ru, dtype=complex)
    rr = np.zeros((Q * (Q - 1), config.N_i, config.N_k), dtype=complex)
    row = 0
    rr_dict = {}
    for k in range(1, Q + 1):
        for i in range(1, Q + 1):
            if k != i:
                rr[row] = np.asarray(rr_map[(k, i)])
                rr_dict[(k, i)] = rr[row]
                row += 1
    for arr in (su, se, rr, re, ru):
        arr.flags.writeable = False
    return NetworkRealization(
        slot=slot,
        H_source_relay={q: su[q - 1] for q in range(1, Q + 1)},
        H_source_eav=tuple(se[e] for e in range(N)),
        H_relay_relay=rr_dict,
        H_relay_eav={k: tuple(re[k - 1][e] for e in range(N))
                     for k in range(1, Q + 1)},
        H_relay_user={k: tuple(ru[k - 1][r] for r in range(M))
                      for k in range(1, Q + 1)},
        su_stack=su, se_stack=se, rr_stack=rr, re_stack=re, ru_stack=ru,
        Q=Q,
    )


def make_instance(config, seed, start_slot=10):
    """Deterministic single-slot test instance: pre-stocked buffers plus a
    fresh realization.  Rebuilding with the same seed gives an identical but
    independent state, so policies can be compared on equal footing."""
    rng = substream(config.seed, STREAM_INSTANCE, seed, 0)
    state = fresh_state(config)
    threshold = config.sinr_threshold if config.sinr_threshold is not None else 1.0
    for q in sorted(state.buffers):
        n_records = int(rng.integers(0, 4))
        for j in range(n_records):
            sinr = float(rng.exponential(2.0))
            state.buffers[q].push(BufferedSignal(
                snapshot=cn_matrix(rng, config.N_i, config.N_t),
                sinr_at_reception=sinr,
                slot=j,
                signal_class=classify_signal(sinr, threshold)))
    state.slot = start_slot
    realization = gen_network_realization(
        config, start_slot, substream(config.seed, STREAM_INSTANCE, seed, 1))
    return state, realization
