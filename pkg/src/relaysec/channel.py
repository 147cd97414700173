"""Flat-fading MIMO channel generation and complex-matrix primitives.

Every random quantity in the simulator flows through :func:`substream`, which
derives an independent generator from ``(seed, *key)`` using numpy's
``SeedSequence``.  Trials and slots therefore consume disjoint streams that do
not depend on execution order, which is what makes parallel runs bit-exact.

Stream key layout (first element after the root seed):

* ``STREAM_CHANNEL``:     ``(seed, 0, trial, slot)`` - channel realizations
* ``STREAM_POLICY``:      ``(seed, 1, trial, slot)`` - random-policy draws
* ``STREAM_CALIBRATION``: ``(seed, 2, ...)``         - threshold pre-runs
* ``STREAM_INSTANCE``:    ``(seed, 3, ...)``         - synthetic test states
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

STREAM_CHANNEL = 0
STREAM_POLICY = 1
STREAM_CALIBRATION = 2
STREAM_INSTANCE = 3

_SQRT_HALF = math.sqrt(0.5)


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for a (seed, key...) path, order-insensitive."""
    return np.random.default_rng([int(seed) & (2**64 - 1), *map(int, key)])


def gen_channel(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Draw a ``rows x cols`` matrix of i.i.d. CN(0, 1) entries.

    Real and imaginary parts are independent N(0, 1/2), so each entry has unit
    variance.  Consuming ``rng`` advances it deterministically.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"channel dimensions must be >= 1, got {rows}x{cols}")
    parts = rng.standard_normal((rows, cols, 2))
    return _SQRT_HALF * (parts[..., 0] + 1j * parts[..., 1])


def gram(H: np.ndarray) -> np.ndarray:
    """H @ H^H: Hermitian positive-semidefinite, shape (rows, rows)."""
    H = np.asarray(H)
    if H.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={H.ndim}")
    return H @ H.conj().T


def received_power(H: np.ndarray) -> float:
    """trace(H @ H^H), i.e. the sum of squared entry magnitudes."""
    H = np.asarray(H)
    if H.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={H.ndim}")
    return float(np.sum(H.real**2 + H.imag**2))


def solve_identity_plus(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(I + A)^{-1} @ B without forming the inverse explicitly."""
    A = np.asarray(A)
    return np.linalg.solve(np.eye(A.shape[-1]) + A, B)


@dataclass(frozen=True)
class NetworkRealization:
    """One slot's complete set of channel matrices.

    Relays carry ids ``1..Q``; eavesdroppers and users are positional
    (0-based tuples).  The mapping attributes expose individual matrices; the
    ``*_stack`` attributes expose the same memory as contiguous arrays for
    vectorized consumers.  Everything is read-only after construction.
    """

    slot: int
    H_source_relay: dict      # relay id -> (N_i x N_t)
    H_source_eav: tuple       # e -> (N_e x N_t)
    H_relay_relay: dict       # (k, i), k != i -> (N_i x N_k)
    H_relay_eav: dict         # relay id -> tuple over e of (N_e x N_k)
    H_relay_user: dict        # relay id -> tuple over r of (N_r x N_k)
    su_stack: np.ndarray      # (Q, N_i, N_t)
    se_stack: np.ndarray      # (N, N_e, N_t)
    rr_stack: np.ndarray      # (Q*(Q-1), N_i, N_k), ascending (k, i), k != i
    re_stack: np.ndarray      # (Q, N, N_e, N_k)
    ru_stack: np.ndarray      # (Q, M, N_r, N_k)
    Q: int

    def rr_row(self, k: int, i: int) -> int:
        """Row of ``rr_stack`` holding the relay k -> relay i channel."""
        if k == i:
            raise KeyError(f"no self channel for relay {k}")
        return (k - 1) * (self.Q - 1) + (i - 1) - (1 if i > k else 0)


def gen_network_realization(config, slot: int,
                            rng: np.random.Generator) -> NetworkRealization:
    """Draw all channels for one slot (independent across slots: block fading).

    All entries come from a single batched i.i.d. CN(0, 1) draw, carved in a
    fixed documented order: source->relay for q = 1..Q, source->eavesdropper,
    relay->relay in ascending (k, i) with k != i, relay->eavesdropper
    (relay-major), then relay->user (relay-major).  Entries fill each matrix
    in row-major order, so the realization is a pure function of the rng
    state, hence of (seed, trial, slot).
    """
    Q, M, N = config.Q, config.M, config.N
    N_t, N_r, N_e, N_i, N_k = (config.N_t, config.N_r, config.N_e,
                               config.N_i, config.N_k)
    shapes = (
        (Q, N_i, N_t),
        (N, N_e, N_t),
        (Q * (Q - 1), N_i, N_k),
        (Q, N, N_e, N_k),
        (Q, M, N_r, N_k),
    )
    sizes = [int(np.prod(s)) for s in shapes]
    parts = rng.standard_normal((sum(sizes), 2))
    flat = _SQRT_HALF * (parts[:, 0] + 1j * parts[:, 1])
    blocks = []
    offset = 0
    for shape, size in zip(shapes, sizes):
        block = flat[offset:offset + size].reshape(shape)
        block.flags.writeable = False
        blocks.append(block)
        offset += size
    su, se, rr, re, ru = blocks

    H_source_relay = {q: su[q - 1] for q in range(1, Q + 1)}
    H_source_eav = tuple(se[e] for e in range(N))
    H_relay_relay = {}
    row = 0
    for k in range(1, Q + 1):
        for i in range(1, Q + 1):
            if k != i:
                H_relay_relay[(k, i)] = rr[row]
                row += 1
    H_relay_eav = {k: tuple(re[k - 1][e] for e in range(N))
                   for k in range(1, Q + 1)}
    H_relay_user = {k: tuple(ru[k - 1][r] for r in range(M))
                    for k in range(1, Q + 1)}
    return NetworkRealization(
        slot=slot,
        H_source_relay=H_source_relay,
        H_source_eav=H_source_eav,
        H_relay_relay=H_relay_relay,
        H_relay_eav=H_relay_eav,
        H_relay_user=H_relay_user,
        su_stack=su, se_stack=se, rr_stack=rr, re_stack=re, ru_stack=ru,
        Q=Q,
    )
