import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relaysec.channel import received_power
from relaysec.link_metrics import (iri_cancellation_feasible,
                                   iri_feasible_batch, relayed_link_power,
                                   sinr_eav_scalar, sinr_relay,
                                   sinr_user_scalar, source_link_power)

from conftest import cn_matrix


def test_source_link_power_trivia():
    assert source_link_power(np.eye(2)) == pytest.approx(2.0)
    assert source_link_power(np.zeros((2, 2))) == 0.0


def test_source_link_power_matches_received_power(rng):
    H = cn_matrix(rng, 2, 6)
    assert source_link_power(H) == pytest.approx(received_power(H), rel=1e-12)


def test_relayed_link_power_silent_jammer():
    assert relayed_link_power(np.eye(2), np.zeros((2, 3))) == 0.0


def test_relayed_link_power_identity():
    assert relayed_link_power(np.eye(3), np.eye(3)) == pytest.approx(3.0)


def test_relayed_link_power_svd_oracle(rng):
    H_ab = cn_matrix(rng, 2, 2)
    H_st = cn_matrix(rng, 2, 2)
    expected = float(np.sum(np.linalg.svd(H_ab @ H_st, compute_uv=False) ** 2))
    assert relayed_link_power(H_ab, H_st) == pytest.approx(expected, rel=1e-10)


def test_relayed_link_power_unitary_invariance(rng):
    # only the Gram of the snapshot matters
    H_ab = cn_matrix(rng, 2, 2)
    H_st = cn_matrix(rng, 2, 6)
    U, _ = np.linalg.qr(cn_matrix(rng, 6, 6))
    base = relayed_link_power(H_ab, H_st)
    assert relayed_link_power(H_ab, H_st @ U) == pytest.approx(base, rel=1e-10)


def test_relayed_link_power_dimension_mismatch():
    with pytest.raises(ValueError):
        relayed_link_power(np.eye(2), np.zeros((3, 4)))


def test_iri_feasible_scalar_case():
    # single-antenna nodes: the test reduces to plain arithmetic
    h_i = np.array([[1.0 + 0j]])
    h_ki = np.array([[2.0 + 0j]])
    assert iri_cancellation_feasible(h_i, h_ki, 1.0, 1.0, 1, 1, 1.0)
    # ratio is 4/2 = 2 >= gamma0
    assert not iri_cancellation_feasible(h_i, h_ki, 1.0, 1.0, 1, 1, 2.5)


def test_iri_feasible_scalar_grid():
    for a in np.linspace(0.2, 3.0, 10):
        for b in np.linspace(0.2, 3.0, 10):
            h_i = np.array([[a + 0j]])
            h_ki = np.array([[b + 0j]])
            expected = (2.0 * b * b) / (3.0 * a * a + 1.0) >= 0.8
            got = iri_cancellation_feasible(h_i, h_ki, 3.0, 2.0, 1, 1, 0.8)
            assert got == expected


def test_iri_feasible_zero_interference_is_infeasible(rng):
    H_i = cn_matrix(rng, 2, 6)
    assert not iri_cancellation_feasible(H_i, np.zeros((2, 2)), 1.0, 1.0,
                                         6, 2, 0.5)


def test_iri_feasible_matches_explicit_inverse(rng):
    # independent recomputation with an explicit inverse and cofactor det
    for _ in range(50):
        H_i = cn_matrix(rng, 2, 2)
        H_ki = cn_matrix(rng, 2, 2)
        P_tx, P_rel, gamma0 = 1.7, 2.3, 0.6
        A = (P_tx / 2) * (H_i @ H_i.conj().T) + np.eye(2)
        B = (P_rel / 2) * (H_ki @ H_ki.conj().T)
        inv = np.array([[A[1, 1], -A[0, 1]], [-A[1, 0], A[0, 0]]]) / (
            A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])
        M = inv @ B
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        expected = det.real >= gamma0
        assert iri_cancellation_feasible(H_i, H_ki, P_tx, P_rel, 2, 2,
                                         gamma0) == expected


def test_iri_feasible_batch_matches_loop(rng):
    H_i = cn_matrix(rng, 2, 6)
    stack = np.stack([cn_matrix(rng, 2, 2) for _ in range(5)])
    batch = iri_feasible_batch(H_i, stack, 2.0, 3.0, 6, 2, 0.4)
    loop = [iri_cancellation_feasible(H_i, H, 2.0, 3.0, 6, 2, 0.4)
            for H in stack]
    assert list(batch) == loop


def test_iri_feasible_rejects_mismatch(rng):
    with pytest.raises(ValueError):
        iri_cancellation_feasible(cn_matrix(rng, 2, 6), cn_matrix(rng, 3, 2),
                                  1.0, 1.0, 6, 2, 1.0)


_sinr_relay_cases = [
    (10.0, 4.0, 1, 1, 1.0, 2.0),
    (10.0, 4.0, 0, 1, 1.0, 10.0),
    (0.0, 5.0, 1, 2, 1.0, 0.0),
]


@pytest.mark.parametrize("gs,gi,phi,ni,s2,expected", _sinr_relay_cases)
def test_sinr_relay_values(gs, gi, phi, ni, s2, expected):
    out = sinr_relay(gs, gi, phi, ni, s2)
    assert out.value == pytest.approx(expected)
    assert out.cancellation_applied == (phi == 0)


def test_sinr_relay_rejects_bad_phi():
    with pytest.raises(ValueError):
        sinr_relay(1.0, 1.0, 2, 1, 1.0)


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 1e6), st.floats(0, 1e6), st.integers(1, 4),
       st.floats(1e-3, 1e3))
def test_sinr_relay_cancellation_never_hurts(gs, gi, ni, s2):
    with_c = sinr_relay(gs, gi, 0, ni, s2).value
    without = sinr_relay(gs, gi, 1, ni, s2).value
    assert with_c >= without
    if gi == 0:
        assert with_c == without


@pytest.mark.parametrize("gs,gi,ne,s2,expected", [
    (8.0, 0.0, 2, 1.0, 4.0),
    (8.0, 6.0, 2, 1.0, 1.0),
])
def test_sinr_eav_values(gs, gi, ne, s2, expected):
    assert sinr_eav_scalar(gs, gi, ne, s2).value == pytest.approx(expected)


def test_sinr_eav_monotone_in_jamming():
    values = [sinr_eav_scalar(8.0, g, 2, 1.0).value for g in np.linspace(0, 20, 9)]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("g,nr,s2,expected", [
    (0.0, 2, 1.0, 0.0),
    (6.0, 2, 1.0, 3.0),
    (6.0, 2, 0.5, 6.0),
])
def test_sinr_user_values(g, nr, s2, expected):
    assert sinr_user_scalar(g, nr, s2).value == pytest.approx(expected)
