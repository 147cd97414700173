import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relaysec.channel import (gen_channel, gen_network_realization, gram,
                              received_power, solve_identity_plus, substream)
from relaysec.config import SystemConfig

from conftest import cn_matrix


def test_gen_channel_shape():
    rng = substream(7, 0)
    H = gen_channel(2, 3, rng)
    assert H.shape == (2, 3)
    assert H.dtype == complex


def test_gen_channel_deterministic_for_fresh_seed():
    H1 = gen_channel(2, 3, substream(42, 5))
    H2 = gen_channel(2, 3, substream(42, 5))
    np.testing.assert_array_equal(H1, H2)


def test_gen_channel_single_entry_finite():
    H = gen_channel(1, 1, substream(1, 2))
    assert H.shape == (1, 1)
    assert np.isfinite(H).all()


@pytest.mark.parametrize("rows,cols", [(0, 3), (3, 0), (0, 0), (-1, 2)])
def test_gen_channel_rejects_bad_dims(rows, cols):
    with pytest.raises(ValueError):
        gen_channel(rows, cols, substream(1))


def test_gen_channel_statistics():
    # law-of-large-numbers check on 1e5 entries
    H = gen_channel(250, 400, substream(2024, 1))
    assert abs(H.mean()) < 0.02
    assert abs(np.mean(np.abs(H) ** 2) - 1.0) < 0.02
    # real/imag parts each carry half the variance
    assert abs(np.var(H.real) - 0.5) < 0.01
    assert abs(np.var(H.imag) - 0.5) < 0.01


_gram_cases = [
    (np.eye(2), np.eye(2)),
    (np.zeros((2, 3)), np.zeros((2, 2))),
    (np.array([[1 + 1j, 0], [0, 2]]), np.diag([2.0, 4.0])),
]


@pytest.mark.parametrize("H,expected", _gram_cases)
def test_gram_analytic(H, expected):
    np.testing.assert_allclose(gram(H), expected, atol=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_gram_hermitian_psd(rows, cols, seed):
    H = cn_matrix(np.random.default_rng(seed), rows, cols)
    G = gram(H)
    assert np.max(np.abs(G - G.conj().T)) < 1e-12
    assert np.linalg.eigvalsh(G).min() >= -1e-10


def test_gram_rejects_vector():
    with pytest.raises(ValueError):
        gram(np.ones(3))


@pytest.mark.parametrize("H,expected", [
    (np.eye(2), 2.0),
    (np.zeros((3, 2)), 0.0),
    (np.array([[1 + 1j, 0], [0, 2]]), 6.0),
])
def test_received_power_analytic(H, expected):
    assert received_power(H) == pytest.approx(expected, abs=1e-15)


def test_received_power_equals_entry_magnitudes(rng):
    H = cn_matrix(rng, 4, 7)
    expected = float(np.sum(np.abs(H) ** 2))
    assert received_power(H) == pytest.approx(expected, rel=1e-12)


def test_solve_identity_plus_matches_inverse(rng):
    A = cn_matrix(rng, 3, 3)
    A = A @ A.conj().T
    B = cn_matrix(rng, 3, 2)
    expected = np.linalg.inv(np.eye(3) + A) @ B
    np.testing.assert_allclose(solve_identity_plus(A, B), expected, atol=1e-12)


def test_realization_shapes_default_scenario():
    config = SystemConfig(sinr_threshold=1.0)
    real = gen_network_realization(config, 0, substream(config.seed, 0, 0, 0))
    for q in range(1, config.Q + 1):
        assert real.H_source_relay[q].shape == (2, 6)
    assert len(real.H_source_eav) == 3
    assert real.H_source_eav[0].shape == (2, 6)
    assert len(real.H_relay_relay) == config.Q * (config.Q - 1)
    assert real.H_relay_relay[(1, 2)].shape == (2, 2)
    assert real.H_relay_user[4][2].shape == (2, 2)
    assert real.H_relay_eav[6][0].shape == (2, 2)


def test_realization_deterministic():
    config = SystemConfig(sinr_threshold=1.0)
    r1 = gen_network_realization(config, 3, substream(9, 0, 1, 3))
    r2 = gen_network_realization(config, 3, substream(9, 0, 1, 3))
    np.testing.assert_array_equal(r1.su_stack, r2.su_stack)
    np.testing.assert_array_equal(r1.rr_stack, r2.rr_stack)
    np.testing.assert_array_equal(r1.ru_stack, r2.ru_stack)


def test_realization_small_poll_offdiagonal_pairs():
    config = SystemConfig(Q=2, T=1, K=1, sinr_threshold=1.0)
    real = gen_network_realization(config, 0, substream(1, 0, 0, 0))
    assert set(real.H_relay_relay) == {(1, 2), (2, 1)}


def test_realization_immutable():
    config = SystemConfig(Q=2, T=1, K=1, sinr_threshold=1.0)
    real = gen_network_realization(config, 0, substream(1, 0, 0, 0))
    with pytest.raises(ValueError):
        real.H_source_relay[1][0, 0] = 0
    with pytest.raises(ValueError):
        real.ru_stack[0, 0, 0, 0] = 0


def test_realization_views_consistent_with_stacks():
    config = SystemConfig(sinr_threshold=1.0)
    real = gen_network_realization(config, 0, substream(5, 0, 0, 0))
    for q in range(1, config.Q + 1):
        np.testing.assert_array_equal(real.H_source_relay[q],
                                      real.su_stack[q - 1])
    for (k, i), H in real.H_relay_relay.items():
        np.testing.assert_array_equal(H, real.rr_stack[real.rr_row(k, i)])
    for k in range(1, config.Q + 1):
        for e in range(config.N):
            np.testing.assert_array_equal(real.H_relay_eav[k][e],
                                          real.re_stack[k - 1][e])


def test_realization_entry_statistics():
    # the batched draw must still give CN(0, 1) entries within 3 standard errors
    config = SystemConfig(sinr_threshold=1.0)
    entries = []
    for slot in range(300):
        real = gen_network_realization(config, slot, substream(3, 0, 0, slot))
        entries.append(real.su_stack.ravel())
        entries.append(real.rr_stack.ravel())
        entries.append(real.ru_stack.ravel())
        entries.append(real.re_stack.ravel())
        entries.append(real.se_stack.ravel())
    x = np.concatenate(entries)
    n = x.size
    assert n > 1e5
    assert abs(x.mean()) < 3.0 / np.sqrt(2 * n)        # complex mean, var 1/2 per part
    assert abs(np.mean(np.abs(x) ** 2) - 1.0) < 3.0 / np.sqrt(n)


def test_substream_order_independence():
    a = substream(1, 0, 5, 3).standard_normal(4)
    substream(1, 0, 9, 9).standard_normal(100)
    b = substream(1, 0, 5, 3).standard_normal(4)
    np.testing.assert_array_equal(a, b)
