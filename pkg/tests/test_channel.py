import math

import numpy as np
import pytest

from rmproduct import channel


def test_modulate_examples():
    assert channel.bpsk_modulate([0, 1, 0]).tolist() == [1.0, -1.0, 1.0]
    assert (channel.bpsk_modulate(np.zeros(5, dtype=np.uint8)) == 1.0).all()


def test_modulate_hard_decision_round_trip():
    bits = np.array([0, 1, 1, 0, 1], dtype=np.uint8)
    symbols = channel.bpsk_modulate(bits)
    assert np.array_equal(((1.0 - symbols) / 2.0).astype(np.uint8), bits)


def test_llr_formula():
    out = channel.channel_llr([0.5, -1.0], 0.5)
    assert out.tolist() == [2.0, -4.0]
    assert not channel.channel_llr(np.zeros(4), 1.3).any()


def test_llr_preserves_signs():
    rng = np.random.default_rng(3)
    y = rng.normal(size=100)
    assert np.array_equal(np.sign(channel.channel_llr(y, 0.7)), np.sign(y))


def test_ebno_conversion_examples():
    assert channel.ebno_db_to_sigma2(0.0, 0.5) == pytest.approx(1.0, rel=1e-12)
    assert channel.ebno_db_to_sigma2(0.0, 21 / 256) == pytest.approx(128 / 21, rel=1e-12)


def test_ebno_conversion_round_trip():
    for ebno in (-3.0, 0.0, 2.5, 10.0):
        for rate in (0.01, 21 / 256, 0.5, 1.0):
            sigma2 = channel.ebno_db_to_sigma2(ebno, rate)
            assert channel.sigma2_to_ebno_db(sigma2, rate) == pytest.approx(ebno, abs=1e-12)


def test_snr_definition():
    assert channel.sigma2_to_snr_db(0.5) == pytest.approx(0.0, abs=1e-12)


def test_parameter_validation():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        channel.awgn_channel(np.ones(4), 0.0, rng)
    with pytest.raises(ValueError):
        channel.channel_llr(np.ones(4), -1.0)
    with pytest.raises(ValueError):
        channel.ebno_db_to_sigma2(0.0, 0.0)
    with pytest.raises(ValueError):
        channel.ebno_db_to_sigma2(0.0, 1.5)


def test_awgn_noise_statistics():
    rng = np.random.default_rng(12345)
    sigma2 = 0.8
    x = np.zeros(1_000_000)
    noise = channel.awgn_channel(x, sigma2, rng) - x
    n = noise.size
    assert abs(noise.mean()) < 5.0 * math.sqrt(sigma2 / n)
    assert noise.var() == pytest.approx(sigma2, rel=0.01)


def test_awgn_is_reproducible_from_seed():
    a = channel.awgn_channel(np.zeros(8), 1.0, np.random.default_rng(7))
    b = channel.awgn_channel(np.zeros(8), 1.0, np.random.default_rng(7))
    assert np.array_equal(a, b)


def test_bpsk_sign_error_rate_matches_analytic():
    # uncoded BPSK: P(sign flip) = Q(1/sigma) with Q(x) = erfc(x/sqrt(2))/2
    rng = np.random.default_rng(99)
    sigma2 = 0.5
    n = 1_000_000
    symbols = channel.bpsk_modulate(np.zeros(n, dtype=np.uint8))
    llrs = channel.channel_llr(channel.awgn_channel(symbols, sigma2, rng), sigma2)
    measured = (llrs < 0).mean()
    expected = 0.5 * math.erfc(1.0 / math.sqrt(2.0 * sigma2))
    assert measured == pytest.approx(expected, abs=4.0 * math.sqrt(expected * (1 - expected) / n))


def test_channel_params_consistency():
    params = channel.ChannelParams.from_ebno_db(2.5, 21 / 256)
    assert params.ebno_db == 2.5
    assert channel.ChannelParams.from_sigma2(params.sigma2, params.rate).ebno_db == pytest.approx(2.5, abs=1e-12)
    assert params.snr_db == pytest.approx(2.5 + 10 * math.log10(21 / 256), abs=1e-9)
    with pytest.raises(ValueError):
        channel.ChannelParams(sigma2=1.0, ebno_db=5.0, rate=0.5)
