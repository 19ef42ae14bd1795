"""BPSK over AWGN: modulation, noise, LLRs, and SNR <-> Eb/N0 conversions.

Conventions: bits map to symbols as 1 - 2c; noise is zero-mean Gaussian with
per-sample variance sigma2; channel LLRs are 2y/sigma2; SNR := 1/(2 sigma2)
and Eb/N0 := SNR / rate.
"""

import math
from dataclasses import dataclass

import numpy as np


def bpsk_modulate(bits) -> np.ndarray:
    """Map bits {0,1} to symbols {+1,-1} as 1 - 2c."""
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)


def awgn_channel(symbols, sigma2: float, rng: np.random.Generator) -> np.ndarray:
    """Add i.i.d. zero-mean Gaussian noise of variance sigma2 per element."""
    if sigma2 <= 0:
        raise ValueError(f"noise variance must be positive, got {sigma2}")
    symbols = np.asarray(symbols, dtype=np.float64)
    return symbols + rng.normal(0.0, math.sqrt(sigma2), size=symbols.shape)


def channel_llr(received, sigma2: float) -> np.ndarray:
    """LLRs of the received samples: 2y/sigma2 (positive favors bit 0)."""
    if sigma2 <= 0:
        raise ValueError(f"noise variance must be positive, got {sigma2}")
    return (2.0 / sigma2) * np.asarray(received, dtype=np.float64)


def ebno_db_to_sigma2(ebno_db: float, rate: float) -> float:
    """Noise variance for a given Eb/N0 (dB) and code rate."""
    if not 0 < rate <= 1:
        raise ValueError(f"rate must be in (0, 1], got {rate}")
    return 1.0 / (2.0 * rate * 10.0 ** (ebno_db / 10.0))


def sigma2_to_ebno_db(sigma2: float, rate: float) -> float:
    """Inverse of ebno_db_to_sigma2."""
    if sigma2 <= 0:
        raise ValueError(f"noise variance must be positive, got {sigma2}")
    if not 0 < rate <= 1:
        raise ValueError(f"rate must be in (0, 1], got {rate}")
    return 10.0 * math.log10(1.0 / (2.0 * rate * sigma2))


def sigma2_to_snr_db(sigma2: float) -> float:
    """SNR (dB) for a noise variance: 10 log10(1/(2 sigma2))."""
    if sigma2 <= 0:
        raise ValueError(f"noise variance must be positive, got {sigma2}")
    return 10.0 * math.log10(1.0 / (2.0 * sigma2))


@dataclass(frozen=True)
class ChannelParams:
    """Consistent (sigma2, Eb/N0, rate) triple."""

    sigma2: float
    ebno_db: float
    rate: float

    def __post_init__(self):
        if self.sigma2 <= 0:
            raise ValueError(f"noise variance must be positive, got {self.sigma2}")
        if not 0 < self.rate <= 1:
            raise ValueError(f"rate must be in (0, 1], got {self.rate}")
        recomputed = sigma2_to_ebno_db(self.sigma2, self.rate)
        if abs(recomputed - self.ebno_db) > 1e-9:
            raise ValueError(
                f"inconsistent parameters: ebno_db={self.ebno_db} but "
                f"sigma2={self.sigma2} and rate={self.rate} give {recomputed}"
            )

    @classmethod
    def from_ebno_db(cls, ebno_db: float, rate: float) -> "ChannelParams":
        return cls(sigma2=ebno_db_to_sigma2(ebno_db, rate), ebno_db=ebno_db, rate=rate)

    @classmethod
    def from_sigma2(cls, sigma2: float, rate: float) -> "ChannelParams":
        return cls(sigma2=sigma2, ebno_db=sigma2_to_ebno_db(sigma2, rate), rate=rate)

    @property
    def snr_db(self) -> float:
        return sigma2_to_snr_db(self.sigma2)
