"""Network geometry, noise, slot statistics, Rayleigh channel sampling and
the mapping from physical parameters to normalized link SNRs.

All internal math is linear-scale; dB inputs are converted once at ingestion
with ``db_to_linear``.  Channels are represented by their squared magnitude
(unit-mean exponential), since every downstream formula consumes only powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RandomSource = "int | np.random.SeedSequence | np.random.Generator"


def db_to_linear(x_db: float) -> float:
    """10^(x/10)."""
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    if x <= 0:
        raise ValueError("dB conversion requires a positive linear value")
    return 10.0 * np.log10(x)


def as_generator(seed_or_stream) -> np.random.Generator:
    """Accept an int seed, a SeedSequence or a Generator and return a Generator."""
    if isinstance(seed_or_stream, np.random.Generator):
        return seed_or_stream
    return np.random.default_rng(seed_or_stream)


@dataclass(frozen=True)
class NetworkGeometry:
    """Transmitter-to-node distances in meters and the path-loss exponent."""

    d_ab: float
    d_ac: float
    d_au: float
    d_aw: float
    alpha: float

    def __post_init__(self):
        for name in ("d_ab", "d_ac", "d_au", "d_aw"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")


@dataclass(frozen=True)
class NoiseProfile:
    """Receiver noise powers, linear scale."""

    sigma2_b: float
    sigma2_c: float
    sigma2_u: float
    sigma2_w: float

    def __post_init__(self):
        for name in ("sigma2_b", "sigma2_c", "sigma2_u", "sigma2_w"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class ChannelRealization:
    """Squared channel magnitudes for one fading draw (unit-mean exponential)."""

    g_ab: float
    g_ac: float
    g_au: float
    g_aw: float

    def __post_init__(self):
        for name in ("g_ab", "g_ac", "g_au", "g_aw"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class LinkSnrs:
    """Normalized link SNRs gamma = P*g / (d^alpha * sigma2), one per node."""

    gamma_b: float
    gamma_c: float
    gamma_u: float
    gamma_w: float

    def __post_init__(self):
        for name in ("gamma_b", "gamma_c", "gamma_u", "gamma_w"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class SlotModel:
    """Probabilities of a quiet (Psi0) versus covert (Psi1) time slot."""

    p_r0: float
    p_r1: float

    def __post_init__(self):
        if not (0.0 <= self.p_r0 <= 1.0 and 0.0 <= self.p_r1 <= 1.0):
            raise ValueError("slot probabilities must lie in [0, 1]")
        if abs(self.p_r0 + self.p_r1 - 1.0) > 1e-12:
            raise ValueError("p_r0 + p_r1 must equal 1")

    @classmethod
    def from_p_r1(cls, p_r1: float) -> "SlotModel":
        return cls(p_r0=1.0 - p_r1, p_r1=p_r1)


@dataclass(frozen=True)
class PowerPolicy:
    """Power split factors rho_s (quiet slots) and rho_cs (covert slots).

    In a quiet slot the secure stream gets rho_s * P; in a covert slot it gets
    rho_cs * P and the covert stream gets (1 - rho_cs) * P.
    """

    rho_s: float
    rho_cs: float
    P: float

    def __post_init__(self):
        if not 0.0 <= self.rho_s <= 1.0:
            raise ValueError("rho_s must lie in [0, 1]")
        if not 0.0 <= self.rho_cs <= 1.0:
            raise ValueError("rho_cs must lie in [0, 1]")
        if self.P <= 0:
            raise ValueError("P must be positive")


@dataclass(frozen=True)
class QosRequirements:
    """Minimum secrecy / covert rates (bps/Hz) and the detection-error slack."""

    r_sec_min: float
    r_cov_min: float
    epsilon: float

    def __post_init__(self):
        if self.r_sec_min < 0 or self.r_cov_min < 0:
            raise ValueError("rate requirements must be nonnegative")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon must lie in [0, 1]")


def sample_channel(seed_or_stream) -> ChannelRealization:
    """Draw one Rayleigh-fading realization: each |h|^2 ~ Exponential(mean 1)."""
    rng = as_generator(seed_or_stream)
    g = rng.exponential(scale=1.0, size=4)
    return ChannelRealization(g_ab=g[0], g_ac=g[1], g_au=g[2], g_aw=g[3])


def snr(P: float, g: float, d: float, alpha: float, sigma2: float) -> float:
    """gamma = P * g / (d^alpha * sigma2)."""
    return P * g / (d**alpha * sigma2)


def link_snrs(geo: NetworkGeometry, noise: NoiseProfile, P: float,
              ch: ChannelRealization) -> LinkSnrs:
    """Normalized SNRs for all four links under total transmit power P."""
    if P <= 0:
        raise ValueError("P must be positive")
    return LinkSnrs(
        gamma_b=snr(P, ch.g_ab, geo.d_ab, geo.alpha, noise.sigma2_b),
        gamma_c=snr(P, ch.g_ac, geo.d_ac, geo.alpha, noise.sigma2_c),
        gamma_u=snr(P, ch.g_au, geo.d_au, geo.alpha, noise.sigma2_u),
        gamma_w=snr(P, ch.g_aw, geo.d_aw, geo.alpha, noise.sigma2_w),
    )
