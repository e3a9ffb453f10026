"""Per-slot SINRs and rates: secrecy rate, covert rate, slot-averaged rate,
the artificial-noise variant and the successive-interference-cancellation
(SIC) variant.

Rates are bps/Hz.  The wiretap clamp [x]^+ = max(x, 0) is applied wherever a
rate difference could go negative.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .model import ChannelRealization, LinkSnrs, NetworkGeometry, PowerPolicy, SlotModel


class SlotKind(enum.Enum):
    """Quiet slot (no covert stream) or covert slot (both streams on air)."""

    Psi0 = 0
    Psi1 = 1


@dataclass(frozen=True)
class RateBreakdown:
    """Slot-conditional rates plus their probability-weighted average.

    ``covert_rate`` is conditional on a covert slot; ``average_rate`` equals
    p_r0 * sec_rate_psi0 + p_r1 * sec_rate_psi1 + p_r1 * covert_rate.
    """

    sec_rate_psi0: float
    sec_rate_psi1: float
    covert_rate: float
    average_rate: float


@dataclass(frozen=True)
class SicIndicator:
    """Decoding order for SIC: a=1 when the covert user has the stronger
    normalized channel and cancels the secure stream, a=0 for the reverse."""

    a: int

    def __post_init__(self):
        if self.a not in (0, 1):
            raise ValueError("a must be 0 or 1")


def sinr_bob(slot: SlotKind, pol: PowerPolicy, gamma_b: float) -> float:
    """Secure user's SINR: rho_s*g in quiet slots, covert stream interferes otherwise."""
    if slot is SlotKind.Psi0:
        return pol.rho_s * gamma_b
    return pol.rho_cs * gamma_b / (1.0 + (1.0 - pol.rho_cs) * gamma_b)


def sinr_untrusted(slot: SlotKind, pol: PowerPolicy, gamma_u: float) -> float:
    """Untrusted user's SINR; same structure as the secure user's."""
    if slot is SlotKind.Psi0:
        return pol.rho_s * gamma_u
    return pol.rho_cs * gamma_u / (1.0 + (1.0 - pol.rho_cs) * gamma_u)


def sinr_carol(slot: SlotKind, pol: PowerPolicy, gamma_c: float) -> float:
    """Covert user's SINR: zero in quiet slots, secure stream interferes otherwise."""
    if slot is SlotKind.Psi0:
        return 0.0
    return (1.0 - pol.rho_cs) * gamma_c / (1.0 + pol.rho_cs * gamma_c)


def secrecy_rate(slot: SlotKind, pol: PowerPolicy, gamma_b: float,
                 gamma_u: float) -> float:
    """[log2(1 + SINR_bob) - log2(1 + SINR_untrusted)]^+ for the given slot."""
    r = math.log2(1.0 + sinr_bob(slot, pol, gamma_b)) - math.log2(
        1.0 + sinr_untrusted(slot, pol, gamma_u))
    return max(r, 0.0)


def covert_rate(pol: PowerPolicy, gamma_c: float, p_r1: float) -> float:
    """Average covert rate p_r1 * log2(1 + SINR_carol) over covert slots.

    Algebraically equals p_r1 * (log2(1+gamma_c) - log2(1+rho_cs*gamma_c)),
    the split the solver's convex surrogate is built on.
    """
    return p_r1 * math.log2(1.0 + sinr_carol(SlotKind.Psi1, pol, gamma_c))


def average_rate(pol: PowerPolicy, slots: SlotModel, snrs: LinkSnrs) -> RateBreakdown:
    """Slot-probability-weighted sum of both secrecy terms and the covert term."""
    sec0 = secrecy_rate(SlotKind.Psi0, pol, snrs.gamma_b, snrs.gamma_u)
    sec1 = secrecy_rate(SlotKind.Psi1, pol, snrs.gamma_b, snrs.gamma_u)
    cov = math.log2(1.0 + sinr_carol(SlotKind.Psi1, pol, snrs.gamma_c))
    avg = slots.p_r0 * sec0 + slots.p_r1 * sec1 + slots.p_r1 * cov
    return RateBreakdown(sec_rate_psi0=sec0, sec_rate_psi1=sec1,
                         covert_rate=cov, average_rate=avg)


def average_rate_an(pol: PowerPolicy, slots: SlotModel, gamma_c: float) -> float:
    """Average rate when the secure stream carries artificial noise: only the
    covert term survives."""
    return slots.p_r1 * math.log2(1.0 + sinr_carol(SlotKind.Psi1, pol, gamma_c))


def sic_indicator(geo: NetworkGeometry, ch: ChannelRealization) -> SicIndicator:
    """a=1 iff g_ab/d_ab^alpha < g_ac/d_ac^alpha (ties resolve to a=0)."""
    strength_b = ch.g_ab / geo.d_ab**geo.alpha
    strength_c = ch.g_ac / geo.d_ac**geo.alpha
    return SicIndicator(a=1 if strength_b < strength_c else 0)


def sinr_bob_sic(slot: SlotKind, pol: PowerPolicy, gamma_b: float, a: int) -> float:
    """Secure user's SINR under SIC: interference-free in covert slots when a=0."""
    if slot is SlotKind.Psi0:
        return pol.rho_s * gamma_b
    return pol.rho_cs * gamma_b / (1.0 + a * (1.0 - pol.rho_cs) * gamma_b)


def sinr_carol_sic(slot: SlotKind, pol: PowerPolicy, gamma_c: float, a: int) -> float:
    """Covert user's SINR under SIC: interference-free when a=1."""
    if slot is SlotKind.Psi0:
        return 0.0
    return (1.0 - pol.rho_cs) * gamma_c / (1.0 + (1 - a) * pol.rho_cs * gamma_c)


def average_rate_sic(pol: PowerPolicy, slots: SlotModel, snrs: LinkSnrs,
                     a: SicIndicator) -> RateBreakdown:
    """Average rate when both legitimate users know the covert slots and one of
    them cancels the other's stream; the untrusted user's SINR is unchanged."""
    sec0 = secrecy_rate(SlotKind.Psi0, pol, snrs.gamma_b, snrs.gamma_u)
    sec1 = max(
        math.log2(1.0 + sinr_bob_sic(SlotKind.Psi1, pol, snrs.gamma_b, a.a))
        - math.log2(1.0 + sinr_untrusted(SlotKind.Psi1, pol, snrs.gamma_u)),
        0.0)
    cov = math.log2(1.0 + sinr_carol_sic(SlotKind.Psi1, pol, snrs.gamma_c, a.a))
    avg = slots.p_r0 * sec0 + slots.p_r1 * sec1 + slots.p_r1 * cov
    return RateBreakdown(sec_rate_psi0=sec0, sec_rate_psi1=sec1,
                         covert_rate=cov, average_rate=avg)
