"""Robust variants: imperfect warden location and worst-case user CSI.

Channel uncertainty is modeled as a bounded additive error on each squared
channel gain: the realized gain lies in [estimate - eps, estimate + eps],
clamped below at zero.  Substituting the per-link bounds adversarially into
every rate term yields a lower bound on the average rate, which the solver
maximizes in place of the nominal objective.  Warden-location error does not
affect the optimal policy: with full power in quiet slots the warden's two
hypotheses coincide at every candidate distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .detection import min_error_sum, psi_params
from .model import (ChannelRealization, NetworkGeometry, NoiseProfile,
                    PowerPolicy, QosRequirements, SlotModel, snr)
from .rates import RateBreakdown
from .solver import (SolveResult, SolverConfig, _an_solve_terms, _solve_terms,
                     _terms_an, _terms_standard)


@dataclass(frozen=True)
class UncertaintyBudget:
    """Bounds on the estimation errors: eps_d on the warden distance (meters),
    eps_b/eps_c/eps_u on the squared channel gains of the three users."""

    eps_d: float = 0.0
    eps_b: float = 0.0
    eps_c: float = 0.0
    eps_u: float = 0.0

    def __post_init__(self):
        for name in ("eps_d", "eps_b", "eps_c", "eps_u"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class SnrBounds:
    """Per-link SNR intervals implied by the gain-error budgets."""

    gamma_b_lb: float
    gamma_b_ub: float
    gamma_c_lb: float
    gamma_c_ub: float
    gamma_u_lb: float
    gamma_u_ub: float

    def __post_init__(self):
        for link in ("b", "c", "u"):
            lb = getattr(self, f"gamma_{link}_lb")
            ub = getattr(self, f"gamma_{link}_ub")
            if lb < 0 or lb > ub:
                raise ValueError(f"gamma_{link} bounds must satisfy 0 <= lb <= ub")


def worst_case_snr_bounds(estimates: ChannelRealization, geo: NetworkGeometry,
                          noise: NoiseProfile, P: float,
                          budget: UncertaintyBudget) -> SnrBounds:
    """SNR intervals from the estimated gains and per-link error budgets.

    Lower bounds clamp at zero since a squared gain cannot go negative.  The
    warden link carries no CSI and has no bounds.
    """
    if P <= 0:
        raise ValueError("P must be positive")

    def bounds(g_hat, eps, d, sigma2):
        lb = snr(P, max(g_hat - eps, 0.0), d, geo.alpha, sigma2)
        ub = snr(P, g_hat + eps, d, geo.alpha, sigma2)
        return lb, ub

    b_lb, b_ub = bounds(estimates.g_ab, budget.eps_b, geo.d_ab, noise.sigma2_b)
    c_lb, c_ub = bounds(estimates.g_ac, budget.eps_c, geo.d_ac, noise.sigma2_c)
    u_lb, u_ub = bounds(estimates.g_au, budget.eps_u, geo.d_au, noise.sigma2_u)
    return SnrBounds(gamma_b_lb=b_lb, gamma_b_ub=b_ub,
                     gamma_c_lb=c_lb, gamma_c_ub=c_ub,
                     gamma_u_lb=u_lb, gamma_u_ub=u_ub)


def robust_average_rate_lb(pol: PowerPolicy, slots: SlotModel,
                           bounds: SnrBounds) -> RateBreakdown:
    """Worst-case average rate: every numerator takes the unfavorable end of
    its SNR interval and every interference term the other end."""
    def clamped(x):
        return max(x, 0.0)

    sec0 = clamped(math.log2(1.0 + pol.rho_s * bounds.gamma_b_lb)
                   - math.log2(1.0 + pol.rho_s * bounds.gamma_u_ub))
    rho = pol.rho_cs
    sinr_b = rho * bounds.gamma_b_lb / (1.0 + (1.0 - rho) * bounds.gamma_b_ub)
    sinr_u = rho * bounds.gamma_u_ub / (1.0 + (1.0 - rho) * bounds.gamma_u_lb)
    sec1 = clamped(math.log2(1.0 + sinr_b) - math.log2(1.0 + sinr_u))
    sinr_c = (1.0 - rho) * bounds.gamma_c_lb / (1.0 + rho * bounds.gamma_c_ub)
    cov = math.log2(1.0 + sinr_c)
    avg = slots.p_r0 * sec0 + slots.p_r1 * sec1 + slots.p_r1 * cov
    return RateBreakdown(sec_rate_psi0=sec0, sec_rate_psi1=sec1,
                         covert_rate=cov, average_rate=avg)


def robust_solve(estimates: ChannelRealization, geo: NetworkGeometry,
                 noise: NoiseProfile, P: float, slots: SlotModel,
                 qos: QosRequirements, budget: UncertaintyBudget,
                 cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Maximize the worst-case average rate under the CSI error budgets.

    Runs the same solver pipeline as the nominal problem with every rate and
    constraint term replaced by its bounded version; with zero budgets this is
    exactly the nominal solve.  Covertness needs no extra handling: full power
    in quiet slots keeps the warden blind at any candidate location.
    """
    bounds = worst_case_snr_bounds(estimates, geo, noise, P, budget)
    if bounds.gamma_b_lb <= bounds.gamma_u_ub:
        # worst-case secrecy rate is zero: send artificial noise instead
        terms = _terms_an(bounds.gamma_c_lb, bounds.gamma_c_ub, slots)
        return _an_solve_terms(terms, qos, P)
    terms = _terms_standard(bounds.gamma_b_lb, bounds.gamma_b_ub,
                            bounds.gamma_u_lb, bounds.gamma_u_ub,
                            bounds.gamma_c_lb, bounds.gamma_c_ub, slots)
    return _solve_terms(terms, qos, cfg, P)


def robust_covertness(pol: PowerPolicy, d_aw_estimate: float, eps_d: float,
                      alpha: float, sigma2_w: float, epsilon: float) -> bool:
    """Worst-case covertness over all warden distances within the location
    error budget.

    With rho_s = 1 the two hypotheses carry equal power at every distance, so
    the warden's best error sum is 1 regardless of the location error.  For
    rho_s < 1 the minimized error sum depends on the distance only through a
    common scaling of both hypothesis powers, so the extremes of the distance
    interval are checked.
    """
    if eps_d >= d_aw_estimate:
        raise ValueError("location error budget must be below the estimated distance")
    worst = 1.0
    for d in (d_aw_estimate - eps_d, d_aw_estimate + eps_d):
        report = min_error_sum(sigma2_w, psi_params(pol, d, alpha))
        worst = min(worst, report.min_error_sum)
    return worst >= 1.0 - epsilon
