"""Power-allocation optimizer for the covert-slot split rho_cs.

With the quiet-slot factor fixed at 1 (optimal whenever the secure user's SNR
beats the untrusted user's, and it keeps the warden's two hypotheses
indistinguishable), the problem reduces to one variable.  Every rate term in
every variant (plain, SIC, worst-case-bounded) is a signed sum of
log2(affine(rho_cs)) pieces, so the whole family shares one
difference-of-convex engine: concave pieces are kept, convex pieces (negated
concave logs) are replaced by tangents at the previous iterate, and the
resulting concave one-dimensional surrogate is maximized by golden-section
search inside the surrogate-feasible interval.  The surrogate minorizes the
true objective and its constraints inner-approximate the true ones, which
gives monotone ascent of the true objective from any feasible start.

A uniform-grid evaluation of the true objective and true constraints doubles
as the exhaustive-search oracle and as the solver's feasibility scan, so the
iterative solver is feasible whenever the same-resolution oracle is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .model import LinkSnrs, PowerPolicy, QosRequirements, SlotModel
from .rates import RateBreakdown, SicIndicator

LN2 = math.log(2.0)
_INVGOLD = (math.sqrt(5.0) - 1.0) / 2.0
# slack for "constraint satisfied" checks, both in grid masks and at returned
# points
_FEAS_TOL = 1e-9


class InfeasibleError(ValueError):
    """Raised when a subproblem has no feasible point."""


class Mode:
    JOINT = "Joint"
    ARTIFICIAL_NOISE = "ArtificialNoise"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class SolverConfig:
    """Iteration controls: stop when successive rho_cs iterates move by at
    most vartheta; oracle_grid sets the resolution of grid scans."""

    vartheta: float = 1e-6
    max_iters: int = 100
    init_rho_cs: float = 0.5
    oracle_grid: int = 1001

    def __post_init__(self):
        if self.vartheta <= 0:
            raise ValueError("vartheta must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if not 0.0 <= self.init_rho_cs <= 1.0:
            raise ValueError("init_rho_cs must lie in [0, 1]")
        if self.oracle_grid < 2:
            raise ValueError("oracle_grid must be at least 2")


@dataclass(frozen=True)
class SolveResult:
    policy: Optional[PowerPolicy]
    rates: Optional[RateBreakdown]
    mode: str
    iterations: int
    objective_trace: tuple[float, ...]

    @property
    def feasible(self) -> bool:
        return self.mode != Mode.INFEASIBLE


@dataclass(frozen=True)
class _Aff:
    """Affine function a + b*rho, positive on [0, 1]."""

    a: float
    b: float

    def value(self, rho: float) -> float:
        return self.a + self.b * rho

    def log2(self, rho: float) -> float:
        return math.log2(self.a + self.b * rho)

    def log2_tangent(self, rho: float, rho0: float) -> float:
        """Tangent of log2(a + b*rho) at rho0; over-estimates the log."""
        v0 = self.a + self.b * rho0
        return math.log2(v0) + self.b * (rho - rho0) / (v0 * LN2)

    def log2_np(self, rho: np.ndarray) -> np.ndarray:
        return np.log2(self.a + self.b * rho)

    @property
    def constant(self) -> bool:
        return self.b == 0.0


_UNIT = _Aff(1.0, 0.0)


@dataclass(frozen=True)
class _DcTerms:
    """One problem instance: rates as signed sums of log2(affine) pieces.

    Covert-slot secrecy rate:  log2(ab) - log2(bb) - log2(au) + log2(bu).
    Covert-slot covert rate:   log2(ac) - log2(bc).
    The quiet-slot secrecy rate is constant (full power) and stored clamped.
    Pieces entering with a minus sign (bb, au, bc) are the ones the surrogate
    replaces by tangents.
    """

    p_r0: float
    p_r1: float
    sec_psi0: float
    ab: _Aff
    bb: _Aff
    au: _Aff
    bu: _Aff
    ac: _Aff
    bc: _Aff

    # true (clamped) quantities --------------------------------------------
    def sec_psi1(self, rho: float) -> float:
        return (self.ab.log2(rho) - self.bb.log2(rho)
                - self.au.log2(rho) + self.bu.log2(rho))

    def covert_slot(self, rho: float) -> float:
        return self.ac.log2(rho) - self.bc.log2(rho)

    def covert_avg(self, rho: float) -> float:
        return self.p_r1 * self.covert_slot(rho)

    def secrecy_avg(self, rho: float) -> float:
        return self.p_r0 * self.sec_psi0 + self.p_r1 * max(self.sec_psi1(rho), 0.0)

    def objective(self, rho: float) -> float:
        return self.secrecy_avg(rho) + self.covert_avg(rho)

    # concave surrogates, tight at rho0 ------------------------------------
    def sec_psi1_surr(self, rho: float, rho0: float) -> float:
        return (self.ab.log2(rho) - self.bb.log2_tangent(rho, rho0)
                - self.au.log2_tangent(rho, rho0) + self.bu.log2(rho))

    def covert_avg_surr(self, rho: float, rho0: float) -> float:
        return self.p_r1 * (self.ac.log2(rho) - self.bc.log2_tangent(rho, rho0))

    def objective_surr(self, rho: float, rho0: float) -> float:
        return (self.p_r0 * self.sec_psi0
                + self.p_r1 * self.sec_psi1_surr(rho, rho0)
                + self.covert_avg_surr(rho, rho0))

    # vectorized true quantities (kept in lockstep with the scalar forms;
    # test_solver.py has a drift check) -------------------------------------
    def sec_psi1_np(self, rho: np.ndarray) -> np.ndarray:
        return (self.ab.log2_np(rho) - self.bb.log2_np(rho)
                - self.au.log2_np(rho) + self.bu.log2_np(rho))

    def covert_avg_np(self, rho: np.ndarray) -> np.ndarray:
        return self.p_r1 * (self.ac.log2_np(rho) - self.bc.log2_np(rho))

    def secrecy_avg_np(self, rho: np.ndarray) -> np.ndarray:
        return self.p_r0 * self.sec_psi0 + self.p_r1 * np.maximum(
            self.sec_psi1_np(rho), 0.0)

    def objective_np(self, rho: np.ndarray) -> np.ndarray:
        return self.secrecy_avg_np(rho) + self.covert_avg_np(rho)


def _clamped_diff(x: float, y: float) -> float:
    return max(math.log2(1.0 + x) - math.log2(1.0 + y), 0.0)


def _terms_standard(gamma_b_lb: float, gamma_b_ub: float, gamma_u_lb: float,
                    gamma_u_ub: float, gamma_c_lb: float, gamma_c_ub: float,
                    slots: SlotModel) -> _DcTerms:
    """Terms for the plain problem, or its worst-case-bounded version.

    The secure user's rate uses its lower SNR bound in numerators and upper
    bound in its own interference; the untrusted user adversarially the other
    way around; the covert user lower bound in the numerator and upper bound
    in the interference.  With lb == ub this is exactly the nominal problem.
    """
    return _DcTerms(
        p_r0=slots.p_r0, p_r1=slots.p_r1,
        sec_psi0=_clamped_diff(gamma_b_lb, gamma_u_ub),
        ab=_Aff(1.0 + gamma_b_ub, -(gamma_b_ub - gamma_b_lb)),
        bb=_Aff(1.0 + gamma_b_ub, -gamma_b_ub),
        au=_Aff(1.0 + gamma_u_lb, gamma_u_ub - gamma_u_lb),
        bu=_Aff(1.0 + gamma_u_lb, -gamma_u_lb),
        ac=_Aff(1.0 + gamma_c_lb, gamma_c_ub - gamma_c_lb),
        bc=_Aff(1.0, gamma_c_ub),
    )


def _terms_nominal(snrs: LinkSnrs, slots: SlotModel) -> _DcTerms:
    g = snrs
    return _terms_standard(g.gamma_b, g.gamma_b, g.gamma_u, g.gamma_u,
                           g.gamma_c, g.gamma_c, slots)


def _terms_sic(snrs: LinkSnrs, a: int, slots: SlotModel) -> _DcTerms:
    """Terms for the SIC variant: with a=1 the covert user is interference
    free, with a=0 the secure user is; the untrusted user is unchanged."""
    g = snrs
    if a == 1:
        ab, bb = _Aff(1.0 + g.gamma_b, 0.0), _Aff(1.0 + g.gamma_b, -g.gamma_b)
        ac, bc = _Aff(1.0 + g.gamma_c, -g.gamma_c), _UNIT
    else:
        ab, bb = _Aff(1.0, g.gamma_b), _UNIT
        ac, bc = _Aff(1.0 + g.gamma_c, 0.0), _Aff(1.0, g.gamma_c)
    return _DcTerms(
        p_r0=slots.p_r0, p_r1=slots.p_r1,
        sec_psi0=_clamped_diff(g.gamma_b, g.gamma_u),
        ab=ab, bb=bb,
        au=_Aff(1.0 + g.gamma_u, 0.0),
        bu=_Aff(1.0 + g.gamma_u, -g.gamma_u),
        ac=ac, bc=bc,
    )


def _terms_an(gamma_c_lb: float, gamma_c_ub: float, slots: SlotModel) -> _DcTerms:
    """Artificial-noise terms: no secrecy rate, covert term only."""
    return _DcTerms(
        p_r0=slots.p_r0, p_r1=slots.p_r1, sec_psi0=0.0,
        ab=_UNIT, bb=_UNIT, au=_UNIT, bu=_UNIT,
        ac=_Aff(1.0 + gamma_c_lb, gamma_c_ub - gamma_c_lb),
        bc=_Aff(1.0, gamma_c_ub),
    )


# ---------------------------------------------------------------------------
# scalar search primitives


def _golden_max(f: Callable[[float], float], lo: float, hi: float,
                tol: float = 1e-10) -> tuple[float, float]:
    """Maximize a concave f on [lo, hi] by golden-section search."""
    if hi - lo <= tol:
        x = 0.5 * (lo + hi)
        return x, f(x)
    x1 = hi - _INVGOLD * (hi - lo)
    x2 = lo + _INVGOLD * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVGOLD * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVGOLD * (hi - lo)
            f2 = f(x2)
    x = 0.5 * (lo + hi)
    return x, f(x)


def _bisect_root(f: Callable[[float], float], lo: float, hi: float,
                 tol: float = 1e-13) -> float:
    """Boundary of {f >= 0} on [lo, hi] given f(lo) >= 0 > f(hi); returns the
    feasible-side endpoint of the final bracket."""
    if f(lo) < 0:
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def _superlevel_interval(f: Callable[[float], float], level: float, lo: float,
                         hi: float, anchor: float) -> tuple[float, float]:
    """{rho in [lo, hi]: f(rho) >= level} for concave f with f(anchor) >= level.

    Concavity makes the set an interval containing the anchor; each side is
    either the box edge or found by bisection.
    """
    def g(x: float) -> float:
        return f(x) - level

    left = lo if g(lo) >= 0 else -_bisect_root(lambda x: g(-x), -anchor, -lo)
    right = hi if g(hi) >= 0 else _bisect_root(g, anchor, hi)
    return min(left, anchor), max(right, anchor)


# ---------------------------------------------------------------------------
# public closed forms


def fix_rho_s(gamma_b: float, gamma_u: float) -> float:
    """Optimal quiet-slot power factor: 1 whenever the secure user's SNR beats
    the untrusted user's (the secrecy rate then increases with rho_s, and full
    power makes the warden's hypotheses coincide)."""
    if gamma_b <= gamma_u:
        raise ValueError(
            "quiet-slot secrecy is not increasing for gamma_b <= gamma_u; "
            "dispatch to artificial-noise mode instead")
    return 1.0


def feasible_rho_cs_upper(gamma_c: float, p_r1: float,
                          r_cov_min: float) -> Optional[float]:
    """Largest rho_cs meeting the covert-rate floor, or None when even
    rho_cs = 0 cannot meet it.

    Inverts p_r1*log2((1+gamma_c)/(1+rho*gamma_c)) >= r_cov_min:
    rho_max = ((1+gamma_c)*2^(-r_cov_min/p_r1) - 1)/gamma_c, clamped to [0, 1].
    """
    if gamma_c <= 0 or p_r1 <= 0:
        raise ValueError("gamma_c and p_r1 must be positive")
    if r_cov_min <= 0:
        return 1.0
    if p_r1 * math.log2(1.0 + gamma_c) < r_cov_min:
        return None
    rho_max = ((1.0 + gamma_c) * 2.0 ** (-r_cov_min / p_r1) - 1.0) / gamma_c
    return min(max(rho_max, 0.0), 1.0)


# ---------------------------------------------------------------------------
# surrogate subproblem


def _covert_interval(terms: _DcTerms, r_cov_min: float,
                     rho0: float) -> tuple[float, float]:
    """Surrogate covert-feasible interval around a feasible rho0.

    The surrogate constraint p_r1*(log2(ac) - tangent(log2 bc)) >= r_cov_min
    under-estimates the true covert rate, so any point it admits is truly
    feasible.  When one of the two pieces is constant the bound is closed
    form; otherwise the concave left side is bracketed by bisection.
    """
    if r_cov_min <= 0:
        return 0.0, 1.0
    target = r_cov_min / terms.p_r1
    ac, bc = terms.ac, terms.bc
    if ac.constant:
        if bc.b <= 0:
            return 0.0, 1.0  # constraint constant in rho, holds at the anchor
        v0 = bc.value(rho0)
        slack = math.log2(ac.a) - math.log2(v0) - target
        hi = rho0 + slack * v0 * LN2 / bc.b
        return 0.0, min(max(hi, rho0), 1.0)
    if bc.constant:
        # single concave log: invert the true constraint exactly
        want = bc.a * 2.0**target  # need ac.value(rho) >= want
        if ac.b < 0:
            hi = (want - ac.a) / ac.b
            return 0.0, min(max(hi, rho0), 1.0)
        lo = (want - ac.a) / ac.b
        return max(min(lo, rho0), 0.0), 1.0

    def f(r: float) -> float:
        return terms.covert_avg_surr(r, rho0)

    return _superlevel_interval(f, r_cov_min, 0.0, 1.0, rho0)


def _secrecy_interval(terms: _DcTerms, qos: QosRequirements,
                      rho0: float) -> tuple[float, float]:
    """Surrogate secrecy-feasible interval around a feasible rho0.

    The epigraph variable standing in for the covert-slot secrecy rate is
    eliminated: at the subproblem optimum it sits on the concave surrogate of
    that rate, and feasibility requires the surrogate to stay above
    max(0, (r_sec_min - p_r0*sec_psi0)/p_r1).
    """
    eta_req = (qos.r_sec_min - terms.p_r0 * terms.sec_psi0) / terms.p_r1
    level = max(eta_req, 0.0)

    def f(r: float) -> float:
        return terms.sec_psi1_surr(r, rho0)

    return _superlevel_interval(f, level, 0.0, 1.0, rho0)


def _sca_step_terms(terms: _DcTerms, qos: QosRequirements, rho_prev: float,
                    golden_tol: float = 1e-10) -> float:
    """One surrogate maximization around rho_prev (assumed truly feasible)."""
    c_lo, c_hi = _covert_interval(terms, qos.r_cov_min, rho_prev)
    s_lo, s_hi = _secrecy_interval(terms, qos, rho_prev)
    lo, hi = max(c_lo, s_lo), min(c_hi, s_hi)
    if lo > hi:
        raise InfeasibleError("empty surrogate feasible set")
    # the anchor is feasible by construction; guard against rounding
    lo, hi = min(lo, rho_prev), max(hi, rho_prev)
    x, fx = _golden_max(lambda r: terms.objective_surr(r, rho_prev), lo, hi,
                        golden_tol)
    if fx < terms.objective_surr(rho_prev, rho_prev):
        return rho_prev
    return x


# ---------------------------------------------------------------------------
# grid evaluation (oracle and feasibility scan share this)


def _grid_scan(terms: _DcTerms, qos: QosRequirements, grid_points: int):
    """True objective and constraints on a uniform grid over [0, 1].

    Returns (grid, objective, feasibility mask, covert-slot secrecy values,
    covert averages).
    """
    grid = np.linspace(0.0, 1.0, grid_points)
    sec1 = terms.sec_psi1_np(grid)
    secrecy = terms.p_r0 * terms.sec_psi0 + terms.p_r1 * np.maximum(sec1, 0.0)
    covert = terms.covert_avg_np(grid)
    obj = secrecy + covert
    feasible = ((secrecy >= qos.r_sec_min - _FEAS_TOL)
                & (covert >= qos.r_cov_min - _FEAS_TOL))
    return grid, obj, feasible, sec1, covert


def _truly_feasible(terms: _DcTerms, qos: QosRequirements, rho: float) -> bool:
    return (terms.secrecy_avg(rho) >= qos.r_sec_min - _FEAS_TOL
            and terms.covert_avg(rho) >= qos.r_cov_min - _FEAS_TOL)


def _result(terms: _DcTerms, rho: float, mode: str, iterations: int,
            trace: list[float], total_power: float) -> SolveResult:
    rates = RateBreakdown(
        sec_rate_psi0=terms.sec_psi0,
        sec_rate_psi1=max(terms.sec_psi1(rho), 0.0),
        covert_rate=terms.covert_slot(rho),
        average_rate=terms.objective(rho),
    )
    policy = PowerPolicy(rho_s=1.0, rho_cs=rho, P=total_power)
    return SolveResult(policy=policy, rates=rates, mode=mode,
                       iterations=iterations, objective_trace=tuple(trace))


def _infeasible() -> SolveResult:
    return SolveResult(policy=None, rates=None, mode=Mode.INFEASIBLE,
                       iterations=0, objective_trace=())


def _grid_solve(terms: _DcTerms, qos: QosRequirements, grid_points: int,
                mode: str, total_power: float, polish: bool = False) -> SolveResult:
    """Best feasible point of the true problem on a uniform rho_cs grid."""
    grid, obj, feasible, _, _ = _grid_scan(terms, qos, grid_points)
    if not feasible.any():
        return _infeasible()
    idx = int(np.argmax(np.where(feasible, obj, -np.inf)))
    rho = float(grid[idx])
    if polish:
        # local refinement of the clamped objective between grid neighbours
        lo = float(grid[max(idx - 1, 0)])
        hi = float(grid[min(idx + 1, grid_points - 1)])
        x, fx = _golden_max(terms.objective, lo, hi)
        if fx > obj[idx] and _truly_feasible(terms, qos, x):
            rho = x
    return _result(terms, rho, mode, 0, [terms.objective(rho)], total_power)


# ---------------------------------------------------------------------------
# iterative solve


def _solve_terms(terms: _DcTerms, qos: QosRequirements, cfg: SolverConfig,
                 total_power: float) -> SolveResult:
    """Feasibility scan, then iterative surrogate ascent, for one problem
    already known to be in the joint regime."""
    if terms.p_r1 <= 0.0:
        # covert slots never occur: rho_cs is immaterial
        if (qos.r_cov_min > _FEAS_TOL
                or terms.p_r0 * terms.sec_psi0 < qos.r_sec_min - _FEAS_TOL):
            return _infeasible()
        return _result(terms, 1.0, Mode.JOINT, 0,
                       [terms.objective(1.0)], total_power)
    if terms.covert_avg(0.0) < qos.r_cov_min - _FEAS_TOL:
        return _infeasible()

    grid, obj, feasible, sec1, covert = _grid_scan(terms, qos, cfg.oracle_grid)
    if not feasible.any():
        return _infeasible()
    best_idx = int(np.argmax(np.where(feasible, obj, -np.inf)))

    # the surrogate machinery assumes the covert-slot secrecy clamp is slack;
    # bounded (worst-case) instances can violate that, in which case the
    # clamped problem is handled on the grid directly
    in_reach = covert >= qos.r_cov_min - _FEAS_TOL
    if np.any(sec1[in_reach] < -1e-12):
        return _grid_solve(terms, qos, cfg.oracle_grid, Mode.JOINT,
                           total_power, polish=True)

    feasible_rhos = grid[feasible]
    rho0 = float(feasible_rhos[np.argmin(np.abs(feasible_rhos - cfg.init_rho_cs))])

    def run(start: float) -> tuple[float, int, list[float]]:
        rho = start
        trace = [terms.objective(rho)]
        iters = 0
        for _ in range(cfg.max_iters):
            rho_next = _sca_step_terms(terms, qos, rho)
            iters += 1
            trace.append(terms.objective(rho_next))
            done = abs(rho_next - rho) <= cfg.vartheta
            rho = rho_next
            if done:
                break
        return rho, iters, trace

    rho_star, iters, trace = run(rho0)
    # the scan already evaluated the whole grid: restart from its best point
    # if the first ascent stalled below it
    if obj[best_idx] > trace[-1] + 1e-9:
        rho_alt, iters_alt, trace_alt = run(float(grid[best_idx]))
        if trace_alt[-1] > trace[-1]:
            rho_star, iters, trace = rho_alt, iters_alt, trace_alt
    return _result(terms, rho_star, Mode.JOINT, iters, trace, total_power)


def _an_solve_terms(terms: _DcTerms, qos: QosRequirements,
                    total_power: float) -> SolveResult:
    """Artificial-noise problem: the covert rate is strictly decreasing in
    rho_cs, so rho_cs = 0 is optimal whenever it is feasible."""
    if terms.p_r1 <= 0.0:
        if qos.r_cov_min > _FEAS_TOL:
            return _infeasible()
        return _result(terms, 0.0, Mode.ARTIFICIAL_NOISE, 0, [0.0], total_power)
    if terms.covert_avg(0.0) < qos.r_cov_min - _FEAS_TOL:
        return _infeasible()
    return _result(terms, 0.0, Mode.ARTIFICIAL_NOISE, 0,
                   [terms.objective(0.0)], total_power)


# ---------------------------------------------------------------------------
# public operations


def surrogate_objective(rho_cs: float, rho_prev: float, snrs: LinkSnrs,
                        slots: SlotModel) -> float:
    """Concave surrogate of the average rate, tangent-tight at rho_prev."""
    return _terms_nominal(snrs, slots).objective_surr(rho_cs, rho_prev)


def sca_step(rho_prev: float, snrs: LinkSnrs, slots: SlotModel,
             qos: QosRequirements) -> float:
    """Maximize the surrogate around a feasible rho_prev; raises
    InfeasibleError if rho_prev is infeasible or the surrogate set is empty."""
    terms = _terms_nominal(snrs, slots)
    if not _truly_feasible(terms, qos, rho_prev):
        raise InfeasibleError("rho_prev violates the true constraints")
    return _sca_step_terms(terms, qos, rho_prev)


def dc_solve(snrs: LinkSnrs, slots: SlotModel, qos: QosRequirements,
             cfg: SolverConfig = SolverConfig(),
             total_power: float = 1.0) -> SolveResult:
    """Solve the joint problem; falls back to artificial-noise mode when the
    untrusted user's SNR is at least the secure user's."""
    if snrs.gamma_b <= snrs.gamma_u:
        return an_solve(snrs, slots, qos, cfg, total_power)
    return _solve_terms(_terms_nominal(snrs, slots), qos, cfg, total_power)


def an_solve(snrs: LinkSnrs, slots: SlotModel, qos: QosRequirements,
             cfg: SolverConfig = SolverConfig(),
             total_power: float = 1.0) -> SolveResult:
    """Artificial-noise mode: the secure stream carries noise, only the covert
    rate matters and only the covert-rate floor binds."""
    terms = _terms_an(snrs.gamma_c, snrs.gamma_c, slots)
    return _an_solve_terms(terms, qos, total_power)


def sic_solve(snrs: LinkSnrs, slots: SlotModel, qos: QosRequirements,
              a: SicIndicator, cfg: SolverConfig = SolverConfig(),
              total_power: float = 1.0) -> SolveResult:
    """Solve the SIC variant with the given decoding order."""
    if snrs.gamma_b <= snrs.gamma_u:
        # artificial noise cannot be cancelled, so SIC changes nothing here
        return an_solve(snrs, slots, qos, cfg, total_power)
    return _solve_terms(_terms_sic(snrs, a.a, slots), qos, cfg, total_power)


def grid_oracle(snrs: LinkSnrs, slots: SlotModel, qos: QosRequirements,
                grid_points: int, rate_fn: str = "standard",
                a: SicIndicator | None = None,
                total_power: float = 1.0) -> SolveResult:
    """Exhaustive-search baseline: best feasible point of the true problem on
    a uniform rho_cs grid.  ``rate_fn`` selects the objective: "standard",
    "sic" (requires ``a``) or "an"."""
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")
    if rate_fn == "standard":
        terms = _terms_nominal(snrs, slots)
        mode = Mode.JOINT
    elif rate_fn == "sic":
        if a is None:
            raise ValueError("rate_fn='sic' requires the SIC indicator")
        terms = _terms_sic(snrs, a.a, slots)
        mode = Mode.JOINT
    elif rate_fn == "an":
        terms = _terms_an(snrs.gamma_c, snrs.gamma_c, slots)
        qos = replace(qos, r_sec_min=0.0)
        mode = Mode.ARTIFICIAL_NOISE
    else:
        raise ValueError(f"unknown rate_fn {rate_fn!r}")
    return _grid_solve(terms, qos, grid_points, mode, total_power)
