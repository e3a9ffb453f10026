"""Power-allocation optimization and Monte Carlo simulation for joint
information-theoretic secrecy and covert communication against an untrusted
user and a warden."""

from .detection import (DetectionReport, PsiParams, covertness_satisfied,
                        error_sum, fa_prob, md_prob, min_error_sum, psi_params,
                        simulate_detection)
from .model import (ChannelRealization, LinkSnrs, NetworkGeometry, NoiseProfile,
                    PowerPolicy, QosRequirements, SlotModel, db_to_linear,
                    linear_to_db, link_snrs, sample_channel)
from .rates import (RateBreakdown, SicIndicator, SlotKind, average_rate,
                    average_rate_an, average_rate_sic, covert_rate,
                    secrecy_rate, sic_indicator, sinr_bob, sinr_carol,
                    sinr_untrusted)
from .robust import (SnrBounds, UncertaintyBudget, robust_average_rate_lb,
                     robust_covertness, robust_solve, worst_case_snr_bounds)
from .solver import (InfeasibleError, Mode, SolveResult, SolverConfig, an_solve,
                     dc_solve, feasible_rho_cs_upper, fix_rho_s, grid_oracle,
                     sca_step, sic_solve, surrogate_objective)

__all__ = [name for name in dir() if not name.startswith("_")]
