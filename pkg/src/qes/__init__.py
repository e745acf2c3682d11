"""Quasi-exactly solvable spectra and first-order SUSY partners."""

from .bethe import BetheSolution, algebraize, bae_residual, refine_bae, solve_spectrum
from .catalog import CaseInstance, instantiate, physical_domain, registry, closed_form_oracle
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .odeform import OdeStandardForm, c_constraints, ode_residual, qes_consistency_check
from .poly import MonicPoly, eval_poly, log_deriv_sums, poly_from_roots, wronskian2
from .susy import (SusyPartner, apply_A_bare, apply_B_bare, build_partner, partner_ode_potential,
                   partner_poly, radial_wrap)

__version__ = "0.1.0"
