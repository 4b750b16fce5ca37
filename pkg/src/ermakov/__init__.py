"""Numerical laboratory for the width dynamics of Gaussian wave packets.

The width of a Gaussian packet in a harmonic trap obeys a family of
nonlinear oscillator equations: conservative, damped, thermal (field
over inverse temperature, in two couplings), high-temperature, and
radiative.  This package integrates all of them with adaptive error
control, provides the closed-form solutions and equilibria for use as
oracles, checks the hydrodynamic consistency of the Gaussian ansatz on
a spatial grid, and ships a verification suite plus a CLI front end.
"""

from .core import (ELECTRON_MASS, ELEMENTARY_CHARGE, SPEED_OF_LIGHT,
                   VACUUM_PERMITTIVITY, ZERO_TEMPERATURE, PhysicalParams,
                   State, State3, energy, ground_state_sigma,
                   make_natural_params, radiation_coefficient)
from .models import (ModelVariant, OVERDAMPED_VARIANTS,
                     SECOND_ORDER_VARIANTS, acceleration,
                     conservative_acceleration, damped_acceleration,
                     high_temperature_acceleration, overdamped_velocity,
                     quantum_pressure_acceleration, radiative_jerk,
                     radiative_reduced_acceleration, residual,
                     thermal_pressure_acceleration)
from .analytic import (equilibrium_coth, equilibrium_high_temperature,
                       free_spreading, overdamped_relaxation,
                       pinney_acceleration, pinney_solution, subdiffusion)
from .integrators import (IntegratorConfig, Scheme, StopReason, Trajectory,
                          integrate, integrate_overdamped, sample)
from .thermal import (BetaGrid, ThermalField, ThermalTrajectory,
                      ThermalVariant, acceleration_field, beta_derivative,
                      cumulative_quantum_integral, equilibrium_profile_coth,
                      equilibrium_residual, integrate_thermal,
                      stationary_profile, thermal_term_beta_derivative,
                      thermal_term_integral)
from .madelung import (GaussianSnapshot, SpatialGrid, continuity_residual,
                       force_balance_residual, force_balance_residual_thermal,
                       gaussian_density, quantum_force, quantum_potential,
                       quantum_potential_numeric, velocity_field)
from .verification import CheckResult, Report, run_suites, suite_names

__version__ = "0.1.0"

__all__ = [
    "ELECTRON_MASS", "ELEMENTARY_CHARGE", "SPEED_OF_LIGHT",
    "VACUUM_PERMITTIVITY", "ZERO_TEMPERATURE", "PhysicalParams", "State",
    "State3", "energy", "ground_state_sigma", "make_natural_params",
    "radiation_coefficient",
    "ModelVariant", "OVERDAMPED_VARIANTS", "SECOND_ORDER_VARIANTS",
    "acceleration", "conservative_acceleration", "damped_acceleration",
    "high_temperature_acceleration", "overdamped_velocity",
    "quantum_pressure_acceleration", "radiative_jerk",
    "radiative_reduced_acceleration", "residual",
    "thermal_pressure_acceleration",
    "equilibrium_coth", "equilibrium_high_temperature", "free_spreading",
    "overdamped_relaxation", "pinney_acceleration", "pinney_solution",
    "subdiffusion",
    "IntegratorConfig", "Scheme", "StopReason", "Trajectory", "integrate",
    "integrate_overdamped", "sample",
    "BetaGrid", "ThermalField", "ThermalTrajectory", "ThermalVariant",
    "acceleration_field", "beta_derivative", "cumulative_quantum_integral",
    "equilibrium_profile_coth", "equilibrium_residual", "integrate_thermal",
    "stationary_profile", "thermal_term_beta_derivative",
    "thermal_term_integral",
    "GaussianSnapshot", "SpatialGrid", "continuity_residual",
    "force_balance_residual", "force_balance_residual_thermal",
    "gaussian_density", "quantum_force", "quantum_potential",
    "quantum_potential_numeric", "velocity_field",
    "CheckResult", "Report", "run_suites", "suite_names",
    "__version__",
]
