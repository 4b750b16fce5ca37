"""Width dynamics resolved over inverse temperature.

A thermal state is a field: one width per inverse-temperature node on a
uniform grid.  Two couplings across the grid are provided and should
agree at equilibrium:

* ``ThermalVariant.BETA_DERIVATIVE`` keeps the usual quantum pressure
  and adds a term built from the slope of the width across the grid.
* ``ThermalVariant.INTEGRAL_FORM`` replaces both by a single term built
  from the running integral of the quantum pressure density from the
  high-temperature end of the grid.

Both reproduce the canonical equilibrium width profile; the integral
form folds the quantum pressure into its kernel, so the grid must reach
far enough toward beta = 0 for its leading panel to be accurate.

The inverse temperatures are supplied by the grid.  The ``beta`` entry
of the physical parameter set is not consulted here; it only matters to
the single-temperature models.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .core import PhysicalParams
from .integrators import (IntegratorConfig, Scheme, StopReason, _drive,
                        _eval_segment)


class ThermalVariant(Enum):
    """How neighbouring temperatures enter the width equation."""

    BETA_DERIVATIVE = "beta-derivative"
    INTEGRAL_FORM = "integral-form"


@dataclass(frozen=True)
class BetaGrid:
    """Uniform grid of inverse temperatures, strictly positive.

    Five nodes is the minimum for the one-sided edge stencils and the
    leading integral panel to make sense.
    """

    beta_min: float
    delta: float
    count: int

    def __post_init__(self) -> None:
        if not (self.beta_min > 0.0 and math.isfinite(self.beta_min)):
            raise ValueError("beta_min must be positive and finite")
        if not (self.delta > 0.0 and math.isfinite(self.delta)):
            raise ValueError("delta must be positive and finite")
        if self.count < 5:
            raise ValueError("need at least 5 grid nodes")

    @property
    def nodes(self) -> np.ndarray:
        return self.beta_min + self.delta * np.arange(self.count)

    @property
    def beta_max(self) -> float:
        return self.beta_min + self.delta * (self.count - 1)

    @classmethod
    def from_range(cls, beta_min: float, beta_max: float,
                   count: int) -> "BetaGrid":
        if count < 5:
            raise ValueError("need at least 5 grid nodes")
        if not beta_max > beta_min:
            raise ValueError("beta_max must exceed beta_min")
        return cls(beta_min=beta_min, delta=(beta_max - beta_min) / (count - 1),
                   count=count)

    @classmethod
    def from_nodes(cls, nodes) -> "BetaGrid":
        arr = np.asarray(nodes, dtype=float)
        if arr.ndim != 1 or arr.size < 5:
            raise ValueError("need a flat array of at least 5 nodes")
        delta = (arr[-1] - arr[0]) / (arr.size - 1)
        if not delta > 0.0:
            raise ValueError("nodes must increase")
        if np.max(np.abs(np.diff(arr) - delta)) > 1e-12 * (abs(arr[-1])
                                                           + delta):
            raise ValueError("nodes must be uniformly spaced")
        return cls(beta_min=float(arr[0]), delta=float(delta),
                   count=int(arr.size))


@dataclass(frozen=True)
class ThermalField:
    """Width and width rate per grid node at one instant."""

    grid: BetaGrid
    sigma: np.ndarray
    sigma_dot: np.ndarray

    def __post_init__(self) -> None:
        sig = np.asarray(self.sigma, dtype=float)
        vel = np.asarray(self.sigma_dot, dtype=float)
        if sig.shape != (self.grid.count,) or vel.shape != (self.grid.count,):
            raise ValueError("field arrays must have one entry per grid node")
        object.__setattr__(self, "sigma", sig)
        object.__setattr__(self, "sigma_dot", vel)

    @classmethod
    def at_rest(cls, grid: BetaGrid, sigma) -> "ThermalField":
        sig = np.broadcast_to(np.asarray(sigma, dtype=float),
                              (grid.count,)).copy()
        return cls(grid=grid, sigma=sig, sigma_dot=np.zeros(grid.count))


def beta_derivative(values: np.ndarray, grid: BetaGrid) -> np.ndarray:
    """Second-order derivative of a nodal field across the grid.

    Central differences inside, one-sided three-point stencils at the
    two edges.
    """
    v = np.asarray(values, dtype=float)
    if v.shape != (grid.count,):
        raise ValueError("field must have one entry per grid node")
    two_d = 2.0 * grid.delta
    out = np.empty_like(v)
    out[1:-1] = (v[2:] - v[:-2]) / two_d
    out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / two_d
    out[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / two_d
    return out


def thermal_term_beta_derivative(sigma: np.ndarray, grid: BetaGrid,
                                 params: PhysicalParams) -> np.ndarray:
    """Cooling-slope acceleration term, per node.

    Proportional to the width slope across the grid; positive wherever
    the width shrinks toward colder temperatures.
    """
    slope = beta_derivative(sigma, grid)
    return -2.0 * slope / (params.m * np.square(sigma))


def cumulative_quantum_integral(sigma: np.ndarray, grid: BetaGrid,
                                params: PhysicalParams) -> np.ndarray:
    """Running integral of the quantum pressure density from beta = 0.

    Trapezoidal rule on the grid, plus a leading panel over [0, beta_min]
    that extrapolates the density linearly to beta = 0 and clips it at
    zero so the panel can never go negative.
    """
    g = params.hbar ** 2 / (4.0 * params.m * np.asarray(sigma,
                                                        dtype=float) ** 4)
    inner = np.concatenate(([0.0],
                            np.cumsum(0.5 * (g[1:] + g[:-1]) * grid.delta)))
    g_origin = max(g[0] - grid.beta_min * (g[1] - g[0]) / grid.delta, 0.0)
    panel = 0.5 * (g_origin + g[0]) * grid.beta_min
    return panel + inner


def thermal_term_integral(sigma: np.ndarray, grid: BetaGrid,
                          params: PhysicalParams) -> np.ndarray:
    """Integral-kernel acceleration term, per node.

    Contains the quantum pressure implicitly, so variants using it drop
    the explicit pressure term.
    """
    sig = np.asarray(sigma, dtype=float)
    integral = cumulative_quantum_integral(sig, grid, params)
    return (1.0 / sig + sig * integral) / (params.m * grid.nodes)


def acceleration_field(variant: ThermalVariant, sigma: np.ndarray,
                       sigma_dot: np.ndarray, grid: BetaGrid,
                       params: PhysicalParams) -> np.ndarray:
    """Width acceleration at every grid node."""
    sig = np.asarray(sigma, dtype=float)
    vel = np.asarray(sigma_dot, dtype=float)
    base = -params.omega0 ** 2 * sig - (params.b / params.m) * vel
    if variant is ThermalVariant.BETA_DERIVATIVE:
        pressure = params.hbar ** 2 / (4.0 * params.m ** 2 * sig ** 3)
        return base + pressure + thermal_term_beta_derivative(sig, grid,
                                                              params)
    if variant is ThermalVariant.INTEGRAL_FORM:
        return base + thermal_term_integral(sig, grid, params)
    raise ValueError(f"unknown thermal variant: {variant!r}")


def equilibrium_profile_coth(grid: BetaGrid,
                             params: PhysicalParams) -> ThermalField:
    """Canonical equilibrium field, at rest, over the grid nodes."""
    if params.omega0 <= 0.0:
        raise ValueError("the equilibrium profile requires omega0 > 0")
    u = 0.5 * params.hbar * params.omega0 * grid.nodes
    sigma_sq = params.hbar / (2.0 * params.m * params.omega0 * np.tanh(u))
    return ThermalField.at_rest(grid, np.sqrt(sigma_sq))


def equilibrium_residual(variant: ThermalVariant, field: ThermalField,
                         params: PhysicalParams) -> np.ndarray:
    """Acceleration defect of a candidate field, sign flipped.

    Zero everywhere exactly when the field is stationary under the
    chosen variant's discrete dynamics.
    """
    return -acceleration_field(variant, field.sigma, field.sigma_dot,
                               field.grid, params)


@dataclass(frozen=True)
class ThermalTrajectory:
    """Time history of a thermal field run.

    ``sigma`` and ``sigma_dot`` are (time, node) arrays.  ``sample``
    interpolates the stacked field between accepted nodes exactly like
    the single-trajectory version.
    """

    variant: ThermalVariant
    params: PhysicalParams
    grid: BetaGrid
    times: np.ndarray
    states: np.ndarray
    step_sizes: np.ndarray
    error_estimates: np.ndarray
    dense_coefficients: np.ndarray = field(repr=False)
    n_accepted: int = 0
    n_rejected: int = 0
    n_rhs: int = 0

    @property
    def sigma(self) -> np.ndarray:
        return self.states[:, :self.grid.count]

    @property
    def sigma_dot(self) -> np.ndarray:
        return self.states[:, self.grid.count:]

    def sample(self, times) -> np.ndarray:
        """Interpolated stacked fields (width block then rate block)."""
        ts = np.atleast_1d(np.asarray(times, dtype=float))
        lo, hi = self.times[0], self.times[-1]
        if np.any(ts < lo) or np.any(ts > hi):
            raise ValueError(
                f"sample times must lie within [{lo!r}, {hi!r}]")
        out = np.empty((ts.size, self.states.shape[1]))
        node = np.searchsorted(self.times, ts)
        for row, t in enumerate(ts):
            i = node[row]
            if i < self.times.size and self.times[i] == t:
                out[row] = self.states[i]
                continue
            seg = i - 1
            h = self.times[seg + 1] - self.times[seg]
            x = (t - self.times[seg]) / h
            out[row] = _eval_segment(self.dense_coefficients[seg], x)
        return out

    def field_at(self, t: float) -> ThermalField:
        row = self.sample(t)[0]
        n = self.grid.count
        return ThermalField(grid=self.grid, sigma=row[:n], sigma_dot=row[n:])


def integrate_thermal(variant: ThermalVariant, initial: ThermalField, t_span,
                      params: PhysicalParams,
                      config: Optional[IntegratorConfig] = None):
    """Integrate a thermal field in time.

    The stacked state is [widths, width rates].  The positivity guard
    covers every width node.  Returns (ThermalTrajectory, StopReason).
    """
    if config is None:
        config = IntegratorConfig()
    if not isinstance(variant, ThermalVariant):
        raise TypeError("variant must be a ThermalVariant member")
    if params.is_zero_temperature:
        raise ValueError("thermal evolution needs a finite-temperature "
                         "parameter set; the grid supplies the per-node "
                         "inverse temperatures")
    t0, t1 = float(t_span[0]), float(t_span[1])
    if not (math.isfinite(t0) and math.isfinite(t1) and t1 > t0):
        raise ValueError("t_span must be finite with t_end > t_start")
    grid = initial.grid
    n = grid.count
    if np.min(initial.sigma) <= config.sigma_min_guard:
        raise ValueError("initial widths must exceed sigma_min_guard")

    def rhs(y: np.ndarray) -> np.ndarray:
        return np.concatenate((y[n:], acceleration_field(
            variant, y[:n], y[n:], grid, params)))

    y0 = np.concatenate((initial.sigma, initial.sigma_dot))
    (times, states, hs, errs, dense, na, nr, nf, reason) = _drive(
        rhs, y0, (t0, t1), config,
        5 if config.scheme is Scheme.DOPRI54 else 2, nguard=n)
    traj = ThermalTrajectory(variant=variant, params=params, grid=grid,
                             times=times, states=states, step_sizes=hs,
                             error_estimates=errs, dense_coefficients=dense,
                             n_accepted=na, n_rejected=nr, n_rhs=nf)
    return traj, reason


def stationary_profile(variant: ThermalVariant, grid: BetaGrid,
                       params: PhysicalParams,
                       t_relax: Optional[float] = None,
                       config: Optional[IntegratorConfig] = None
                       ) -> np.ndarray:
    """Relax the field dynamically to its own stationary profile.

    Starts from the canonical equilibrium profile and integrates with
    damping until transients die out, so the result reflects the chosen
    variant's discretisation rather than the closed form.  Requires
    omega0 > 0.  Damping is borrowed at the critical value when the
    parameter set has none.
    """
    if params.omega0 <= 0.0:
        raise ValueError("relaxation requires omega0 > 0")
    relax_params = params
    if relax_params.is_zero_temperature:
        # The evolution only reads temperature off the grid nodes.
        relax_params = relax_params.with_(beta=grid.beta_max)
    if relax_params.b <= 0.0:
        relax_params = relax_params.with_(b=2.0 * params.m * params.omega0)
    if t_relax is None:
        t_relax = 80.0 * relax_params.m / relax_params.b \
            + 40.0 / params.omega0
    if config is None:
        config = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-13)
    start = equilibrium_profile_coth(grid, params)
    traj, reason = integrate_thermal(variant, start, (0.0, t_relax),
                                     relax_params, config)
    if reason is not StopReason.COMPLETED:
        raise RuntimeError(f"relaxation stopped early: {reason.value}")
    return traj.sigma[-1].copy()
