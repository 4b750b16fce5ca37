"""Parameter bundle, state containers, and scale-setting helpers.

Everything downstream consumes one frozen parameter bundle: oscillator mass
``m``, trap frequency ``omega0``, ``hbar``, friction coefficient ``b``,
inverse temperature ``beta``, Boltzmann constant ``k_B``, and the radiation
reaction coefficient ``r``.  Zero temperature is represented by the explicit
marker ``beta = math.inf`` so that thermal terms vanish identically (1/inf
is exactly 0.0) rather than approximately.
"""

import math
from dataclasses import dataclass, replace

# SI constants used for the radiation reaction coefficient.
ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
VACUUM_PERMITTIVITY = 8.8541878128e-12  # F / m
SPEED_OF_LIGHT = 299792458.0  # m / s (exact)
ELECTRON_MASS = 9.1093837015e-31  # kg

ZERO_TEMPERATURE = math.inf
"""Explicit zero-temperature marker for ``PhysicalParams.beta``."""


@dataclass(frozen=True)
class PhysicalParams:
    """Parameters shared by every width-equation variant.

    ``beta`` must be strictly positive; ``ZERO_TEMPERATURE`` (``math.inf``)
    selects the zero-temperature limit exactly.  ``b`` and ``r`` default to
    zero so a bare ``PhysicalParams()`` is the conservative natural-unit
    oscillator.
    """

    m: float = 1.0
    omega0: float = 1.0
    hbar: float = 1.0
    b: float = 0.0
    beta: float = ZERO_TEMPERATURE
    k_B: float = 1.0
    r: float = 0.0

    def __post_init__(self) -> None:
        for name in ("m", "hbar", "k_B"):
            value = getattr(self, name)
            if not (value > 0.0) or math.isinf(value) or math.isnan(value):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        for name in ("omega0", "b", "r"):
            value = getattr(self, name)
            if not (value >= 0.0) or math.isinf(value) or math.isnan(value):
                raise ValueError(f"{name} must be non-negative and finite, got {value!r}")
        if math.isnan(self.beta) or not (self.beta > 0.0):
            raise ValueError(
                f"beta must be positive (ZERO_TEMPERATURE for the T = 0 limit), got {self.beta!r}"
            )

    @property
    def is_zero_temperature(self) -> bool:
        return math.isinf(self.beta)

    @property
    def dimensionless_friction(self) -> float:
        """b / (m * omega0); inf for a damped free particle (omega0 = 0)."""
        if self.b == 0.0:
            return 0.0
        if self.omega0 == 0.0:
            return math.inf
        return self.b / (self.m * self.omega0)

    @property
    def dimensionless_temperature(self) -> float:
        """k_B T / (hbar * omega0) = 1 / (beta * hbar * omega0); 0 at T = 0."""
        if self.is_zero_temperature:
            return 0.0
        if self.omega0 == 0.0:
            return math.inf
        return 1.0 / (self.beta * self.hbar * self.omega0)

    @property
    def dimensionless_radiation(self) -> float:
        """r * omega0 / m."""
        return self.r * self.omega0 / self.m

    def with_(self, **changes) -> "PhysicalParams":
        """Return a copy with the given fields replaced."""
        return replace(self, **changes)


def make_natural_params(gamma: float = 0.0, theta: float = 0.0,
                        epsilon: float = 0.0) -> PhysicalParams:
    """Natural-unit bundle: m = hbar = omega0 = k_B = 1.

    ``gamma`` is the friction ratio b/(m*omega0), ``theta`` the temperature
    ratio k_B*T/(hbar*omega0), and ``epsilon`` the radiation ratio r*omega0/m.
    ``theta = 0`` maps to the explicit zero-temperature marker.
    """
    beta = ZERO_TEMPERATURE if theta == 0.0 else 1.0 / theta
    return PhysicalParams(m=1.0, omega0=1.0, hbar=1.0, b=gamma, beta=beta,
                          k_B=1.0, r=epsilon)


@dataclass(frozen=True)
class State:
    """Width and width velocity (sigma, sigma_dot).

    Positivity of sigma is enforced by the integration guards, not by this
    constructor, so closed forms with a singular start (sigma -> 0) stay
    representable.
    """

    sigma: float
    sigma_dot: float


@dataclass(frozen=True)
class State3(State):
    """Width, velocity, and acceleration for the third-order radiative model."""

    sigma_ddot: float = 0.0


def ground_state_sigma(params: PhysicalParams) -> float:
    """Equilibrium width sqrt(hbar / (2 m omega0)) of the conservative model."""
    if params.omega0 == 0.0:
        raise ValueError("ground-state width requires omega0 > 0")
    return math.sqrt(params.hbar / (2.0 * params.m * params.omega0))


def energy(state: State, params: PhysicalParams) -> float:
    """First integral m*sd^2/2 + m*w0^2*s^2/2 + hbar^2/(8 m s^2).

    Exactly conserved along the conservative width equation; decreases at the
    rate b*sigma_dot^2 along the damped one.
    """
    s = state.sigma
    if not s > 0.0:
        raise ValueError(f"energy requires sigma > 0, got {s!r}")
    m, w0, hbar = params.m, params.omega0, params.hbar
    return 0.5 * m * state.sigma_dot ** 2 + 0.5 * m * w0 ** 2 * s ** 2 \
        + hbar ** 2 / (8.0 * m * s ** 2)


def radiation_coefficient(charge: float,
                          permittivity: float = VACUUM_PERMITTIVITY,
                          light_speed: float = SPEED_OF_LIGHT) -> float:
    """Radiation reaction coefficient r = q^2 / (6 pi eps0 c^3) in kg s."""
    if permittivity <= 0.0 or light_speed <= 0.0:
        raise ValueError("permittivity and light_speed must be positive")
    return charge ** 2 / (6.0 * math.pi * permittivity * light_speed ** 3)
