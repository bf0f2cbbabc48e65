"""Fixed-timestep rotor dynamics of the dial with stick-slip at yield.

Semi-implicit (symplectic) Euler at the haptic tick rate: the new angular
velocity comes from torques at the current state, the new angle from the
new velocity.  A zero-crossing of omega under sub-breakaway user torque
snaps exactly to the stuck state, which keeps the stuck invariant
(mode == stuck implies omega == 0) testable without chatter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ConfigError
from .geometry import BumpyGeometry
from .magnetics import CoilSpec, MaterialModel
from .torque import total_torque, viscous_coefficient

MODE_STUCK = "stuck"
MODE_SLIPPING = "slipping"


@dataclass(frozen=True)
class DialState:
    theta: float = 0.0  # rad, unbounded (wrap only for display)
    omega: float = 0.0  # rad/s
    mode: str = MODE_STUCK
    current: float = 0.0  # A, latest commanded coil current
    tick: int = 0

    def __post_init__(self):
        if self.mode not in (MODE_STUCK, MODE_SLIPPING):
            raise ConfigError("mode", f"unknown mode {self.mode!r}")
        if self.mode == MODE_STUCK and self.omega != 0.0:
            raise ConfigError("omega", f"stuck state requires omega == 0, got {self.omega!r}")


@dataclass(frozen=True)
class DialParams:
    inertia: float = 5e-4  # kg*m^2, rotor + knob
    dt: float = 1e-3  # s, fixed haptic timestep
    c_bearing: float = 2e-4  # N*m*s/rad, residual non-MRF drag
    omega_max: float = 50.0  # rad/s, safety clamp

    def __post_init__(self):
        if not self.inertia > 0:
            raise ConfigError("inertia", f"must be > 0, got {self.inertia!r}")
        if not self.dt > 0:
            raise ConfigError("dt", f"must be > 0, got {self.dt!r}")
        if self.c_bearing < 0:
            raise ConfigError("c_bearing", f"must be >= 0, got {self.c_bearing!r}")
        if not self.omega_max > 0:
            raise ConfigError("omega_max", f"must be > 0, got {self.omega_max!r}")


@dataclass(frozen=True)
class InputCoupling:
    """Virtual torsional spring/damper standing in for the user's hand."""

    k_input: float = 25.0  # N*m/rad
    d_input: float = 0.05  # N*m*s/rad
    t_user_max: float = 12.0  # N*m clamp on the command

    def __post_init__(self):
        if not self.k_input > 0:
            raise ConfigError("k_input", f"must be > 0, got {self.k_input!r}")
        if self.d_input < 0:
            raise ConfigError("d_input", f"must be >= 0, got {self.d_input!r}")
        if not self.t_user_max > 0:
            raise ConfigError("t_user_max", f"must be > 0, got {self.t_user_max!r}")


def apply_user_input(
    delta_theta: float,
    window: float,
    *,
    realized: float = 0.0,
    coupling: InputCoupling = InputCoupling(),
) -> float:
    """Torque command from a requested rotation vs the realized rotation.

    ``delta_theta`` is the rotation the user asked for over the window,
    ``realized`` the rotation the dial actually made.  The un-realized
    remainder drives the spring; the realized rate (realized/window) is
    damped.  Clamped to +/- t_user_max.
    """
    if not window > 0:
        raise ValueError(f"window must be > 0, got {window!r}")
    t = coupling.k_input * (delta_theta - realized) - coupling.d_input * (realized / window)
    return max(-coupling.t_user_max, min(coupling.t_user_max, t))


def _sign(x: float) -> float:
    if x > 0:
        return 1.0
    if x < 0:
        return -1.0
    return 0.0


def step(
    state: DialState,
    t_user: float,
    params: DialParams,
    geom: BumpyGeometry,
    coil: CoilSpec,
    mat: MaterialModel,
    *,
    s_factor: float = 1.0,
    t_coulomb: float = 0.0,
) -> DialState:
    """Advance the dial one fixed timestep under user torque t_user (N*m)."""
    if not math.isfinite(t_user):
        raise ValueError(f"t_user must be finite, got {t_user!r}")

    brk = total_torque(geom, state.omega, state.current, coil, mat, s_factor, t_coulomb)

    # At rest below breakaway the fluid carries the load: nothing moves.
    if state.omega == 0.0 and abs(t_user) <= brk.t_static:
        return replace(state, omega=0.0, mode=MODE_STUCK, tick=state.tick + 1)

    direction = _sign(state.omega) if state.omega != 0.0 else _sign(t_user)
    c_total = viscous_coefficient(geom, mat.eta) + params.c_bearing
    omega = state.omega + (params.dt / params.inertia) * (
        t_user - direction * brk.t_yield - c_total * state.omega
    )

    crossed = state.omega != 0.0 and (omega == 0.0 or (omega < 0.0) != (state.omega < 0.0))
    if crossed and abs(t_user) <= brk.t_static:
        omega = 0.0
    omega = max(-params.omega_max, min(params.omega_max, omega))

    mode = MODE_STUCK if omega == 0.0 else MODE_SLIPPING
    theta = state.theta + params.dt * omega
    return DialState(
        theta=theta, omega=omega, mode=mode, current=state.current, tick=state.tick + 1
    )
