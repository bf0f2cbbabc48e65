"""Bingham-plastic shear torque of the MRF over the wetted surfaces.

Off state the fluid is a Newtonian lubricant; under field the chained iron
particles add a rate-independent yield component.  Thin-gap Couette flow is
assumed: shear rate r*|omega|/gap on every surface.  All returned
components are magnitudes; the caller applies the sign opposing motion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import pi

from .geometry import KIND_CYLINDER, BumpyGeometry, SurfaceElement, enumerate_surfaces
from .magnetics import CoilSpec, MaterialModel, field_from_current, yield_stress


@dataclass(frozen=True)
class TorqueBreakdown:
    """Resistive torque split into its field-induced and rate-dependent parts."""

    t_yield: float  # N*m, field-induced, independent of speed
    t_viscous: float  # N*m, linear in |omega|
    t_static: float  # N*m, breakaway threshold

    @property
    def t_total(self) -> float:
        return self.t_yield + self.t_viscous


def element_torque(
    elem: SurfaceElement, omega: float, tau_y: float, eta: float
) -> TorqueBreakdown:
    """Bingham shear torque of a single surface element.

    Cylinder at radius r, area A: t_yield = tau_y*r*A and
    t_viscous = eta*(r*|omega|/gap)*r*A.  Annulus r1..r2:
    t_yield = (2*pi/3)*tau_y*(r2^3 - r1^3) and
    t_viscous = (pi/2)*(eta*|omega|/gap)*(r2^4 - r1^4).
    """
    w = abs(omega)
    if elem.kind == KIND_CYLINDER:
        t_y = tau_y * elem.r * elem.area
        t_v = eta * (elem.r * w / elem.gap) * elem.r * elem.area
    else:
        r1, r2 = elem.r_inner, elem.r_outer
        t_y = (2.0 * pi / 3.0) * tau_y * (r2**3 - r1**3)
        t_v = (pi / 2.0) * (eta * w / elem.gap) * (r2**4 - r1**4)
    return TorqueBreakdown(t_yield=t_y, t_viscous=t_v, t_static=t_y)


@lru_cache(maxsize=256)
def viscous_coefficient(geom: BumpyGeometry, eta: float) -> float:
    """d(t_viscous)/d|omega| summed over all surfaces, N*m*s/rad."""
    return sum(
        element_torque(e, 1.0, 0.0, eta).t_viscous for e in enumerate_surfaces(geom)
    )


def total_torque(
    geom: BumpyGeometry,
    omega: float,
    current: float,
    coil: CoilSpec,
    mat: MaterialModel,
    s_factor: float = 1.0,
    t_coulomb: float = 0.0,
) -> TorqueBreakdown:
    """Total MRF resistive torque at the given speed and coil current.

    The field is taken as uniform over all elements (lumped magnetic
    circuit).  t_static = s_factor*t_yield + t_coulomb sets the breakaway
    threshold used by the stick-slip dynamics.
    """
    h = field_from_current(coil, current)
    tau_y = yield_stress(mat, h)
    t_y = 0.0
    t_v = 0.0
    for elem in enumerate_surfaces(geom):
        part = element_torque(elem, omega, tau_y, mat.eta)
        t_y += part.t_yield
        t_v += part.t_viscous
    return TorqueBreakdown(
        t_yield=t_y, t_viscous=t_v, t_static=s_factor * t_y + t_coulomb
    )
