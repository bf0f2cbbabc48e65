"""Concentric-tooth shaft/housing geometry and its MRF-wetted surfaces.

The bumpy profile is idealized as rectangular concentric rings on the shaft
end, engaging a conjugate housing profile.  Each tooth contributes two
cylindrical flanks sheared across the radial gap and two annular faces (tip
and the conjugate groove floor) sheared across the axial gap.  Corner
effects are ignored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConfigError

KIND_CYLINDER = "cylinder"
KIND_ANNULUS = "annulus"


@dataclass(frozen=True)
class BumpyGeometry:
    """Parametric shaft-side description; the housing is the conjugate shape."""

    r0: float  # m, shaft base radius
    n_teeth: int  # 0 = smooth baseline
    tooth_h: float  # m, radial tooth height
    tooth_w: float  # m, axial tooth width (flank engagement length)
    g_r: float  # m, radial fluid gap
    g_a: float  # m, axial fluid gap
    l_eng: float  # m, engagement length of the smooth portion
    housing_r: float  # m, housing bore radius bounding the outermost tooth

    def __post_init__(self):
        if not self.r0 > 0:
            raise ConfigError("r0", f"must be > 0, got {self.r0!r}")
        if self.n_teeth < 0:
            raise ConfigError("n_teeth", f"must be >= 0, got {self.n_teeth!r}")
        if self.n_teeth > 0 and not (self.tooth_h > 0 and self.tooth_w > 0):
            raise ConfigError(
                "tooth_h/tooth_w",
                f"must be > 0 when n_teeth > 0, got {self.tooth_h!r}, {self.tooth_w!r}",
            )
        if not (self.g_r > 0 and self.g_a > 0):
            raise ConfigError("g_r/g_a", f"must be > 0, got {self.g_r!r}, {self.g_a!r}")
        if not self.l_eng > 0:
            raise ConfigError("l_eng", f"must be > 0, got {self.l_eng!r}")
        if not self.housing_r > 0:
            raise ConfigError("housing_r", f"must be > 0, got {self.housing_r!r}")
        outermost = self.r0 + self.n_teeth * (self.tooth_h + self.g_r)
        if outermost + self.g_r > self.housing_r:
            raise ConfigError(
                "n_teeth",
                f"teeth do not fit: outermost radius {outermost:.6g} m + gap "
                f"{self.g_r:.6g} m exceeds housing radius {self.housing_r:.6g} m",
            )


@dataclass(frozen=True)
class SurfaceElement:
    """One MRF-wetted shear surface: a cylinder wall or an annular face."""

    kind: str
    gap: float  # m, fluid gap this surface shears across
    area: float  # m^2
    r: float = 0.0  # m, cylinder radius
    length: float = 0.0  # m, cylinder axial length
    r_inner: float = 0.0  # m, annulus inner radius
    r_outer: float = 0.0  # m, annulus outer radius

    def __post_init__(self):
        if self.kind not in (KIND_CYLINDER, KIND_ANNULUS):
            raise ConfigError("kind", f"unknown surface kind {self.kind!r}")
        if not self.gap > 0:
            raise ConfigError("gap", f"must be > 0, got {self.gap!r}")
        if self.kind == KIND_ANNULUS and not self.r_inner < self.r_outer:
            raise ConfigError(
                "r_inner", f"must be < r_outer, got {self.r_inner!r} >= {self.r_outer!r}"
            )
        if not self.area > 0:
            raise ConfigError("area", f"must be > 0, got {self.area!r}")

    @classmethod
    def cylinder(cls, r: float, length: float, gap: float) -> "SurfaceElement":
        return cls(KIND_CYLINDER, gap=gap, area=2.0 * math.pi * r * length, r=r, length=length)

    @classmethod
    def annulus(cls, r_inner: float, r_outer: float, gap: float) -> "SurfaceElement":
        area = math.pi * (r_outer * r_outer - r_inner * r_inner)
        return cls(KIND_ANNULUS, gap=gap, area=area, r_inner=r_inner, r_outer=r_outer)


@lru_cache(maxsize=256)
def enumerate_surfaces(geom: BumpyGeometry) -> tuple[SurfaceElement, ...]:
    """All wetted shear surfaces, ordered inner to outer.

    The smooth baseline contributes the base cylinder wall and the shaft end
    face; each tooth k adds its inner flank, outer flank, tip face and the
    conjugate groove-floor face, with radii advancing by tooth_h + g_r.
    """
    elems = [
        SurfaceElement.cylinder(geom.r0, geom.l_eng, geom.g_r),
        SurfaceElement.annulus(0.0, geom.r0, geom.g_a),
    ]
    pitch = geom.tooth_h + geom.g_r
    for k in range(1, geom.n_teeth + 1):
        r_in = geom.r0 + geom.g_r + (k - 1) * pitch
        r_out = geom.r0 + k * pitch
        elems.append(SurfaceElement.cylinder(r_in, geom.tooth_w, geom.g_r))
        elems.append(SurfaceElement.cylinder(r_out, geom.tooth_w, geom.g_r))
        elems.append(SurfaceElement.annulus(r_in, r_out, geom.g_a))  # tip
        elems.append(SurfaceElement.annulus(r_in, r_out, geom.g_a))  # groove floor
    return tuple(elems)


def active_area(geom: BumpyGeometry) -> float:
    """Total MRF-wetted area in m^2: the sum over enumerate_surfaces."""
    return sum(e.area for e in enumerate_surfaces(geom))
