"""Coil current to field intensity to Bingham yield stress.

A lumped magnetic circuit maps coil current to field intensity in the fluid
gap; a piecewise-linear material curve (digitized from the fluid datasheet
and shipped as data, not code) maps field intensity to the field-induced
yield stress.  SI units internally (Pa, m, A); curve files use kA/m and kPa
as published by MRF datasheets and are converted on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ConfigError

A_PER_M_PER_KA_PER_M = 1000.0
PA_PER_KPA = 1000.0


@dataclass(frozen=True)
class MaterialModel:
    """Off-state viscosity plus the field-dependent yield-stress curve.

    ``tau_curve`` holds (H in kA/m, tau_y in kPa) knots with strictly
    increasing H, non-decreasing tau_y, starting at (0, 0).
    """

    name: str
    eta: float  # Pa*s, off-state dynamic viscosity
    tau_curve: tuple[tuple[float, float], ...]  # (kA/m, kPa)

    def __post_init__(self):
        if not self.eta > 0:
            raise ConfigError("eta_pa_s", f"must be > 0, got {self.eta!r}")
        curve = tuple((float(h), float(t)) for h, t in self.tau_curve)
        object.__setattr__(self, "tau_curve", curve)
        if len(curve) < 2:
            raise ConfigError("curve", f"needs at least 2 points, got {len(curve)}")
        if curve[0] != (0.0, 0.0):
            raise ConfigError("curve[0]", f"first point must be (0, 0), got {curve[0]}")
        for i in range(1, len(curve)):
            if not curve[i][0] > curve[i - 1][0]:
                raise ConfigError(f"curve[{i}]", "H values must be strictly increasing")
            if curve[i][1] < 0:
                raise ConfigError(f"curve[{i}]", "yield stress must be non-negative")
            if curve[i][1] < curve[i - 1][1]:
                raise ConfigError(f"curve[{i}]", "yield stress must be non-decreasing")


@dataclass(frozen=True)
class CoilSpec:
    """Solenoid coil reduced to a lumped magnetic circuit.

    ``kappa`` absorbs core reluctance and leakage so H = kappa*N*I/gap_len.
    The physical winding, bearing, and core are out of scope.
    """

    turns: int
    i_max: float  # A
    gap_len: float  # m, total magnetic gap along the flux path
    kappa: float = 1.0  # coupling efficiency, (0, 1]

    def __post_init__(self):
        if self.turns < 1:
            raise ConfigError("turns", f"must be >= 1, got {self.turns!r}")
        if not self.i_max > 0:
            raise ConfigError("i_max", f"must be > 0, got {self.i_max!r}")
        if not self.gap_len > 0:
            raise ConfigError("gap_len", f"must be > 0, got {self.gap_len!r}")
        if not 0 < self.kappa <= 1:
            raise ConfigError("kappa", f"must be in (0, 1], got {self.kappa!r}")


def field_from_current(coil: CoilSpec, current: float) -> float:
    """Field intensity in the fluid gap, kA/m, for a coil current in amperes.

    Linear in current by construction; raises ValueError outside
    [0, coil.i_max] to flag a bad control signal upstream.
    """
    if not 0.0 <= current <= coil.i_max:
        raise ValueError(
            f"coil current {current!r} A outside [0, {coil.i_max}] A"
        )
    h_a_per_m = coil.kappa * coil.turns * current / coil.gap_len
    return h_a_per_m / A_PER_M_PER_KA_PER_M


def yield_stress(mat: MaterialModel, h_ka_per_m: float) -> float:
    """Field-induced yield stress in Pa at field intensity H (kA/m).

    Piecewise-linear interpolation over the material curve; H beyond the
    last knot clamps to the last value (physical saturation).
    """
    if h_ka_per_m < 0:
        raise ValueError(f"field intensity {h_ka_per_m!r} kA/m must be >= 0")
    curve = mat.tau_curve
    last_h, last_tau = curve[-1]
    if h_ka_per_m >= last_h:
        return last_tau * PA_PER_KPA
    for i in range(1, len(curve)):
        h1, t1 = curve[i]
        if h_ka_per_m == h1:
            return t1 * PA_PER_KPA
        if h_ka_per_m < h1:
            h0, t0 = curve[i - 1]
            frac = (h_ka_per_m - h0) / (h1 - h0)
            return (t0 + frac * (t1 - t0)) * PA_PER_KPA
    raise AssertionError("unreachable: curve is ordered")  # pragma: no cover


def material_from_dict(raw: object, source: str | None = None) -> MaterialModel:
    """Build a MaterialModel from the curve-file JSON shape.

    Schema: {"name": str, "eta_pa_s": number, "curve": [[kA/m, kPa], ...]}.
    """
    try:
        if not isinstance(raw, dict):
            raise ConfigError("$", f"expected a JSON object, got {type(raw).__name__}")
        name = raw.get("name")
        if not isinstance(name, str) or not name:
            raise ConfigError("name", "must be a non-empty string")
        eta = raw.get("eta_pa_s")
        if not isinstance(eta, (int, float)) or isinstance(eta, bool):
            raise ConfigError("eta_pa_s", f"must be a number, got {eta!r}")
        curve = raw.get("curve")
        if not isinstance(curve, list):
            raise ConfigError("curve", "must be a list of [H_kA_per_m, tau_kPa] pairs")
        pairs = []
        for i, entry in enumerate(curve):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
            ):
                raise ConfigError(f"curve[{i}]", f"must be a [number, number] pair, got {entry!r}")
            pairs.append((float(entry[0]), float(entry[1])))
        return MaterialModel(name=name, eta=float(eta), tau_curve=tuple(pairs))
    except ConfigError as err:
        if source is not None and err.source is None:
            raise err.with_source(source) from None
        raise


def load_material(path: str | Path) -> MaterialModel:
    """Load a material curve file, rejecting invariant violations with an anchored error."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise ConfigError(
            f"line {err.lineno}, column {err.colno}", err.msg, source=str(path)
        ) from None
    return material_from_dict(raw, source=str(path))


def default_material() -> MaterialModel:
    """The packaged MRF-140CG curve (digitized from the vendor datasheet)."""
    raw = json.loads(
        resources.files("mrdial").joinpath("data/mrf140cg.json").read_text()
    )
    return material_from_dict(raw, source="mrdial/data/mrf140cg.json")
