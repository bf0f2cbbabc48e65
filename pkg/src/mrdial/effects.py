"""Game backgrounds mapped to haptic effects, rendered as coil current.

Constant-resistance effects hold a fixed coil current; vibration effects
modulate the current with a duty-cycled square wave.  Rendering is a pure
function of (effect, tick) at the control tick rate, so it is safe to call
from anywhere and trivially reproducible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import ConfigError


class Background(enum.Enum):
    """The five game scenes, each with its own felt texture."""

    SKY = "sky"
    MUD = "mud"
    HONEY = "honey"
    PEBBLE = "pebble"
    ASPHALT = "asphalt"


RESISTANCE_LEVELS = ("weak", "strong", "very_strong")


@dataclass(frozen=True)
class ConstantResistance:
    level: str  # weak | strong | very_strong
    current: float  # A

    def __post_init__(self):
        if self.level not in RESISTANCE_LEVELS:
            raise ConfigError("level", f"unknown resistance level {self.level!r}")
        if self.current < 0:
            raise ConfigError("current_a", f"must be >= 0, got {self.current!r}")


@dataclass(frozen=True)
class Vibration:
    base: float  # A, floor of the square wave
    amplitude: float  # A, added during the on-phase
    frequency: float  # Hz
    duty: float = 0.5  # fraction of the period spent on

    def __post_init__(self):
        if self.base < 0 or self.amplitude < 0:
            raise ConfigError(
                "base_a/amplitude_a", f"must be >= 0, got {self.base!r}, {self.amplitude!r}"
            )
        if not self.frequency > 0:
            raise ConfigError("frequency_hz", f"must be > 0, got {self.frequency!r}")
        if not 0 < self.duty <= 1:
            raise ConfigError("duty", f"must be in (0, 1], got {self.duty!r}")


HapticEffect = Union[ConstantResistance, Vibration]


@dataclass(frozen=True)
class EffectTable:
    """Complete background -> effect mapping, validated against the coil limit."""

    effects: Mapping[Background, HapticEffect]
    i_max: float  # A, coil limit every effect must respect

    def __post_init__(self):
        object.__setattr__(self, "effects", dict(self.effects))
        for bg in Background:
            if bg not in self.effects:
                raise ConfigError(bg.value, "effect table must define all five backgrounds")
        for bg, eff in self.effects.items():
            peak = eff.current if isinstance(eff, ConstantResistance) else eff.base + eff.amplitude
            if peak > self.i_max:
                raise ConfigError(
                    bg.value, f"peak current {peak:.6g} A exceeds i_max {self.i_max:.6g} A"
                )


def effect_for_background(bg: Background, table: EffectTable) -> HapticEffect:
    """Total mapping: every background has an effect in a valid table."""
    return table.effects[bg]


def render(
    effect: HapticEffect, tick: int, rate: float, i_max: float = math.inf
) -> float:
    """Coil current (A) commanded at control tick ``tick`` of a ``rate`` Hz loop.

    The square-wave phase is computed as fmod(tick*frequency, rate)/rate so
    the signal is exactly periodic whenever rate/frequency is integral.
    Output clamped to [0, i_max].
    """
    if not rate > 0:
        raise ValueError(f"rate must be > 0, got {rate!r}")
    if isinstance(effect, ConstantResistance):
        out = effect.current
    else:
        phase = math.fmod(tick * effect.frequency, rate) / rate
        out = effect.base + (effect.amplitude if phase < effect.duty else 0.0)
    return max(0.0, min(i_max, out))


def default_effect_table(i_max: float) -> EffectTable:
    """Default mapping: weak/strong/very strong resistance for sky/mud/honey,
    coarse low-frequency vibration for pebble, fine high-frequency for asphalt.
    """
    return EffectTable(
        effects={
            Background.SKY: ConstantResistance("weak", 0.15 * i_max),
            Background.MUD: ConstantResistance("strong", 0.55 * i_max),
            Background.HONEY: ConstantResistance("very_strong", 0.95 * i_max),
            Background.PEBBLE: Vibration(base=0.1 * i_max, amplitude=0.6 * i_max, frequency=8.0),
            Background.ASPHALT: Vibration(base=0.1 * i_max, amplitude=0.15 * i_max, frequency=80.0),
        },
        i_max=i_max,
    )


_EFFECT_KEYS = {bg.value: bg for bg in Background}


def effect_from_dict(raw: object, path: str) -> HapticEffect:
    """One effect-table entry: {"type": "constant"|"vibration", ...} in A/Hz."""
    if not isinstance(raw, dict):
        raise ConfigError(path, f"expected an object, got {type(raw).__name__}")
    kind = raw.get("type")
    if kind == "constant":
        return ConstantResistance(
            level=raw.get("level", "strong"), current=_num(raw, "current_a", path)
        )
    if kind == "vibration":
        return Vibration(
            base=_num(raw, "base_a", path),
            amplitude=_num(raw, "amplitude_a", path),
            frequency=_num(raw, "frequency_hz", path),
            duty=_num(raw, "duty", path, default=0.5),
        )
    raise ConfigError(path, f'type must be "constant" or "vibration", got {kind!r}')


def table_from_dict(raw: object, i_max: float, source: str | None = None) -> EffectTable:
    """Effect-table JSON block: one entry per background name."""
    try:
        if not isinstance(raw, dict):
            raise ConfigError("effects", f"expected an object, got {type(raw).__name__}")
        effects = {}
        for key, entry in raw.items():
            if key not in _EFFECT_KEYS:
                raise ConfigError(f"effects.{key}", f"unknown background {key!r}")
            effects[_EFFECT_KEYS[key]] = effect_from_dict(entry, f"effects.{key}")
        return EffectTable(effects=effects, i_max=i_max)
    except ConfigError as err:
        if source is not None and err.source is None:
            raise err.with_source(source) from None
        raise


def _num(raw: dict, key: str, path: str, default: float | None = None) -> float:
    value = raw.get(key, default)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"{path}.{key}", f"must be a number, got {value!r}")
    return float(value)
