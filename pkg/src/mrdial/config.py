"""Top-level JSON configuration shared by every command.

Defaults live here as code; a config file overrides them block by block.
File units follow engineering habit (millimetres for geometry, amperes,
hertz); everything is converted to SI on load and the converted values are
what the rest of the package sees.  All defaults below are declared design
choices: the source publication names none of these dimensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

from .dial import DialParams, InputCoupling
from .effects import EffectTable, default_effect_table, table_from_dict
from .errors import ConfigError
from .game import GameConfig, GameParams, default_level, level_from_dict
from .geometry import BumpyGeometry
from .magnetics import CoilSpec, MaterialModel, default_material, load_material, material_from_dict

MM_PER_M = 1000.0


@dataclass(frozen=True)
class FrictionParams:
    """Breakaway model: t_static = s_factor * t_yield + t_coulomb."""

    s_factor: float = 1.0
    t_coulomb: float = 0.0  # N*m

    def __post_init__(self):
        if not self.s_factor > 0:
            raise ConfigError("s_factor", f"must be > 0, got {self.s_factor!r}")
        if self.t_coulomb < 0:
            raise ConfigError("t_coulomb_nm", f"must be >= 0, got {self.t_coulomb!r}")


@dataclass(frozen=True)
class ServiceParams:
    haptic_rate: int = 1000  # Hz, control tick
    game_rate: int = 60  # Hz, game tick
    trace_decimation: int = 10  # keep every Nth haptic sample -> 100 Hz
    trace_buffer: int = 512  # outbound trace messages kept under backpressure
    client_timeout_s: float = 10.0
    input_window_s: float = 1e-3  # window handed to apply_user_input

    def __post_init__(self):
        if self.haptic_rate < 1 or self.game_rate < 1:
            raise ConfigError("haptic_rate_hz/game_rate_hz", "rates must be >= 1")
        if self.haptic_rate < self.game_rate:
            raise ConfigError("haptic_rate_hz", "haptic rate must be >= game rate")
        if self.trace_decimation < 1:
            raise ConfigError("trace_decimation", f"must be >= 1, got {self.trace_decimation!r}")
        if self.trace_buffer < 1:
            raise ConfigError("trace_buffer", f"must be >= 1, got {self.trace_buffer!r}")
        if not self.client_timeout_s > 0:
            raise ConfigError("client_timeout_s", f"must be > 0, got {self.client_timeout_s!r}")
        if not self.input_window_s > 0:
            raise ConfigError("input_window_s", f"must be > 0, got {self.input_window_s!r}")


@dataclass(frozen=True)
class AppConfig:
    material: MaterialModel
    coil: CoilSpec
    geometry: BumpyGeometry
    dial: DialParams
    coupling: InputCoupling
    friction: FrictionParams
    effects: EffectTable
    game: GameConfig
    service: ServiceParams
    seed: int = 42


def default_coil() -> CoilSpec:
    return CoilSpec(turns=300, i_max=2.0, gap_len=2e-3, kappa=0.85)


def default_geometry() -> BumpyGeometry:
    return BumpyGeometry(
        r0=10e-3,
        n_teeth=3,
        tooth_h=2.5e-3,
        tooth_w=4e-3,
        g_r=0.5e-3,
        g_a=0.5e-3,
        l_eng=5e-3,
        housing_r=30e-3,
    )


def default_config() -> AppConfig:
    coil = default_coil()
    return AppConfig(
        material=default_material(),
        coil=coil,
        geometry=default_geometry(),
        dial=DialParams(),
        coupling=InputCoupling(),
        friction=FrictionParams(),
        effects=default_effect_table(coil.i_max),
        game=GameConfig(params=GameParams(), level=default_level()),
        service=ServiceParams(),
        seed=42,
    )


def _get_num(block: dict, key: str, default: float, path: str) -> float:
    value = block.get(key, default)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"{path}.{key}", f"must be a number, got {value!r}")
    return float(value)


def _get_int(block: dict, key: str, default: int, path: str) -> int:
    value = block.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(f"{path}.{key}", f"must be an integer, got {value!r}")
    return value


def _require_dict(raw: dict, key: str) -> dict:
    block = raw.get(key, {})
    if not isinstance(block, dict):
        raise ConfigError(key, f"must be an object, got {type(block).__name__}")
    return block


def config_from_dict(raw: dict, base_dir: Path | None = None) -> AppConfig:
    """Overlay a parsed config JSON object onto the defaults."""
    cfg = default_config()
    base_dir = base_dir or Path.cwd()

    if "material" in raw:
        mraw = raw["material"]
        if isinstance(mraw, dict) and "file" in mraw:
            material = load_material(base_dir / mraw["file"])
        else:
            material = material_from_dict(mraw, source="material")
        cfg = replace(cfg, material=material)

    if "coil" in raw:
        block = _require_dict(raw, "coil")
        old = cfg.coil
        coil = CoilSpec(
            turns=_get_int(block, "turns", old.turns, "coil"),
            i_max=_get_num(block, "i_max_a", old.i_max, "coil"),
            gap_len=_get_num(block, "gap_len_mm", old.gap_len * MM_PER_M, "coil") / MM_PER_M,
            kappa=_get_num(block, "kappa", old.kappa, "coil"),
        )
        cfg = replace(cfg, coil=coil)

    if "geometry" in raw:
        block = _require_dict(raw, "geometry")
        old = cfg.geometry
        mm = lambda key, val: _get_num(block, key, val * MM_PER_M, "geometry") / MM_PER_M
        geometry = BumpyGeometry(
            r0=mm("r0_mm", old.r0),
            n_teeth=_get_int(block, "n_teeth", old.n_teeth, "geometry"),
            tooth_h=mm("tooth_h_mm", old.tooth_h),
            tooth_w=mm("tooth_w_mm", old.tooth_w),
            g_r=mm("g_r_mm", old.g_r),
            g_a=mm("g_a_mm", old.g_a),
            l_eng=mm("l_eng_mm", old.l_eng),
            housing_r=mm("housing_r_mm", old.housing_r),
        )
        cfg = replace(cfg, geometry=geometry)

    if "dial" in raw:
        block = _require_dict(raw, "dial")
        old = cfg.dial
        cfg = replace(
            cfg,
            dial=DialParams(
                inertia=_get_num(block, "inertia_kgm2", old.inertia, "dial"),
                dt=_get_num(block, "dt_s", old.dt, "dial"),
                c_bearing=_get_num(block, "c_bearing", old.c_bearing, "dial"),
                omega_max=_get_num(block, "omega_max", old.omega_max, "dial"),
            ),
        )

    if "input" in raw:
        block = _require_dict(raw, "input")
        old = cfg.coupling
        cfg = replace(
            cfg,
            coupling=InputCoupling(
                k_input=_get_num(block, "k_input", old.k_input, "input"),
                d_input=_get_num(block, "d_input", old.d_input, "input"),
                t_user_max=_get_num(block, "t_user_max", old.t_user_max, "input"),
            ),
        )

    if "friction" in raw:
        block = _require_dict(raw, "friction")
        old_f = cfg.friction
        cfg = replace(
            cfg,
            friction=FrictionParams(
                s_factor=_get_num(block, "s_factor", old_f.s_factor, "friction"),
                t_coulomb=_get_num(block, "t_coulomb_nm", old_f.t_coulomb, "friction"),
            ),
        )

    if "effects" in raw:
        cfg = replace(cfg, effects=table_from_dict(raw["effects"], cfg.coil.i_max))
    elif "coil" in raw:
        # default table scales with the configured coil limit
        cfg = replace(cfg, effects=default_effect_table(cfg.coil.i_max))

    if "game" in raw:
        block = _require_dict(raw, "game")
        old_g = cfg.game.params
        params = GameParams(
            dt=_get_num(block, "dt_s", old_g.dt, "game"),
            ball_speed=_get_num(block, "ball_speed", old_g.ball_speed, "game"),
            paddle_half_w=_get_num(block, "paddle_half_w", old_g.paddle_half_w, "game"),
            paddle_y=_get_num(block, "paddle_y", old_g.paddle_y, "game"),
            serve_gap=_get_num(block, "serve_gap", old_g.serve_gap, "game"),
            serve_ticks=_get_int(block, "serve_ticks", old_g.serve_ticks, "game"),
            serve_vx_max=_get_num(block, "serve_vx_max", old_g.serve_vx_max, "game"),
            bounce_vx_max=_get_num(block, "bounce_vx_max", old_g.bounce_vx_max, "game"),
            k_dial=_get_num(block, "k_dial", old_g.k_dial, "game"),
            lives=_get_int(block, "lives", old_g.lives, "game"),
            brick_top=_get_num(block, "brick_top", old_g.brick_top, "game"),
            brick_bottom=_get_num(block, "brick_bottom", old_g.brick_bottom, "game"),
            points_per_brick=_get_int(block, "points_per_brick", old_g.points_per_brick, "game"),
        )
        level = cfg.game.level
        if "level" in block:
            lraw = block["level"]
            if isinstance(lraw, dict) and "file" in lraw:
                from .game import load_level

                level = load_level(base_dir / lraw["file"])
            else:
                level = level_from_dict(lraw, source="game.level")
        cfg = replace(cfg, game=GameConfig(params=params, level=level))

    if "service" in raw:
        block = _require_dict(raw, "service")
        old_s = cfg.service
        cfg = replace(
            cfg,
            service=ServiceParams(
                haptic_rate=_get_int(block, "haptic_rate_hz", old_s.haptic_rate, "service"),
                game_rate=_get_int(block, "game_rate_hz", old_s.game_rate, "service"),
                trace_decimation=_get_int(
                    block, "trace_decimation", old_s.trace_decimation, "service"
                ),
                trace_buffer=_get_int(block, "trace_buffer", old_s.trace_buffer, "service"),
                client_timeout_s=_get_num(
                    block, "client_timeout_s", old_s.client_timeout_s, "service"
                ),
                input_window_s=_get_num(
                    block, "input_window_s", old_s.input_window_s, "service"
                ),
            ),
        )

    if "seed" in raw:
        seed = raw["seed"]
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ConfigError("seed", f"must be an integer, got {seed!r}")
        cfg = replace(cfg, seed=seed)

    return cfg


def load_config(path: str | Path | None = None) -> AppConfig:
    """Load the shared JSON config; None gives the built-in defaults."""
    if path is None:
        return default_config()
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise ConfigError(
            f"line {err.lineno}, column {err.colno}", err.msg, source=str(path)
        ) from None
    except OSError as err:
        raise ConfigError("$", f"cannot read config: {err}", source=str(path)) from None
    if not isinstance(raw, dict):
        raise ConfigError("$", "config root must be a JSON object", source=str(path))
    try:
        return config_from_dict(raw, base_dir=path.parent)
    except ConfigError as err:
        if err.source is None:
            raise err.with_source(str(path)) from None
        raise
