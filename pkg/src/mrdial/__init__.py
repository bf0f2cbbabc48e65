"""mrdial: software twin of an MRF haptic dial with a breakout demo.

The physics stack (geometry -> magnetics -> torque -> dial dynamics) is
pure and deterministic; the effect engine turns game backgrounds into coil
current signals; the service binds everything into a 1 kHz / 60 Hz nested
loop behind a JSON websocket protocol.
"""

from .config import AppConfig, default_config, load_config
from .dial import DialParams, DialState, InputCoupling, apply_user_input, step
from .effects import (
    Background,
    ConstantResistance,
    EffectTable,
    HapticEffect,
    Vibration,
    default_effect_table,
    effect_for_background,
    render,
)
from .errors import ConfigError
from .game import (
    GameConfig,
    GameParams,
    GameState,
    LevelDef,
    background_for_level,
    default_level,
    game_tick,
    new_game,
    state_hash,
)
from .geometry import BumpyGeometry, SurfaceElement, active_area, enumerate_surfaces
from .magnetics import CoilSpec, MaterialModel, field_from_current, load_material, yield_stress
from .service import Session, create_session, handle_input, run_loop, session_hash
from .torque import TorqueBreakdown, element_torque, total_torque, viscous_coefficient

__version__ = "0.1.0"

__all__ = [
    "AppConfig",
    "Background",
    "BumpyGeometry",
    "CoilSpec",
    "ConfigError",
    "ConstantResistance",
    "DialParams",
    "DialState",
    "EffectTable",
    "GameConfig",
    "GameParams",
    "GameState",
    "HapticEffect",
    "InputCoupling",
    "LevelDef",
    "MaterialModel",
    "Session",
    "SurfaceElement",
    "TorqueBreakdown",
    "Vibration",
    "active_area",
    "apply_user_input",
    "background_for_level",
    "create_session",
    "default_config",
    "default_effect_table",
    "default_level",
    "effect_for_background",
    "element_torque",
    "enumerate_surfaces",
    "field_from_current",
    "game_tick",
    "handle_input",
    "load_config",
    "load_material",
    "new_game",
    "render",
    "run_loop",
    "session_hash",
    "state_hash",
    "step",
    "total_torque",
    "viscous_coefficient",
    "yield_stress",
]
