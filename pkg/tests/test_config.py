from __future__ import annotations

import json

import pytest

from mrdial import Background, ConfigError, default_config
from mrdial.config import load_config


def test_defaults_are_self_consistent():
    cfg = default_config()
    assert cfg.material.name == "MRF-140CG"
    assert cfg.coil.i_max > 0
    assert cfg.geometry.n_teeth == 3
    assert cfg.game.level.default_background is Background.SKY
    assert cfg.service.haptic_rate == 1000
    assert cfg.service.game_rate == 60


def test_load_none_gives_defaults():
    assert load_config(None) == default_config()


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(
        json.dumps(
            {
                "coil": {"turns": 450, "i_max_a": 1.5, "gap_len_mm": 1.0, "kappa": 0.9},
                "geometry": {"r0_mm": 8.0, "n_teeth": 2},
                "dial": {"inertia_kgm2": 1e-3},
                "seed": 7,
            }
        )
    )
    cfg = load_config(path)
    assert cfg.coil.turns == 450
    assert cfg.coil.gap_len == pytest.approx(1e-3)
    assert cfg.geometry.r0 == pytest.approx(8e-3)
    assert cfg.geometry.n_teeth == 2
    assert cfg.geometry.tooth_h == pytest.approx(2.5e-3)  # untouched default
    assert cfg.dial.inertia == pytest.approx(1e-3)
    assert cfg.seed == 7
    # default effect table rescaled to the new coil limit
    peak = max(
        getattr(e, "current", 0.0) for e in cfg.effects.effects.values() if hasattr(e, "current")
    )
    assert peak <= 1.5


def test_material_file_reference(tmp_path):
    mat = tmp_path / "mat.json"
    mat.write_text(json.dumps({"name": "X", "eta_pa_s": 0.1, "curve": [[0, 0], [50, 10]]}))
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"material": {"file": "mat.json"}}))
    cfg = load_config(cfg_path)
    assert cfg.material.name == "X"


def test_invalid_block_is_anchored(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"coil": {"i_max_a": -1.0}}))
    with pytest.raises(ConfigError) as err:
        load_config(path)
    assert "i_max" in str(err.value)
    assert str(path) in str(err.value)


def test_syntax_error_names_line(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{\n "coil": oops\n}')
    with pytest.raises(ConfigError, match="line 2"):
        load_config(path)


def test_missing_file_is_config_error(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.json")


def test_inline_level_override(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(
        json.dumps(
            {
                "game": {
                    "level": {
                        "rows": 2,
                        "cols": 3,
                        "bands": [{"rows": [0, 1], "background": "mud"}],
                    }
                }
            }
        )
    )
    cfg = load_config(path)
    assert cfg.game.level.rows == 2
    assert cfg.game.level.default_background is Background.MUD
