from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from mrdial import (
    Background,
    ConfigError,
    ConstantResistance,
    EffectTable,
    Vibration,
    default_effect_table,
    effect_for_background,
    render,
    total_torque,
)
from mrdial.effects import table_from_dict


def test_default_mapping_matches_scene_descriptions():
    table = default_effect_table(2.0)
    sky = effect_for_background(Background.SKY, table)
    mud = effect_for_background(Background.MUD, table)
    honey = effect_for_background(Background.HONEY, table)
    assert isinstance(sky, ConstantResistance) and sky.level == "weak"
    assert isinstance(mud, ConstantResistance) and mud.level == "strong"
    assert isinstance(honey, ConstantResistance) and honey.level == "very_strong"
    assert sky.current < mud.current < honey.current


def test_pebble_rougher_than_asphalt():
    table = default_effect_table(2.0)
    pebble = effect_for_background(Background.PEBBLE, table)
    asphalt = effect_for_background(Background.ASPHALT, table)
    assert isinstance(pebble, Vibration) and isinstance(asphalt, Vibration)
    assert pebble.frequency < asphalt.frequency
    assert pebble.amplitude > asphalt.amplitude


def test_constant_renders_constant():
    eff = ConstantResistance("strong", 0.3)
    assert all(render(eff, t, 1000.0) == 0.3 for t in (0, 1, 17, 999, 10_000))


def test_vibration_square_wave_hand_values():
    eff = Vibration(base=0.1, amplitude=0.4, frequency=10.0, duty=0.5)
    assert render(eff, 0, 1000.0) == pytest.approx(0.5)
    assert render(eff, 50, 1000.0) == pytest.approx(0.1)
    assert render(eff, 49, 1000.0) == pytest.approx(0.5)
    assert render(eff, 99, 1000.0) == pytest.approx(0.1)


@given(st.integers(min_value=0, max_value=10**7))
def test_vibration_exact_periodicity(tick):
    eff = Vibration(base=0.2, amplitude=1.2, frequency=8.0, duty=0.5)
    period = int(1000.0 / eff.frequency)  # 125 ticks exactly
    assert render(eff, tick, 1000.0) == render(eff, tick + period, 1000.0)


@given(
    st.integers(min_value=0, max_value=10**6),
    st.floats(min_value=0.0, max_value=2.0),
    st.floats(min_value=0.0, max_value=2.0),
    st.floats(min_value=0.5, max_value=200.0),
    st.floats(min_value=0.01, max_value=1.0),
)
def test_render_always_within_coil_range(tick, base, amplitude, frequency, duty):
    eff = Vibration(base=base, amplitude=amplitude, frequency=frequency, duty=duty)
    out = render(eff, tick, 1000.0, i_max=2.0)
    assert 0.0 <= out <= 2.0


def test_render_rejects_nonpositive_rate():
    with pytest.raises(ValueError):
        render(ConstantResistance("weak", 0.1), 0, 0.0)


def test_steady_torque_ordering_through_full_stack(cfg):
    table = cfg.effects
    omega = 2.0
    torques = {}
    for bg in (Background.SKY, Background.MUD, Background.HONEY):
        eff = effect_for_background(bg, table)
        current = render(eff, 0, 1000.0, cfg.coil.i_max)
        torques[bg] = total_torque(cfg.geometry, omega, current, cfg.coil, cfg.material).t_total
    assert torques[Background.SKY] < torques[Background.MUD] < torques[Background.HONEY]


# -- table validation ------------------------------------------------------


def test_incomplete_table_rejected():
    table = default_effect_table(2.0)
    partial = {bg: eff for bg, eff in table.effects.items() if bg is not Background.MUD}
    with pytest.raises(ConfigError, match="mud"):
        EffectTable(effects=partial, i_max=2.0)


def test_table_rejects_peak_over_coil_limit():
    effects = dict(default_effect_table(2.0).effects)
    effects[Background.PEBBLE] = Vibration(base=1.5, amplitude=1.0, frequency=8.0)
    with pytest.raises(ConfigError, match="pebble"):
        EffectTable(effects=effects, i_max=2.0)


def test_effect_parameter_invariants():
    with pytest.raises(ConfigError, match="frequency"):
        Vibration(base=0.1, amplitude=0.1, frequency=0.0)
    with pytest.raises(ConfigError, match="duty"):
        Vibration(base=0.1, amplitude=0.1, frequency=10.0, duty=0.0)
    with pytest.raises(ConfigError, match="level"):
        ConstantResistance("medium", 0.1)


def test_table_from_dict_roundtrip():
    raw = {
        "sky": {"type": "constant", "level": "weak", "current_a": 0.2},
        "mud": {"type": "constant", "level": "strong", "current_a": 0.9},
        "honey": {"type": "constant", "level": "very_strong", "current_a": 1.8},
        "pebble": {"type": "vibration", "base_a": 0.2, "amplitude_a": 1.0, "frequency_hz": 6},
        "asphalt": {"type": "vibration", "base_a": 0.2, "amplitude_a": 0.3, "frequency_hz": 90},
    }
    table = table_from_dict(raw, i_max=2.0)
    assert effect_for_background(Background.PEBBLE, table).frequency == 6.0


def test_table_from_dict_rejects_unknown_background():
    raw = {"lava": {"type": "constant", "level": "weak", "current_a": 0.2}}
    with pytest.raises(ConfigError, match="lava"):
        table_from_dict(raw, i_max=2.0)


def test_table_from_dict_rejects_missing_entry():
    raw = {
        "sky": {"type": "constant", "level": "weak", "current_a": 0.2},
    }
    with pytest.raises(ConfigError):
        table_from_dict(raw, i_max=2.0)
