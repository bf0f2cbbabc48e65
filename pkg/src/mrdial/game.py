"""Deterministic breakout driven by the dial angle.

Classic rules on a unit playfield: the paddle is a clamp-affine function of
the dial angle, the ball moves at constant speed, bricks die on contact and
the band of the most recently destroyed brick selects the active background
(and with it the haptic effect).

Motion within a tick is resolved event-exactly: the earliest boundary
crossing (floor, paddle, wall, ceiling, or brick-grid line) is advanced to,
applied, and the remainder of the tick re-examined.  The crossed coordinate
is pinned to the exact boundary value, which keeps trajectories stable and
lets a dense-substep reference stepper reproduce them.  Arithmetic sticks
to +,-,*,/ and sqrt so state hashes are platform-stable.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field, replace
from pathlib import Path

from .effects import Background
from .errors import ConfigError
from .hashing import digest, quantize

PHASE_SERVING = "serving"
PHASE_PLAYING = "playing"
PHASE_GAME_OVER = "game_over"

_MAX_EVENTS_PER_TICK = 32


@dataclass(frozen=True)
class GameParams:
    dt: float = 1.0 / 60.0  # s, game tick
    ball_speed: float = 0.6  # playfield units per second
    paddle_half_w: float = 0.075
    paddle_y: float = 0.06  # height of the paddle plane
    serve_gap: float = 0.02  # ball sits this far above the paddle while glued
    serve_ticks: int = 60  # serving delay before auto-release
    serve_vx_max: float = 0.5  # max |vx|/speed at serve
    bounce_vx_max: float = 0.85  # max |vx|/speed off the paddle
    k_dial: float = 1.0 / (2.0 * math.pi)  # one full turn sweeps the paddle range
    lives: int = 3
    brick_top: float = 0.85
    brick_bottom: float = 0.55
    points_per_brick: int = 10

    def __post_init__(self):
        if not self.dt > 0:
            raise ConfigError("dt", f"must be > 0, got {self.dt!r}")
        if not self.ball_speed > 0:
            raise ConfigError("ball_speed", f"must be > 0, got {self.ball_speed!r}")
        if not 0 < self.paddle_half_w < 0.5:
            raise ConfigError("paddle_half_w", f"must be in (0, 0.5), got {self.paddle_half_w!r}")
        if not 0 < self.paddle_y < self.brick_bottom < self.brick_top <= 1.0:
            raise ConfigError(
                "paddle_y",
                "need 0 < paddle_y < brick_bottom < brick_top <= 1 "
                f"(got {self.paddle_y!r}, {self.brick_bottom!r}, {self.brick_top!r})",
            )
        if self.serve_ticks < 1:
            raise ConfigError("serve_ticks", f"must be >= 1, got {self.serve_ticks!r}")
        if not 0 <= self.serve_vx_max < 1:
            raise ConfigError("serve_vx_max", f"must be in [0, 1), got {self.serve_vx_max!r}")
        if not 0 < self.bounce_vx_max < 1:
            raise ConfigError("bounce_vx_max", f"must be in (0, 1), got {self.bounce_vx_max!r}")
        if self.lives < 1:
            raise ConfigError("lives", f"must be >= 1, got {self.lives!r}")
        if self.points_per_brick < 0:
            raise ConfigError("points_per_brick", f"must be >= 0, got {self.points_per_brick!r}")

    @property
    def v_min(self) -> float:
        return 0.999 * self.ball_speed

    @property
    def v_max(self) -> float:
        return 1.001 * self.ball_speed


@dataclass(frozen=True)
class LevelBand:
    rows: tuple[int, ...]
    background: Background


@dataclass(frozen=True)
class LevelDef:
    rows: int
    cols: int
    bands: tuple[LevelBand, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ConfigError("rows/cols", f"must be >= 1, got {self.rows!r}, {self.cols!r}")
        if not self.bands:
            raise ConfigError("bands", "level needs at least one band")
        row_map: dict[int, Background] = {}
        for b, band in enumerate(self.bands):
            for row in band.rows:
                if not 0 <= row < self.rows:
                    raise ConfigError(f"bands[{b}]", f"row {row} outside 0..{self.rows - 1}")
                if row in row_map:
                    raise ConfigError(f"bands[{b}]", f"row {row} assigned to two bands")
                row_map[row] = band.background
        missing = [r for r in range(self.rows) if r not in row_map]
        if missing:
            raise ConfigError("bands", f"rows {missing} have no band")
        object.__setattr__(self, "_row_map", row_map)

    def band_of_row(self, row: int) -> Background:
        return self._row_map[row]  # type: ignore[attr-defined]

    @property
    def default_background(self) -> Background:
        return self.bands[0].background

    @property
    def brick_count(self) -> int:
        return self.rows * self.cols


@dataclass(frozen=True)
class GameConfig:
    params: GameParams
    level: LevelDef


def default_level() -> LevelDef:
    """Ten rows in five two-row bands cycling sky..asphalt top to bottom."""
    order = (Background.SKY, Background.MUD, Background.HONEY, Background.PEBBLE, Background.ASPHALT)
    bands = tuple(
        LevelBand(rows=(2 * i, 2 * i + 1), background=bg) for i, bg in enumerate(order)
    )
    return LevelDef(rows=10, cols=12, bands=bands)


_BG_BY_NAME = {bg.value: bg for bg in Background}


def level_from_dict(raw: object, source: str | None = None) -> LevelDef:
    """Level JSON: {"rows": n, "cols": n, "bands": [{"rows": [..], "background": name}]}."""
    try:
        if not isinstance(raw, dict):
            raise ConfigError("$", f"expected an object, got {type(raw).__name__}")
        rows = raw.get("rows")
        cols = raw.get("cols")
        if not isinstance(rows, int) or isinstance(rows, bool):
            raise ConfigError("rows", f"must be an integer, got {rows!r}")
        if not isinstance(cols, int) or isinstance(cols, bool):
            raise ConfigError("cols", f"must be an integer, got {cols!r}")
        raw_bands = raw.get("bands")
        if not isinstance(raw_bands, list) or not raw_bands:
            raise ConfigError("bands", "must be a non-empty list")
        bands = []
        for i, rb in enumerate(raw_bands):
            if not isinstance(rb, dict):
                raise ConfigError(f"bands[{i}]", "must be an object")
            name = rb.get("background")
            if name not in _BG_BY_NAME:
                raise ConfigError(f"bands[{i}].background", f"unknown background {name!r}")
            band_rows = rb.get("rows")
            if (
                not isinstance(band_rows, list)
                or not band_rows
                or not all(isinstance(r, int) and not isinstance(r, bool) for r in band_rows)
            ):
                raise ConfigError(f"bands[{i}].rows", "must be a non-empty list of integers")
            bands.append(LevelBand(rows=tuple(band_rows), background=_BG_BY_NAME[name]))
        return LevelDef(rows=rows, cols=cols, bands=tuple(bands))
    except ConfigError as err:
        if source is not None and err.source is None:
            raise err.with_source(source) from None
        raise


def load_level(path: str | Path) -> LevelDef:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise ConfigError(
            f"line {err.lineno}, column {err.colno}", err.msg, source=str(path)
        ) from None
    return level_from_dict(raw, source=str(path))


@dataclass(frozen=True)
class GameState:
    paddle_x: float
    ball_x: float
    ball_y: float
    ball_vx: float
    ball_vy: float
    bricks: tuple[int, ...]  # row-major alive flags
    score: int
    lives: int
    background: Background
    rng_seed: int
    tick: int
    phase: str
    serve_timer: int
    last_row: int = -1  # row of the most recently destroyed brick, -1 = none

    def __post_init__(self):
        if self.phase not in (PHASE_SERVING, PHASE_PLAYING, PHASE_GAME_OVER):
            raise ConfigError("phase", f"unknown phase {self.phase!r}")
        if self.score < 0:
            raise ConfigError("score", f"must be >= 0, got {self.score!r}")


def new_game(cfg: GameConfig, seed: int) -> GameState:
    params, level = cfg.params, cfg.level
    return GameState(
        paddle_x=0.5,
        ball_x=0.5,
        ball_y=params.paddle_y + params.serve_gap,
        ball_vx=0.0,
        ball_vy=0.0,
        bricks=(1,) * level.brick_count,
        score=0,
        lives=params.lives,
        background=level.default_background,
        rng_seed=seed,
        tick=0,
        phase=PHASE_SERVING,
        serve_timer=params.serve_ticks,
    )


def background_for_level(level: LevelDef, state: GameState) -> Background:
    """Active background: band of the last destroyed brick, or the level default."""
    if state.last_row < 0:
        return level.default_background
    return level.band_of_row(state.last_row)


def state_hash(state: GameState) -> str:
    """Quantized digest; identical runs hash identically on any platform."""
    return digest(
        quantize(state.paddle_x),
        quantize(state.ball_x),
        quantize(state.ball_y),
        quantize(state.ball_vx),
        quantize(state.ball_vy),
        state.bricks,
        state.score,
        state.lives,
        state.background.value,
        state.rng_seed,
        state.tick,
        state.phase,
        state.serve_timer,
        state.last_row,
    )


def _serve_velocity(seed: int, serve_index: int, params: GameParams) -> tuple[float, float]:
    rng = random.Random(seed * 1000003 + serve_index)
    vx = rng.uniform(-params.serve_vx_max, params.serve_vx_max) * params.ball_speed
    vy = math.sqrt(params.ball_speed * params.ball_speed - vx * vx)
    return vx, vy


@dataclass
class _Advance:
    x: float
    y: float
    vx: float
    vy: float
    bricks: list[int]
    destroyed: list[int] = field(default_factory=list)  # rows, in order
    lost: bool = False


def _advance_ball(
    x: float,
    y: float,
    vx: float,
    vy: float,
    bricks: tuple[int, ...],
    paddle_x: float,
    params: GameParams,
    level: LevelDef,
) -> _Advance:
    adv = _Advance(x=x, y=y, vx=vx, vy=vy, bricks=list(bricks))
    cw = 1.0 / level.cols
    ch = (params.brick_top - params.brick_bottom) / level.rows
    t_left = params.dt

    for _ in range(_MAX_EVENTS_PER_TICK):
        if t_left <= 0.0:
            return adv
        x, y, vx, vy = adv.x, adv.y, adv.vx, adv.vy
        cand: list[tuple[float, int, str, object]] = []

        if vy < 0.0:
            cand.append((-y / vy, 0, "floor", None))
            if y > params.paddle_y:
                t_p = (params.paddle_y - y) / vy
                x_p = x + vx * t_p
                if abs(x_p - paddle_x) <= params.paddle_half_w:
                    cand.append((t_p, 1, "paddle", x_p))
        if vx < 0.0:
            cand.append((-x / vx, 2, "wall_left", None))
        elif vx > 0.0:
            cand.append(((1.0 - x) / vx, 2, "wall_right", None))
        if vy > 0.0:
            cand.append(((1.0 - y) / vy, 3, "ceiling", None))

        # next vertical brick-grid line, strictly ahead of x
        if vx > 0.0:
            j = math.floor(x / cw) + 1
            if j * cw <= x:
                j += 1
            col = j
        elif vx < 0.0:
            j = math.ceil(x / cw) - 1
            if j * cw >= x:
                j -= 1
            col = j - 1
        else:
            j = col = -1
        if vx != 0.0 and 0 <= col < level.cols:
            cand.append(((j * cw - x) / vx, 4, "vline", (j * cw, col)))

        # next horizontal brick-grid line, strictly ahead of y
        if vy != 0.0:
            u = (params.brick_top - y) / ch
            if vy < 0.0:
                i = math.floor(u) + 1
                if params.brick_top - i * ch >= y:
                    i += 1
                row = i
            else:
                i = math.ceil(u) - 1
                if params.brick_top - i * ch <= y:
                    i -= 1
                row = i - 1
            if 0 <= row < level.rows:
                yb = params.brick_top - i * ch
                cand.append(((yb - y) / vy, 5, "hline", (yb, row)))

        live = [c for c in cand if 0.0 <= c[0] <= t_left]
        if not live:
            adv.x = x + vx * t_left
            adv.y = y + vy * t_left
            return adv
        t, _prio, kind, payload = min(live, key=lambda c: (c[0], c[1]))
        adv.x = x + vx * t
        adv.y = y + vy * t
        t_left -= t

        if kind == "floor":
            adv.y = 0.0
            adv.lost = True
            return adv
        if kind == "paddle":
            adv.y = params.paddle_y
            x_hit = payload  # type: ignore[assignment]
            u_hit = max(-1.0, min(1.0, (x_hit - paddle_x) / params.paddle_half_w))
            speed = math.sqrt(adv.vx * adv.vx + adv.vy * adv.vy)
            adv.vx = u_hit * params.bounce_vx_max * speed
            adv.vy = math.sqrt(speed * speed - adv.vx * adv.vx)
        elif kind == "wall_left":
            adv.x = 0.0
            adv.vx = -adv.vx
        elif kind == "wall_right":
            adv.x = 1.0
            adv.vx = -adv.vx
        elif kind == "ceiling":
            adv.y = 1.0
            adv.vy = -adv.vy
        elif kind == "vline":
            xb, col = payload  # type: ignore[misc]
            adv.x = xb
            u_row = (params.brick_top - adv.y) / ch
            row = math.floor(u_row)
            if 0 <= row < level.rows and adv.bricks[row * level.cols + col]:
                adv.bricks[row * level.cols + col] = 0
                adv.destroyed.append(row)
                adv.vx = -adv.vx
        else:  # hline
            yb, row = payload  # type: ignore[misc]
            adv.y = yb
            col = min(math.floor(adv.x / cw), level.cols - 1)
            if adv.bricks[row * level.cols + col]:
                adv.bricks[row * level.cols + col] = 0
                adv.destroyed.append(row)
                adv.vy = -adv.vy
    return adv


def game_tick(state: GameState, dial_theta: float, cfg: GameConfig) -> GameState:
    """Advance the game one fixed 1/60 s tick; pure in (state, dial_theta, cfg)."""
    params, level = cfg.params, cfg.level
    paddle_x = min(1.0, max(0.0, 0.5 + params.k_dial * dial_theta))
    tick = state.tick + 1

    if state.phase == PHASE_GAME_OVER:
        return replace(state, paddle_x=paddle_x, tick=tick)

    if state.phase == PHASE_SERVING:
        bx = paddle_x
        by = params.paddle_y + params.serve_gap
        timer = state.serve_timer - 1
        if timer > 0:
            return replace(
                state, paddle_x=paddle_x, ball_x=bx, ball_y=by, tick=tick, serve_timer=timer
            )
        serve_index = params.lives - state.lives
        vx, vy = _serve_velocity(state.rng_seed, serve_index, params)
        return replace(
            state,
            paddle_x=paddle_x,
            ball_x=bx,
            ball_y=by,
            ball_vx=vx,
            ball_vy=vy,
            tick=tick,
            serve_timer=0,
            phase=PHASE_PLAYING,
        )

    adv = _advance_ball(
        state.ball_x,
        state.ball_y,
        state.ball_vx,
        state.ball_vy,
        state.bricks,
        paddle_x,
        params,
        level,
    )
    bricks = tuple(adv.bricks)
    score = state.score + params.points_per_brick * len(adv.destroyed)
    last_row = adv.destroyed[-1] if adv.destroyed else state.last_row
    probe = replace(state, last_row=last_row)
    background = background_for_level(level, probe)

    if adv.lost:
        lives = state.lives - 1
        if lives <= 0:
            return replace(
                state,
                paddle_x=paddle_x,
                ball_x=adv.x,
                ball_y=adv.y,
                ball_vx=0.0,
                ball_vy=0.0,
                bricks=bricks,
                score=score,
                lives=0,
                background=background,
                tick=tick,
                phase=PHASE_GAME_OVER,
                serve_timer=0,
                last_row=last_row,
            )
        return replace(
            state,
            paddle_x=paddle_x,
            ball_x=paddle_x,
            ball_y=params.paddle_y + params.serve_gap,
            ball_vx=0.0,
            ball_vy=0.0,
            bricks=bricks,
            score=score,
            lives=lives,
            background=background,
            tick=tick,
            phase=PHASE_SERVING,
            serve_timer=params.serve_ticks,
            last_row=last_row,
        )

    phase = PHASE_PLAYING
    if not any(bricks):
        phase = PHASE_GAME_OVER
    return replace(
        state,
        paddle_x=paddle_x,
        ball_x=adv.x,
        ball_y=adv.y,
        ball_vx=adv.vx,
        ball_vy=adv.vy,
        bricks=bricks,
        score=score,
        background=background,
        tick=tick,
        phase=phase,
        serve_timer=0,
        last_row=last_row,
    )
