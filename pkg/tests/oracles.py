"""Independent reference implementations used only by the test suite.

These deliberately avoid the library's code paths: the annulus torque is a
brute-force ring quadrature, and the breakout oracle is a naive dense
substepper with mirror reflections instead of event-exact advancement.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from mrdial.game import GameConfig, PHASE_GAME_OVER, PHASE_PLAYING, PHASE_SERVING


def ring_torque_annulus(
    r1: float, r2: float, gap: float, tau_y: float, eta: float, omega: float, rings: int = 1000
) -> tuple[float, float]:
    """Midpoint-rule quadrature of the annular Bingham torque integrals.

    t_yield  = integral tau_y * r * 2*pi*r dr
    t_viscous = integral eta * (r*|omega|/gap) * r * 2*pi*r dr
    """
    edges = np.linspace(r1, r2, rings + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    dr = (r2 - r1) / rings
    w = abs(omega)
    t_y = float(np.sum(tau_y * mids * 2.0 * np.pi * mids * dr))
    t_v = float(np.sum(eta * (mids * w / gap) * mids * 2.0 * np.pi * mids * dr))
    return t_y, t_v


@dataclass
class OracleResult:
    score: int
    lives: int
    background: str
    phase: str
    ticks: int


def dense_game_run(
    cfg: GameConfig, seed: int, trace: list[float], ticks: int, substeps: int = 10
) -> OracleResult:
    """Naive 10x-oversampled breakout stepper; compares outcomes, not bits."""
    params, level = cfg.params, cfg.level
    cw = 1.0 / level.cols
    ch = (params.brick_top - params.brick_bottom) / level.rows
    bricks = [1] * (level.rows * level.cols)
    score = 0
    lives = params.lives
    background = level.default_background.value
    phase = PHASE_SERVING
    serve_timer = params.serve_ticks
    x = y = vx = vy = 0.0
    theta = 0.0
    h = params.dt / substeps

    def cell_of(px: float, py: float) -> tuple[int, int] | None:
        if not params.brick_bottom <= py <= params.brick_top:
            return None
        row = math.floor((params.brick_top - py) / ch)
        col = math.floor(px / cw)
        row = min(max(row, 0), level.rows - 1)
        col = min(max(col, 0), level.cols - 1)
        return row, col

    tick = 0
    for tick in range(1, ticks + 1):
        if tick - 1 < len(trace):
            theta = trace[tick - 1]
        paddle = min(1.0, max(0.0, 0.5 + params.k_dial * theta))
        if phase == PHASE_GAME_OVER:
            continue
        if phase == PHASE_SERVING:
            x, y = paddle, params.paddle_y + params.serve_gap
            serve_timer -= 1
            if serve_timer <= 0:
                rng = random.Random(seed * 1000003 + (params.lives - lives))
                vx = rng.uniform(-params.serve_vx_max, params.serve_vx_max) * params.ball_speed
                vy = math.sqrt(params.ball_speed * params.ball_speed - vx * vx)
                phase = PHASE_PLAYING
            continue

        lost = False
        for _ in range(substeps):
            px, py = x, y
            x += vx * h
            y += vy * h
            if x < 0.0:
                x = -x
                vx = -vx
            elif x > 1.0:
                x = 2.0 - x
                vx = -vx
            if y > 1.0:
                y = 2.0 - y
                vy = -vy
            if vy < 0.0 and py > params.paddle_y >= y and abs(x - paddle) <= params.paddle_half_w:
                y = 2.0 * params.paddle_y - y
                u = max(-1.0, min(1.0, (x - paddle) / params.paddle_half_w))
                speed = math.sqrt(vx * vx + vy * vy)
                vx = u * params.bounce_vx_max * speed
                vy = math.sqrt(speed * speed - vx * vx)
            if y < 0.0:
                lost = True
                break
            cell = cell_of(x, y)
            if cell is not None:
                row, col = cell
                if bricks[row * level.cols + col]:
                    bricks[row * level.cols + col] = 0
                    score += params.points_per_brick
                    background = level.band_of_row(row).value
                    prev_col = math.floor(px / cw)
                    if prev_col != col:
                        boundary = col * cw if vx > 0 else (col + 1) * cw
                        x = 2.0 * boundary - x
                        vx = -vx
                    else:
                        if vy > 0:
                            boundary = params.brick_top - (row + 1) * ch
                        else:
                            boundary = params.brick_top - row * ch
                        y = 2.0 * boundary - y
                        vy = -vy
        if lost:
            lives -= 1
            if lives <= 0:
                phase = PHASE_GAME_OVER
                lives = 0
            else:
                phase = PHASE_SERVING
                serve_timer = params.serve_ticks
                x, y, vx, vy = paddle, params.paddle_y + params.serve_gap, 0.0, 0.0
        elif not any(bricks):
            phase = PHASE_GAME_OVER
    return OracleResult(score=score, lives=lives, background=background, phase=phase, ticks=tick)
