"""Headless entry points: parameter sweeps, scripted game runs, serving.

Exit codes: 0 ok, 1 runtime failure, 2 configuration error.  All commands
share one JSON config file (--config); flags override file values.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .config import AppConfig, load_config
from .errors import ConfigError
from .game import GameConfig, PHASE_GAME_OVER, game_tick, load_level, new_game, state_hash
from .torque import total_torque

SWEEP_VARIABLES = ("current", "omega", "n_teeth")

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_CONFIG = 2


@dataclass(frozen=True)
class SweepSpec:
    variable: str  # current | omega | n_teeth
    start: float
    stop: float
    steps: int
    out: Path
    at_current: float = 1.0  # A, held fixed when not swept
    at_omega: float = 2.0  # rad/s, held fixed when not swept

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError("variable", f"must be one of {SWEEP_VARIABLES}, got {self.variable!r}")
        if self.steps < 2:
            raise ConfigError("steps", f"must be >= 2, got {self.steps!r}")
        if not self.start < self.stop:
            raise ConfigError("range", f"start must be < stop, got {self.start!r} >= {self.stop!r}")


def _sweep_points(spec: SweepSpec) -> list[float]:
    span = spec.stop - spec.start
    return [spec.start + span * i / (spec.steps - 1) for i in range(spec.steps)]


def cmd_sweep(spec: SweepSpec, cfg: AppConfig) -> None:
    """Write `x,t_yield,t_viscous,t_total` CSV rows across the sweep."""
    xs = _sweep_points(spec)
    if spec.variable == "n_teeth":
        teeth = [int(round(x)) for x in xs]
        if any(b <= a for a, b in zip(teeth, teeth[1:])):
            raise ConfigError(
                "range", f"n_teeth sweep must round to strictly increasing integers, got {teeth}"
            )
        xs = [float(n) for n in teeth]

    rows = []
    for x in xs:
        geom = cfg.geometry
        current = spec.at_current
        omega = spec.at_omega
        if spec.variable == "current":
            current = x
        elif spec.variable == "omega":
            omega = x
        else:
            geom = replace(geom, n_teeth=int(x))
        brk = total_torque(
            geom, omega, current, cfg.coil, cfg.material,
            cfg.friction.s_factor, cfg.friction.t_coulomb,
        )
        rows.append((x, brk.t_yield, brk.t_viscous, brk.t_total))

    with open(spec.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "t_yield", "t_viscous", "t_total"])
        for row in rows:
            writer.writerow([repr(v) for v in row])


def read_trace(path: Path) -> list[float]:
    """Input trace file: one dial angle (rad) per line; # starts a comment."""
    values = []
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            values.append(float(text))
        except ValueError:
            raise ConfigError(f"line {lineno}", f"not a number: {text!r}", source=str(path)) from None
    return values


def cmd_play_headless(
    cfg: AppConfig,
    seed: int,
    trace: list[float],
    max_ticks: int = 36000,
) -> dict:
    """Run the game on a scripted dial-angle trace until game over.

    Past the end of the trace the dial holds its last value (0 for an empty
    trace).  Returns the summary: score, lives, ticks, final state hash.
    """
    game_cfg = cfg.game
    state = new_game(game_cfg, seed)
    theta = 0.0
    for tick in range(max_ticks):
        if state.phase == PHASE_GAME_OVER:
            break
        if tick < len(trace):
            theta = trace[tick]
        state = game_tick(state, theta, game_cfg)
    return {
        "score": state.score,
        "lives": state.lives,
        "ticks": state.tick,
        "phase": state.phase,
        "final_hash": state_hash(state),
    }


def cmd_serve(addr: str, cfg: AppConfig, static_dir: str | None = None) -> None:
    """Serve the websocket protocol until signalled."""
    import uvicorn

    from .service import build_app

    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise ConfigError("addr", f"expected HOST:PORT, got {addr!r}")
    app = build_app(cfg, static_dir=static_dir)
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning", ws="auto")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mrdial", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="torque sweep over current, omega, or n_teeth")
    sweep.add_argument("--config", type=Path, default=None)
    sweep.add_argument("--variable", choices=SWEEP_VARIABLES, required=True)
    sweep.add_argument("--start", type=float, required=True)
    sweep.add_argument("--stop", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--out", type=Path, required=True, help="CSV output path")
    sweep.add_argument("--at-current", type=float, default=1.0, help="fixed current (A) when not swept")
    sweep.add_argument("--at-omega", type=float, default=2.0, help="fixed speed (rad/s) when not swept")

    play = sub.add_parser("play", help="scripted headless game run")
    play.add_argument("--config", type=Path, default=None)
    play.add_argument("--level", type=Path, default=None, help="level JSON (default: built-in)")
    play.add_argument("--trace", type=Path, default=None, help="dial-angle trace, one rad per line")
    play.add_argument("--seed", type=int, default=None, help="overrides the config seed")
    play.add_argument("--out", type=Path, default=None, help="summary JSON path (default: stdout)")
    play.add_argument("--max-ticks", type=int, default=36000)
    play.add_argument(
        "--headless", action="store_true",
        help="accepted for symmetry; play always runs headless",
    )

    serve = sub.add_parser("serve", help="run the session server")
    serve.add_argument("--config", type=Path, default=None)
    serve.add_argument(
        "--addr", default=os.environ.get("MRDIAL_ADDR", "127.0.0.1:8765"),
        help="HOST:PORT (or env MRDIAL_ADDR)",
    )
    serve.add_argument("--static", type=Path, default=None, help="static dir to serve the UI from")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.command == "sweep":
            spec = SweepSpec(
                variable=args.variable,
                start=args.start,
                stop=args.stop,
                steps=args.steps,
                out=args.out,
                at_current=args.at_current,
                at_omega=args.at_omega,
            )
            cmd_sweep(spec, cfg)
        elif args.command == "play":
            if args.level is not None:
                cfg = replace(cfg, game=GameConfig(params=cfg.game.params, level=load_level(args.level)))
            seed = cfg.seed if args.seed is None else args.seed
            trace = read_trace(args.trace) if args.trace is not None else []
            summary = cmd_play_headless(cfg, seed, trace, max_ticks=args.max_ticks)
            text = json.dumps(summary, indent=2, sort_keys=True)
            if args.out is not None:
                args.out.write_text(text + "\n")
            else:
                print(text)
        else:
            cmd_serve(args.addr, cfg, static_dir=str(args.static) if args.static else None)
    except ConfigError as err:
        print(f"mrdial: config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except KeyboardInterrupt:
        return EXIT_OK
    except (OSError, ValueError) as err:
        print(f"mrdial: {err}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
