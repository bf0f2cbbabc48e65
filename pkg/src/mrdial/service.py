"""Session server: effects -> magnetics -> torque -> dial -> game in one loop.

A session owns two nested fixed-rate clocks: the haptic loop (default
1 kHz) renders the active effect into coil current and steps the dial; the
game loop (default 60 Hz) advances breakout with the current dial angle and
re-selects the effect when the background changes.  Snapshots go out at the
game rate, torque/current traces decimated to 100 Hz.

Processing order at haptic tick h (the reproducibility contract, mirrored
by the headless equivalence tests):

1. fold pending input deltas into the commanded angle
2. current = render(effect, h, haptic_rate), stored on the dial state
3. t_user from the virtual input coupling
4. dial step
5. if h is a trace tick: emit [h, current, total torque]
6. run any game ticks due after h+1 haptic ticks; each emits a snapshot
   and re-selects the effect from the (possibly new) background

Sessions are sequential and independent; nothing is shared between them.
"""

from __future__ import annotations

import asyncio
import time
import uuid
from dataclasses import replace
from typing import Iterator

from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from .config import AppConfig, config_from_dict
from .dial import DialState, apply_user_input, step
from .effects import effect_for_background, render
from .errors import ConfigError
from .game import game_tick, new_game, state_hash
from .hashing import digest, quantize
from .protocol import (
    TYPE_BYE,
    TYPE_ERROR,
    TYPE_HELLO,
    TYPE_INPUT,
    TYPE_SNAPSHOT,
    TYPE_TRACE,
    WireMessage,
    ProtocolError,
    decode,
    encode,
    error_message,
    parse_input_payload,
)
from .torque import total_torque

PROTOCOL_VERSION = 1


class Session:
    """One client's simulation: dial, game, effect, and its clocks."""

    def __init__(self, config: AppConfig, session_id: str | None = None):
        self.id = session_id or uuid.uuid4().hex
        self.config = config
        self.dial = DialState()
        self.game = new_game(config.game, config.seed)
        self.effect = effect_for_background(self.game.background, config.effects)
        self.haptic_tick = 0
        self.game_ticks = 0
        self.theta_cmd = 0.0
        self.pending_delta = 0.0
        self.last_in_seq = -1
        self.last_client_seq = -1
        self.out_seq = -1
        self.closed = False

    # -- outbound ---------------------------------------------------------

    def _next_seq(self) -> int:
        self.out_seq += 1
        return self.out_seq

    def hello_reply(self) -> WireMessage:
        svc = self.config.service
        level = self.config.game.level
        params = self.config.game.params
        return WireMessage(
            type=TYPE_HELLO,
            seq=self._next_seq(),
            payload={
                "session": self.id,
                "protocol": PROTOCOL_VERSION,
                "device": "virtual",
                "snapshot_hz": svc.game_rate,
                "trace_hz": svc.haptic_rate // svc.trace_decimation,
                "i_max_a": self.config.coil.i_max,
                "level": {
                    "rows": level.rows,
                    "cols": level.cols,
                    "row_backgrounds": [
                        level.band_of_row(r).value for r in range(level.rows)
                    ],
                },
                "field": {
                    "paddle_half_w": params.paddle_half_w,
                    "paddle_y": params.paddle_y,
                    "brick_top": params.brick_top,
                    "brick_bottom": params.brick_bottom,
                },
            },
        )

    def _snapshot(self, torque_nm: float) -> WireMessage:
        g = self.game
        d = self.dial
        return WireMessage(
            type=TYPE_SNAPSHOT,
            seq=self._next_seq(),
            payload={
                "tick": g.tick,
                "background": g.background.value,
                "game": {
                    "paddle_x": g.paddle_x,
                    "ball_x": g.ball_x,
                    "ball_y": g.ball_y,
                    "ball_vx": g.ball_vx,
                    "ball_vy": g.ball_vy,
                    "bricks": list(g.bricks),
                    "score": g.score,
                    "lives": g.lives,
                    "phase": g.phase,
                },
                "dial": {
                    "theta": d.theta,
                    "omega": d.omega,
                    "mode": d.mode,
                    "current_a": d.current,
                    "tick": d.tick,
                },
                "torque_nm": torque_nm,
            },
        )

    def _trace(self, haptic_tick: int, current: float, torque_nm: float) -> WireMessage:
        return WireMessage(
            type=TYPE_TRACE,
            seq=self._next_seq(),
            payload={"samples": [[haptic_tick, current, torque_nm]]},
        )

    # -- inbound ----------------------------------------------------------

    def handle_message(self, msg: WireMessage) -> WireMessage | None:
        """Apply one inbound message; returns a reply for hello/errors."""
        if msg.type == TYPE_INPUT:
            return handle_input(self, msg)
        if msg.type == TYPE_HELLO:
            return self.hello_reply()
        if msg.type == TYPE_BYE:
            self.closed = True
            return None
        if msg.type == TYPE_ERROR:
            return None  # never answer errors with errors
        detail = (
            f"unexpected message type {msg.type!r}"
            if msg.type in (TYPE_SNAPSHOT, TYPE_TRACE)
            else f"unknown message type {msg.type!r}"
        )
        return error_message(self._next_seq(), detail, about_seq=msg.seq)

    # -- simulation -------------------------------------------------------

    def _torque_now(self) -> float:
        cfg = self.config
        brk = total_torque(
            cfg.geometry,
            self.dial.omega,
            self.dial.current,
            cfg.coil,
            cfg.material,
            cfg.friction.s_factor,
            cfg.friction.t_coulomb,
        )
        return brk.t_total

    def advance(self) -> list[WireMessage]:
        """One haptic tick; returns the messages it emitted."""
        cfg = self.config
        svc = cfg.service
        h = self.haptic_tick

        if self.pending_delta != 0.0:
            self.theta_cmd += self.pending_delta
            self.pending_delta = 0.0

        current = render(self.effect, h, float(svc.haptic_rate), cfg.coil.i_max)
        self.dial = replace(self.dial, current=current)

        window = svc.input_window_s
        realized = window * self.dial.omega
        t_user = apply_user_input(
            self.theta_cmd - self.dial.theta + realized,
            window,
            realized=realized,
            coupling=cfg.coupling,
        )
        self.dial = step(
            self.dial,
            t_user,
            cfg.dial,
            cfg.geometry,
            cfg.coil,
            cfg.material,
            s_factor=cfg.friction.s_factor,
            t_coulomb=cfg.friction.t_coulomb,
        )

        out: list[WireMessage] = []
        torque_nm: float | None = None
        if h % svc.trace_decimation == 0:
            torque_nm = self._torque_now()
            out.append(self._trace(h, current, torque_nm))

        while (self.game_ticks + 1) * svc.haptic_rate <= (h + 1) * svc.game_rate:
            old_bg = self.game.background
            self.game = game_tick(self.game, self.dial.theta, cfg.game)
            self.game_ticks += 1
            if self.game.background != old_bg:
                self.effect = effect_for_background(self.game.background, cfg.effects)
            if torque_nm is None:
                torque_nm = self._torque_now()
            out.append(self._snapshot(torque_nm))

        self.haptic_tick = h + 1
        return out


def create_session(config: AppConfig | dict, session_id: str | None = None) -> Session:
    """Validate config and open a fresh session (serving phase, zero dial).

    Dict configs run through the full loader, so any invariant violation is
    rejected here with the failing field named.
    """
    if isinstance(config, dict):
        config = config_from_dict(config)
    elif not isinstance(config, AppConfig):
        raise ConfigError("$", f"expected AppConfig or dict, got {type(config).__name__}")
    return Session(config, session_id=session_id)


def handle_input(session: Session, msg: WireMessage) -> WireMessage | None:
    """Fold a dial-delta input into the session; stale seq is a silent no-op."""
    try:
        delta, client_seq = parse_input_payload(msg.payload)
    except ProtocolError as err:
        return error_message(session._next_seq(), err.detail, about_seq=msg.seq)
    if msg.seq <= session.last_in_seq or client_seq <= session.last_client_seq:
        return None  # duplicate or stale: idempotent discard
    session.last_in_seq = msg.seq
    session.last_client_seq = client_seq
    session.pending_delta += delta
    return None


def session_hash(session: Session) -> str:
    """Quantized digest of dial + game state for determinism checks."""
    d = session.dial
    return digest(
        quantize(d.theta),
        quantize(d.omega),
        d.mode,
        quantize(d.current),
        d.tick,
        session.haptic_tick,
        session.game_ticks,
        state_hash(session.game),
    )


def run_loop(
    session: Session,
    real_time: bool = False,
    *,
    ticks: int | None = None,
    inbox: dict[int, list[WireMessage]] | None = None,
) -> Iterator[WireMessage]:
    """Drive the session, yielding snapshot/trace messages as they occur.

    ``ticks`` bounds the run (None = until the session closes); ``inbox``
    schedules inbound messages by haptic tick for deterministic replays.
    With real_time=False the loop runs as fast as possible.
    """
    rate = float(session.config.service.haptic_rate)
    start = time.monotonic()
    done = 0
    while not session.closed and (ticks is None or done < ticks):
        if real_time:
            target = start + (done + 1) / rate
            delay = target - time.monotonic()
            if delay > 0:
                time.sleep(delay)
        if inbox:
            for msg in inbox.get(session.haptic_tick, ()):
                reply = session.handle_message(msg)
                if reply is not None:
                    yield reply
        yield from session.advance()
        done += 1


class OutBuffer:
    """Outbound queue with the documented backpressure policy.

    Snapshots are never dropped; when more than ``trace_capacity`` trace
    messages are queued the oldest trace is discarded first.
    """

    def __init__(self, trace_capacity: int):
        self.trace_capacity = trace_capacity
        self._msgs: list[WireMessage] = []
        self._traces = 0
        self.dropped_traces = 0

    def __len__(self) -> int:
        return len(self._msgs)

    def push(self, msg: WireMessage) -> None:
        if msg.type == TYPE_TRACE:
            if self._traces >= self.trace_capacity:
                for i, queued in enumerate(self._msgs):
                    if queued.type == TYPE_TRACE:
                        del self._msgs[i]
                        self._traces -= 1
                        self.dropped_traces += 1
                        break
            self._traces += 1
        self._msgs.append(msg)

    def drain(self) -> list[WireMessage]:
        msgs = self._msgs
        self._msgs = []
        self._traces = 0
        return msgs


def build_app(config: AppConfig, static_dir: str | None = None) -> FastAPI:
    """FastAPI app exposing the wire protocol on the /session websocket."""
    app = FastAPI(title="mrdial")

    @app.websocket("/session")
    async def session_endpoint(ws: WebSocket):  # pragma: no cover - exercised via client
        await ws.accept()
        svc = config.service
        try:
            first = await asyncio.wait_for(ws.receive_text(), timeout=svc.client_timeout_s)
        except (asyncio.TimeoutError, WebSocketDisconnect):
            await ws.close()
            return
        try:
            msg = decode(first)
        except ProtocolError as err:
            await ws.send_text(encode(error_message(0, err.detail)))
            await ws.close()
            return
        if msg.type != TYPE_HELLO:
            await ws.send_text(encode(error_message(0, f"expected hello, got {msg.type!r}")))
            await ws.close()
            return

        session = create_session(config)
        await ws.send_text(encode(session.hello_reply()))

        inbound: asyncio.Queue[str | None] = asyncio.Queue()

        async def reader():
            try:
                while True:
                    inbound.put_nowait(await ws.receive_text())
            except WebSocketDisconnect:
                inbound.put_nowait(None)

        reader_task = asyncio.create_task(reader())
        buffer = OutBuffer(trace_capacity=svc.trace_buffer)
        loop = asyncio.get_running_loop()
        rate = float(svc.haptic_rate)
        burst_cap = max(1, int(rate * 0.25))  # catch up at most 250 ms per round
        t0 = loop.time()
        done = 0
        try:
            while not session.closed:
                while not inbound.empty():
                    text = inbound.get_nowait()
                    if text is None:
                        return  # client gone
                    try:
                        reply = session.handle_message(decode(text))
                    except ProtocolError as err:
                        reply = error_message(session._next_seq(), err.detail)
                    if reply is not None:
                        buffer.push(reply)
                owed = int((loop.time() - t0) * rate) - done
                for _ in range(min(owed, burst_cap)):
                    for out in session.advance():
                        buffer.push(out)
                    done += 1
                for out in buffer.drain():
                    await ws.send_text(encode(out))
                await asyncio.sleep(0.002)
        except WebSocketDisconnect:
            pass
        finally:
            reader_task.cancel()

    if static_dir is not None:
        from starlette.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
