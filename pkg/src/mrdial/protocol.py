"""JSON wire protocol shared by server and clients.

Every message is one JSON object: {"type": str, "seq": int, "payload": {}}.
Field names are a bit-exact contract (see docs/protocol.md); seq is
strictly increasing per direction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

TYPE_HELLO = "hello"
TYPE_INPUT = "input"
TYPE_SNAPSHOT = "snapshot"
TYPE_TRACE = "trace"
TYPE_BYE = "bye"
TYPE_ERROR = "error"

KNOWN_TYPES = (TYPE_HELLO, TYPE_INPUT, TYPE_SNAPSHOT, TYPE_TRACE, TYPE_BYE, TYPE_ERROR)


class ProtocolError(ValueError):
    """Malformed wire data; the session replies with an error and survives."""

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


@dataclass(frozen=True)
class WireMessage:
    type: str
    seq: int
    payload: dict

    def __post_init__(self):
        object.__setattr__(self, "payload", dict(self.payload))


def encode(msg: WireMessage) -> str:
    """Compact, key-sorted JSON; round-trips exactly through decode."""
    return json.dumps(
        {"type": msg.type, "seq": msg.seq, "payload": msg.payload},
        separators=(",", ":"),
        sort_keys=True,
        allow_nan=False,
    )


def decode(text: str | bytes) -> WireMessage:
    """Parse and validate the envelope; payload schemas are checked per handler."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise ProtocolError(f"invalid JSON: {err.msg}") from None
    if not isinstance(raw, dict):
        raise ProtocolError(f"envelope must be an object, got {type(raw).__name__}")
    msg_type = raw.get("type")
    if not isinstance(msg_type, str):
        raise ProtocolError(f"type must be a string, got {msg_type!r}")
    seq = raw.get("seq")
    if not isinstance(seq, int) or isinstance(seq, bool) or seq < 0:
        raise ProtocolError(f"seq must be a non-negative integer, got {seq!r}")
    payload = raw.get("payload")
    if not isinstance(payload, dict):
        raise ProtocolError(f"payload must be an object, got {type(payload).__name__}")
    return WireMessage(type=msg_type, seq=seq, payload=payload)


def parse_input_payload(payload: dict) -> tuple[float, int]:
    """Validate an input payload; returns (dial_delta, client_seq)."""
    delta = payload.get("dial_delta")
    if not isinstance(delta, (int, float)) or isinstance(delta, bool):
        raise ProtocolError(f"dial_delta must be a number, got {delta!r}")
    delta = float(delta)
    if not math.isfinite(delta):
        raise ProtocolError(f"dial_delta must be finite, got {delta!r}")
    client_seq = payload.get("client_seq")
    if not isinstance(client_seq, int) or isinstance(client_seq, bool) or client_seq < 0:
        raise ProtocolError(f"client_seq must be a non-negative integer, got {client_seq!r}")
    return delta, client_seq


def error_message(seq: int, detail: str, about_seq: int | None = None) -> WireMessage:
    payload: dict[str, Any] = {"detail": detail}
    if about_seq is not None:
        payload["about_seq"] = about_seq
    return WireMessage(type=TYPE_ERROR, seq=seq, payload=payload)
