// Client-side view state: the latest authoritative snapshot, the rolling
// trace, and the dial widget.  Rendering is snapshot-driven; the dial's
// visual angle is always the server-confirmed angle (no client prediction).

import {
    FieldInfo,
    LevelInfo,
    Snapshot,
    TraceSample,
    parseEnvelope,
    parseFieldInfo,
    parseLevelInfo,
    parseSnapshot,
    parseTraceSamples,
} from "./protocol.js";
import { TraceBuffer } from "./traceBuffer.js";

export type ConnectionState = "connecting" | "connected" | "closed";

const DEFAULT_LEVEL: LevelInfo = {
    rows: 10,
    cols: 12,
    row_backgrounds: ["sky", "sky", "mud", "mud", "honey", "honey", "pebble", "pebble", "asphalt", "asphalt"],
};

const DEFAULT_FIELD: FieldInfo = {
    paddle_half_w: 0.075,
    paddle_y: 0.06,
    brick_top: 0.85,
    brick_bottom: 0.55,
};

export class ClientView {
    snapshot: Snapshot | null = null;
    readonly trace = new TraceBuffer();
    connection: ConnectionState = "connecting";
    sessionId = "";
    iMaxA = 2.0;
    level: LevelInfo = DEFAULT_LEVEL;
    field: FieldInfo = DEFAULT_FIELD;
    snapshotsSeen = 0;

    get dialAngle(): number {
        return this.snapshot ? this.snapshot.dial.theta : 0;
    }

    get torqueNm(): number {
        return this.snapshot ? this.snapshot.torque_nm : 0;
    }

    get background(): string {
        return this.snapshot ? this.snapshot.background : "sky";
    }

    latestTrace(): TraceSample | undefined {
        return this.trace.latest();
    }

    /** Apply one raw server frame; unknown/invalid input is ignored with a note. */
    handleFrame(raw: string): void {
        const msg = parseEnvelope(raw);
        if (msg === null) {
            console.warn("mrdial: dropping unparseable frame");
            return;
        }
        switch (msg.type) {
            case "hello": {
                const id = msg.payload.session;
                if (typeof id === "string") this.sessionId = id;
                const imax = msg.payload.i_max_a;
                if (typeof imax === "number" && imax > 0) this.iMaxA = imax;
                const level = parseLevelInfo(msg.payload.level);
                if (level !== null) this.level = level;
                const field = parseFieldInfo(msg.payload.field);
                if (field !== null) this.field = field;
                this.connection = "connected";
                break;
            }
            case "snapshot": {
                const snap = parseSnapshot(msg.payload);
                if (snap !== null) {
                    this.snapshot = snap;
                    this.snapshotsSeen += 1;
                }
                break;
            }
            case "trace":
                this.trace.pushAll(parseTraceSamples(msg.payload));
                break;
            case "error":
                console.warn("mrdial: server error:", msg.payload.detail);
                break;
            case "bye":
                this.connection = "closed";
                break;
            default:
                console.warn(`mrdial: ignoring unknown message type '${msg.type}'`);
        }
    }
}
