// Wire protocol types, mirroring the server contract (docs/protocol.md).
// Field names are bit-exact; anything that does not parse is dropped.

export interface Envelope {
    type: string;
    seq: number;
    payload: Record<string, unknown>;
}

export interface GameView {
    paddle_x: number;
    ball_x: number;
    ball_y: number;
    ball_vx: number;
    ball_vy: number;
    bricks: number[];
    score: number;
    lives: number;
    phase: string;
}

export interface DialView {
    theta: number;
    omega: number;
    mode: string;
    current_a: number;
    tick: number;
}

export interface Snapshot {
    tick: number;
    background: string;
    game: GameView;
    dial: DialView;
    torque_nm: number;
}

export interface TraceSample {
    tick: number;
    current_a: number;
    torque_nm: number;
}

export interface LevelInfo {
    rows: number;
    cols: number;
    row_backgrounds: string[];
}

export interface FieldInfo {
    paddle_half_w: number;
    paddle_y: number;
    brick_top: number;
    brick_bottom: number;
}

export function parseLevelInfo(value: unknown): LevelInfo | null {
    if (typeof value !== "object" || value === null) return null;
    const obj = value as Record<string, unknown>;
    if (typeof obj.rows !== "number" || typeof obj.cols !== "number") return null;
    if (!Array.isArray(obj.row_backgrounds)) return null;
    if (!obj.row_backgrounds.every((b) => typeof b === "string")) return null;
    return { rows: obj.rows, cols: obj.cols, row_backgrounds: obj.row_backgrounds as string[] };
}

export function parseFieldInfo(value: unknown): FieldInfo | null {
    if (typeof value !== "object" || value === null) return null;
    const obj = value as Record<string, unknown>;
    for (const key of ["paddle_half_w", "paddle_y", "brick_top", "brick_bottom"]) {
        if (typeof obj[key] !== "number") return null;
    }
    return obj as unknown as FieldInfo;
}

export const BACKGROUNDS = ["sky", "mud", "honey", "pebble", "asphalt"] as const;

export function parseEnvelope(raw: string): Envelope | null {
    let data: unknown;
    try {
        data = JSON.parse(raw);
    } catch {
        return null;
    }
    if (typeof data !== "object" || data === null || Array.isArray(data)) return null;
    const obj = data as Record<string, unknown>;
    if (typeof obj.type !== "string") return null;
    if (typeof obj.seq !== "number" || !Number.isInteger(obj.seq) || obj.seq < 0) return null;
    if (typeof obj.payload !== "object" || obj.payload === null || Array.isArray(obj.payload)) {
        return null;
    }
    return { type: obj.type, seq: obj.seq, payload: obj.payload as Record<string, unknown> };
}

function isNum(v: unknown): v is number {
    return typeof v === "number" && Number.isFinite(v);
}

export function parseSnapshot(payload: Record<string, unknown>): Snapshot | null {
    const game = payload.game as Record<string, unknown> | undefined;
    const dial = payload.dial as Record<string, unknown> | undefined;
    if (!game || !dial) return null;
    if (!isNum(payload.tick) || typeof payload.background !== "string") return null;
    if (!isNum(payload.torque_nm)) return null;
    const need = ["paddle_x", "ball_x", "ball_y", "ball_vx", "ball_vy", "score", "lives"];
    for (const key of need) if (!isNum(game[key])) return null;
    if (!Array.isArray(game.bricks) || typeof game.phase !== "string") return null;
    if (!isNum(dial.theta) || !isNum(dial.omega) || !isNum(dial.current_a)) return null;
    return {
        tick: payload.tick,
        background: payload.background,
        game: game as unknown as GameView,
        dial: dial as unknown as DialView,
        torque_nm: payload.torque_nm,
    };
}

export function parseTraceSamples(payload: Record<string, unknown>): TraceSample[] {
    if (!Array.isArray(payload.samples)) return [];
    const out: TraceSample[] = [];
    for (const entry of payload.samples) {
        if (!Array.isArray(entry) || entry.length !== 3) continue;
        const [tick, current, torque] = entry;
        if (isNum(tick) && isNum(current) && isNum(torque)) {
            out.push({ tick, current_a: current, torque_nm: torque });
        }
    }
    return out;
}

export function encodeHello(seq: number): string {
    return JSON.stringify({ type: "hello", seq, payload: {} });
}

export function encodeInput(seq: number, dialDelta: number, clientSeq: number): string {
    return JSON.stringify({
        type: "input",
        seq,
        payload: { dial_delta: dialDelta, client_seq: clientSeq },
    });
}

export function encodeBye(seq: number): string {
    return JSON.stringify({ type: "bye", seq, payload: {} });
}
