// Shared snapshot/trace fixtures. Torque values for sky/mud/honey were
// produced by the server's default config (steady state, omega = 0).

import { Snapshot, TraceSample } from "../src/protocol.js";

export const STEADY_TORQUE_NM: Record<string, number> = {
    sky: 1.1072,
    mud: 3.127,
    honey: 3.822,
};

export function makeSnapshot(background: string, torqueNm: number, phase = "playing"): Snapshot {
    return {
        tick: 1,
        background,
        game: {
            paddle_x: 0.5,
            ball_x: 0.4,
            ball_y: 0.3,
            ball_vx: 0.1,
            ball_vy: 0.5,
            bricks: new Array(120).fill(1),
            score: 0,
            lives: 3,
            phase,
        },
        dial: { theta: 0.2, omega: 0.0, mode: "stuck", current_a: 0.3, tick: 17 },
        torque_nm: torqueNm,
    };
}

export function snapshotFrame(background: string, torqueNm: number, phase = "playing"): string {
    const snap = makeSnapshot(background, torqueNm, phase);
    return JSON.stringify({ type: "snapshot", seq: 1, payload: snap });
}

/** Square-wave current trace like the pebble effect: 0.2 A base, 1.4 A peak. */
export function pebbleTrace(n = 200): TraceSample[] {
    const out: TraceSample[] = [];
    for (let i = 0; i < n; i++) {
        const tick = i * 10;
        const phase = (tick * 8.0) % 1000.0 / 1000.0;
        const current = phase < 0.5 ? 1.4 : 0.2;
        out.push({ tick, current_a: current, torque_nm: phase < 0.5 ? 3.0 : 0.9 });
    }
    return out;
}
