// Live smoke test: spawn the real server, play for 10 s on loopback, and
// check the snapshot rate.  Needs the python package installed (pip -e .).

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { encodeBye, encodeHello, encodeInput, parseEnvelope } from "../src/protocol.js";

const PORT = 18_700 + (process.pid % 500);
const URL = `ws://127.0.0.1:${PORT}/session`;

let server: ChildProcess;

function tryConnect(url: string, timeoutMs: number): Promise<WebSocket> {
    const deadline = Date.now() + timeoutMs;
    return new Promise((resolve, reject) => {
        const attempt = () => {
            const ws = new WebSocket(url);
            ws.once("open", () => resolve(ws));
            ws.once("error", () => {
                ws.terminate();
                if (Date.now() > deadline) reject(new Error("server never came up"));
                else setTimeout(attempt, 250);
            });
        };
        attempt();
    });
}

beforeAll(async () => {
    server = spawn(
        "python3",
        ["-m", "mrdial.cli", "serve", "--addr", `127.0.0.1:${PORT}`],
        { cwd: "..", stdio: "ignore" },
    );
}, 20_000);

afterAll(() => {
    server?.kill("SIGINT");
});

describe("live server smoke", () => {
    it(
        "completes the handshake and streams 60 +/- 2 snapshots/s for 10 s",
        async () => {
            const ws = await tryConnect(URL, 15_000);
            const frames: string[] = [];
            ws.on("message", (data) => frames.push(data.toString()));

            ws.send(encodeHello(0));
            await new Promise<void>((resolve, reject) => {
                const t = setTimeout(() => reject(new Error("no hello reply")), 5000);
                const poll = setInterval(() => {
                    if (frames.some((f) => parseEnvelope(f)?.type === "hello")) {
                        clearTimeout(t);
                        clearInterval(poll);
                        resolve();
                    }
                }, 20);
            });
            const hello = frames.map(parseEnvelope).find((m) => m?.type === "hello")!;
            expect(hello.payload.device).toBe("virtual");
            expect(hello.payload.snapshot_hz).toBe(60);

            // play: a wheel-notch worth of rotation a few times per second
            frames.length = 0;
            let seq = 1;
            const input = setInterval(() => {
                ws.send(encodeInput(seq, 0.15, seq));
                seq += 1;
            }, 200);

            const RUN_MS = 10_000;
            await new Promise((resolve) => setTimeout(resolve, RUN_MS));
            clearInterval(input);

            let snapshots = 0;
            let traces = 0;
            let sawDialMotion = false;
            for (const raw of frames) {
                const msg = parseEnvelope(raw);
                if (msg?.type === "snapshot") {
                    snapshots += 1;
                    const dial = msg.payload.dial as { theta?: number } | undefined;
                    if (dial?.theta !== undefined && Math.abs(dial.theta) > 1e-6) {
                        sawDialMotion = true;
                    }
                } else if (msg?.type === "trace") {
                    traces += 1;
                }
            }
            const rate = snapshots / (RUN_MS / 1000);
            expect(rate).toBeGreaterThanOrEqual(58);
            expect(rate).toBeLessThanOrEqual(62);
            expect(traces).toBeGreaterThan(0);
            expect(sawDialMotion).toBe(true);

            ws.send(encodeBye(seq));
            ws.close();
        },
        40_000,
    );
});
