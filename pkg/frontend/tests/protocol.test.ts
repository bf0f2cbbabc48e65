import { describe, expect, it } from "vitest";

import {
    encodeBye,
    encodeHello,
    encodeInput,
    parseEnvelope,
    parseSnapshot,
    parseTraceSamples,
} from "../src/protocol.js";
import { makeSnapshot } from "./fixtures.js";

describe("envelope parsing", () => {
    it("parses a valid envelope", () => {
        const msg = parseEnvelope('{"type":"trace","seq":4,"payload":{"samples":[]}}');
        expect(msg).toEqual({ type: "trace", seq: 4, payload: { samples: [] } });
    });

    it.each([
        "garbage",
        "[1,2]",
        "null",
        '{"seq":0,"payload":{}}',
        '{"type":4,"seq":0,"payload":{}}',
        '{"type":"x","seq":-1,"payload":{}}',
        '{"type":"x","seq":1.5,"payload":{}}',
        '{"type":"x","seq":0,"payload":[]}',
        '{"type":"x","seq":0}',
    ])("rejects malformed frame %s", (raw) => {
        expect(parseEnvelope(raw)).toBeNull();
    });
});

describe("snapshot parsing", () => {
    it("round-trips a snapshot payload", () => {
        const snap = makeSnapshot("honey", 3.8);
        const parsed = parseSnapshot(JSON.parse(JSON.stringify(snap)));
        expect(parsed).not.toBeNull();
        expect(parsed!.background).toBe("honey");
        expect(parsed!.torque_nm).toBeCloseTo(3.8, 12);
        expect(parsed!.game.bricks.length).toBe(120);
    });

    it("rejects snapshots missing fields", () => {
        expect(parseSnapshot({})).toBeNull();
        expect(parseSnapshot({ tick: 1, background: "sky", torque_nm: 0 })).toBeNull();
    });
});

describe("trace parsing", () => {
    it("keeps only well-formed samples", () => {
        const samples = parseTraceSamples({
            samples: [[10, 0.3, 1.1], "bad", [1, 2], [20, "x", 0], [30, 0.5, 2.0]],
        });
        expect(samples).toEqual([
            { tick: 10, current_a: 0.3, torque_nm: 1.1 },
            { tick: 30, current_a: 0.5, torque_nm: 2.0 },
        ]);
    });

    it("tolerates a payload without samples", () => {
        expect(parseTraceSamples({})).toEqual([]);
    });
});

describe("encoders", () => {
    it("only produce the three client message types", () => {
        expect(JSON.parse(encodeHello(0)).type).toBe("hello");
        expect(JSON.parse(encodeBye(9)).type).toBe("bye");
        const input = JSON.parse(encodeInput(3, 0.25, 7));
        expect(input).toEqual({
            type: "input",
            seq: 3,
            payload: { dial_delta: 0.25, client_seq: 7 },
        });
    });
});
