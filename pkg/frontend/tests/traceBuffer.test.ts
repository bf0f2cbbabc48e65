import { describe, expect, it } from "vitest";

import { TraceBuffer } from "../src/traceBuffer.js";

function sample(tick: number) {
    return { tick, current_a: 0.1, torque_nm: 1.0 };
}

describe("TraceBuffer", () => {
    it("stays time-ordered and drops stale samples", () => {
        const buf = new TraceBuffer(10);
        buf.pushAll([sample(10), sample(30), sample(20), sample(30), sample(40)]);
        expect(buf.view().map((s) => s.tick)).toEqual([10, 30, 40]);
    });

    it("holds at least 5 s of 100 Hz samples by default", () => {
        const buf = new TraceBuffer();
        expect(buf.capacity).toBeGreaterThanOrEqual(500);
    });

    it("trims oldest samples beyond capacity", () => {
        const buf = new TraceBuffer(5);
        for (let i = 0; i < 12; i++) buf.push(sample(i * 10));
        expect(buf.length).toBe(5);
        expect(buf.view()[0].tick).toBe(70);
        expect(buf.latest()!.tick).toBe(110);
    });

    it("reports the latest sample", () => {
        const buf = new TraceBuffer();
        expect(buf.latest()).toBeUndefined();
        buf.push(sample(5));
        expect(buf.latest()!.tick).toBe(5);
    });
});
