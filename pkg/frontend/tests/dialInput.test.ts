import { describe, expect, it } from "vitest";

import { DialInput } from "../src/dialInput.js";

describe("DialInput", () => {
    it("does nothing without user action", () => {
        const input = new DialInput();
        expect(input.flush()).toBeNull();
        expect(input.flush()).toBeNull();
    });

    it("converts one wheel notch to the configured radians", () => {
        const input = new DialInput(0.15);
        input.wheel(1);
        const batch = input.flush();
        expect(batch).not.toBeNull();
        expect(batch!.dialDelta).toBeCloseTo(0.15, 12);
    });

    it("sums a 90-degree drag to pi/2 across frames", () => {
        const input = new DialInput();
        const cx = 100, cy = 100, r = 80;
        // drag in 30 small arc steps from angle 0 to pi/2, flushing mid-way
        let total = 0;
        input.dragStart(DialInput.pointerAngle(cx, cy, cx + r, cy));
        for (let i = 1; i <= 30; i++) {
            const a = (Math.PI / 2) * (i / 30);
            const px = cx + r * Math.cos(a);
            const py = cy + r * Math.sin(a);
            input.dragMove(DialInput.pointerAngle(cx, cy, px, py));
            if (i % 10 === 0) {
                const batch = input.flush();
                if (batch !== null) total += batch.dialDelta;
            }
        }
        input.dragEnd();
        const last = input.flush();
        if (last !== null) total += last.dialDelta;
        expect(total).toBeCloseTo(Math.PI / 2, 9);
    });

    it("handles the +/- pi wraparound without jumps", () => {
        const input = new DialInput();
        input.dragStart(Math.PI - 0.05);
        input.dragMove(-Math.PI + 0.05); // crossed the seam, moved +0.1 rad
        const batch = input.flush();
        expect(batch!.dialDelta).toBeCloseTo(0.1, 9);
    });

    it("emits at most one batch per frame with strictly increasing seq", () => {
        const input = new DialInput(0.1);
        const seqs: number[] = [];
        for (let frame = 0; frame < 10; frame++) {
            input.wheel(1);
            input.wheel(-2);
            input.wheel(1.5);
            const batch = input.flush();
            expect(batch).not.toBeNull();
            seqs.push(batch!.seq);
            expect(input.flush()).toBeNull(); // same frame: nothing left
        }
        for (let i = 1; i < seqs.length; i++) {
            expect(seqs[i]).toBeGreaterThan(seqs[i - 1]);
        }
    });

    it("applies the pseudo-haptic gain to the outgoing delta", () => {
        const input = new DialInput(0.2);
        input.wheel(1);
        const batch = input.flush(0.5);
        expect(batch!.dialDelta).toBeCloseTo(0.1, 12);
    });

    it("ignores drag moves when not dragging", () => {
        const input = new DialInput();
        input.dragMove(1.0);
        expect(input.flush()).toBeNull();
    });
});
