// Dial input capture: pointer drags around the widget and wheel notches
// become radians.  Events accumulate between animation frames; flush()
// emits at most one batch per frame with a strictly increasing sequence.

export const DEFAULT_RADIANS_PER_NOTCH = 0.15;

export interface InputBatch {
    seq: number;
    dialDelta: number;
}

function wrapAngle(a: number): number {
    while (a > Math.PI) a -= 2 * Math.PI;
    while (a < -Math.PI) a += 2 * Math.PI;
    return a;
}

export class DialInput {
    private pending = 0;
    private seq = 0;
    private dragging = false;
    private lastAngle = 0;

    constructor(readonly radiansPerNotch: number = DEFAULT_RADIANS_PER_NOTCH) {}

    /** Pointer angle around the widget centre, screen coords (y down). */
    static pointerAngle(cx: number, cy: number, px: number, py: number): number {
        return Math.atan2(py - cy, px - cx);
    }

    dragStart(angle: number): void {
        this.dragging = true;
        this.lastAngle = angle;
    }

    dragMove(angle: number): void {
        if (!this.dragging) return;
        this.pending += wrapAngle(angle - this.lastAngle);
        this.lastAngle = angle;
    }

    dragEnd(): void {
        this.dragging = false;
    }

    wheel(notches: number): void {
        this.pending += notches * this.radiansPerNotch;
    }

    /** One batch per animation frame; null when nothing happened. */
    flush(gain: number = 1.0): InputBatch | null {
        if (this.pending === 0) return null;
        const batch = { seq: this.seq++, dialDelta: this.pending * gain };
        this.pending = 0;
        return batch;
    }
}
