// Rolling buffer of trace samples: time-ordered, bounded length.
// 100 Hz decimated samples, so 5 s needs 500 entries; keep some slack.

import { TraceSample } from "./protocol.js";

export class TraceBuffer {
    private samples: TraceSample[] = [];

    constructor(readonly capacity: number = 600) {}

    push(sample: TraceSample): void {
        const last = this.samples[this.samples.length - 1];
        if (last !== undefined && sample.tick <= last.tick) {
            return; // stale or duplicate sample: the buffer stays time-ordered
        }
        this.samples.push(sample);
        if (this.samples.length > this.capacity) {
            this.samples.splice(0, this.samples.length - this.capacity);
        }
    }

    pushAll(samples: TraceSample[]): void {
        for (const s of samples) this.push(s);
    }

    get length(): number {
        return this.samples.length;
    }

    latest(): TraceSample | undefined {
        return this.samples[this.samples.length - 1];
    }

    view(): readonly TraceSample[] {
        return this.samples;
    }
}
