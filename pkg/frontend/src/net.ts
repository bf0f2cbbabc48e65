// WebSocket client: handshake, input batches out, frames into the view.
// The client only ever sends hello/input/bye.

import { encodeBye, encodeHello, encodeInput } from "./protocol.js";
import { ClientView } from "./view.js";

export class NetClient {
    private ws: WebSocket | null = null;
    private outSeq = 0;

    constructor(readonly view: ClientView) {}

    connect(url: string): void {
        this.view.connection = "connecting";
        this.ws = new WebSocket(url);
        this.ws.onopen = () => {
            this.ws?.send(encodeHello(this.nextSeq()));
        };
        this.ws.onmessage = (ev) => {
            if (typeof ev.data === "string") this.view.handleFrame(ev.data);
        };
        this.ws.onclose = () => {
            this.view.connection = "closed";
        };
        this.ws.onerror = () => {
            this.view.connection = "closed";
        };
    }

    private nextSeq(): number {
        return this.outSeq++;
    }

    get connected(): boolean {
        return this.ws !== null && this.ws.readyState === WebSocket.OPEN
            && this.view.connection === "connected";
    }

    /** Send one input batch; drops silently when disconnected. */
    sendInput(dialDelta: number, clientSeq: number): boolean {
        if (!this.connected) return false;
        this.ws!.send(encodeInput(this.nextSeq(), dialDelta, clientSeq));
        return true;
    }

    close(): void {
        if (this.connected) this.ws!.send(encodeBye(this.nextSeq()));
        this.ws?.close();
    }
}
