// Entry point: wire the socket, the dial input, and the render loop.
// Config comes from URL query params: ?addr=host:port&beta=0.6&notch=0.15

import { DialInput, DEFAULT_RADIANS_PER_NOTCH } from "./dialInput.js";
import { DEFAULT_BETA, pseudoHapticGain } from "./gain.js";
import { NetClient } from "./net.js";
import { defaultLayout, renderFrame } from "./render.js";
import { ClientView } from "./view.js";

function numParam(params: URLSearchParams, key: string, fallback: number): number {
    const raw = params.get(key);
    if (raw === null) return fallback;
    const value = Number(raw);
    return Number.isFinite(value) && value > 0 ? value : fallback;
}

function start(): void {
    const params = new URLSearchParams(window.location.search);
    const addr = params.get("addr") ?? window.location.host;
    const beta = numParam(params, "beta", DEFAULT_BETA);
    const notch = numParam(params, "notch", DEFAULT_RADIANS_PER_NOTCH);

    const canvas = document.getElementById("app") as HTMLCanvasElement;
    const ctx = canvas.getContext("2d");
    if (ctx === null) throw new Error("canvas 2d context unavailable");
    const layout = defaultLayout(canvas.width, canvas.height);

    const view = new ClientView();
    const net = new NetClient(view);
    net.connect(`ws://${addr}/session`);

    const input = new DialInput(notch);
    const dial = layout.dial;

    const pointerAngle = (ev: PointerEvent): number => {
        const rect = canvas.getBoundingClientRect();
        const px = ((ev.clientX - rect.left) / rect.width) * canvas.width;
        const py = ((ev.clientY - rect.top) / rect.height) * canvas.height;
        return DialInput.pointerAngle(dial.cx, dial.cy, px, py);
    };

    canvas.addEventListener("pointerdown", (ev) => {
        canvas.setPointerCapture(ev.pointerId);
        input.dragStart(pointerAngle(ev));
    });
    canvas.addEventListener("pointermove", (ev) => input.dragMove(pointerAngle(ev)));
    canvas.addEventListener("pointerup", () => input.dragEnd());
    canvas.addEventListener("pointercancel", () => input.dragEnd());
    canvas.addEventListener(
        "wheel",
        (ev) => {
            ev.preventDefault();
            input.wheel(Math.sign(ev.deltaY));
        },
        { passive: false },
    );
    window.addEventListener("beforeunload", () => net.close());

    const frame = (): void => {
        // one input batch per animation frame, scaled by the pseudo-haptic gain
        const batch = input.flush(pseudoHapticGain(view.torqueNm, beta));
        if (batch !== null && net.connected) {
            net.sendInput(batch.dialDelta, batch.seq);
        }
        renderFrame(ctx, view, layout);
        window.requestAnimationFrame(frame);
    };
    window.requestAnimationFrame(frame);
}

start();
