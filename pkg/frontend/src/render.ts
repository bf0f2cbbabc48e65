// Canvas rendering: playfield themed by the active background, dial widget
// with vibration jitter, and a scrolling current/torque strip chart.
// Drawing goes through the small Draw2D interface so tests can record it.

import { TraceSample } from "./protocol.js";
import { ClientView } from "./view.js";

export interface Draw2D {
    fillStyle: string | CanvasGradient | CanvasPattern;
    strokeStyle: string | CanvasGradient | CanvasPattern;
    lineWidth: number;
    font: string;
    globalAlpha: number;
    textAlign: CanvasTextAlign;
    fillRect(x: number, y: number, w: number, h: number): void;
    strokeRect(x: number, y: number, w: number, h: number): void;
    beginPath(): void;
    moveTo(x: number, y: number): void;
    lineTo(x: number, y: number): void;
    arc(x: number, y: number, r: number, a0: number, a1: number): void;
    stroke(): void;
    fill(): void;
    fillText(text: string, x: number, y: number): void;
}

export interface Theme {
    field: string;
    brick: string;
    label: string;
}

export const THEMES: Record<string, Theme> = {
    sky: { field: "#aed6f1", brick: "#5dade2", label: "sky" },
    mud: { field: "#8d6e63", brick: "#6d4c41", label: "mud" },
    honey: { field: "#f5c542", brick: "#d4a017", label: "honey" },
    pebble: { field: "#b2babb", brick: "#7f8c8d", label: "pebble" },
    asphalt: { field: "#515a5a", brick: "#2e4053", label: "asphalt" },
};

export function themeFor(background: string): Theme {
    return THEMES[background] ?? THEMES.sky;
}

export interface Layout {
    width: number;
    height: number;
    field: { x: number; y: number; w: number; h: number };
    dial: { cx: number; cy: number; r: number };
    chart: { x: number; y: number; w: number; h: number };
}

export function defaultLayout(width = 960, height = 620): Layout {
    return {
        width,
        height,
        field: { x: 20, y: 20, w: 560, h: 560 },
        dial: { cx: 770, cy: 150, r: 95 },
        chart: { x: 610, y: 300, w: 330, h: 280 },
    };
}

/** Map trace samples onto chart pixels; pure, unit-tested. */
export function tracePolyline(
    samples: readonly TraceSample[],
    box: { x: number; y: number; w: number; h: number },
    pick: (s: TraceSample) => number,
    maxValue: number,
): Array<[number, number]> {
    const pts: Array<[number, number]> = [];
    if (samples.length === 0 || maxValue <= 0) return pts;
    const t0 = samples[0].tick;
    const t1 = samples[samples.length - 1].tick;
    const span = Math.max(1, t1 - t0);
    for (const s of samples) {
        const x = box.x + ((s.tick - t0) / span) * box.w;
        const frac = Math.min(1, Math.max(0, pick(s) / maxValue));
        const y = box.y + box.h - frac * box.h;
        pts.push([x, y]);
    }
    return pts;
}

/** Visual jitter of the dial for vibration textures: the live current's
 *  deviation from its recent mean, scaled to pixels. */
export function dialJitterPx(view: ClientView, window = 16, scalePx = 7): number {
    const samples = view.trace.view();
    if (samples.length < 2) return 0;
    const recent = samples.slice(-window);
    const mean = recent.reduce((acc, s) => acc + s.current_a, 0) / recent.length;
    const now = samples[samples.length - 1].current_a;
    return ((now - mean) / Math.max(view.iMaxA, 1e-9)) * scalePx;
}

function polyline(ctx: Draw2D, pts: Array<[number, number]>): void {
    if (pts.length < 2) return;
    ctx.beginPath();
    ctx.moveTo(pts[0][0], pts[0][1]);
    for (let i = 1; i < pts.length; i++) ctx.lineTo(pts[i][0], pts[i][1]);
    ctx.stroke();
}

function drawPlayfield(ctx: Draw2D, view: ClientView, layout: Layout): void {
    const { x, y, w, h } = layout.field;
    const theme = themeFor(view.background);
    ctx.fillStyle = theme.field;
    ctx.fillRect(x, y, w, h);
    ctx.strokeStyle = "#202020";
    ctx.lineWidth = 2;
    ctx.strokeRect(x, y, w, h);

    const snap = view.snapshot;
    if (snap === null) return;
    const px = (u: number) => x + u * w;
    const py = (v: number) => y + (1 - v) * h; // unit y-up -> screen y-down

    const { rows, cols, row_backgrounds } = view.level;
    const { brick_top, brick_bottom, paddle_half_w, paddle_y } = view.field;
    const ch = (brick_top - brick_bottom) / rows;
    const cw = 1 / cols;
    for (let r = 0; r < rows; r++) {
        for (let c = 0; c < cols; c++) {
            if (!snap.game.bricks[r * cols + c]) continue;
            ctx.fillStyle = themeFor(row_backgrounds[r] ?? "sky").brick;
            const top = brick_top - r * ch;
            ctx.fillRect(px(c * cw) + 1, py(top) + 1, (w * cw) - 2, (h * ch) - 2);
        }
    }

    ctx.fillStyle = "#1b2631";
    const pw = 2 * paddle_half_w * w;
    ctx.fillRect(px(snap.game.paddle_x) - pw / 2, py(paddle_y) - 4, pw, 8);

    ctx.fillStyle = "#fdfefe";
    ctx.beginPath();
    ctx.arc(px(snap.game.ball_x), py(snap.game.ball_y), 7, 0, 2 * Math.PI);
    ctx.fill();

    ctx.fillStyle = "#17202a";
    ctx.font = "16px monospace";
    ctx.textAlign = "left";
    ctx.fillText(
        `score ${snap.game.score}   lives ${snap.game.lives}   scene ${theme.label}`,
        x + 8,
        y + h + 22,
    );

    if (snap.game.phase === "game_over") {
        ctx.globalAlpha = 0.65;
        ctx.fillStyle = "#17202a";
        ctx.fillRect(x, y + h / 2 - 42, w, 84);
        ctx.globalAlpha = 1.0;
        ctx.fillStyle = "#fdfefe";
        ctx.font = "32px monospace";
        ctx.textAlign = "center";
        ctx.fillText("GAME OVER", x + w / 2, y + h / 2 + 10);
        ctx.textAlign = "left";
    }
}

function drawDial(ctx: Draw2D, view: ClientView, layout: Layout): void {
    const jitter = view.background === "pebble" || view.background === "asphalt"
        ? dialJitterPx(view)
        : 0;
    const cx = layout.dial.cx + jitter;
    const cy = layout.dial.cy;
    const r = layout.dial.r;

    ctx.fillStyle = "#d5dbdb";
    ctx.beginPath();
    ctx.arc(cx, cy, r, 0, 2 * Math.PI);
    ctx.fill();
    ctx.strokeStyle = "#17202a";
    ctx.lineWidth = 3;
    ctx.beginPath();
    ctx.arc(cx, cy, r, 0, 2 * Math.PI);
    ctx.stroke();

    // pointer tracks the server-confirmed angle only
    const angle = view.dialAngle - Math.PI / 2;
    ctx.beginPath();
    ctx.moveTo(cx, cy);
    ctx.lineTo(cx + 0.85 * r * Math.cos(angle), cy + 0.85 * r * Math.sin(angle));
    ctx.stroke();

    ctx.fillStyle = "#17202a";
    ctx.font = "14px monospace";
    ctx.textAlign = "center";
    const mode = view.snapshot ? view.snapshot.dial.mode : "-";
    ctx.fillText(`dial ${mode}  torque ${view.torqueNm.toFixed(2)} N*m`, cx - jitter, cy + r + 22);
    ctx.textAlign = "left";
}

function drawChart(ctx: Draw2D, view: ClientView, layout: Layout): void {
    const box = layout.chart;
    ctx.fillStyle = "#fbfcfc";
    ctx.fillRect(box.x, box.y, box.w, box.h);
    ctx.strokeStyle = "#17202a";
    ctx.lineWidth = 1;
    ctx.strokeRect(box.x, box.y, box.w, box.h);

    const samples = view.trace.view();
    const torqueMax = Math.max(0.1, ...samples.map((s) => s.torque_nm));
    ctx.strokeStyle = "#c0392b";
    ctx.lineWidth = 1.5;
    polyline(ctx, tracePolyline(samples, box, (s) => s.current_a, view.iMaxA));
    ctx.strokeStyle = "#1f618d";
    polyline(ctx, tracePolyline(samples, box, (s) => s.torque_nm, torqueMax));

    ctx.fillStyle = "#c0392b";
    ctx.font = "12px monospace";
    ctx.fillText(`current (0..${view.iMaxA.toFixed(1)} A)`, box.x + 6, box.y + 14);
    ctx.fillStyle = "#1f618d";
    ctx.fillText(`torque (0..${torqueMax.toFixed(2)} N*m)`, box.x + 6, box.y + 28);
}

export function renderFrame(ctx: Draw2D, view: ClientView, layout: Layout = defaultLayout()): void {
    ctx.globalAlpha = 1.0;
    ctx.fillStyle = "#f4f6f6";
    ctx.fillRect(0, 0, layout.width, layout.height);
    drawPlayfield(ctx, view, layout);
    drawDial(ctx, view, layout);
    drawChart(ctx, view, layout);

    if (view.connection !== "connected") {
        ctx.fillStyle = "#922b21";
        ctx.fillRect(0, 0, layout.width, 34);
        ctx.fillStyle = "#fdfefe";
        ctx.font = "16px monospace";
        ctx.fillText(
            view.connection === "connecting" ? "connecting..." : "disconnected - reload to reconnect",
            12,
            23,
        );
    }
}
