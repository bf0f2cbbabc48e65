// Pseudo-haptic feedback: resistance is conveyed by shrinking the
// control-display ratio of the dial, gain = 1/(1 + beta*torque).
// No force hardware exists, so "honey" simply takes more turning.

export const DEFAULT_BETA = 0.6;

export function pseudoHapticGain(torqueNm: number, beta: number = DEFAULT_BETA): number {
    const t = Math.max(0, torqueNm);
    return 1.0 / (1.0 + beta * t);
}
