"""Platform-stable digests of simulation state.

Floats are quantized to a 1e-9 grid before hashing so that last-ulp noise
(e.g. from differing libm builds) cannot change a digest, while any real
state divergence does.
"""

from __future__ import annotations

import hashlib

QUANTUM = 1e-9


def quantize(value: float, quantum: float = QUANTUM) -> int:
    """Snap a float to an integer grid index."""
    return int(round(value / quantum))


def digest(*parts: object) -> str:
    """SHA-256 hex digest of a canonical rendering of the parts.

    Parts must already be hash-stable values: ints, strings, bools, or
    (nested) tuples of those.  Quantize floats first.
    """
    h = hashlib.sha256()
    h.update(repr(parts).encode("utf-8"))
    return h.hexdigest()
