"""Shared exception types."""

from __future__ import annotations


class ConfigError(Exception):
    """A configuration value violates a declared invariant.

    The message is anchored: ``source`` names the file (or config block) and
    ``path`` the offending entry in JSON-path style, e.g. ``curve[2]``.
    """

    def __init__(self, path: str, message: str, source: str | None = None):
        self.path = path
        self.message = message
        self.source = source
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}{path}: {message}")

    def with_source(self, source: str) -> "ConfigError":
        """Return a copy anchored to ``source`` (keeps the inner path)."""
        return ConfigError(self.path, self.message, source=source)
