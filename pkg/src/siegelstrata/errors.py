"""Exception types.

Two failure families are kept apart so callers (and the CLI exit codes) can
distinguish "your input is mathematically invalid" from "this input is valid
but outside the configured computational envelope".
"""


class InputError(ValueError):
    """Invalid mathematical input: bad dominance, bad index, bad level."""


class LevelError(InputError):
    """Level or genus outside the standing hypotheses (n >= 3, d >= 1)."""


class ScopeError(RuntimeError):
    """Valid input, but beyond an enumeration cap or size guard."""
