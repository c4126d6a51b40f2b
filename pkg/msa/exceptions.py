"""
Error hierarchy for the maximal-subalgebra toolkit.

Library code raises; only the harness and the CLI log.
"""


class QuiverError(ValueError):
    """Invalid quiver, vertex label, orientation word or missing neighbour."""


class AlgebraError(ValueError):
    """Invalid algebra construction (cyclic quiver, bad truncation, not a based subalgebra)."""


class SpecError(ValueError):
    """Invalid separable/split specification or non-type-A input to the enumerator."""


class UnsupportedPresentationError(ValueError):
    """Input falls outside the quadratic-relation family handled by the isomorphism test."""

    def __init__(self, detail: str = ""):
        message = "unsupported presentation degree"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class SoundnessError(RuntimeError):
    """A computed result failed its independent re-verification."""
