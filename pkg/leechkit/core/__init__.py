from leechkit.core.errors import (
    BoundExceededError,
    GlueAmbiguityError,
    GlueCodeError,
    IsometryError,
    KleinCubicError,
    LatticeError,
    LeechkitError,
    UnknownClaimError,
)

__all__ = [
    "LeechkitError",
    "LatticeError",
    "BoundExceededError",
    "GlueCodeError",
    "IsometryError",
    "GlueAmbiguityError",
    "KleinCubicError",
    "UnknownClaimError",
]
