__all__ = [
    "LatticeSchema",
    "AmbientSchema",
    "DiscriminantFormSchema",
    "DiscriminantResponse",
    "EnumerateRequest",
    "EnumerationResponse",
    "IsometryRequest",
    "IsometryResponse",
    "NiemeierRow",
    "NiemeierLatticeResponse",
    "ClaimStatus",
    "ClaimDefinition",
    "ClaimReport",
    "KleinRanksResponse",
    "FixedLinesResponse",
    "SmoothnessResponse",
]
