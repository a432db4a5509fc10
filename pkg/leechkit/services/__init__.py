__all__ = ["ClaimsService", "LatticeService", "KleinService"]
