from leechkit.api.routes import catalog, claims, klein, lattices, niemeier

__all__ = ["catalog", "claims", "klein", "lattices", "niemeier"]
