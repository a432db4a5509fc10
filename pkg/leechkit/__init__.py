"""leechkit: reticulados exatos, construções de Niemeier e a cúbica de Klein."""

__version__ = "1.0.0"

__all__ = ["__version__"]
