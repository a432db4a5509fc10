__all__ = ["errors", "routes"]
