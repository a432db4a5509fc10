from leechkit.config.config import Settings, settings
from leechkit.config.logging import setup_logging

__all__ = ["Settings", "settings", "setup_logging"]
