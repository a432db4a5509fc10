import sys

from loguru import logger

from leechkit.config.config import settings

_configured = False


def setup_logging(level: str | None = None) -> None:
    """
    Configura os destinos do loguru (stdout e arquivo rotativo).

    Args:
        level: nível de log; usa settings.log_level quando omitido
    """
    global _configured
    level = level or settings.log_level
    logger.remove()
    logger.add(sys.stdout, level=level)
    logger.add(settings.log_file, rotation="1 day", retention="30 days", level=level)
    if not _configured:
        logger.debug(f"Logs configurados | nivel={level} | arquivo={settings.log_file}")
    _configured = True
