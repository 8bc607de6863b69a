import logging

from app.core.config import settings


def configure_logging(level: str | None = None) -> None:
    """Install a root handler; later calls only adjust the level."""
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        datefmt="[%d/%b/%Y %H:%M:%S]",
    )
    logging.getLogger().setLevel((level or settings.log_level).upper())
