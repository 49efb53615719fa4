# utils/log.py

import logging

from rich.logging import RichHandler

_CONFIGURED = False


def configure_logging(verbose: bool = False) -> None:
    """
    Configura el logger raíz una sola vez con RichHandler.
    verbose=True baja el nivel a DEBUG (progreso de lattices y suites).
    """
    global _CONFIGURED

    level = logging.DEBUG if verbose else logging.INFO
    root = logging.getLogger()
    root.setLevel(level)

    if _CONFIGURED:
        return

    handler = RichHandler(rich_tracebacks=True, show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    root.addHandler(handler)
    _CONFIGURED = True
