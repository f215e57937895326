from __future__ import annotations

import logging
import sys

from cli.router import run
from core.settings import get_settings


def _configure_logging() -> None:
    level = get_settings().logging.level
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main() -> int:
    _configure_logging()
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
