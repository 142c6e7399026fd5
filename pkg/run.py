import logging
import sys

from app.cli import main
from app.config import settings

if __name__ == "__main__":
    logging.basicConfig(
        stream=sys.stderr,
        level=settings.JENSEN_LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    sys.exit(main())
