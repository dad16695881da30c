import logging
import os
import sys
from datetime import datetime


def setup_logging(log_level: int = logging.INFO, log_dir: str | None = "logs") -> logging.Logger:
    """
    Configure logging for edgeal runs.
    Human-readable output goes to stderr so stdout stays free for JSON lines; when
    `log_dir` is set a timestamped log file is written there as well.
    """
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_dir:
        path = os.path.join(os.getcwd(), log_dir)
        os.makedirs(path, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        handlers.append(logging.FileHandler(os.path.join(path, f"edgeal_{timestamp}.log")))

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )

    # Mute noisy loggers
    logging.getLogger("asyncio").setLevel(logging.WARNING)

    return logging.getLogger("edgeal")
