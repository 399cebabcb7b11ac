"""
cliffock - exact Clifford algebra Cl(m,m) in the Extended Fock Basis
"""

from dotenv import load_dotenv
load_dotenv()

from app import CLI, default_ui
from app.src.core.config import load_config
from app.utils.constants import DEFAULT_PATHS
from app.utils.ui_messages import UI_MESSAGES
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
import os
import sys
import json
import logging


########### load the configuration ###########

config_path = os.environ.get("CLIFFOCK_CONFIG", DEFAULT_PATHS["config"])
try:
    config = load_config(config_path)
except FileNotFoundError:
    default_ui.error(UI_MESSAGES["errors"]["config_not_found"].format(config_path))
    sys.exit(1)
except json.JSONDecodeError:
    default_ui.error(UI_MESSAGES["errors"]["config_invalid_json"].format(config_path))
    sys.exit(1)
except (ValidationError, ValueError) as e:
    default_ui.error(UI_MESSAGES["errors"]["config_error"].format(e))
    sys.exit(1)


logging.basicConfig(
    level=config.log_level,
    format="%(message)s",
    handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
)


########### run the CLI ###########

def main() -> int:
    client = CLI(config=config)
    return client.run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
