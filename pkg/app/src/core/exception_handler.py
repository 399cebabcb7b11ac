from app.src.algebra.algebra_errors import (
    AlgebraError,
    DimensionMismatchError,
    ExpressionParseError,
    IndexOutOfRangeError,
    SizeLimitError,
)
from app.src.graphs.graph_errors import (
    GraphError,
    GraphFormatError,
    GraphValidationError,
    NotIndependentError,
    OracleLimitError,
)
from app.src.core.ui import EngineUI
from app.utils.ui_messages import UI_MESSAGES
from typing import Callable
import logging


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CommandExceptionHandler:
    """Centralized exception handling for command execution."""

    @staticmethod
    def handle_command_exceptions(
        operation: Callable[[], int],
        ui: EngineUI,
        propagate: bool = False,
    ) -> int:
        """Run ``operation`` and turn known failures into an error panel and exit status."""
        try:
            return operation()

        except ExpressionParseError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["parse_error"].format(e))
            return EXIT_USAGE

        except GraphFormatError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["graph_format"].format(e))
            return EXIT_USAGE

        except DimensionMismatchError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["dimension_mismatch"].format(e))
            return EXIT_USAGE

        except (SizeLimitError, OracleLimitError) as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["size_limit"].format(e))
            return EXIT_USAGE

        except IndexOutOfRangeError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["index_range"].format(e))
            return EXIT_USAGE

        except NotIndependentError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["not_independent"].format(e))
            return EXIT_USAGE

        except GraphValidationError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["graph_invalid"].format(e))
            return EXIT_USAGE

        except OSError as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["file_unreadable"].format(e.filename, e.strerror))
            return EXIT_USAGE

        except (AlgebraError, GraphError, ValueError) as e:
            if propagate:
                raise
            ui.error(UI_MESSAGES["errors"]["invalid_value"].format(e))
            return EXIT_USAGE

        except Exception as e:
            if propagate:
                raise
            logger.exception("command failed")
            ui.error(UI_MESSAGES["errors"]["unexpected"].format(e))
            return EXIT_FAILURE
