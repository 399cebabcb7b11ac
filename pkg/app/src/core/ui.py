from app.utils.constants import CONSOLE_WIDTH, THEME
from app.utils.ui_messages import UI_MESSAGES
from rich.console import Console
from rich.panel import Panel
import os

# Quiet mode: when set (1/true) suppress informational panels.
QUIET = os.environ.get("CLIFFOCK_QUIET", "0").lower() in ("1", "true", "yes")


class EngineUI:
    """Plain results on one console, rich diagnostics on the other."""

    def __init__(self, out: Console, err: Console, quiet: bool = QUIET):
        self.out = out
        self.err = err
        self.quiet = quiet

    def _style(self, color_key: str) -> str:
        return THEME.get(color_key, THEME["text"])

    def result(self, text: str):
        """Line-oriented output for scripts: no markup, no highlighting."""
        self.out.print(text, markup=False, highlight=False, soft_wrap=True)

    def lines(self, rows: list[str]):
        for row in rows:
            self.result(row)

    def status_message(self, title: str, message: str, style: str = "primary"):
        if self.quiet:
            return
        panel = Panel(
            message,
            title=f"[bold]{title}[/bold]",
            border_style=self._style(style),
            padding=(0, 1),
        )
        self.err.print(panel)

    def info(self, message: str):
        self.status_message(
            title=UI_MESSAGES["titles"]["info"],
            message=message,
            style="muted",
        )

    def warning(self, warning_msg: str):
        self.status_message(
            title=UI_MESSAGES["titles"]["warning"],
            message=f"{warning_msg}",
            style="warning",
        )

    def error(self, error_msg: str):
        # errors are shown even in quiet mode
        panel = Panel(
            f"{error_msg}",
            title=f"[bold]{UI_MESSAGES['titles']['error']}[/bold]",
            border_style=self._style("error"),
            padding=(0, 1),
        )
        self.err.print(panel)


default_ui = EngineUI(
    out=Console(width=CONSOLE_WIDTH, legacy_windows=False, highlight=False, emoji=False),
    err=Console(width=CONSOLE_WIDTH, legacy_windows=False, stderr=True),
)
