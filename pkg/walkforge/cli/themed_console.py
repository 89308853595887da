"""Themed console writing human-facing messages to stderr."""

import json
import os
from pathlib import Path
from typing import Dict

from rich.console import Console as RichConsole

from walkforge.cli.settings import config

THEMES = ("auto", "dark", "light")


class ThemedConsole(RichConsole):
    """Console with theme support and semantic color methods.

    Everything goes to stderr so stdout stays reserved for JSON results.
    """

    def __init__(self, **kwargs):
        kwargs.setdefault("stderr", True)
        super().__init__(**kwargs)
        self.themes = self._load_themes()
        self.current_theme_name = config.get("ui.theme", "auto")
        self.theme = self._resolve_theme()

    def _load_themes(self) -> Dict[str, Dict[str, str]]:
        themes_file = Path(__file__).parent / "themes.json"
        try:
            with open(themes_file) as f:
                return json.load(f)
        except (FileNotFoundError, json.JSONDecodeError):
            return {
                "dark": {"success": "green", "error": "red", "warning": "yellow", "info": "cyan", "dim": "dim"},
                "light": {"success": "green", "error": "red", "warning": "yellow", "info": "blue", "dim": "dim"},
            }

    def _resolve_theme(self) -> Dict[str, str]:
        name = self.current_theme_name
        if name == "auto":
            name = "dark" if self._is_dark_terminal() else "light"
        return self.themes.get(name, self.themes["dark"])

    def _is_dark_terminal(self) -> bool:
        # COLORFGBG is "fg;bg"; background colors 0-7 are dark
        colorfgbg = os.environ.get("COLORFGBG", "")
        if ";" in colorfgbg:
            bg = colorfgbg.split(";")[-1]
            if bg.isdigit():
                return int(bg) <= 7
        return os.environ.get("THEME", "").lower() in ("dark", "dracula", "monokai", "nord")

    def _colorized_print(self, text, style_key: str, **kwargs) -> None:
        if isinstance(text, str):
            self.print(self.get_styled(text, style_key), **kwargs)
        else:
            self.print(text, **kwargs)

    def success(self, text, **kwargs) -> None:
        self._colorized_print(text, "success", **kwargs)

    def error(self, text, **kwargs) -> None:
        self._colorized_print(text, "error", **kwargs)

    def warning(self, text, **kwargs) -> None:
        self._colorized_print(text, "warning", **kwargs)

    def info(self, text, **kwargs) -> None:
        self._colorized_print(text, "info", **kwargs)

    def dim(self, text, **kwargs) -> None:
        self._colorized_print(text, "dim", **kwargs)

    def get_styled(self, text: str, style_key: str) -> str:
        color = self.theme.get(style_key, self.theme.get("dim", "dim"))
        return f"[{color}]{text}[/{color}]"
