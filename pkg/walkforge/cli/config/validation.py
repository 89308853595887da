"""Validation logic for config commands."""

from dataclasses import fields

from walkforge.cli.themed_console import THEMES
from walkforge.sdk import Config

ENGINE_KEYS = tuple(f.name for f in fields(Config))


def validate_key(key: str) -> tuple[bool, str]:
    if not key or not key.strip():
        return False, "Key required"
    section, _, option = key.partition(".")
    if section == "engine" and option not in ENGINE_KEYS:
        return False, f"Unknown engine key '{option}' (expected one of: {', '.join(ENGINE_KEYS)})"
    return True, ""


def validate_set(key: str, value: str) -> tuple[bool, str]:
    valid, error = validate_key(key)
    if not valid:
        return valid, error
    if key == "ui.theme" and value not in THEMES:
        return False, f"Theme must be one of: {', '.join(THEMES)}"
    return True, ""
