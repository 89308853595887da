"""Configuration management for the walkforge CLI."""

import os
from configparser import ConfigParser
from pathlib import Path
from typing import Dict, Optional, Tuple

from walkforge.sdk.config import config_home


class ConfigManager:
    """Reads and writes ``config.ini`` under the walkforge home directory."""

    @property
    def config_dir(self) -> Path:
        return config_home()

    @property
    def config_file(self) -> Path:
        return self.config_dir / "config.ini"

    def _load_config(self) -> ConfigParser:
        config = ConfigParser()
        if self.config_file.exists():
            config.read(self.config_file)
        return config

    def _save_config(self, config: ConfigParser) -> None:
        self.config_dir.mkdir(parents=True, exist_ok=True)
        with open(self.config_file, "w") as f:
            config.write(f)

    def _parse_key(self, key: str) -> Tuple[str, str]:
        """``section.option``; bare keys live in ``[default]``."""
        if "." in key:
            section, option = key.split(".", 1)
        else:
            section, option = "default", key
        return section, option

    def get(self, key: str, default: Optional[str] = None) -> Optional[str]:
        section, option = self._parse_key(key)

        env_key = f"WALKFORGE_{key.upper().replace('.', '_')}"
        env_value = os.environ.get(env_key)
        if env_value is not None:
            return env_value

        config = self._load_config()
        if config.has_option(section, option):
            return config.get(section, option)
        return default

    def set(self, key: str, value: str) -> None:
        section, option = self._parse_key(key)
        config = self._load_config()
        if not config.has_section(section):
            config.add_section(section)
        config.set(section, option, value)
        self._save_config(config)

    def unset(self, key: str) -> bool:
        section, option = self._parse_key(key)
        config = self._load_config()
        if not config.has_option(section, option):
            return False
        config.remove_option(section, option)
        if not config.options(section):
            config.remove_section(section)
        self._save_config(config)
        return True

    def get_all(self) -> Dict[str, Dict[str, str]]:
        config = self._load_config()
        return {section: dict(config.items(section)) for section in config.sections()}

    def get_config_path(self) -> Path:
        return self.config_file


# Global config instance
config = ConfigManager()


__all__ = ["ConfigManager", "config"]
