from walkforge.cli.actions import ActionResult
from walkforge.cli.settings import config
from walkforge.sdk import Config, WalkForge, WalkForgeError


class GetConfigAction:
    def execute(self, ctx: dict) -> ActionResult:
        key: str = ctx["key"]
        value = config.get(key)
        if value is None:
            return ActionResult(ok=False, data={}, error=f"Key '{key}' not found")
        return ActionResult(ok=True, data={"value": value})


class SetConfigAction:
    """Write a value, rolling back when the engine config no longer loads."""

    def execute(self, ctx: dict) -> ActionResult:
        key: str = ctx["key"]
        previous = config.get(key)
        config.set(key, ctx["value"])
        if key.startswith("engine."):
            try:
                WalkForge(Config.load())
            except WalkForgeError as e:
                if previous is None:
                    config.unset(key)
                else:
                    config.set(key, previous)
                return ActionResult(ok=False, data={}, error=str(e))
        return ActionResult(ok=True, data={})


class UnsetConfigAction:
    def execute(self, ctx: dict) -> ActionResult:
        key: str = ctx["key"]
        if not config.unset(key):
            return ActionResult(ok=False, data={}, error=f"Key '{key}' not found")
        return ActionResult(ok=True, data={})


class ShowConfigAction:
    def execute(self, ctx: dict) -> ActionResult:
        path = config.get_config_path()
        content = path.read_text() if path.exists() else ""
        return ActionResult(ok=True, data={"config_path": path, "content": content})
