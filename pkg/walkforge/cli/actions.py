from dataclasses import dataclass


@dataclass
class ActionResult:
    ok: bool
    data: dict
    error: str = ""
    exit_code: int = 0


__all__ = ["ActionResult"]
