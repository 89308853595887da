from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class CycleSetsAction:
    """Vertices lying on a cycle of length at most ``c``, for every ``c``."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        sets = client.cycle_sets(idx)
        return ActionResult(ok=True, data={
            "sets": sets.to_lists(),
            "p": idx.p,
            "exactness": "mod_p",
            "confidence": "single_prime",
        })
