from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class AnscAction:
    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        shortest = client.ansc(idx)
        return ActionResult(ok=True, data={
            "shortest": shortest,
            "p": idx.p,
            "exactness": "mod_p",
            "confidence": "single_prime",
        })
