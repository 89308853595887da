from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class VerifyRandomAction:
    """Oracle cross-checks on seeded random digraphs."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        report = client.verify(trials=ctx["trials"], max_n=ctx["max_n"])
        return ActionResult(ok=True, data={**report.to_dict(), "exactness": "mod_p"})


class VerifyGraphAction:
    """Oracle cross-checks on one edge list."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        report = client.verify_graph(client.load_graph(ctx["graph"]))
        return ActionResult(ok=True, data={**report.to_dict(), "graph": ctx["graph"], "exactness": "mod_p"})
