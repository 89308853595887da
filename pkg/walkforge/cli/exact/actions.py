from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class ExactCountsAction:
    """Exact integer walk counts by Chinese remaindering."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        graph = client.load_graph(ctx["graph"])
        vector = client.exact(graph, ctx["u"], ctx["v"], primes=ctx["primes"] or None, bound=ctx["bound"])
        return ActionResult(ok=True, data=vector.to_dict())
