from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class PreprocessAction:
    """Decompose a graph and persist its walk index."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        graph = client.load_graph(ctx["graph"])
        form = client.decompose(graph)
        idx = client.build(form, graph)
        client.save_index(idx, ctx["output"])

        data = {
            "index": str(ctx["output"]),
            **idx.meta(),
            "invariant_factors": form.describe_factors(),
            "exactness": "mod_p",
        }
        return ActionResult(ok=True, data=data)
