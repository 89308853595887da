from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge, random_digraph


class BenchAction:
    """Wall-clock APAW against iterated products."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        if ctx["graph"]:
            graphs = [client.load_graph(ctx["graph"])]
        else:
            seed = client.config.seed
            graphs = [random_digraph(n, ctx["density"], seed=abs(seed) + i) for i, n in enumerate(ctx["sizes"])]

        rows = client.bench(graphs, baseline=ctx["baseline"])
        return ActionResult(ok=True, data={
            "rows": rows,
            "p": client.field.p,
            "exactness": "mod_p",
            "threads": client.threads,
        })
