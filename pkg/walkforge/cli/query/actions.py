from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class WalkCountAction:
    """Walks of exactly ``k`` steps."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        u, v, k = ctx["u"], ctx["v"], ctx["k"]
        count = client.walk_count(idx, u, v, k, fallback=ctx["fallback"])
        return ActionResult(ok=True, data={
            "u": u, "v": v, "k": k, "count": count, "via_fallback": k > idx.mu,
            "p": idx.p, "exactness": "mod_p",
        })


class PrefixCountAction:
    """Walks of at most ``k`` steps."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        u, v, k = ctx["u"], ctx["v"], ctx["k"]
        count = client.prefix_count(idx, u, v, k, fallback=ctx["fallback"])
        return ActionResult(ok=True, data={
            "u": u, "v": v, "upto": k, "count": count, "via_fallback": k > idx.mu,
            "p": idx.p, "exactness": "mod_p",
        })


class AllLengthsAction:
    """Walk counts for every length up to the horizon."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        vector = client.all_lengths(idx, ctx["u"], ctx["v"])
        return ActionResult(ok=True, data={**vector.to_dict(), "mu": idx.mu})
