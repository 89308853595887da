from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class DistanceAction:
    """Shortest walk length between two vertices."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        u, v = ctx["u"], ctx["v"]
        d = client.distance(idx, u, v, method=ctx["method"], fallback=ctx["fallback"])
        return ActionResult(ok=True, data={
            "u": u,
            "v": v,
            "dist": d.value,
            "status": d.status,
            "via_fallback": d.via_fallback,
            "p": idx.p,
            "exactness": "mod_p",
            "confidence": "single_prime",
        })
