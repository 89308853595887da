from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge


class DiameterAction:
    """Diameter against the smallest and largest invariant factor degrees."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        report = client.diameter_report(idx)
        return ActionResult(ok=True, data={**report.to_dict(), "p": idx.p, "exactness": "mod_p"})


class AuditAction:
    """Tally diameter bounds over seeded random strongly connected graphs."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        audit = client.audit(ctx["count"], ctx["n"], ctx["density"])
        return ActionResult(ok=True, data={**audit.to_dict(), "n": ctx["n"], "p": audit.p})
