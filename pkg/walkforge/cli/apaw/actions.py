from pathlib import Path

import click

from walkforge.cli.actions import ActionResult
from walkforge.sdk import WalkForge, io


class StreamApawAction:
    """One JSON line per ordered pair on stdout."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        written = io.write_apaw_jsonl(client.iter_apaw(idx), click.get_text_stream("stdout"), idx.p)
        return ActionResult(ok=True, data={"records": written, "p": idx.p})


class WriteApawAction:
    """APAW into a directory, as JSON lines or one matrix file per length."""

    def execute(self, ctx: dict) -> ActionResult:
        client: WalkForge = ctx["client"]
        idx = client.load(ctx["source"])
        directory = Path(ctx["output"])

        if ctx["format"] == "per-k":
            files = [str(path) for path in io.write_apaw_per_k(client.apaw(idx), directory)]
        else:
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / "apaw.jsonl"
            with open(path, "w", encoding="utf-8") as out:
                io.write_apaw_jsonl(client.iter_apaw(idx), out, idx.p)
            files = [str(path)]

        return ActionResult(ok=True, data={
            "output": str(directory),
            "format": ctx["format"],
            "files": files,
            "n": idx.n,
            "mu": idx.mu,
            "p": idx.p,
            "exactness": "mod_p",
        })
