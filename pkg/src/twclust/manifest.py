"""Run manifests: every output file points back at one of these.

The manifest records the subcommand, the full effective configuration, the
seed, the library version, digests of the inputs and the wall-clock time.
It is the only output that carries a timestamp, so data files rerun with
the same seed stay byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import time
from datetime import datetime, timezone
from pathlib import Path

MANIFEST_NAME = "manifest.json"


def _digest(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


class RunManifest:
    def __init__(self, subcommand, config, seed, inputs=()):
        from . import __version__

        self.data = {
            "subcommand": subcommand,
            "config": config,
            "seed": seed,
            "version": __version__,
            "inputs": {str(p): _digest(p) for p in inputs},
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        self._start = time.monotonic()

    def finish(self):
        self.data["wall_clock_s"] = round(time.monotonic() - self._start, 3)
        return self.data

    def write(self, out_dir):
        out = Path(out_dir) / MANIFEST_NAME
        out.write_text(json.dumps(self.finish(), indent=2, sort_keys=True) + "\n")
        return out
