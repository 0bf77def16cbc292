"""Report documents, their text rendering, and the on-disk result cache."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import warnings
from typing import Optional

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "CONSTDEPTH_CACHE_DIR"


def make_report(command, inputs, outputs, certificates=None, field=None, seconds=None):
    return {
        "command": command,
        "tool_version": __version__,
        "field": field,
        "inputs": inputs,
        "outputs": outputs,
        "certificates": certificates or {},
        "timing": {"seconds": seconds},
        "cached": False,
    }


def flatten(obj, prefix=""):
    """Dotted-path view of a JSON value; leaves are scalars or empty containers."""
    out = {}
    if isinstance(obj, dict) and obj:
        for k, v in obj.items():
            out.update(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(obj, list) and obj and any(isinstance(x, (dict, list)) for x in obj):
        for i, v in enumerate(obj):
            out.update(flatten(v, f"{prefix}[{i}]"))
    else:
        out[prefix] = obj
    return out


def render_text(report) -> str:
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in flatten(report).items()) + "\n"


def parse_text(text: str):
    out = {}
    for line in text.splitlines():
        if line:
            k, _, v = line.partition(": ")
            out[k] = json.loads(v)
    return out


def cache_key(command, inputs) -> str:
    blob = json.dumps({"command": command, "inputs": inputs}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Content-addressed report store; one JSON file per key.

    Writes go to a temporary file that is renamed into place, so concurrent
    processes never observe partial entries.
    """

    def __init__(self, directory: str, version: str = __version__):
        self.directory = directory
        self.version = version
        os.makedirs(directory, exist_ok=True)

    def _path(self, key):
        return os.path.join(self.directory, key + ".json")

    def lookup(self, key) -> Optional[dict]:
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                entry = json.load(fh)
            if entry.get("key") != key or "report" not in entry:
                raise ValueError("malformed entry")
        except (OSError, ValueError) as exc:
            warnings.warn(f"ignoring corrupt cache entry {path}: {exc}")
            return None
        if entry.get("version") != self.version:
            log.info("cache entry %s from version %s, recomputing", key, entry.get("version"))
            return None
        return entry["report"]

    def store(self, key, report):
        entry = {"key": key, "version": self.version, "report": report}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh)
            os.replace(tmp, self._path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
