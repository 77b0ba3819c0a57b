"""On-disk cache of character tables.

Each table lives in ``{cache_dir}/{type}{n}.json`` together with a format
version and a SHA-256 checksum of its payload.  Anything that fails to load,
has the wrong version, or does not match its checksum is recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from pathlib import Path

from .weylchar import WeylGroup, weyl_group

FORMAT_VERSION = 1
ENV_VAR = "SPRINGERGREEN_CACHE"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "springergreen"


def table_payload(g: WeylGroup) -> dict:
    """JSON-ready character table; numbers as decimal strings."""
    return {
        "type": g.type,
        "n": g.n,
        "order": str(g.order),
        "classes": [str(c) for c in g.classes],
        "class_sizes": [str(g.order // z) for z in g.centralizers],
        "centralizers": [str(z) for z in g.centralizers],
        "irreps": [str(chi) for chi in g.irreps],
        "values": [[str(v) for v in g.character(chi).values] for chi in g.irreps],
    }


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def path_for(gtype: str, n: int, cache_dir: Path | None = None) -> Path:
    return Path(cache_dir or default_dir()) / f"{gtype}{n}.json"


def read_table(path: Path) -> dict | None:
    """Payload stored at ``path`` if intact and current, else ``None``."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(doc, dict) or doc.get("format_version") != FORMAT_VERSION:
        return None
    payload = doc.get("table")
    if not isinstance(payload, dict) or doc.get("checksum") != _checksum(payload):
        return None
    return payload


def write_table(path: Path, payload: dict) -> None:
    doc = {"format_version": FORMAT_VERSION, "checksum": _checksum(payload), "table": payload}
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, indent=1) + "\n")
    tmp.replace(path)


def load_table(gtype: str, n: int, cache_dir: Path | None = None, use_cache: bool = True) -> dict:
    """Character table payload, from the cache when valid.

    Tables are recomputed and rewritten when missing or corrupt; a cache
    directory that cannot be written is skipped rather than treated as fatal.
    """
    path = path_for(gtype, n, cache_dir)
    if use_cache:
        hit = read_table(path)
        if hit is not None and hit.get("type") == gtype and hit.get("n") == n:
            return hit
    payload = table_payload(weyl_group(gtype, n))
    if use_cache:
        try:
            write_table(path, payload)
        except OSError:
            pass
    return payload


def table_values(payload: dict) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in payload["values"]]
