"""Size caps for the exponential searches.

Defaults can be overridden with the ``CHOICEGRAPH_CAPS`` environment variable,
a comma separated list of ``name=value`` pairs, e.g.
``CHOICEGRAPH_CAPS="automorphism_vertices=200,oracle_exhaustive=10"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Caps:
    automorphism_vertices: int = 500
    enumeration: int = 10**6
    chain_image: int = 6
    chain_domain: int = 12
    oracle_exhaustive: int = 12
    oracle_vertices: int = 64
    # group elements materialised by the pruned distinguishing search
    oracle_group: int = 200_000


def from_env(env: str | None = None) -> Caps:
    raw = os.environ.get("CHOICEGRAPH_CAPS", "") if env is None else env
    caps = Caps()
    if not raw.strip():
        return caps
    known = {f.name for f in fields(Caps)}
    updates = {}
    for item in raw.split(","):
        if not item.strip():
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in known:
            raise ValueError(f"bad CHOICEGRAPH_CAPS entry: {item!r}")
        updates[name] = int(value)
    return replace(caps, **updates)


def get_caps() -> Caps:
    return from_env()
