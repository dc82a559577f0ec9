"""Best-known minimum distances quoted in the published tables.

The values are shipped as ``data/bv_table.csv`` and guarded by a checksum so
that an accidental edit of the data file is caught at load time rather than
silently changing verification outcomes. Table 4 prints no per-row k; its rows
are keyed by the k of the printed chain (levels + 1).
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

BV_TABLE_SHA256 = "4f808467827c74b2414ce32337893a9c64b59606ea226739c53c1026fe93a852"


class BvTableError(RuntimeError):
    pass


@dataclass(frozen=True)
class BvEntry:
    n: int
    k: int
    d_bv: int
    source: str


def _raw_table() -> bytes:
    return resources.files("superimposed").joinpath("data/bv_table.csv").read_bytes()


def parse_table(raw: bytes, expected_sha256: str | None = BV_TABLE_SHA256) -> list[BvEntry]:
    if expected_sha256 is not None:
        digest = hashlib.sha256(raw).hexdigest()
        if digest != expected_sha256:
            raise BvTableError(f"BV table checksum mismatch: {digest} != {expected_sha256}")
    entries = [
        BvEntry(int(r["n"]), int(r["k"]), int(r["d_bv"]), r["source"])
        for r in csv.DictReader(io.StringIO(raw.decode("ascii")))
    ]
    seen: dict[tuple[int, int], BvEntry] = {}
    for e in entries:
        prior = seen.setdefault((e.n, e.k), e)
        if prior.d_bv != e.d_bv:
            raise BvTableError(
                f"({e.n},{e.k}): {prior.source} gives {prior.d_bv}, {e.source} gives {e.d_bv}"
            )
    return entries


@lru_cache(maxsize=None)
def bv_entries() -> tuple[BvEntry, ...]:
    return tuple(parse_table(_raw_table()))


@lru_cache(maxsize=None)
def _index() -> dict[tuple[int, int], int]:
    return {(e.n, e.k): e.d_bv for e in bv_entries()}


def bv_lookup(n: int, k: int) -> int | None:
    """Tabulated d_BV for ``(n, k)``, or None when the pair was never printed."""
    return _index().get((n, k))


def entries_for(source: str) -> list[BvEntry]:
    return [e for e in bv_entries() if e.source == source]
