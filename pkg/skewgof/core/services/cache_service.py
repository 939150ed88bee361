"""
On-disk cache of simulated null tables, keyed by a content hash of the
simulation parameters.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Optional, Sequence, Union

from ..models.enums import StatisticKind
from ..models.reports import NullTable, SCHEMA_VERSION

logger = logging.getLogger(__name__)


class NullTableCache:
    """JSON files under cache_dir; a disabled cache never reads or writes."""

    def __init__(self, cache_dir: Union[str, Path], enabled: bool = True):
        self.cache_dir = Path(cache_dir).expanduser()
        self.enabled = enabled

    @staticmethod
    def key(kind: StatisticKind, n: int, replicates: int, seed: int, levels: Sequence[float]) -> str:
        payload = json.dumps({
            "schema_version": SCHEMA_VERSION,
            "kind": kind.value,
            "n": n,
            "replicates": replicates,
            "seed": seed,
            "levels": sorted(round(float(p), 10) for p in levels),
        }, sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def path_for(self, kind: StatisticKind, n: int, replicates: int, seed: int,
                 levels: Sequence[float]) -> Path:
        digest = self.key(kind, n, replicates, seed, levels)[:16]
        return self.cache_dir / f"nulltable-{kind.value}-n{n}-{digest}.json"

    def load(self, kind: StatisticKind, n: int, replicates: int, seed: int,
             levels: Sequence[float]) -> Optional[NullTable]:
        if not self.enabled:
            return None
        path = self.path_for(kind, n, replicates, seed, levels)
        if not path.exists():
            return None
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            if data.get("schema_version") != SCHEMA_VERSION:
                logger.info(f"ignoring cached table with old schema: {path}")
                return None
            table = NullTable.from_dict(data)
        except (OSError, ValueError, KeyError) as e:
            logger.warning(f"unreadable cache entry {path}: {e}")
            return None
        logger.info(f"cache hit: {path.name}")
        return table

    def store(self, table: NullTable, levels: Sequence[float]) -> Optional[Path]:
        if not self.enabled:
            return None
        path = self.path_for(table.kind, table.n, table.replicates, table.seed, levels)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w", encoding="utf-8") as f:
                json.dump(table.to_dict(), f, indent=2)
            tmp.replace(path)
        except OSError as e:
            logger.warning(f"cannot write null table cache {path}: {e}")
            return None
        logger.info(f"cached {path.name}")
        return path
