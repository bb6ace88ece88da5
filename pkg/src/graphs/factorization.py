"""1-factorization counts m(B) with a persistent memo of canonical keys"""

import os
from pathlib import Path
from typing import Callable, Dict, Iterator, Optional, Tuple

from ..exceptions import MemoCacheError, check_budget
from ..utils.logger import setup_logger
from .bipartite_graph import BipartiteGraph, Edge
from .canonical import canonical_form, edge_select
from .matchings import one_factors_through, remove_factor

logger = setup_logger(__name__)

FACTORIZATION_MAX_N = 11

EdgeSelector = Callable[[BipartiteGraph], Edge]


class FactorizationMemo:
    """
    Map from canonical keys to m(B).

    Entries are write-once; a key always maps to the same count. The cache
    file holds one "<hex key> <decimal m>" line per entry and is replaced
    atomically on save.
    """

    def __init__(self, entries: Optional[Dict[bytes, int]] = None):
        self._entries: Dict[bytes, int] = dict(entries or {})
        self._fresh: Dict[bytes, int] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: bytes) -> bool:
        return key in self._entries

    def get(self, key: bytes) -> Optional[int]:
        return self._entries.get(key)

    def put(self, key: bytes, value: int) -> int:
        """Store a count and return the stored value."""
        stored = self._entries.setdefault(key, value)
        if stored == value and key not in self._fresh:
            self._fresh[key] = value
        return stored

    def items(self) -> Iterator[Tuple[bytes, int]]:
        return iter(self._entries.items())

    def snapshot(self) -> Dict[bytes, int]:
        return dict(self._entries)

    def drain_fresh(self) -> Dict[bytes, int]:
        """Entries added since the last drain (used to ship worker results)."""
        fresh, self._fresh = self._fresh, {}
        return fresh

    def merge(self, entries: Dict[bytes, int]) -> int:
        """Add entries, returning how many keys were new."""
        added = 0
        for key, value in entries.items():
            if key not in self._entries:
                self._entries[key] = value
                added += 1
        return added

    def save(self, path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        temporary = path.with_name(path.name + ".tmp")
        with open(temporary, 'w', encoding='utf-8') as f:
            for key, value in sorted(self._entries.items()):
                f.write(f"{key.hex()} {value}\n")
        os.replace(temporary, path)
        logger.debug(f"Saved {len(self._entries)} memo entries to {path}")

    @classmethod
    def load(cls, path) -> "FactorizationMemo":
        """
        Load a cache file; a missing file gives an empty memo.

        Raises:
            MemoCacheError: a line is malformed
        """
        path = Path(path)
        if not path.exists():
            logger.info(f"No memo cache at {path}, starting empty")
            return cls()

        entries: Dict[bytes, int] = {}
        with open(path, 'r', encoding='utf-8') as f:
            for number, line in enumerate(f, 1):
                line = line.strip()
                if not line:
                    continue
                entries.update([_parse_cache_line(line, path, number)])
        logger.info(f"Loaded {len(entries)} memo entries from {path}")
        return cls(entries)


def _parse_cache_line(line: str, path: Path, number: int) -> Tuple[bytes, int]:
    parts = line.split()
    try:
        key = bytes.fromhex(parts[0])
        value = int(parts[1])
    except (IndexError, ValueError) as e:
        raise MemoCacheError(f"{path}:{number}: malformed memo line: {e}")
    if len(parts) != 2 or value < 0 or not key:
        raise MemoCacheError(f"{path}:{number}: malformed memo line")
    n = key[0]
    width = (n + 7) // 8
    if n == 0 or len(key) != 1 + n * width:
        raise MemoCacheError(f"{path}:{number}: key length does not match order {n}")
    for i in range(n):
        if int.from_bytes(key[1 + i * width:1 + (i + 1) * width], "big") >> n:
            raise MemoCacheError(f"{path}:{number}: key row exceeds {n} bits")
    return key, value


def two_regular_count(graph: BipartiteGraph) -> int:
    """m(B) = 2^(c-1) for a 2-regular graph made of c even cycles."""
    return 1 << (graph.component_count() - 1)


def factorization_count(
    graph: BipartiteGraph,
    memo: Optional[FactorizationMemo] = None,
    edge_selector: Optional[EdgeSelector] = None,
    closed_forms: bool = True,
    max_n: int = FACTORIZATION_MAX_N,
) -> int:
    """
    m(B), the number of 1-factorizations (unordered) of a k-regular bipartite graph.

    Fixes an edge e of the canonical representative and sums m(B - F) over
    the 1-factors F through e, memoised on canonical keys.

    Args:
        graph: k-regular balanced bipartite graph
        memo: Shared memo, a private one is used when omitted
        edge_selector: Edge choice rule applied to canonical representatives
        closed_forms: Use the k <= 2 closed forms instead of recursing
        max_n: Largest n accepted

    Returns:
        m(B); 1 for k = 0 and k = 1
    """
    if graph.k is None:
        raise ValueError("factorization_count needs a regular graph")
    check_budget("factorization_count", graph.n, max_n)
    if memo is None:
        memo = FactorizationMemo()
    return _count(graph, memo, edge_selector or edge_select, closed_forms)


def _count(graph: BipartiteGraph, memo: FactorizationMemo, selector: EdgeSelector, closed_forms: bool) -> int:
    k = graph.k
    if k <= 1:
        return 1
    if k == 2 and closed_forms:
        return two_regular_count(graph)

    form = canonical_form(graph)
    cached = memo.get(form.key)
    if cached is not None:
        return cached

    representative = form.to_graph()
    edge = selector(representative)
    total = 0
    for factor in one_factors_through(representative, edge):
        total += _count(remove_factor(representative, factor), memo, selector, closed_forms)
    return memo.put(form.key, total)
