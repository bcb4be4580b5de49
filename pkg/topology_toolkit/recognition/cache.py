"""
Memo of recognition verdicts keyed by complex isomorphism class.
"""

import threading
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.graphs.graph import complex_to_graph


def _same_dim(a: dict, b: dict) -> bool:
    return a['dim'] == b['dim']


class RecognitionCache:
    """
    Thread-safe verdict store.

    A complex is looked up first by its exact simplex set and then by the
    Weisfeiler-Lehman hash of its containment graph. Hash hits are confirmed
    with a full isomorphism test, which is only attempted for complexes of
    at most ``isomorphism_bound`` simplices; larger complexes are cached
    under their exact key alone.

    Parameters
    ----------
    isomorphism_bound : int, default 60
        Largest complex (in simplices) for which relabelled copies share
        an entry.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> cache = RecognitionCache()
    >>> cache.put(closure([[1, 2]]), 'contractible', True)
    >>> cache.get(closure([[7, 9]]), 'contractible')
    True
    """

    def __init__(self, isomorphism_bound: int = 60):
        self.isomorphism_bound = isomorphism_bound
        self._lock = threading.RLock()
        self._exact: Dict[Tuple, Dict[str, Any]] = {}
        self._buckets: Dict[str, List[Tuple[nx.Graph, Dict[str, Any]]]] = {}
        self.hits = 0
        self.misses = 0

    def _entry(self, G: SimplicialComplex, create: bool) -> Optional[Dict[str, Any]]:
        key = G.simplices
        entry = self._exact.get(key)
        if entry is not None or len(G) > self.isomorphism_bound:
            if entry is None and create:
                entry = self._exact[key] = {}
            return entry
        g = complex_to_graph(G)
        digest = nx.weisfeiler_lehman_graph_hash(g, node_attr='dim')
        bucket = self._buckets.setdefault(digest, [])
        for other, verdicts in bucket:
            if nx.is_isomorphic(g, other, node_match=_same_dim):
                self._exact[key] = verdicts
                return verdicts
        if not create:
            return None
        entry = {}
        bucket.append((g, entry))
        self._exact[key] = entry
        return entry

    def get(self, G: SimplicialComplex, verdict: str) -> Any:
        """Stored verdict, or None when unknown."""
        with self._lock:
            entry = self._entry(G, create=False)
            if entry is None or verdict not in entry:
                self.misses += 1
                return None
            self.hits += 1
            return entry[verdict]

    def has(self, G: SimplicialComplex, verdict: str) -> bool:
        with self._lock:
            entry = self._entry(G, create=False)
            return entry is not None and verdict in entry

    def put(self, G: SimplicialComplex, verdict: str, value: Any) -> None:
        with self._lock:
            self._entry(G, create=True)[verdict] = value

    def clear(self) -> None:
        with self._lock:
            self._exact.clear()
            self._buckets.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len({id(v) for v in self._exact.values()})

    def __repr__(self) -> str:
        return f"<RecognitionCache: {len(self)} classes, {self.hits} hits, {self.misses} misses>"
