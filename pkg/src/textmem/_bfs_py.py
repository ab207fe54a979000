"""Pure-Python breadth-first search kernel over a CSR adjacency.

Reference implementation of the compiled kernel in _bfs.pyx; both must
return identical results for identical inputs.
"""

from __future__ import annotations

from typing import Sequence


def min_pair_distance(
    indptr: Sequence[int],
    indices: Sequence[int],
    sources: Sequence[int],
    targets: Sequence[int],
) -> int:
    """Shortest undirected path length from any source to any target.

    The graph is CSR-encoded: neighbors of node u are
    indices[indptr[u]:indptr[u+1]]. Returns -1 when no target is
    reachable or either side is empty.
    """
    if not len(sources) or not len(targets):
        return -1
    target_set = set(targets)
    frontier = []
    visited = set()
    for s in sources:
        if s in target_set:
            return 0
        if s not in visited:
            visited.add(s)
            frontier.append(s)
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if v in visited:
                    continue
                if v in target_set:
                    return depth
                visited.add(v)
                nxt.append(v)
        frontier = nxt
    return -1
