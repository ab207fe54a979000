# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled breadth-first search kernel over a CSR adjacency.

Must stay result-identical to the pure-Python version in _bfs_py.py.
"""

from libc.stdlib cimport calloc, free


def min_pair_distance(int[:] indptr, int[:] indices, int[:] sources, int[:] targets):
    """Shortest undirected path length from any source to any target.

    The graph is CSR-encoded: neighbors of node u are
    indices[indptr[u]:indptr[u+1]]. Returns -1 when no target is
    reachable or either side is empty.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t n_src = sources.shape[0]
    cdef Py_ssize_t n_tgt = targets.shape[0]
    if n_src == 0 or n_tgt == 0:
        return -1

    cdef int *dist = <int *> calloc(n, sizeof(int))
    cdef unsigned char *seen = <unsigned char *> calloc(n, 1)
    cdef unsigned char *is_target = <unsigned char *> calloc(n, 1)
    cdef int *queue = <int *> calloc(n, sizeof(int))
    if dist == NULL or seen == NULL or is_target == NULL or queue == NULL:
        free(dist); free(seen); free(is_target); free(queue)
        raise MemoryError()

    cdef Py_ssize_t head = 0, tail = 0, i, e
    cdef int u, v, du
    cdef int result = -1
    try:
        for i in range(n_tgt):
            is_target[targets[i]] = 1
        for i in range(n_src):
            u = sources[i]
            if is_target[u]:
                return 0
            if not seen[u]:
                seen[u] = 1
                dist[u] = 0
                queue[tail] = u
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if seen[v]:
                    continue
                if is_target[v]:
                    result = du + 1
                    return result
                seen[v] = 1
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
        return -1
    finally:
        free(dist)
        free(seen)
        free(is_target)
        free(queue)
