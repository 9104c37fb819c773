"""Compiled form of the chordal LexDFS+ pipeline.

Mirrors ``lexbfs_plus`` -> ``l_tree`` -> ``ordering`` -> ``tree_dfs_plus``
step for step on CSR arrays, with the same linked-list partition as
:class:`~lexsearch.partition.OrderedPartition` laid out in flat int32
arrays.  Tie handling is identical, so the outputs match the pure-Python
path exactly; the Python path stays the instrumented reference.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NIL = -1

# columns of the per-vertex records
CLS, VPREV, VNEXT = 0, 1, 2
# columns of the per-class records
HEAD, TAIL, SIZE, CPREV, CNEXT, TWIN = 0, 1, 2, 3, 4, 5
# Pointer arrays share the dtype of the CSR ``indptr`` (int32 whenever the
# edge count allows), which keeps the randomly accessed per-vertex arrays
# small enough to stay in cache longer.

# slots of the scalar state
FIRST, LAST, NALLOC, NFREE = 0, 1, 2, 3


@njit(cache=True)
def _new_partition(n, initial):
    # every vertex is appended below, which sets all of its fields
    V = np.empty((n, 3), np.int32)
    # live classes never exceed 2n: n non-empty plus at most n emptied ones;
    # rows are initialised by _new_class
    C = np.empty((2 * n + 2, 6), np.int32)
    free = np.empty(2 * n + 2, np.int32)
    st = np.zeros(4, np.int64)
    st[FIRST] = st[LAST] = NIL
    if n:
        c = _new_class(C, st, free)
        st[FIRST] = st[LAST] = c
        for v in initial:
            _append_vertex(V, C, v, c)
    return V, C, st, free


@njit(cache=True, inline="always")
def _new_class(C, st, free):
    if st[NFREE] > 0:
        st[NFREE] -= 1
        c = free[st[NFREE]]
    else:
        c = st[NALLOC]
        st[NALLOC] += 1
    C[c, HEAD] = NIL
    C[c, TAIL] = NIL
    C[c, SIZE] = 0
    C[c, CPREV] = NIL
    C[c, CNEXT] = NIL
    C[c, TWIN] = NIL
    return c


@njit(cache=True, inline="always")
def _insert_class_before(C, st, c, before):
    p = C[before, CPREV]
    C[c, CPREV] = p
    C[c, CNEXT] = before
    C[before, CPREV] = c
    if p == NIL:
        st[FIRST] = c
    else:
        C[p, CNEXT] = c


@njit(cache=True, inline="always")
def _unlink_class(C, st, free, c):
    p = C[c, CPREV]
    q = C[c, CNEXT]
    if p == NIL:
        st[FIRST] = q
    else:
        C[p, CNEXT] = q
    if q == NIL:
        st[LAST] = p
    else:
        C[q, CPREV] = p
    free[st[NFREE]] = c
    st[NFREE] += 1


@njit(cache=True, inline="always")
def _unlink_vertex(V, C, v):
    c = V[v, CLS]
    p = V[v, VPREV]
    q = V[v, VNEXT]
    if p == NIL:
        C[c, HEAD] = q
    else:
        V[p, VNEXT] = q
    if q == NIL:
        C[c, TAIL] = p
    else:
        V[q, VPREV] = p
    C[c, SIZE] -= 1
    return c


@njit(cache=True, inline="always")
def _append_vertex(V, C, v, c):
    t = C[c, TAIL]
    V[v, VPREV] = t
    V[v, VNEXT] = NIL
    if t == NIL:
        C[c, HEAD] = v
    else:
        V[t, VNEXT] = v
    C[c, TAIL] = v
    C[c, SIZE] += 1
    V[v, CLS] = c


@njit(cache=True, inline="always")
def _refine(V, C, st, free, touched, items, lo, hi, skip):
    """Pull ``items[lo:hi]`` (minus ``skip``) to the front of their classes."""
    nt = 0
    for k in range(lo, hi):
        v = items[k]
        if skip[v]:
            continue
        c = V[v, CLS]
        a = C[c, TWIN]
        if a < 0:
            a = _new_class(C, st, free)
            _insert_class_before(C, st, a, c)
            C[c, TWIN] = a
            touched[nt] = c
            nt += 1
        _unlink_vertex(V, C, v)
        _append_vertex(V, C, v, a)
    for i in range(nt):
        c = touched[i]
        C[c, TWIN] = NIL
        if C[c, SIZE] == 0:
            _unlink_class(C, st, free, c)


@njit(cache=True)
def _flatten(V, C, st, n):
    out = np.empty(n, np.int32)
    k = 0
    c = st[FIRST]
    while c != NIL:
        v = C[c, HEAD]
        while v != NIL:
            out[k] = v
            k += 1
            v = V[v, VNEXT]
        c = C[c, CNEXT]
    return out


@njit(cache=True)
def _inverse(seq):
    pos = np.empty(seq.shape[0], np.int32)
    for i in range(seq.shape[0]):
        pos[seq[i]] = i
    return pos


@njit(cache=True)
def _sorted_adjacency(indptr, indices, seq):
    """Neighbour lists sorted by descending position in ``seq``."""
    n = seq.shape[0]
    fill = indptr[:-1].copy()
    out = np.empty(indices.shape[0], np.int32)
    for i in range(n - 1, -1, -1):
        u = seq[i]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            out[fill[w]] = u
            fill[w] += 1
    return out


@njit(cache=True)
def lexbfs_plus(indptr, indices, rho):
    n = rho.shape[0]
    adj = _sorted_adjacency(indptr, indices, rho)
    V, C, st, free = _new_partition(n, rho[::-1])
    touched = np.empty(n, np.int32)
    visited = np.zeros(n, np.uint8)
    out = np.empty(n, np.int32)
    for i in range(n):
        # visited vertices leave the partition, so their class records are
        # recycled and the live records stay compact
        c = st[FIRST]
        v = C[c, HEAD]
        _unlink_vertex(V, C, v)
        if C[c, SIZE] == 0:
            _unlink_class(C, st, free, c)
        visited[v] = 1
        out[i] = v
        _refine(V, C, st, free, touched, adj, indptr[v], indptr[v + 1], visited)
    return out


@njit(cache=True)
def is_peo_reverse(indptr, indices, pos, parent):
    """Whether every earlier neighbour of ``v`` other than its L-tree parent
    ``u`` is an earlier neighbour of ``u``.

    Only the verdict is needed, so all passes run in id order.
    """
    n = parent.shape[0]
    count = np.zeros(n + 1, indptr.dtype)
    for v in range(n):
        u = parent[v]
        if u == NIL:
            continue
        pu = pos[u]
        for k in range(indptr[v], indptr[v + 1]):
            if pos[indices[k]] < pu:
                count[u + 1] += 1
    for u in range(n):
        count[u + 1] += count[u]
    fill = count[:-1].copy()
    req = np.empty(count[n], np.int32)
    for v in range(n):
        u = parent[v]
        if u == NIL:
            continue
        pu = pos[u]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if pos[w] < pu:
                req[fill[u]] = w
                fill[u] += 1
    mark = np.full(n, NIL, np.int32)
    for u in range(n):
        if count[u] == count[u + 1]:
            continue
        for k in range(indptr[u], indptr[u + 1]):
            mark[indices[k]] = u
        for k in range(count[u], count[u + 1]):
            if mark[req[k]] != u:
                return False
    return True


@njit(cache=True)
def l_tree_parent(indptr, indices, pos):
    """Rightmost earlier neighbour of every vertex; ``NIL`` for the first."""
    n = pos.shape[0]
    parent = np.full(n, NIL, np.int32)
    for v in range(n):
        pv = pos[v]
        best = NIL
        best_pos = -1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            pw = pos[w]
            if pw < pv and pw > best_pos:
                best = w
                best_pos = pw
        parent[v] = best
    return parent


@njit(cache=True)
def _children(parent, seq, root):
    """Children CSR; each list follows the order of ``seq``."""
    n = parent.shape[0]
    ptr = np.zeros(n + 1, np.int32)
    for v in range(n):
        if v != root:
            ptr[parent[v] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    fill = ptr[:-1].copy()
    kids = np.empty(max(n - 1, 0), np.int32)
    for v in seq:
        if v != root:
            p = parent[v]
            kids[fill[p]] = v
            fill[p] += 1
    return ptr, kids


@njit(cache=True)
def tree_beta(parent, root):
    """Reverse BFS of the tree, children in increasing id order."""
    n = parent.shape[0]
    ptr, kids = _children(parent, np.arange(n), root)
    out = np.empty(n, np.int32)
    out[0] = root
    head = 0
    tail = 1
    while head < tail:
        v = out[head]
        head += 1
        for k in range(ptr[v], ptr[v + 1]):
            out[tail] = kids[k]
            tail += 1
    return out[::-1].copy()


@njit(cache=True)
def ordering_tiebreak(indptr, indices, parent, root, rho, beta):
    n = rho.shape[0]
    bpos = _inverse(beta)
    # left[w]: neighbours of w before it in beta, in beta order
    lptr = np.zeros(n + 1, indptr.dtype)
    for w in range(n):
        for k in range(indptr[w], indptr[w + 1]):
            if bpos[indices[k]] < bpos[w]:
                lptr[w + 1] += 1
    for w in range(n):
        lptr[w + 1] += lptr[w]
    fill = lptr[:-1].copy()
    left = np.empty(lptr[n], np.int32)
    for u in beta:
        pu = bpos[u]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if bpos[w] > pu:
                left[fill[w]] = u
                fill[w] += 1

    V, C, st, free = _new_partition(n, beta)
    touched = np.empty(n, np.int32)
    skip = np.zeros(n, np.uint8)
    for v in beta:
        _refine(V, C, st, free, touched, left, lptr[v], lptr[v + 1], skip)

    for i in range(n - 1, -1, -1):
        v = rho[i]
        c = _unlink_vertex(V, C, v)
        _append_vertex(V, C, v, c)
    c = _unlink_vertex(V, C, root)
    V[root, CLS] = NIL
    if C[c, SIZE] == 0:
        _unlink_class(C, st, free, c)
    c = _new_class(C, st, free)
    _append_vertex(V, C, root, c)
    if st[FIRST] == NIL:
        st[FIRST] = st[LAST] = c
    else:
        _insert_class_before(C, st, c, st[FIRST])
    return _flatten(V, C, st, n)[::-1].copy()


@njit(cache=True)
def tree_dfs_plus(parent, root, tau):
    n = parent.shape[0]
    ptr, kids = _children(parent, tau[::-1], root)
    out = np.empty(n, np.int32)
    stack = np.empty(n, np.int32)
    nxt = ptr[:-1].copy()
    out[0] = root
    stack[0] = root
    k = 1
    top = 1
    while top:
        v = stack[top - 1]
        if nxt[v] == ptr[v + 1]:
            top -= 1
            continue
        w = kids[nxt[v]]
        nxt[v] += 1
        out[k] = w
        k += 1
        stack[top] = w
        top += 1
    return out


@njit(cache=True)
def chordal_lexdfs(indptr, indices, rho, beta_from_lexbfs, check):
    """``(sigma, pi, parent, chordal)``; ``sigma`` is empty when the check fails."""
    n = rho.shape[0]
    root = rho[n - 1]
    pi = lexbfs_plus(indptr, indices, rho)
    pos = _inverse(pi)
    parent = l_tree_parent(indptr, indices, pos)
    if check and not is_peo_reverse(indptr, indices, pos, parent):
        return np.empty(0, np.int32), pi, parent, False
    if beta_from_lexbfs:
        beta = pi[::-1].copy()
    else:
        beta = tree_beta(parent, root)
    tau = ordering_tiebreak(indptr, indices, parent, root, rho, beta)
    return tree_dfs_plus(parent, root, tau), pi, parent, True
