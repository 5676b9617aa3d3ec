"""Compiled inner loops for the static minimum-cut machinery.

Maximum-adjacency sweeps over CSR arrays (with per-edge connectivity
certificates) and a flat union-find used to apply batched contractions.
"""

from __future__ import annotations

from .backend import jit


def _heap_push_impl(hkey, hvert, hsize, key, v):
    i = hsize
    hkey[i] = key
    hvert[i] = v
    while i > 0:
        p = (i - 1) >> 1
        if hkey[p] < hkey[i]:
            hkey[p], hkey[i] = hkey[i], hkey[p]
            hvert[p], hvert[i] = hvert[i], hvert[p]
            i = p
        else:
            break
    return hsize + 1


def _heap_pop_impl(hkey, hvert, hsize):
    key = hkey[0]
    v = hvert[0]
    hsize -= 1
    hkey[0] = hkey[hsize]
    hvert[0] = hvert[hsize]
    i = 0
    while True:
        l = 2 * i + 1
        r = l + 1
        m = i
        if l < hsize and hkey[l] > hkey[m]:
            m = l
        if r < hsize and hkey[r] > hkey[m]:
            m = r
        if m == i:
            break
        hkey[m], hkey[i] = hkey[i], hkey[m]
        hvert[m], hvert[i] = hvert[i], hvert[m]
        i = m
    return key, v, hsize


_heap_push = jit(_heap_push_impl)
_heap_pop = jit(_heap_pop_impl)


def _capforest_impl(indptr, adjv, adjw, n, q, r, visited, order, hkey, hvert):
    """One maximum-adjacency sweep from vertex 0 on a connected CSR graph.

    Fills q with the certificate value of each adjacency entry at scan time
    (entries scanned from the unvisited side stay 0), records the visit order,
    and returns the attachment weight of the last visited vertex (the cut of
    the phase).
    """
    for i in range(n):
        r[i] = 0
        visited[i] = 0
    hsize = _heap_push(hkey, hvert, 0, 0, 0)
    count = 0
    last_r = 0
    while hsize > 0:
        key, u, hsize = _heap_pop(hkey, hvert, hsize)
        if visited[u] == 1 or key != r[u]:
            continue
        visited[u] = 1
        last_r = r[u]
        order[count] = u
        count += 1
        for idx in range(indptr[u], indptr[u + 1]):
            x = adjv[idx]
            if visited[x] == 0:
                q[idx] = r[x] + adjw[idx]
                r[x] += adjw[idx]
                hsize = _heap_push(hkey, hvert, hsize, r[x], x)
    return last_r


def _uf_find_impl(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


_uf_find = jit(_uf_find_impl)


def _uf_union_pairs_impl(parent, us, vs):
    for i in range(len(us)):
        a = _uf_find(parent, us[i])
        b = _uf_find(parent, vs[i])
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b


def _uf_flatten_impl(parent):
    for i in range(len(parent)):
        parent[i] = _uf_find(parent, i)


capforest_kernel = jit(_capforest_impl)
uf_union_pairs = jit(_uf_union_pairs_impl)
uf_flatten = jit(_uf_flatten_impl)
