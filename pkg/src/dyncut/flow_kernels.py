"""Push-relabel inner loops over flat arc arrays.

Arcs are stored in pairs: arc ``a`` and its reverse ``a ^ 1``.  Edge flow is
antisymmetric across a pair and is reset lazily: an arc whose stamp differs
from the current problem id behaves as if its flow were zero, and is restamped
on first write.  All functions here are compiled with numba unless the
``python`` backend is forced.
"""

from __future__ import annotations

import numpy as np

from .backend import jit

KIND_REACHED_BOUND = 0
KIND_EXACT = 1


def _local_relabel_impl(head, nxt, to, cap, d, queue, s, t, gamma, n):
    # backward BFS from the sink over graph edges (arc pairs are symmetric, so
    # scanning outgoing arcs of the frontier is equivalent)
    unvisited = gamma + 1
    for v in range(n):
        d[v] = unvisited
    d[t] = 0
    queue[0] = t
    qh = 0
    qt = 1
    while qh < qt:
        x = queue[qh]
        qh += 1
        if d[x] >= gamma:
            continue
        a = head[x]
        while a != -1:
            y = to[a]
            if cap[a] > 0 and d[y] == unvisited and y != t:
                d[y] = d[x] + 1
                queue[qt] = y
                qt += 1
            a = nxt[a]
    d[s] = n


def _max_flow_impl(
    head, nxt, to, cap, flow, stamp, problem,
    d, excess, cur, bhead, btail, bnext, inb,
    s, t, bound, n,
):
    """Bounded lowest-label push-relabel.  Returns (kind, value).

    Assumes d holds a valid initial labeling (d[s] = n, d[t] = 0), excess is
    zeroed and bucket arrays are large enough.  Terminates with
    KIND_REACHED_BOUND as soon as the sink excess reaches ``bound``.
    """
    if bound <= 0:
        return KIND_REACHED_BOUND, 0

    for lv in range(n + 1):
        bhead[lv] = -1
        btail[lv] = -1
    for v in range(n):
        inb[v] = 0
        cur[v] = head[v]
        excess[v] = 0

    # saturate all arcs out of the source
    a = head[s]
    while a != -1:
        if cap[a] > 0:
            if stamp[a] != problem:
                flow[a] = 0
                flow[a ^ 1] = 0
                stamp[a] = problem
                stamp[a ^ 1] = problem
            delta = cap[a] - flow[a]
            if delta > 0:
                flow[a] += delta
                flow[a ^ 1] -= delta
                w = to[a]
                excess[w] += delta
                excess[s] -= delta
                if w == t:
                    if excess[t] >= bound:
                        return KIND_REACHED_BOUND, bound
                elif inb[w] == 0 and d[w] < n:
                    lv = d[w]
                    bnext[w] = -1
                    if btail[lv] == -1:
                        bhead[lv] = w
                    else:
                        bnext[btail[lv]] = w
                    btail[lv] = w
                    inb[w] = 1
        a = nxt[a]

    lv = 0
    while lv < n:
        v = bhead[lv]
        if v == -1:
            lv += 1
            continue
        # pop FIFO head
        bhead[lv] = bnext[v]
        if bhead[lv] == -1:
            btail[lv] = -1
        inb[v] = 0

        min_activated = lv
        while excess[v] > 0:
            a = cur[v]
            if a == -1:
                # relabel: minimum residual neighbor label + 1
                dmin = 2 * n
                b = head[v]
                while b != -1:
                    f = flow[b] if stamp[b] == problem else 0
                    if cap[b] - f > 0:
                        dv = d[to[b]]
                        if dv < dmin:
                            dmin = dv
                    b = nxt[b]
                d[v] = dmin + 1
                cur[v] = head[v]
                # re-queue at the new level so selection stays lowest-label
                break
            w = to[a]
            f = flow[a] if stamp[a] == problem else 0
            if cap[a] - f > 0 and d[v] == d[w] + 1:
                if stamp[a] != problem:
                    flow[a] = 0
                    flow[a ^ 1] = 0
                    stamp[a] = problem
                    stamp[a ^ 1] = problem
                delta = excess[v]
                resid = cap[a] - flow[a]
                if resid < delta:
                    delta = resid
                flow[a] += delta
                flow[a ^ 1] -= delta
                excess[v] -= delta
                excess[w] += delta
                if w == t:
                    if excess[t] >= bound:
                        return KIND_REACHED_BOUND, bound
                elif w != s and inb[w] == 0 and d[w] < n:
                    wl = d[w]
                    bnext[w] = -1
                    if btail[wl] == -1:
                        bhead[wl] = w
                    else:
                        bnext[btail[wl]] = w
                    btail[wl] = w
                    inb[w] = 1
                    if wl < min_activated:
                        min_activated = wl
                if min_activated < lv:
                    break  # a lower-label vertex is now active; switch to it
            else:
                cur[v] = nxt[a]
        if excess[v] > 0 and d[v] < n and inb[v] == 0:
            vl = d[v]
            bnext[v] = -1
            if btail[vl] == -1:
                bhead[vl] = v
            else:
                bnext[btail[vl]] = v
            btail[vl] = v
            inb[v] = 1
            if vl < min_activated:
                min_activated = vl
        if min_activated < lv:
            lv = min_activated

    return KIND_EXACT, excess[t]


def _sink_reachers_impl(head, nxt, to, cap, flow, stamp, problem, mark, queue, t, n):
    """mark[x] = 1 iff x has a residual path to t (reverse BFS from t)."""
    for v in range(n):
        mark[v] = 0
    mark[t] = 1
    queue[0] = t
    qh = 0
    qt = 1
    while qh < qt:
        y = queue[qh]
        qh += 1
        a = head[y]
        while a != -1:
            z = to[a]
            if mark[z] == 0:
                b = a ^ 1  # arc z -> y
                f = flow[b] if stamp[b] == problem else 0
                if cap[b] - f > 0:
                    mark[z] = 1
                    queue[qt] = z
                    qt += 1
            a = nxt[a]


def _labeling_violations_impl(head, nxt, to, cap, flow, stamp, problem, d, n):
    """Number of residual arcs (u, v) with d[u] > d[v] + 1."""
    bad = 0
    for u in range(n):
        a = head[u]
        while a != -1:
            f = flow[a] if stamp[a] == problem else 0
            if cap[a] - f > 0 and d[u] > d[to[a]] + 1:
                bad += 1
            a = nxt[a]
    return bad


local_relabel_kernel = jit(_local_relabel_impl)
max_flow_kernel = jit(_max_flow_impl)
sink_reachers_kernel = jit(_sink_reachers_impl)
labeling_violations_kernel = jit(_labeling_violations_impl)
