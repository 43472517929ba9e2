"""Pure-Python graph kernels.

Reference implementation of every hot loop. The compiled module
``_kernels_c`` exposes the same functions with the same signatures and
must return identical results; ``dfvskit._backend`` picks one at import.

All kernels take a graph object carrying flat CSR arrays (``n``, ``m``,
``tails``, ``heads``, ``out_ptr``, ``out_arcs``, ``in_ptr``, ``in_arcs``)
plus two overlay masks: ``arc_dead`` (length m) and ``vert_dead``
(length n). A nonzero byte means deleted.
"""
from array import array

NAME = "python"


def scc_labels(g, arc_dead, vert_dead):
    """Iterative Tarjan. Returns ``(labels, count)``.

    ``labels[v]`` is the component index of live vertex ``v`` (components
    are numbered in completion order, i.e. sinks of the condensation
    first) and ``-1`` for deleted vertices.
    """
    n = g.n
    heads = g.heads
    out_ptr = g.out_ptr
    out_arcs = g.out_arcs
    index = [-1] * n
    low = [0] * n
    labels = array("i", [-1]) * n
    on_stack = bytearray(n)
    stack = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if vert_dead[root] or index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = 1
        # frames of (vertex, next adjacency position)
        call = [[root, out_ptr[root]]]
        while call:
            frame = call[-1]
            u = frame[0]
            pos = frame[1]
            end = out_ptr[u + 1]
            descended = False
            while pos < end:
                a = out_arcs[pos]
                pos += 1
                if arc_dead[a]:
                    continue
                v = heads[a]
                if vert_dead[v]:
                    continue
                if index[v] < 0:
                    frame[1] = pos
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = 1
                    call.append([v, out_ptr[v]])
                    descended = True
                    break
                if on_stack[v] and index[v] < low[u]:
                    low[u] = index[v]
            if descended:
                continue
            call.pop()
            if low[u] == index[u]:
                while True:
                    x = stack.pop()
                    on_stack[x] = 0
                    labels[x] = ncomp
                    if x == u:
                        break
                ncomp += 1
            if call:
                parent = call[-1][0]
                if low[u] < low[parent]:
                    low[parent] = low[u]
    return labels, ncomp


def cyclic_mask(g, arc_dead, vert_dead):
    """Mark live vertices lying on at least one directed cycle."""
    labels, ncomp = scc_labels(g, arc_dead, vert_dead)
    size = [0] * ncomp
    for c in labels:
        if c >= 0:
            size[c] += 1
    mask = bytearray(g.n)
    for v in range(g.n):
        c = labels[v]
        if c >= 0 and size[c] > 1:
            mask[v] = 1
    tails = g.tails
    heads = g.heads
    for a in g.loops:
        if not arc_dead[a] and not vert_dead[tails[a]]:
            mask[heads[a]] = 1
    return mask


def reach(g, arc_dead, vert_dead, seeds, forward):
    """Vertices reachable from (forward) or co-reachable to (not forward) ``seeds``."""
    if forward:
        ptr, arcs, ends = g.out_ptr, g.out_arcs, g.heads
    else:
        ptr, arcs, ends = g.in_ptr, g.in_arcs, g.tails
    seen = bytearray(g.n)
    queue = []
    for v in range(g.n):
        if seeds[v] and not vert_dead[v]:
            seen[v] = 1
            queue.append(v)
    i = 0
    while i < len(queue):
        u = queue[i]
        i += 1
        for j in range(ptr[u], ptr[u + 1]):
            a = arcs[j]
            if arc_dead[a]:
                continue
            v = ends[a]
            if seen[v] or vert_dead[v]:
                continue
            seen[v] = 1
            queue.append(v)
    return seen


def max_flow(g, arc_dead, vert_dead, flow, src, tgt, limit):
    """Augment unit flow from ``src`` to ``tgt`` by BFS paths, at most ``limit`` times.

    ``flow`` is a per-arc 0/1 bytearray updated in place. Returns the
    number of successful augmentations.
    """
    n = g.n
    tails, heads = g.tails, g.heads
    out_ptr, out_arcs = g.out_ptr, g.out_arcs
    in_ptr, in_arcs = g.in_ptr, g.in_arcs
    sources = [v for v in range(n) if src[v] and not vert_dead[v]]
    total = 0
    while total < limit:
        # pred: -2 unseen, -1 source, 2a forward over arc a, 2a+1 backward
        pred = [-2] * n
        for v in sources:
            pred[v] = -1
        queue = list(sources)
        found = -1
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            for j in range(out_ptr[u], out_ptr[u + 1]):
                a = out_arcs[j]
                if arc_dead[a] or flow[a]:
                    continue
                v = heads[a]
                if pred[v] != -2 or vert_dead[v]:
                    continue
                pred[v] = 2 * a
                if tgt[v]:
                    found = v
                    break
                queue.append(v)
            if found >= 0:
                break
            for j in range(in_ptr[u], in_ptr[u + 1]):
                a = in_arcs[j]
                if arc_dead[a] or not flow[a]:
                    continue
                v = tails[a]
                if pred[v] != -2 or vert_dead[v]:
                    continue
                pred[v] = 2 * a + 1
                if tgt[v]:
                    found = v
                    break
                queue.append(v)
            if found >= 0:
                break
        if found < 0:
            break
        v = found
        while pred[v] != -1:
            p = pred[v]
            a = p >> 1
            if p & 1:
                flow[a] = 0
                v = heads[a]
            else:
                flow[a] = 1
                v = tails[a]
        total += 1
    return total


def residual_reach(g, arc_dead, vert_dead, flow, seeds, forward):
    """Reachability in the residual graph of a unit flow.

    Forward: vertices reachable from ``seeds``. Backward: vertices that
    can reach ``seeds``.
    """
    tails, heads = g.tails, g.heads
    out_ptr, out_arcs = g.out_ptr, g.out_arcs
    in_ptr, in_arcs = g.in_ptr, g.in_arcs
    # forward residual: out-arcs with flow 0, in-arcs with flow 1
    want_out = 0 if forward else 1
    want_in = 1 if forward else 0
    seen = bytearray(g.n)
    queue = []
    for v in range(g.n):
        if seeds[v] and not vert_dead[v]:
            seen[v] = 1
            queue.append(v)
    i = 0
    while i < len(queue):
        u = queue[i]
        i += 1
        for j in range(out_ptr[u], out_ptr[u + 1]):
            a = out_arcs[j]
            if arc_dead[a] or flow[a] != want_out:
                continue
            v = heads[a]
            if seen[v] or vert_dead[v]:
                continue
            seen[v] = 1
            queue.append(v)
        for j in range(in_ptr[u], in_ptr[u + 1]):
            a = in_arcs[j]
            if arc_dead[a] or flow[a] != want_in:
                continue
            v = tails[a]
            if seen[v] or vert_dead[v]:
                continue
            seen[v] = 1
            queue.append(v)
    return seen


def frontier(g, arc_dead, vert_dead, inside, invert):
    """Live arcs leaving a vertex set, in ascending arc id.

    The set is ``{v : inside[v]}``, or its live complement when ``invert``.
    """
    tails, heads = g.tails, g.heads
    flip = 1 if invert else 0
    out = []
    for a in range(g.m):
        if arc_dead[a]:
            continue
        u = tails[a]
        v = heads[a]
        if vert_dead[u] or vert_dead[v]:
            continue
        if ((1 if inside[u] else 0) ^ flip) and not ((1 if inside[v] else 0) ^ flip):
            out.append(a)
    return out
