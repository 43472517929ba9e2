# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; drop-in replacement for ``_kernels_py``."""
from array import array

from libc.stdlib cimport malloc, free

NAME = "cython"


cdef inline int* _ialloc(Py_ssize_t k) except NULL:
    cdef int* p = <int*> malloc((k if k > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


def scc_labels(g, const unsigned char[::1] arc_dead, const unsigned char[::1] vert_dead):
    cdef Py_ssize_t n = g.n
    cdef const int[::1] heads = g.heads
    cdef const int[::1] out_ptr = g.out_ptr
    cdef const int[::1] out_arcs = g.out_arcs
    labels_arr = array("i", [-1]) * n
    cdef int[::1] labels = labels_arr
    cdef int* index = _ialloc(n)
    cdef int* low = _ialloc(n)
    cdef int* stack = _ialloc(n)
    cdef int* cstack = _ialloc(n)
    cdef int* cpos = _ialloc(n)
    cdef unsigned char* on_stack = <unsigned char*> malloc(n + 1)
    cdef Py_ssize_t i, root, sp = 0, csp = 0
    cdef int u, v, a, x, pos, end, counter = 0, ncomp = 0
    cdef bint descended
    try:
        for i in range(n):
            index[i] = -1
            on_stack[i] = 0
        for root in range(n):
            if vert_dead[root] or index[root] >= 0:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = <int> root
            sp += 1
            on_stack[root] = 1
            cstack[0] = <int> root
            cpos[0] = out_ptr[root]
            csp = 1
            while csp > 0:
                u = cstack[csp - 1]
                pos = cpos[csp - 1]
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
                        cpos[csp - 1] = pos
                        index[v] = counter
                        low[v] = counter
                        counter += 1
                        stack[sp] = v
                        sp += 1
                        on_stack[v] = 1
                        cstack[csp] = v
                        cpos[csp] = out_ptr[v]
                        csp += 1
                        descended = True
                        break
                    if on_stack[v] and index[v] < low[u]:
                        low[u] = index[v]
                if descended:
                    continue
                csp -= 1
                if low[u] == index[u]:
                    while True:
                        sp -= 1
                        x = stack[sp]
                        on_stack[x] = 0
                        labels[x] = ncomp
                        if x == u:
                            break
                    ncomp += 1
                if csp > 0:
                    v = cstack[csp - 1]
                    if low[u] < low[v]:
                        low[v] = low[u]
    finally:
        free(index)
        free(low)
        free(stack)
        free(cstack)
        free(cpos)
        free(on_stack)
    return labels_arr, ncomp


def cyclic_mask(g, const unsigned char[::1] arc_dead, const unsigned char[::1] vert_dead):
    labels_arr, ncomp = scc_labels(g, arc_dead, vert_dead)
    cdef const int[::1] labels = labels_arr
    cdef Py_ssize_t n = g.n, v
    cdef int c, a
    cdef int* size = _ialloc(ncomp)
    mask = bytearray(n)
    cdef unsigned char[::1] mv = mask
    cdef const int[::1] tails = g.tails
    cdef const int[::1] heads = g.heads
    cdef const int[::1] loops = g.loops
    cdef Py_ssize_t i
    try:
        for c in range(ncomp):
            size[c] = 0
        for v in range(n):
            c = labels[v]
            if c >= 0:
                size[c] += 1
        for v in range(n):
            c = labels[v]
            if c >= 0 and size[c] > 1:
                mv[v] = 1
        for i in range(loops.shape[0]):
            a = loops[i]
            if not arc_dead[a] and not vert_dead[tails[a]]:
                mv[heads[a]] = 1
    finally:
        free(size)
    return mask


def reach(g, const unsigned char[::1] arc_dead, const unsigned char[::1] vert_dead,
          const unsigned char[::1] seeds, bint forward):
    cdef const int[::1] ptr
    cdef const int[::1] arcs
    cdef const int[::1] ends
    if forward:
        ptr = g.out_ptr
        arcs = g.out_arcs
        ends = g.heads
    else:
        ptr = g.in_ptr
        arcs = g.in_arcs
        ends = g.tails
    cdef Py_ssize_t n = g.n, v
    seen_arr = bytearray(n)
    cdef unsigned char[::1] seen = seen_arr
    cdef int* queue = _ialloc(n)
    cdef Py_ssize_t head = 0, tail = 0
    cdef int u, w, a, j
    try:
        for v in range(n):
            if seeds[v] and not vert_dead[v]:
                seen[v] = 1
                queue[tail] = <int> v
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for j in range(ptr[u], ptr[u + 1]):
                a = arcs[j]
                if arc_dead[a]:
                    continue
                w = ends[a]
                if seen[w] or vert_dead[w]:
                    continue
                seen[w] = 1
                queue[tail] = w
                tail += 1
    finally:
        free(queue)
    return seen_arr


def max_flow(g, const unsigned char[::1] arc_dead, const unsigned char[::1] vert_dead,
             unsigned char[::1] flow, const unsigned char[::1] src,
             const unsigned char[::1] tgt, Py_ssize_t limit):
    cdef Py_ssize_t n = g.n, v
    cdef const int[::1] tails = g.tails
    cdef const int[::1] heads = g.heads
    cdef const int[::1] out_ptr = g.out_ptr
    cdef const int[::1] out_arcs = g.out_arcs
    cdef const int[::1] in_ptr = g.in_ptr
    cdef const int[::1] in_arcs = g.in_arcs
    cdef int* pred = _ialloc(n)
    cdef int* queue = _ialloc(n)
    cdef int* sources = _ialloc(n)
    cdef Py_ssize_t nsrc = 0, head, tail, total = 0
    cdef int u, w, a, j, p, found, x
    try:
        for v in range(n):
            if src[v] and not vert_dead[v]:
                sources[nsrc] = <int> v
                nsrc += 1
        while total < limit:
            for v in range(n):
                pred[v] = -2
            tail = 0
            for v in range(nsrc):
                x = sources[v]
                pred[x] = -1
                queue[tail] = x
                tail += 1
            head = 0
            found = -1
            while head < tail and found < 0:
                u = queue[head]
                head += 1
                for j in range(out_ptr[u], out_ptr[u + 1]):
                    a = out_arcs[j]
                    if arc_dead[a] or flow[a]:
                        continue
                    w = heads[a]
                    if pred[w] != -2 or vert_dead[w]:
                        continue
                    pred[w] = 2 * a
                    if tgt[w]:
                        found = w
                        break
                    queue[tail] = w
                    tail += 1
                if found >= 0:
                    break
                for j in range(in_ptr[u], in_ptr[u + 1]):
                    a = in_arcs[j]
                    if arc_dead[a] or not flow[a]:
                        continue
                    w = tails[a]
                    if pred[w] != -2 or vert_dead[w]:
                        continue
                    pred[w] = 2 * a + 1
                    if tgt[w]:
                        found = w
                        break
                    queue[tail] = w
                    tail += 1
            if found < 0:
                break
            w = found
            while pred[w] != -1:
                p = pred[w]
                a = p >> 1
                if p & 1:
                    flow[a] = 0
                    w = heads[a]
                else:
                    flow[a] = 1
                    w = tails[a]
            total += 1
    finally:
        free(pred)
        free(queue)
        free(sources)
    return total


def residual_reach(g, const unsigned char[::1] arc_dead, const unsigned char[::1] vert_dead,
                   const unsigned char[::1] flow, const unsigned char[::1] seeds, bint forward):
    cdef const int[::1] tails = g.tails
    cdef const int[::1] heads = g.heads
    cdef const int[::1] out_ptr = g.out_ptr
    cdef const int[::1] out_arcs = g.out_arcs
    cdef const int[::1] in_ptr = g.in_ptr
    cdef const int[::1] in_arcs = g.in_arcs
    cdef unsigned char want_out = 0 if forward else 1
    cdef unsigned char want_in = 1 if forward else 0
    cdef Py_ssize_t n = g.n, v
    seen_arr = bytearray(n)
    cdef unsigned char[::1] seen = seen_arr
    cdef int* queue = _ialloc(n)
    cdef Py_ssize_t head = 0, tail = 0
    cdef int u, w, a, j
    try:
        for v in range(n):
            if seeds[v] and not vert_dead[v]:
                seen[v] = 1
                queue[tail] = <int> v
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for j in range(out_ptr[u], out_ptr[u + 1]):
                a = out_arcs[j]
                if arc_dead[a] or flow[a] != want_out:
                    continue
                w = heads[a]
                if seen[w] or vert_dead[w]:
                    continue
                seen[w] = 1
                queue[tail] = w
                tail += 1
            for j in range(in_ptr[u], in_ptr[u + 1]):
                a = in_arcs[j]
                if arc_dead[a] or flow[a] != want_in:
                    continue
                w = tails[a]
                if seen[w] or vert_dead[w]:
                    continue
                seen[w] = 1
                queue[tail] = w
                tail += 1
    finally:
        free(queue)
    return seen_arr


def frontier(g, const unsigned char[::1] arc_dead, const unsigned char[::1] vert_dead,
             const unsigned char[::1] inside, bint invert):
    cdef const int[::1] tails = g.tails
    cdef const int[::1] heads = g.heads
    cdef Py_ssize_t m = g.m, a
    cdef int u, v
    cdef unsigned char flip = 1 if invert else 0
    cdef unsigned char iu, iv
    out = []
    for a in range(m):
        if arc_dead[a]:
            continue
        u = tails[a]
        v = heads[a]
        if vert_dead[u] or vert_dead[v]:
            continue
        iu = (1 if inside[u] else 0) ^ flip
        iv = (1 if inside[v] else 0) ^ flip
        if iu and not iv:
            out.append(a)
    return out
