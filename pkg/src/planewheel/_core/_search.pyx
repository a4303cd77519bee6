# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backtracking kernel.  Mirrors search_py.py exactly: same search
order, same pruning, same node counts and fingerprints.  Keep both in sync."""

import time

from libc.stdlib cimport calloc, free, malloc

ctypedef unsigned long long u64

cdef u64 MASK64 = <u64> 0xFFFFFFFFFFFFFFFF
cdef u64 FNV_OFFSET = <u64> 0xCBF29CE484222325
cdef u64 FNV_PRIME = <u64> 0x100000001B3

cdef int MODE_SUBGRAPH = 0
cdef int MODE_TREE = 1
cdef int MODE_DOUBLE_STAR = 2


cdef int* _copy_ints(object seq) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef int* out = <int*> malloc(max(n, 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


cdef inline int _find(int* parent, int base, int v) nogil:
    while parent[base + v] != v:
        v = parent[base + v]
    return v


def search(
    int num_vertices,
    int m,
    int class_size,
    object ea_l,
    object eb_l,
    object adj_start_l,
    object adj_flat_l,
    object order_l,
    int pre_count,
    object pre_colors_l,
    int mode,
    bint enforce_class_size,
    bint enforce_triangle,
    object tri_index_l,
    object node_limit_o,
    object time_limit_o,
    bint symmetry_breaking,
    bint collect_all,
):
    cdef int n_edges = len(ea_l)
    cdef double t0 = time.monotonic()
    cdef long long node_limit = node_limit_o if node_limit_o else 0
    cdef double time_limit = time_limit_o if time_limit_o else 0.0

    cdef int* ea = _copy_ints(ea_l)
    cdef int* eb = _copy_ints(eb_l)
    cdef int* adj_start = _copy_ints(adj_start_l)
    cdef int* adj_flat = _copy_ints(adj_flat_l)
    cdef int* order = _copy_ints(order_l)
    cdef int* pre_colors = _copy_ints(pre_colors_l)
    cdef int* tri_index = NULL
    if tri_index_l is not None:
        tri_index = _copy_ints(tri_index_l)

    cdef int* colors = <int*> malloc(n_edges * sizeof(int))
    cdef int* conflicts = <int*> calloc(n_edges * m, sizeof(int))
    cdef int* forbidden = <int*> calloc(n_edges, sizeof(int))
    cdef int* count = <int*> calloc(m, sizeof(int))
    cdef int* parent = <int*> malloc(m * num_vertices * sizeof(int))
    cdef int* usize = <int*> malloc(m * num_vertices * sizeof(int))
    cdef int* deg = <int*> calloc(m * num_vertices, sizeof(int))
    cdef int* touched = <int*> calloc(num_vertices, sizeof(int))
    cdef int* avail = <int*> calloc(num_vertices, sizeof(int))
    cdef int* u1 = <int*> malloc(m * sizeof(int))
    cdef int* u2 = <int*> malloc(m * sizeof(int))
    # trail: e, c, union_child, union_winner, int_a, int_b, prev_max per depth
    cdef int* trail = <int*> malloc((n_edges + 1) * 7 * sizeof(int))
    cdef int* choice = <int*> malloc((n_edges + 1) * sizeof(int))

    cdef int i, c, v, e, a, b, base, ra, rb, da, db, ni, w, g, h, f, fc, j
    cdef int depth, lo, hi, e_idx, spine, nint, x, y
    cdef int union_child, union_winner, int_a, int_b, prev_max
    cdef int max_used = -1
    cdef long long nodes = 0
    cdef int max_depth = 0
    cdef u64 fingerprint = FNV_OFFSET
    cdef bint aborted = False
    cdef bint structural = mode != MODE_SUBGRAPH
    cdef bint advanced, wipeout, ok

    for i in range(n_edges):
        colors[i] = -1
    for c in range(m):
        u1[c] = -1
        u2[c] = -1
        for v in range(num_vertices):
            parent[c * num_vertices + v] = v
            usize[c * num_vertices + v] = 1
    for i in range(n_edges):
        avail[ea[i]] += 1
        avail[eb[i]] += 1

    solutions = [] if collect_all else None
    witness = None
    status = "UNSAT"

    depth = 0
    choice[0] = -1
    try:
        while True:
            if depth == n_edges:
                if collect_all:
                    solutions.append([colors[i] for i in range(n_edges)])
                    depth -= 1
                    _unassign(trail, depth, ea, eb, num_vertices, m, mode,
                              structural, u1, u2, deg, touched, usize, parent,
                              avail, count, colors, adj_start, adj_flat,
                              conflicts, forbidden, &max_used)
                    continue
                witness = [colors[i] for i in range(n_edges)]
                status = "SAT"
                break
            e = order[depth]
            if depth < pre_count:
                lo = pre_colors[depth]
                hi = lo
            else:
                lo = 0
                if symmetry_breaking:
                    hi = max_used + 1
                    if hi > m - 1:
                        hi = m - 1
                else:
                    hi = m - 1
            c = choice[depth] + 1
            if c < lo:
                c = lo
            advanced = False
            while c <= hi:
                # --- try_assign(e, c) ---
                ok = True
                ra = rb = -1
                a = ea[e]
                b = eb[e]
                base = c * num_vertices
                if conflicts[e * m + c] > 0:
                    ok = False
                elif enforce_class_size and count[c] >= class_size:
                    ok = False
                if ok and structural:
                    ra = _find(parent, base, a)
                    rb = _find(parent, base, b)
                    if ra == rb:
                        ok = False
                    else:
                        da = deg[base + a]
                        db = deg[base + b]
                        if avail[a] - 1 < m - touched[a] - (1 if da == 0 else 0):
                            ok = False
                        elif avail[b] - 1 < m - touched[b] - (1 if db == 0 else 0):
                            ok = False
                        elif mode == MODE_DOUBLE_STAR:
                            ni = 0
                            if u1[c] >= 0:
                                ni += 1
                            if u2[c] >= 0:
                                ni += 1
                            x = -1
                            y = -1
                            if u1[c] >= 0:
                                x = u1[c]
                            if u2[c] >= 0:
                                y = u2[c]
                            if da == 1:
                                ni += 1
                                if x < 0:
                                    x = a
                                else:
                                    y = a
                            if db == 1:
                                ni += 1
                                if x < 0:
                                    x = b
                                elif y < 0:
                                    y = b
                            if ni > 2:
                                ok = False
                            elif ni == 2:
                                spine = tri_index[x * num_vertices + y]
                                if spine != e and colors[spine] >= 0 and colors[spine] != c:
                                    ok = False
                if ok and enforce_triangle:
                    for w in range(num_vertices):
                        if w == a or w == b:
                            continue
                        g = tri_index[a * num_vertices + w]
                        h = tri_index[b * num_vertices + w]
                        if colors[g] == c and colors[h] == c:
                            ok = False
                            break
                if ok:
                    wipeout = False
                    for j in range(adj_start[e], adj_start[e + 1]):
                        f = adj_flat[j]
                        fc = f * m + c
                        conflicts[fc] += 1
                        if conflicts[fc] == 1:
                            forbidden[f] += 1
                            if forbidden[f] == m and colors[f] < 0:
                                wipeout = True
                    if wipeout:
                        for j in range(adj_start[e], adj_start[e + 1]):
                            f = adj_flat[j]
                            fc = f * m + c
                            conflicts[fc] -= 1
                            if conflicts[fc] == 0:
                                forbidden[f] -= 1
                        ok = False
                if ok:
                    colors[e] = c
                    count[c] += 1
                    avail[a] -= 1
                    avail[b] -= 1
                    union_child = union_winner = -1
                    int_a = int_b = -1
                    if structural:
                        if usize[base + ra] < usize[base + rb]:
                            ra, rb = rb, ra
                        parent[base + rb] = ra
                        usize[base + ra] += usize[base + rb]
                        union_child = rb
                        union_winner = ra
                        deg[base + a] += 1
                        if deg[base + a] == 1:
                            touched[a] += 1
                        deg[base + b] += 1
                        if deg[base + b] == 1:
                            touched[b] += 1
                        if mode == MODE_DOUBLE_STAR:
                            if deg[base + a] == 2:
                                int_a = a
                                if u1[c] < 0:
                                    u1[c] = a
                                else:
                                    u2[c] = a
                            if deg[base + b] == 2:
                                int_b = b
                                if u1[c] < 0:
                                    u1[c] = b
                                else:
                                    u2[c] = b
                    prev_max = max_used
                    if c > max_used:
                        max_used = c
                    trail[depth * 7 + 0] = e
                    trail[depth * 7 + 1] = c
                    trail[depth * 7 + 2] = union_child
                    trail[depth * 7 + 3] = union_winner
                    trail[depth * 7 + 4] = int_a
                    trail[depth * 7 + 5] = int_b
                    trail[depth * 7 + 6] = prev_max
                    nodes += 1
                    if depth + 1 > max_depth:
                        max_depth = depth + 1
                    fingerprint = ((fingerprint ^ <u64> (e * 1000003 + c + 1)) * FNV_PRIME) & MASK64
                    choice[depth] = c
                    depth += 1
                    choice[depth] = -1
                    advanced = True
                    break
                c += 1
            if advanced:
                if node_limit and nodes >= node_limit:
                    aborted = True
                    break
                if time_limit and (nodes & 0xFFFF) == 0 and time.monotonic() - t0 > time_limit:
                    aborted = True
                    break
                continue
            if depth == 0:
                break
            depth -= 1
            _unassign(trail, depth, ea, eb, num_vertices, m, mode, structural,
                      u1, u2, deg, touched, usize, parent, avail, count,
                      colors, adj_start, adj_flat, conflicts, forbidden,
                      &max_used)

        if aborted:
            status = "LIMIT"
        elif collect_all and solutions:
            status = "SAT"

        return {
            "status": status,
            "assignment": witness,
            "solutions": solutions,
            "nodes": nodes,
            "max_depth": max_depth,
            "fingerprint": fingerprint,
            "elapsed": time.monotonic() - t0,
        }
    finally:
        free(ea); free(eb); free(adj_start); free(adj_flat); free(order)
        free(pre_colors)
        if tri_index != NULL:
            free(tri_index)
        free(colors); free(conflicts); free(forbidden); free(count)
        free(parent); free(usize); free(deg); free(touched); free(avail)
        free(u1); free(u2); free(trail); free(choice)


cdef void _unassign(int* trail, int depth, int* ea, int* eb, int num_vertices,
                    int m, int mode, bint structural, int* u1, int* u2,
                    int* deg, int* touched, int* usize, int* parent,
                    int* avail, int* count, int* colors, int* adj_start,
                    int* adj_flat, int* conflicts, int* forbidden,
                    int* max_used) nogil:
    cdef int e = trail[depth * 7 + 0]
    cdef int c = trail[depth * 7 + 1]
    cdef int union_child = trail[depth * 7 + 2]
    cdef int union_winner = trail[depth * 7 + 3]
    cdef int int_a = trail[depth * 7 + 4]
    cdef int int_b = trail[depth * 7 + 5]
    cdef int a = ea[e]
    cdef int b = eb[e]
    cdef int base = c * num_vertices
    cdef int j, f, fc, v, t
    max_used[0] = trail[depth * 7 + 6]
    if structural:
        if mode == MODE_DOUBLE_STAR:
            for t in range(2):
                v = int_b if t == 0 else int_a
                if v >= 0:
                    if u2[c] == v:
                        u2[c] = -1
                    else:
                        u1[c] = u2[c]
                        u2[c] = -1
        deg[base + b] -= 1
        if deg[base + b] == 0:
            touched[b] -= 1
        deg[base + a] -= 1
        if deg[base + a] == 0:
            touched[a] -= 1
        usize[base + union_winner] -= usize[base + union_child]
        parent[base + union_child] = union_child
    avail[a] += 1
    avail[b] += 1
    count[c] -= 1
    colors[e] = -1
    for j in range(adj_start[e], adj_start[e + 1]):
        f = adj_flat[j]
        fc = f * m + c
        conflicts[fc] -= 1
        if conflicts[fc] == 0:
            forbidden[f] -= 1
