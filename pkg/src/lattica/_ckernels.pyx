# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled congruence kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x) noexcept nogil:
    cdef int root = x
    cdef int nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


cdef tuple _canonical(int* parent, int n):
    cdef int* seen = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int x, r, count = 0
    out = [0] * n
    try:
        for x in range(n):
            seen[x] = -1
        for x in range(n):
            r = _find(parent, x)
            if seen[r] < 0:
                seen[r] = count
                count += 1
            out[x] = seen[r]
    finally:
        free(seen)
    return tuple(out)


def principal_closure(int n, const int[::1] join, const int[::1] meet,
                      const int[::1] unary, pairs):
    cdef int k = unary.shape[0] // n if n else 0
    cdef int* parent = <int*> malloc(max(n, 1) * sizeof(int))
    # each successful union pushes one pair; at most n - 1 unions
    cdef int* work = <int*> malloc(2 * max(n, 1) * sizeof(int))
    cdef int top = 0
    cdef int x, y, z, i, ox, oy, u, v, ru, rv, a, b
    try:
        for x in range(n):
            parent[x] = x
        for a, b in pairs:
            ru = _find(parent, a)
            rv = _find(parent, b)
            if ru != rv:
                if ru < rv:
                    parent[rv] = ru
                else:
                    parent[ru] = rv
                work[2 * top] = a
                work[2 * top + 1] = b
                top += 1
        with nogil:
            while top > 0:
                top -= 1
                x = work[2 * top]
                y = work[2 * top + 1]
                ox = x * n
                oy = y * n
                for z in range(n + n + k):
                    if z < n:
                        u = join[ox + z]
                        v = join[oy + z]
                    elif z < n + n:
                        u = meet[ox + z - n]
                        v = meet[oy + z - n]
                    else:
                        i = z - n - n
                        u = unary[i * n + x]
                        v = unary[i * n + y]
                    ru = _find(parent, u)
                    rv = _find(parent, v)
                    if ru != rv:
                        if ru < rv:
                            parent[rv] = ru
                        else:
                            parent[ru] = rv
                        work[2 * top] = u
                        work[2 * top + 1] = v
                        top += 1
        return _canonical(parent, n)
    finally:
        free(parent)
        free(work)


def join_labels(p, q):
    cdef int n = len(p)
    cdef int* parent = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* first_p = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* first_q = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int x, lp, lq, r, rx, rr
    try:
        for x in range(n):
            parent[x] = x
            first_p[x] = -1
            first_q[x] = -1
        for x in range(n):
            lp = p[x]
            lq = q[x]
            if first_p[lp] < 0:
                first_p[lp] = x
            if first_q[lq] < 0:
                first_q[lq] = x
            for r in (first_p[lp], first_q[lq]):
                rx = _find(parent, x)
                rr = _find(parent, r)
                if rx != rr:
                    if rx < rr:
                        parent[rr] = rx
                    else:
                        parent[rx] = rr
        return _canonical(parent, n)
    finally:
        free(parent)
        free(first_p)
        free(first_q)


cdef bint _compatible(int* lab, int n, const int[::1] join, const int[::1] meet,
                      const int[::1] unary, int k, int* first) noexcept nogil:
    cdef int x, r, z, i, orr, ox
    for x in range(n):
        first[x] = -1
    for x in range(n):
        r = first[lab[x]]
        if r < 0:
            first[lab[x]] = x
            continue
        orr = r * n
        ox = x * n
        for z in range(n):
            if lab[join[orr + z]] != lab[join[ox + z]]:
                return False
            if lab[meet[orr + z]] != lab[meet[ox + z]]:
                return False
        for i in range(k):
            if lab[unary[i * n + r]] != lab[unary[i * n + x]]:
                return False
    return True


def is_compatible(labels, int n, const int[::1] join, const int[::1] meet,
                  const int[::1] unary):
    cdef int k = unary.shape[0] // n if n else 0
    cdef int* lab = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* first = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int x
    try:
        for x in range(n):
            lab[x] = labels[x]
        return _compatible(lab, n, join, meet, unary, k, first)
    finally:
        free(lab)
        free(first)


def compatible_partitions(int n, const int[::1] join, const int[::1] meet,
                          const int[::1] unary):
    cdef int k = unary.shape[0] // n if n else 0
    cdef int* a = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* m = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* first = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int i, j
    out = []
    if n <= 0:
        return out
    try:
        for i in range(n):
            a[i] = 0
            m[i] = 0
        while True:
            if _compatible(a, n, join, meet, unary, k, first):
                out.append(tuple([a[j] for j in range(n)]))
            i = n - 1
            while i > 0 and a[i] == m[i - 1] + 1:
                i -= 1
            if i == 0:
                return out
            a[i] += 1
            m[i] = m[i - 1] if m[i - 1] > a[i] else a[i]
            for j in range(i + 1, n):
                a[j] = 0
                m[j] = m[i]
    finally:
        free(a)
        free(m)
        free(first)
