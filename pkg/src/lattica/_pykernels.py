"""Pure-Python congruence kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
function for function.  Tables are flat: ``join[x * n + y]``.  ``unary``
holds ``k`` maps concatenated, ``unary[i * n + x]``.
"""


def _canonical(parent, n):
    labels = [0] * n
    seen = {}
    for x in range(n):
        r = x
        while parent[r] != r:
            r = parent[r]
        lab = seen.get(r)
        if lab is None:
            lab = seen[r] = len(seen)
        labels[x] = lab
    return tuple(labels)


def principal_closure(n, join, meet, unary, pairs):
    """Least congruence containing ``pairs``, as a restricted growth string."""
    parent = list(range(n))
    k = len(unary) // n if n else 0
    work = []

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx = find(x)
        ry = find(y)
        if rx != ry:
            if rx < ry:
                parent[ry] = rx
            else:
                parent[rx] = ry
            work.append((x, y))

    for a, b in pairs:
        union(a, b)
    while work:
        x, y = work.pop()
        ox = x * n
        oy = y * n
        for z in range(n):
            union(join[ox + z], join[oy + z])
            union(meet[ox + z], meet[oy + z])
        for i in range(k):
            base = i * n
            union(unary[base + x], unary[base + y])
    return _canonical(parent, n)


def join_labels(p, q):
    """Join of two equivalences given as label strings."""
    n = len(p)
    parent = list(range(n))
    first_p = {}
    first_q = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(n):
        for first, lab in ((first_p, p[x]), (first_q, q[x])):
            r = first.setdefault(lab, x)
            if r != x:
                rx = find(x)
                rr = find(r)
                if rx != rr:
                    if rx < rr:
                        parent[rr] = rx
                    else:
                        parent[rx] = rr
    return _canonical(parent, n)


def is_compatible(labels, n, join, meet, unary):
    k = len(unary) // n if n else 0
    first = {}
    for x in range(n):
        r = first.setdefault(labels[x], x)
        if r == x:
            continue
        orr = r * n
        ox = x * n
        for z in range(n):
            if labels[join[orr + z]] != labels[join[ox + z]]:
                return False
            if labels[meet[orr + z]] != labels[meet[ox + z]]:
                return False
        for i in range(k):
            base = i * n
            if labels[unary[base + r]] != labels[unary[base + x]]:
                return False
    return True


def restricted_growth_strings(n):
    """Yield every partition of ``range(n)`` once, as a label tuple."""
    if n <= 0:
        return
    a = [0] * n
    m = [0] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == m[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def compatible_partitions(n, join, meet, unary):
    return [
        labels
        for labels in restricted_growth_strings(n)
        if is_compatible(labels, n, join, meet, unary)
    ]
