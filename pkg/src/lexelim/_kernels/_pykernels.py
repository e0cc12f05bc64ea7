"""Pure-Python implementations of the hot loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Graphs arrive as CSR arrays ``(indptr, indices)`` with sorted rows; orderings
as sequences of vertex ids.  Positions are 0-based.
"""

from array import array

BACKEND = "python"


def _rows(indptr, indices, n):
    return [indices[indptr[v]:indptr[v + 1]] for v in range(n)]


def lexbfs_order(indptr, indices, n, start):
    """LexBFS by partition refinement, smallest id first among ties.

    Each class is a doubly linked list kept in increasing id order; classes
    form a second linked list ordered by decreasing label.  Neighbours of the
    pivot are scanned in increasing id order and appended to the new class, so
    both halves of a split stay sorted and a class head is its smallest id.
    """
    if n == 0:
        return array("i")
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n - 1))
    nxt[n - 1] = -1
    cls = [0] * n
    # class storage: head, tail, next class, prev class, split stamp, split target
    head = [0]
    tail = [n - 1]
    cnext = [-1]
    cprev = [-1]
    stamp = [-1]
    target = [-1]
    first = 0  # first class in the class list
    visited = [False] * n
    order = []

    def unlink(v):
        nonlocal first
        c = cls[v]
        p, q = prv[v], nxt[v]
        if p >= 0:
            nxt[p] = q
        else:
            head[c] = q
        if q >= 0:
            prv[q] = p
        else:
            tail[c] = p
        if head[c] < 0:
            a, b = cprev[c], cnext[c]
            if a >= 0:
                cnext[a] = b
            else:
                first = b
            if b >= 0:
                cprev[b] = a

    pivot = start
    step = 0
    while True:
        unlink(pivot)
        visited[pivot] = True
        order.append(pivot)
        if len(order) == n:
            break
        for k in range(indptr[pivot], indptr[pivot + 1]):
            u = indices[k]
            if visited[u]:
                continue
            c = cls[u]
            if stamp[c] != step:
                stamp[c] = step
                d = len(head)
                head.append(-1)
                tail.append(-1)
                stamp.append(step)
                target.append(-1)
                a = cprev[c]
                cprev.append(a)
                cnext.append(c)
                cprev[c] = d
                if a >= 0:
                    cnext[a] = d
                else:
                    first = d
                target[c] = d
            d = target[c]
            unlink(u)
            cls[u] = d
            t = tail[d]
            prv[u] = t
            nxt[u] = -1
            if t >= 0:
                nxt[t] = u
            else:
                head[d] = u
            tail[d] = u
        step += 1
        pivot = head[first]
    return array("i", order)


def inverse_permutation(order):
    """``pos[v]`` = index of ``v`` in ``order``; -1 where a value never occurs.

    Values must lie in ``0..len(order)-1``.
    """
    pos = array("i", [-1]) * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def lexbfs_violation(indptr, indices, order):
    """First triple ``(c, b, a)`` breaking the four-point LexBFS condition, or None.

    Scans ``b`` then ``a`` by position; for each pair the earliest ``c`` is
    compared with the earliest repairing ``d``.
    """
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    amask = []
    for v in range(n):
        mask = 0
        for k in range(indptr[v], indptr[v + 1]):
            mask |= 1 << pos[indices[k]]
        amask.append(mask)
    for j in range(n):
        b = order[j]
        ab = amask[b]
        below = (1 << j) - 1
        for k in range(j + 1, n):
            a = order[k]
            aa = amask[a]
            cm = aa & ~ab & below
            if not cm:
                continue
            low = cm & -cm
            if not (ab & ~aa & (low - 1)):
                return (order[low.bit_length() - 1], b, a)
    return None


def peo_violation(indptr, indices, order):
    """Smallest position whose earlier neighbours are not a clique.

    Parent-representative test: each vertex hands its earlier neighbours
    (minus its latest one, the parent) to the parent, which checks them
    against its own neighbourhood.  Returns ``(i, v, p, w)`` with ``p, w``
    nonadjacent earlier neighbours of ``v = order[i]``, or None.
    """
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    parent = [-1] * n
    pending = [[] for _ in range(n)]
    for v in range(n):
        pv = pos[v]
        best = -1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] < pv and (best < 0 or pos[u] > pos[best]):
                best = u
        parent[v] = best
        if best >= 0:
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if u != best and pos[u] < pv:
                    pending[best].append((v, u))
    mark = [-1] * n
    bad = None
    for p in range(n):
        if not pending[p]:
            continue
        for k in range(indptr[p], indptr[p + 1]):
            mark[indices[k]] = p
        for v, u in pending[p]:
            if mark[u] != p and (bad is None or pos[v] < bad[0]):
                bad = (pos[v], v, p, u)
    return bad


def prefix_clique_weights(indptr, indices, order, weights):
    """Weight of ``{v_i} + earlier neighbours of v_i`` for every position ``i``."""
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for i, v in enumerate(order):
        total = weights[v]
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] < i:
                total += weights[u]
        out[i] = total
    return out


def _adjacency_test(indptr, indices, n, matrix, row_bytes):
    if matrix is not None:
        def adjacent(u, v):
            return matrix[u * row_bytes + (v >> 3)] >> (v & 7) & 1
    else:
        sets = [set(r) for r in _rows(indptr, indices, n)]

        def adjacent(u, v):
            return v in sets[u]
    return adjacent


def c4_scan(indptr, indices, order, weights, matrix, row_bytes):
    """Two-clique labelling of every prefix neighbourhood.

    Returns ``(wx, wy, bad)``: per position the weights of ``v_i`` plus its
    X-labelled / Y-labelled earlier neighbours, and the first position where an
    earlier neighbour is adjacent to neither ``x`` nor ``y`` (-1 if none).
    """
    n = len(order)
    adjacent = _adjacency_test(indptr, indices, n, matrix, row_bytes)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    wx = [0] * n
    wy = [0] * n
    for i, v in enumerate(order):
        x = y = -1
        sx = sy = 0
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] >= i:
                continue
            if x < 0:
                x = u
                sx += weights[u]
            elif adjacent(u, x):
                sx += weights[u]
            elif y < 0:
                y = u
                sy += weights[u]
            elif adjacent(u, y):
                sy += weights[u]
            else:
                return wx, wy, i
        wx[i] = weights[v] + sx
        wy[i] = weights[v] + sy
    return wx, wy, -1


def c6_scan(indptr, indices, order, weights, matrix, row_bytes):
    """Clique-or-stable decision for every prefix neighbourhood.

    Returns ``(best, bad)``: per position the best candidate weight (all of a
    clique, or the heaviest member of a stable set, plus ``v_i``) and the first
    position where adjacency to the first earlier neighbour is mixed.
    """
    n = len(order)
    adjacent = _adjacency_test(indptr, indices, n, matrix, row_bytes)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    best = [0] * n
    for i, v in enumerate(order):
        x = -1
        seen_adj = seen_non = False
        total = heaviest = 0
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] >= i:
                continue
            w = weights[u]
            total += w
            if w > heaviest:
                heaviest = w
            if x < 0:
                x = u
            elif adjacent(u, x):
                seen_adj = True
            else:
                seen_non = True
        if seen_adj and seen_non:
            return best, i
        best[i] = weights[v] + (heaviest if seen_non else total)
    return best, -1


def greedy_colors(indptr, indices, order):
    """Colour vertices in ``order`` with the smallest colour (from 1) unused by coloured neighbours."""
    n = len(order)
    color = [0] * n
    used = [-1] * (n + 2)
    for v in order:
        for k in range(indptr[v], indptr[v + 1]):
            c = color[indices[k]]
            if c:
                used[c] = v
        c = 1
        while used[c] == v:
            c += 1
        color[v] = c
    return color
