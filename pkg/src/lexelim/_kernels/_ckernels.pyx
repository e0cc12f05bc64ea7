# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twins of the functions in ``_pykernels``; same signatures, same results."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy
from libc.stdint cimport uint64_t
from cpython cimport array
import array as pyarray

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"

# Orderings come back as array('i') filled by memcpy: building tens of
# thousands of Python ints per call costs more than the traversal itself.
cdef array.array _INT = pyarray.array("i")


cdef array.array _int_array(const int *src, Py_ssize_t n):
    cdef array.array res = array.clone(_INT, n, zero=False)
    if n:
        memcpy(res.data.as_ints, src, n * sizeof(int))
    return res


cdef inline bint _bsearch(const int[::1] indptr, const int[::1] indices, int u, int v) noexcept nogil:
    cdef int lo = indptr[u], hi = indptr[u + 1] - 1, mid, x
    while lo <= hi:
        mid = (lo + hi) >> 1
        x = indices[mid]
        if x == v:
            return True
        if x < v:
            lo = mid + 1
        else:
            hi = mid - 1
    return False


cdef inline bint _adj(const int[::1] indptr, const int[::1] indices,
                      const unsigned char* mat, Py_ssize_t row_bytes, int u, int v) noexcept nogil:
    if mat != NULL:
        return (mat[u * row_bytes + (v >> 3)] >> (v & 7)) & 1
    return _bsearch(indptr, indices, u, v)


cdef struct _Vert:
    int nxt
    int prv
    int cls  # -1 once visited


cdef struct _Class:
    int head
    int tail
    int next
    int prev
    int stamp
    int target


def lexbfs_order(const int[::1] indptr, const int[::1] indices, int n, int start):
    # Same partition refinement as the Python twin.  Vertex and class fields
    # are packed in structs so each visit touches one cache line, and emptied
    # classes are recycled, so at most n + 1 class slots exist.
    if n == 0:
        return pyarray.array("i")
    cdef _Vert *V = <_Vert*>malloc(n * sizeof(_Vert))
    cdef _Class *C = <_Class*>malloc((n + 1) * sizeof(_Class))
    cdef int *spare = <int*>malloc((n + 1) * sizeof(int))
    cdef int *out = <int*>malloc(n * sizeof(int))
    cdef int i, k, u, c, d, a, t, pivot, nspare = 0, step = 0, first = 0, nclasses = 1, count = 0
    if V == NULL or C == NULL or spare == NULL or out == NULL:
        free(V); free(C); free(spare); free(out)
        raise MemoryError()
    try:
        for i in range(n):
            V[i].nxt = i + 1
            V[i].prv = i - 1
            V[i].cls = 0
        V[n - 1].nxt = -1
        C[0].head = 0
        C[0].tail = n - 1
        C[0].next = -1
        C[0].prev = -1
        C[0].stamp = -1
        C[0].target = -1
        pivot = start
        with nogil:
            while True:
                _unlink(V, C, pivot, &first, spare, &nspare)
                V[pivot].cls = -1
                out[count] = pivot
                count += 1
                if count == n:
                    break
                for k in range(indptr[pivot], indptr[pivot + 1]):
                    u = indices[k]
                    c = V[u].cls
                    if c < 0:
                        continue
                    if C[c].stamp != step:
                        C[c].stamp = step
                        if nspare > 0:
                            nspare -= 1
                            d = spare[nspare]
                        else:
                            d = nclasses
                            nclasses += 1
                        C[d].head = -1
                        C[d].tail = -1
                        C[d].stamp = step
                        C[d].target = -1
                        a = C[c].prev
                        C[d].prev = a
                        C[d].next = c
                        C[c].prev = d
                        if a >= 0:
                            C[a].next = d
                        else:
                            first = d
                        C[c].target = d
                    d = C[c].target
                    _unlink(V, C, u, &first, spare, &nspare)
                    # append u to d
                    V[u].cls = d
                    t = C[d].tail
                    V[u].prv = t
                    V[u].nxt = -1
                    if t >= 0:
                        V[t].nxt = u
                    else:
                        C[d].head = u
                    C[d].tail = u
                step += 1
                pivot = C[first].head
        return _int_array(out, n)
    finally:
        free(V); free(C); free(spare); free(out)


cdef inline void _unlink(_Vert *V, _Class *C, int v, int *first, int *spare, int *nspare) noexcept nogil:
    # remove v from its class; an emptied class leaves the class list for reuse
    cdef int c = V[v].cls, p = V[v].prv, q = V[v].nxt, a, b
    if p >= 0:
        V[p].nxt = q
    else:
        C[c].head = q
    if q >= 0:
        V[q].prv = p
    else:
        C[c].tail = p
    if C[c].head < 0:
        a = C[c].prev
        b = C[c].next
        if a >= 0:
            C[a].next = b
        else:
            first[0] = b
        if b >= 0:
            C[b].prev = a
        spare[nspare[0]] = c
        nspare[0] += 1


def inverse_permutation(const int[::1] order):
    # values must lie in 0..n-1; a value that never occurs keeps -1
    cdef Py_ssize_t n = order.shape[0], i
    cdef array.array pos = array.clone(_INT, n, zero=False)
    cdef int *p = pos.data.as_ints
    for i in range(n):
        p[i] = -1
    for i in range(n):
        p[order[i]] = <int>i
    return pos


def lexbfs_violation(const int[::1] indptr, const int[::1] indices, order):
    # Rows are bitsets over positions.  For b before a, the first position
    # where their rows differ decides: a neighbour of a only is an offending
    # c, a neighbour of b only is a repairing d.
    cdef int n = len(order)
    cdef int i, j, k, w, t, bit
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef int *ordv = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int *pos = <int*>malloc(max(n, 1) * sizeof(int))
    cdef uint64_t *rows = <uint64_t*>malloc(max(<Py_ssize_t>n * words, 1) * sizeof(uint64_t))
    cdef uint64_t *rb
    cdef uint64_t *ra
    cdef uint64_t diff
    cdef bint found = False
    cdef int rc = 0, rbv = 0, rav = 0
    try:
        for i in range(n):
            ordv[i] = order[i]
            pos[ordv[i]] = i
        memset(rows, 0, max(<Py_ssize_t>n * words, 1) * sizeof(uint64_t))
        for i in range(n):
            for k in range(indptr[i], indptr[i + 1]):
                t = pos[indices[k]]
                rows[<Py_ssize_t>i * words + (t >> 6)] |= (<uint64_t>1) << (t & 63)
        with nogil:
            for j in range(1, n):
                if found:
                    break
                rb = rows + <Py_ssize_t>ordv[j] * words
                for k in range(j + 1, n):
                    ra = rows + <Py_ssize_t>ordv[k] * words
                    for w in range((j + 63) >> 6):
                        diff = rb[w] ^ ra[w]
                        if (w + 1) << 6 > j:
                            diff &= ((<uint64_t>1) << (j & 63)) - 1
                        if diff:
                            bit = (w << 6) + __builtin_ctzll(diff)
                            if ra[w] >> (bit & 63) & 1:
                                found = True
                                rc = ordv[bit]
                                rbv = ordv[j]
                                rav = ordv[k]
                            break
                    if found:
                        break
        if found:
            return (rc, rbv, rav)
        return None
    finally:
        free(ordv)
        free(pos)
        free(rows)


def peo_violation(const int[::1] indptr, const int[::1] indices, order):
    cdef int n = len(order)
    cdef int i, k, v, u, best, p
    cdef Py_ssize_t m2 = indices.shape[0]
    cdef int *pos = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int *parent = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int *mark = <int*>malloc(max(n, 1) * sizeof(int))
    # pending (v, u) pairs grouped by parent via counting sort
    cdef int *pstart = <int*>malloc((n + 1) * sizeof(int))
    cdef int *pfill = <int*>malloc((n + 1) * sizeof(int))
    cdef int *pv = <int*>malloc(max(m2, 1) * sizeof(int))
    cdef int *pu = <int*>malloc(max(m2, 1) * sizeof(int))
    cdef int bad_i = -1, bad_v = -1, bad_p = -1, bad_u = -1
    try:
        for i in range(n):
            pos[<int>order[i]] = i
        with nogil:
            for i in range(n + 1):
                pstart[i] = 0
            for v in range(n):
                best = -1
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if pos[u] < pos[v] and (best < 0 or pos[u] > pos[best]):
                        best = u
                parent[v] = best
                if best >= 0:
                    for k in range(indptr[v], indptr[v + 1]):
                        u = indices[k]
                        if u != best and pos[u] < pos[v]:
                            pstart[best + 1] += 1
            for i in range(n):
                pstart[i + 1] += pstart[i]
            for i in range(n + 1):
                pfill[i] = pstart[i]
            for v in range(n):
                best = parent[v]
                if best >= 0:
                    for k in range(indptr[v], indptr[v + 1]):
                        u = indices[k]
                        if u != best and pos[u] < pos[v]:
                            pv[pfill[best]] = v
                            pu[pfill[best]] = u
                            pfill[best] += 1
            for i in range(n):
                mark[i] = -1
            for p in range(n):
                if pstart[p] == pstart[p + 1]:
                    continue
                for k in range(indptr[p], indptr[p + 1]):
                    mark[indices[k]] = p
                for k in range(pstart[p], pstart[p + 1]):
                    v = pv[k]
                    u = pu[k]
                    if mark[u] != p and (bad_i < 0 or pos[v] < bad_i):
                        bad_i = pos[v]
                        bad_v = v
                        bad_p = p
                        bad_u = u
        if bad_i < 0:
            return None
        return (bad_i, bad_v, bad_p, bad_u)
    finally:
        free(pos); free(parent); free(mark); free(pstart); free(pfill); free(pv); free(pu)


cdef int* _positions(order, int n) except NULL:
    cdef int *pos = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int i
    for i in range(n):
        pos[<int>order[i]] = i
    return pos


def prefix_clique_weights(const int[::1] indptr, const int[::1] indices, order, const long long[::1] weights):
    cdef int n = len(order)
    cdef int i, k, v, u
    cdef long long total
    cdef int *pos = _positions(order, n)
    cdef int *ordv = <int*>malloc(max(n, 1) * sizeof(int))
    cdef long long *out = <long long*>malloc(max(n, 1) * sizeof(long long))
    try:
        for i in range(n):
            ordv[pos[i]] = i
        with nogil:
            for i in range(n):
                v = ordv[i]
                total = weights[v]
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if pos[u] < i:
                        total += weights[u]
                out[i] = total
        return [out[i] for i in range(n)]
    finally:
        free(pos); free(ordv); free(out)


def c4_scan(const int[::1] indptr, const int[::1] indices, order, const long long[::1] weights,
            matrix, Py_ssize_t row_bytes):
    cdef int n = len(order)
    cdef int i, k, v, u, x, y, bad = -1
    cdef long long sx, sy
    cdef const unsigned char[::1] mview
    cdef const unsigned char *mat = NULL
    if matrix is not None and n > 0:
        mview = matrix
        mat = &mview[0]
    cdef int *pos = _positions(order, n)
    cdef int *ordv = <int*>malloc(max(n, 1) * sizeof(int))
    cdef long long *wx = <long long*>malloc(max(n, 1) * sizeof(long long))
    cdef long long *wy = <long long*>malloc(max(n, 1) * sizeof(long long))
    try:
        for i in range(n):
            ordv[pos[i]] = i
            wx[i] = 0
            wy[i] = 0
        with nogil:
            for i in range(n):
                v = ordv[i]
                x = -1
                y = -1
                sx = 0
                sy = 0
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if pos[u] >= i:
                        continue
                    if x < 0:
                        x = u
                        sx += weights[u]
                    elif _adj(indptr, indices, mat, row_bytes, u, x):
                        sx += weights[u]
                    elif y < 0:
                        y = u
                        sy += weights[u]
                    elif _adj(indptr, indices, mat, row_bytes, u, y):
                        sy += weights[u]
                    else:
                        bad = i
                        break
                if bad >= 0:
                    break
                wx[i] = weights[v] + sx
                wy[i] = weights[v] + sy
        return [wx[i] for i in range(n)], [wy[i] for i in range(n)], bad
    finally:
        free(pos); free(ordv); free(wx); free(wy)


def c6_scan(const int[::1] indptr, const int[::1] indices, order, const long long[::1] weights,
            matrix, Py_ssize_t row_bytes):
    cdef int n = len(order)
    cdef int i, k, v, u, x, bad = -1
    cdef bint seen_adj, seen_non
    cdef long long total, heaviest, w
    cdef const unsigned char[::1] mview
    cdef const unsigned char *mat = NULL
    if matrix is not None and n > 0:
        mview = matrix
        mat = &mview[0]
    cdef int *pos = _positions(order, n)
    cdef int *ordv = <int*>malloc(max(n, 1) * sizeof(int))
    cdef long long *best = <long long*>malloc(max(n, 1) * sizeof(long long))
    try:
        for i in range(n):
            ordv[pos[i]] = i
            best[i] = 0
        with nogil:
            for i in range(n):
                v = ordv[i]
                x = -1
                seen_adj = False
                seen_non = False
                total = 0
                heaviest = 0
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
                    elif _adj(indptr, indices, mat, row_bytes, u, x):
                        seen_adj = True
                    else:
                        seen_non = True
                if seen_adj and seen_non:
                    bad = i
                    break
                best[i] = weights[v] + (heaviest if seen_non else total)
        return [best[i] for i in range(n)], bad
    finally:
        free(pos); free(ordv); free(best)


def greedy_colors(const int[::1] indptr, const int[::1] indices, order):
    cdef int n = len(order)
    cdef int i, k, v, c
    cdef int *color = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int *used = <int*>malloc((n + 2) * sizeof(int))
    cdef int *ordv = <int*>malloc(max(n, 1) * sizeof(int))
    try:
        for i in range(n):
            ordv[i] = order[i]
            color[i] = 0
        for i in range(n + 2):
            used[i] = -1
        with nogil:
            for i in range(n):
                v = ordv[i]
                for k in range(indptr[v], indptr[v + 1]):
                    c = color[indices[k]]
                    if c:
                        used[c] = v
                c = 1
                while used[c] == v:
                    c += 1
                color[v] = c
        return [color[i] for i in range(n)]
    finally:
        free(color); free(used); free(ordv)
