# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Single-word (<= 64 element) compiled twins of the kernels in ``pure``.

``fbblat._kernel`` only routes posets with at most 64 elements here; the
pure module is the reference implementation and documents the contracts.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #define FBB_POPCNT(x) __builtin_popcountll((unsigned long long)(x))
    #define FBB_CTZ(x)    __builtin_ctzll((unsigned long long)(x))
    """
    int FBB_POPCNT(uint64_t) nogil
    int FBB_CTZ(uint64_t) nogil

IMPLEMENTATION = "compiled"

cdef uint64_t ONE = 1


cdef int _load(object seq, uint64_t *buf, int n) except -1:
    cdef int i
    for i in range(n):
        buf[i] = seq[i]
    return 0


def closure(int n, covers):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef int indeg[64]
    cdef int topo[64]
    cdef int elo[2080]
    cdef int ehi[2080]
    cdef int m = len(covers)
    cdef int head, tail, i, v, w, idx
    cdef uint64_t acc
    if m > 2080:  # > 64*63/2, any 64-element cover list fits
        raise ValueError(f"cover list too long ({m})")
    for v in range(n):
        up[v] = 0
        down[v] = 0
        indeg[v] = 0
    for i in range(m):
        pair = covers[i]
        elo[i] = pair[0]
        ehi[i] = pair[1]
        indeg[ehi[i]] += 1
    head = 0
    tail = 0
    for v in range(n):
        if indeg[v] == 0:
            topo[tail] = v
            tail += 1
    while head < tail:
        v = topo[head]
        head += 1
        for i in range(m):
            if elo[i] == v:
                w = ehi[i]
                indeg[w] -= 1
                if indeg[w] == 0:
                    topo[tail] = w
                    tail += 1
    if tail != n:
        raise ValueError("cover relation contains a cycle")
    for idx in range(n - 1, -1, -1):
        v = topo[idx]
        acc = 0
        for i in range(m):
            if elo[i] == v:
                w = ehi[i]
                acc |= up[w] | (ONE << w)
        up[v] = acc
    for idx in range(n):
        v = topo[idx]
        acc = 0
        for i in range(m):
            if ehi[i] == v:
                w = elo[i]
                acc |= down[w] | (ONE << w)
        down[v] = acc
    return [up[v] for v in range(n)], [down[v] for v in range(n)]


def covers_within(int n, up_seq, down_seq, uint64_t mask):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef uint64_t cand
    cdef int x, y
    _load(up_seq, up, n)
    _load(down_seq, down, n)
    out = []
    for x in range(n):
        if not (mask >> x) & 1:
            continue
        cand = up[x] & mask
        while cand:
            y = FBB_CTZ(cand)
            cand &= cand - 1
            if not (up[x] & down[y] & mask):
                out.append((x, y))
    return out


cdef int _uf_find(int *parent, int a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef void _nullity_parts(int n, uint64_t *up, uint64_t *down, uint64_t mask,
                         int *edges_out, int *comps_out) nogil:
    cdef int parent[64]
    cdef uint64_t cand
    cdef int x, y, ra, rb, edges, comps
    for x in range(n):
        parent[x] = x
    edges = 0
    for x in range(n):
        if not (mask >> x) & 1:
            continue
        cand = up[x] & mask
        while cand:
            y = FBB_CTZ(cand)
            cand &= cand - 1
            if not (up[x] & down[y] & mask):
                edges += 1
                ra = _uf_find(parent, x)
                rb = _uf_find(parent, y)
                if ra != rb:
                    parent[ra] = rb
    comps = 0
    for x in range(n):
        if (mask >> x) & 1 and _uf_find(parent, x) == x:
            comps += 1
    edges_out[0] = edges
    comps_out[0] = comps


def induced_nullity_parts(int n, up_seq, down_seq, uint64_t mask):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef int edges, comps
    _load(up_seq, up, n)
    _load(down_seq, down, n)
    _nullity_parts(n, up, down, mask, &edges, &comps)
    return edges, comps


cdef inline int _least_of(uint64_t subset, uint64_t *up, uint64_t *down) nogil:
    cdef uint64_t rest = subset
    cdef uint64_t low
    cdef int u = -1
    while rest:
        low = rest & (~rest + 1)
        u = FBB_CTZ(rest)
        if not (down[u] & subset):
            break
        rest ^= low
    if subset & ~(up[u] | (ONE << u)):
        return -1
    return u


cdef inline int _greatest_of(uint64_t subset, uint64_t *up, uint64_t *down) nogil:
    cdef uint64_t rest = subset
    cdef uint64_t low
    cdef int u = -1
    while rest:
        low = rest & (~rest + 1)
        u = FBB_CTZ(rest)
        if not (up[u] & subset):
            break
        rest ^= low
    if subset & ~(down[u] | (ONE << u)):
        return -1
    return u


def is_lattice(int n, up_seq, down_seq):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef uint64_t upr[64]
    cdef uint64_t downr[64]
    cdef uint64_t m
    cdef int i, j
    _load(up_seq, up, n)
    _load(down_seq, down, n)
    for i in range(n):
        upr[i] = up[i] | (ONE << i)
        downr[i] = down[i] | (ONE << i)
    for i in range(n):
        for j in range(i + 1, n):
            m = upr[i] & upr[j]
            if m == 0 or _least_of(m, up, down) < 0:
                return False
            m = downr[i] & downr[j]
            if m == 0 or _greatest_of(m, up, down) < 0:
                return False
    return True


def reducibility(int n, up_seq, down_seq):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef uint64_t upr[64]
    cdef uint64_t downr[64]
    cdef uint64_t jr = 0, mr = 0, rel, m
    cdef int i, j, u
    _load(up_seq, up, n)
    _load(down_seq, down, n)
    for i in range(n):
        upr[i] = up[i] | (ONE << i)
        downr[i] = down[i] | (ONE << i)
    for i in range(n):
        rel = up[i] | down[i]
        for j in range(i + 1, n):
            if (rel >> j) & 1:
                continue
            m = upr[i] & upr[j]
            if m:
                u = _least_of(m, up, down)
                if u >= 0:
                    jr |= ONE << u
            m = downr[i] & downr[j]
            if m:
                u = _greatest_of(m, up, down)
                if u >= 0:
                    mr |= ONE << u
    return jr, mr


cdef void _cover_degrees(int n, uint64_t *up, uint64_t *down, uint64_t mask,
                         int *lower, int *upper) nogil:
    cdef uint64_t cand
    cdef int x, y
    for x in range(n):
        lower[x] = 0
        upper[x] = 0
    for x in range(n):
        if not (mask >> x) & 1:
            continue
        cand = up[x] & mask
        while cand:
            y = FBB_CTZ(cand)
            cand &= cand - 1
            if not (up[x] & down[y] & mask):
                upper[x] += 1
                lower[y] += 1


def basic_block_universal(int n, up_seq, down_seq):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef int lower[64]
    cdef int upper[64]
    cdef uint64_t full
    cdef int z, e0, c0, e, c, eta0
    cdef bint any_irr = False
    if n == 1:
        return True
    _load(up_seq, up, n)
    _load(down_seq, down, n)
    full = (ONE << (n - 1) << 1) - 1
    _cover_degrees(n, up, down, full, lower, upper)
    for z in range(n):
        if lower[z] <= 1 and upper[z] <= 1:
            any_irr = True
            break
    if not any_irr:
        return True
    _nullity_parts(n, up, down, full, &e0, &c0)
    eta0 = e0 - n + c0
    for z in range(n):
        if lower[z] <= 1 and upper[z] <= 1:
            _nullity_parts(n, up, down, full ^ (ONE << z), &e, &c)
            if e - (n - 1) + c != eta0 - 1:
                return False
    return True


def dismantling_order(int n, up_seq, down_seq):
    cdef uint64_t up[64]
    cdef uint64_t down[64]
    cdef int lower[64]
    cdef int upper[64]
    cdef uint64_t mask
    cdef int remaining = n
    cdef int v, z
    _load(up_seq, up, n)
    _load(down_seq, down, n)
    mask = (ONE << (n - 1) << 1) - 1
    order = []
    while remaining > 1:
        _cover_degrees(n, up, down, mask, lower, upper)
        z = -1
        for v in range(n):
            if (mask >> v) & 1 and lower[v] <= 1 and upper[v] <= 1:
                z = v
                break
        if z < 0:
            return None
        order.append(z)
        mask ^= ONE << z
        remaining -= 1
    return order


def unisolated_masks(int nv, int q):
    cdef uint64_t vmask[64]
    cdef int c[64]
    cdef int npairs = nv * (nv - 1) // 2
    cdef uint64_t m
    cdef int i, j, k, t, v
    cdef bint covered
    if q < 0 or q > npairs:
        return []
    k = 0
    for v in range(nv):
        vmask[v] = 0
    for i in range(nv - 1):
        for j in range(i + 1, nv):
            vmask[i] |= ONE << k
            vmask[j] |= ONE << k
            k += 1
    out = []
    for i in range(q):
        c[i] = i
    while True:
        m = 0
        for i in range(q):
            m |= ONE << c[i]
        covered = True
        for v in range(nv):
            if not (vmask[v] & m):
                covered = False
                break
        if covered:
            out.append(m)
        i = q - 1
        while i >= 0 and c[i] == npairs - q + i:
            i -= 1
        if i < 0:
            break
        c[i] += 1
        for t in range(i + 1, q):
            c[t] = c[t - 1] + 1
    return out
