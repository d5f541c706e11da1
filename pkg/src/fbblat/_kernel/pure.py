"""Bitset poset kernels, pure-Python reference implementation.

Elements are indices 0..n-1 and element subsets are Python ints used as
bitmasks, so the same code handles posets of any size.  ``fastcore`` is the
compiled twin, limited to single-word (<= 64 element) posets; the package
picks an implementation per call in ``fbblat._kernel``.
"""

from __future__ import annotations

import itertools

IMPLEMENTATION = "pure"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure(n, covers):
    """Strict reachability masks (up, down) of an acyclic cover list.

    Raises ValueError if the cover relation has a cycle.
    """
    succ = [[] for _ in range(n)]
    pred = [[] for _ in range(n)]
    indeg = [0] * n
    for lo, hi in covers:
        succ[lo].append(hi)
        pred[hi].append(lo)
        indeg[hi] += 1
    topo = [v for v in range(n) if indeg[v] == 0]
    for v in topo:  # grows while iterating
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                topo.append(w)
    if len(topo) != n:
        raise ValueError("cover relation contains a cycle")
    up = [0] * n
    for v in reversed(topo):
        acc = 0
        for w in succ[v]:
            acc |= up[w] | (1 << w)
        up[v] = acc
    down = [0] * n
    for v in topo:
        acc = 0
        for w in pred[v]:
            acc |= down[w] | (1 << w)
        down[v] = acc
    return up, down


def covers_within(n, up, down, mask):
    """Cover pairs of the subposet induced on ``mask``."""
    out = []
    for x in range(n):
        if not (mask >> x) & 1:
            continue
        for y in _bits(up[x] & mask):
            if not up[x] & down[y] & mask:
                out.append((x, y))
    return out


def induced_nullity_parts(n, up, down, mask):
    """(cover-edge count, component count) of the subposet induced on mask."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = 0
    for x in range(n):
        if not (mask >> x) & 1:
            continue
        for y in _bits(up[x] & mask):
            if not up[x] & down[y] & mask:
                edges += 1
                ra, rb = find(x), find(y)
                if ra != rb:
                    parent[ra] = rb
    comps = sum(1 for v in _bits(mask) if find(v) == v)
    return edges, comps


def _least_of(subset, up, down):
    """Index of the least element of nonempty ``subset``, or -1 if none."""
    rest = subset
    u = -1
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        if not down[u] & subset:  # minimal element (lowest-index one)
            break
        rest ^= low
    # least iff every element of the subset sits above u
    if subset & ~(up[u] | (1 << u)):
        return -1
    return u


def _greatest_of(subset, up, down):
    """Index of the greatest element of nonempty ``subset``, or -1 if none."""
    rest = subset
    u = -1
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        if not up[u] & subset:
            break
        rest ^= low
    if subset & ~(down[u] | (1 << u)):
        return -1
    return u


def is_lattice(n, up, down):
    """True iff every element pair has a unique join and a unique meet."""
    upr = [up[i] | (1 << i) for i in range(n)]
    downr = [down[i] | (1 << i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = upr[i] & upr[j]
            if not m or _least_of(m, up, down) < 0:
                return False
            m = downr[i] & downr[j]
            if not m or _greatest_of(m, up, down) < 0:
                return False
    return True


def reducibility(n, up, down):
    """(join_reducible, meet_reducible) masks, computed definitionally:
    x is join-reducible iff x = y v z for some y, z both distinct from x.

    Only incomparable pairs can produce such an x, so those are scanned.
    """
    jr = 0
    mr = 0
    upr = [up[i] | (1 << i) for i in range(n)]
    downr = [down[i] | (1 << i) for i in range(n)]
    for i in range(n):
        rel = up[i] | down[i]
        for j in range(i + 1, n):
            if (rel >> j) & 1:
                continue
            m = upr[i] & upr[j]
            if m:
                u = _least_of(m, up, down)
                if u >= 0:
                    jr |= 1 << u
            m = downr[i] & downr[j]
            if m:
                u = _greatest_of(m, up, down)
                if u >= 0:
                    mr |= 1 << u
    return jr, mr


def _cover_degrees(n, up, down, mask):
    lower = [0] * n
    upper = [0] * n
    for x, y in covers_within(n, up, down, mask):
        upper[x] += 1
        lower[y] += 1
    return lower, upper


def basic_block_universal(n, up, down):
    """One element, or no doubly irreducible element, or every doubly
    irreducible element's removal drops the nullity by exactly one."""
    if n == 1:
        return True
    full = (1 << n) - 1
    lower, upper = _cover_degrees(n, up, down, full)
    irr = [z for z in range(n) if lower[z] <= 1 and upper[z] <= 1]
    if not irr:
        return True
    e0, c0 = induced_nullity_parts(n, up, down, full)
    eta0 = e0 - n + c0
    for z in irr:
        e, c = induced_nullity_parts(n, up, down, full ^ (1 << z))
        if e - (n - 1) + c != eta0 - 1:
            return False
    return True


def dismantling_order(n, up, down):
    """Greedy removal order of doubly irreducible elements down to a
    singleton, lowest index first, or None when the process gets stuck.

    Cover counts are recomputed inside the shrinking induced subposet.
    """
    mask = (1 << n) - 1
    order = []
    remaining = n
    while remaining > 1:
        lower, upper = _cover_degrees(n, up, down, mask)
        z = -1
        for v in _bits(mask):
            if lower[v] <= 1 and upper[v] <= 1:
                z = v
                break
        if z < 0:
            return None
        order.append(z)
        mask ^= 1 << z
        remaining -= 1
    return order


def unisolated_masks(nv, q):
    """Bitmasks over pair labels of the q-edge subgraphs of K_nv with no
    isolated vertex, in lexicographic order of their label sets."""
    npairs = nv * (nv - 1) // 2
    if q < 0 or q > npairs:
        return []
    vmask = [0] * nv
    k = 0
    for i in range(nv - 1):
        for j in range(i + 1, nv):
            vmask[i] |= 1 << k
            vmask[j] |= 1 << k
            k += 1
    out = []
    for combo in itertools.combinations(range(npairs), q):
        m = 0
        for c in combo:
            m |= 1 << c
        for v in range(nv):
            if not vmask[v] & m:
                break
        else:
            out.append(m)
    return out
