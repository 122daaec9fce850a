"""Hot loops: role-ordered pattern search, splitter closure, blossom matching.

Each kernel has a numba version working on packed ``uint64`` rows and a
numpy version working on boolean matrices. ``_accel.USE_NUMBA`` picks the
pair exported under the public names at the bottom of this module; both
are always importable so the benchmark can time them against each other.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, maybe_njit, njit

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


# --------------------------------------------------------------------------
# bit helpers (numba)


@njit
def _ctz(x):
    """Index of the lowest set bit of a non-zero uint64."""
    n = 0
    if (x & np.uint64(0xFFFFFFFF)) == 0:
        n += 32
        x >>= np.uint64(32)
    if (x & np.uint64(0xFFFF)) == 0:
        n += 16
        x >>= np.uint64(16)
    if (x & np.uint64(0xFF)) == 0:
        n += 8
        x >>= np.uint64(8)
    if (x & np.uint64(0xF)) == 0:
        n += 4
        x >>= np.uint64(4)
    if (x & np.uint64(0x3)) == 0:
        n += 2
        x >>= np.uint64(2)
    if (x & np.uint64(0x1)) == 0:
        n += 1
    return n


@njit
def _next_bit(words, start):
    """Smallest set position >= start in a packed row, or -1."""
    n_words = words.shape[0]
    w = start >> 6
    if w >= n_words:
        return -1
    x = words[w] & ~((np.uint64(1) << np.uint64(start & 63)) - np.uint64(1))
    while True:
        if x != np.uint64(0):
            return w * 64 + _ctz(x)
        w += 1
        if w >= n_words:
            return -1
        x = words[w]


@njit
def _popcount_row(words):
    total = 0
    for i in range(words.shape[0]):
        x = words[i]
        while x != np.uint64(0):
            x &= x - np.uint64(1)
            total += 1
    return total


# --------------------------------------------------------------------------
# role-ordered induced pattern search


@njit
def _search_nb(bits, keep, rel):
    """Lexicographically least role tuple embedding a pattern, or all -1.

    ``rel[i, j]`` (i < j) is 1 when roles i and j must be adjacent and 0
    when they must not be. Roles are filled in order; each pick narrows the
    candidate rows of every later role, and a branch dies as soon as any
    later role has no candidate left.
    """
    k = rel.shape[0]
    n_words = bits.shape[1]
    cand = np.zeros((k + 1, k, n_words), dtype=np.uint64)
    for r in range(k):
        for w in range(n_words):
            cand[0, r, w] = keep[w]
    chosen = np.full(k, -1, dtype=np.int64)
    cursor = np.zeros(k + 1, dtype=np.int64)
    d = 0
    while d >= 0:
        v = _next_bit(cand[d, d], cursor[d])
        if v < 0:
            chosen[d] = -1
            d -= 1
            continue
        cursor[d] = v + 1
        chosen[d] = v
        if d == k - 1:
            return chosen
        vw = v >> 6
        vbit = np.uint64(1) << np.uint64(v & 63)
        alive = True
        for r in range(d + 1, k):
            nonempty = np.uint64(0)
            for w in range(n_words):
                row = bits[v, w]
                if rel[d, r] == 0:
                    row = ~row
                x = cand[d, r, w] & row
                if w == vw:
                    x &= ~vbit
                cand[d + 1, r, w] = x
                nonempty |= x
            if nonempty == np.uint64(0):
                alive = False
                break
        if alive:
            d += 1
            cursor[d] = 0
    return chosen


def _search_np(adj, keep, rel):
    """numpy twin of :func:`_search_nb` on a boolean adjacency matrix."""
    k = rel.shape[0]
    n = adj.shape[0]
    non_adj = ~adj
    chosen = []

    def extend(cands):
        d = len(chosen)
        for v in np.flatnonzero(cands[0]):
            v = int(v)
            if d == k - 1:
                chosen.append(v)
                return True
            nxt = []
            for r in range(d + 1, k):
                row = adj[v] if rel[d, r] else non_adj[v]
                c = cands[r - d] & row
                c[v] = False
                if not c.any():
                    break
                nxt.append(c)
            else:
                chosen.append(v)
                if extend(nxt):
                    return True
                chosen.pop()
        return False

    start = [np.asarray(keep, dtype=bool).copy() for _ in range(k)]
    if n and extend(start):
        return np.array(chosen, dtype=np.int64)
    return np.full(k, -1, dtype=np.int64)


# --------------------------------------------------------------------------
# splitter closure and maximal proper modules


@njit
def _closure_nb(bits, seed):
    """Packed row of the smallest homogeneous set containing ``seed``.

    Uses the first seed vertex as a reference: an outside vertex splits the
    current set exactly when its adjacency to some member differs from its
    adjacency to the reference.
    """
    n = bits.shape[0]
    n_words = bits.shape[1]
    inside = np.zeros(n_words, dtype=np.uint64)
    queue = np.empty(n, dtype=np.int64)
    tail = 0
    ref = seed[0]
    for i in range(seed.shape[0]):
        s = seed[i]
        bit = np.uint64(1) << np.uint64(s & 63)
        if inside[s >> 6] & bit:
            continue
        inside[s >> 6] |= bit
        queue[tail] = s
        tail += 1
    head = 1
    while head < tail:
        w = queue[head]
        head += 1
        for i in range(n_words):
            diff = (bits[ref, i] ^ bits[w, i]) & ~inside[i]
            inside[i] |= diff
            while diff != np.uint64(0):
                queue[tail] = i * 64 + _ctz(diff)
                tail += 1
                diff &= diff - np.uint64(1)
    return inside


@njit
def _maximal_modules_nb(bits):
    """Part label per vertex, or ``(-1 - u)`` everywhere on an overlap at u.

    part(u) is {u} plus every closure of {u, v} that is not the whole vertex
    set. Vertices already placed are not used as new starting points.
    """
    n = bits.shape[0]
    n_words = bits.shape[1]
    labels = np.full(n, -1, dtype=np.int64)
    seed = np.empty(2, dtype=np.int64)
    part = np.zeros(n_words, dtype=np.uint64)
    n_parts = 0
    for u in range(n):
        if labels[u] >= 0:
            continue
        for i in range(n_words):
            part[i] = 0
        part[u >> 6] |= np.uint64(1) << np.uint64(u & 63)
        for v in range(n):
            if (part[v >> 6] >> np.uint64(v & 63)) & np.uint64(1):
                continue
            seed[0] = u
            seed[1] = v
            closed = _closure_nb(bits, seed)
            if _popcount_row(closed) < n:
                for i in range(n_words):
                    part[i] |= closed[i]
        x = _next_bit(part, 0)
        while x >= 0:
            if labels[x] >= 0:
                labels[:] = -1 - u
                return labels
            labels[x] = n_parts
            x = _next_bit(part, x + 1)
        n_parts += 1
    return labels


def _closure_np(adj, seed):
    """Same closure, processing a whole frontier of new members per round."""
    n = adj.shape[0]
    inside = np.zeros(n, dtype=bool)
    seed = [int(s) for s in seed]
    inside[seed] = True
    ref = adj[seed[0]]
    frontier = np.array(seed[1:], dtype=np.int64)
    while frontier.size:
        diff = (adj[frontier] != ref).any(axis=0) & ~inside
        frontier = np.flatnonzero(diff)
        inside[frontier] = True
    return inside


def _maximal_modules_np(adj):
    n = adj.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    n_parts = 0
    for u in range(n):
        if labels[u] >= 0:
            continue
        part = np.zeros(n, dtype=bool)
        part[u] = True
        for v in range(n):
            if part[v]:
                continue
            closed = _closure_np(adj, (u, v))
            if not closed.all():
                part |= closed
        if (labels[part] >= 0).any():
            labels[:] = -1 - u
            return labels
        labels[part] = n_parts
        n_parts += 1
    return labels


# --------------------------------------------------------------------------
# Edmonds' blossom algorithm, O(n^3). One source for both backends.


@maybe_njit
def _lca(match, base, parent, a, b, n):
    on_path = np.zeros(n, dtype=np.bool_)
    while True:
        a = base[a]
        on_path[a] = True
        if match[a] == -1:
            break
        a = parent[match[a]]
    b = base[b]
    while not on_path[b]:
        b = base[parent[match[b]]]
    return b


@maybe_njit
def _mark_path(match, base, parent, in_blossom, v, b, child):
    while base[v] != b:
        in_blossom[base[v]] = True
        in_blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


@maybe_njit
def _find_augmenting(indptr, indices, match, parent, root):
    """BFS from ``root`` over alternating paths; free endpoint or -1.

    On success ``parent`` encodes the path back to ``root``.
    """
    n = match.shape[0]
    used = np.zeros(n, dtype=np.bool_)
    base = np.arange(n)
    for i in range(n):
        parent[i] = -1
    queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    used[root] = True
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            to = indices[k]
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = _lca(match, base, parent, v, to, n)
                in_blossom = np.zeros(n, dtype=np.bool_)
                _mark_path(match, base, parent, in_blossom, v, cur, to)
                _mark_path(match, base, parent, in_blossom, to, cur, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue[tail] = i
                            tail += 1
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to
                used[match[to]] = True
                queue[tail] = match[to]
                tail += 1
    return -1


@maybe_njit
def _blossom(indptr, indices, match):
    """Grow ``match`` (mate array, -1 = free) to maximum cardinality in place."""
    n = match.shape[0]
    parent = np.full(n, -1, dtype=np.int64)
    for v in range(n):
        if match[v] != -1:
            continue
        for k in range(indptr[v], indptr[v + 1]):
            to = indices[k]
            if match[to] == -1:
                match[to] = v
                match[v] = to
                break
    for root in range(n):
        if match[root] != -1:
            continue
        t = _find_augmenting(indptr, indices, match, parent, root)
        while t != -1:
            pv = parent[t]
            ppv = match[pv]
            match[t] = pv
            match[pv] = t
            t = ppv
    return match


@maybe_njit
def _has_augmenting(indptr, indices, match):
    n = match.shape[0]
    parent = np.full(n, -1, dtype=np.int64)
    for root in range(n):
        if match[root] == -1 and _find_augmenting(indptr, indices, match, parent, root) != -1:
            return True
    return False


# --------------------------------------------------------------------------
# public entry points


def search_pattern(bits, adj, keep, rel):
    """Least role tuple as a list, or ``None``. ``keep`` is a bool mask."""
    rel = np.ascontiguousarray(rel, dtype=np.int8)
    if USE_NUMBA:
        from .graph import pack_rows

        out = _search_nb(bits, pack_rows(keep)[0], rel)
    else:
        out = _search_np(adj, keep, rel)
    return None if out[0] < 0 else out.tolist()


def module_closure(bits, adj, seed) -> np.ndarray:
    """Boolean membership vector of the splitter closure of ``seed``."""
    if USE_NUMBA:
        from .graph import unpack_row

        row = _closure_nb(bits, np.asarray(seed, dtype=np.int64))
        return unpack_row(row, adj.shape[0])
    return _closure_np(adj, seed)


def maximal_module_labels(bits, adj) -> np.ndarray:
    if USE_NUMBA:
        return _maximal_modules_nb(bits)
    return _maximal_modules_np(adj)


def csr(adj):
    indptr = np.zeros(adj.shape[0] + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(adj.sum(axis=1))
    indices = np.nonzero(adj)[1].astype(np.int64)
    return indptr, indices


def max_matching_mates(adj) -> np.ndarray:
    indptr, indices = csr(adj)
    match = np.full(adj.shape[0], -1, dtype=np.int64)
    return _blossom(indptr, indices, match)


def has_augmenting_path(adj, mates) -> bool:
    indptr, indices = csr(adj)
    return bool(_has_augmenting(indptr, indices, np.array(mates, dtype=np.int64)))
