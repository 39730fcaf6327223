"""Pure Python kernels: flows, cut scans, canonical forms, immersion search.

Reference lane for the compiled module.  Both lanes must produce identical
bytes and identical witnesses, so every search here fixes an explicit
iteration order: vertices ascending, subsets as ascending bitmasks, paths
shortest first with lexicographic tie break.
"""

from __future__ import annotations

KERNEL_NAME = "pure"

# find_violated_cut side-condition modes
MODE_ANY = 0
MODE_SEP = 1  # exactly one of the two roots inside the subset
MODE_NONSEP = 2  # both roots on the same side
MODE_NOROOT = 3  # first root outside the subset

_BIG = 1 << 30


def degree_list(mat, n: int) -> list[int]:
    return [sum(mat[v * n : (v + 1) * n]) for v in range(n)]


def cut_size_mask(mat, n: int, mask: int) -> int:
    total = 0
    for u in range(n):
        if mask >> u & 1:
            base = u * n
            for v in range(n):
                if not mask >> v & 1:
                    total += mat[base + v]
    return total


def _bfs_augment(res: list[int], n: int, s: int, t: int) -> int:
    """One BFS augmentation on the directed residual; returns bottleneck."""
    parent = [-1] * n
    parent[s] = s
    queue = [s]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        base = u * n
        for v in range(n):
            if parent[v] < 0 and res[base + v] > 0:
                parent[v] = u
                if v == t:
                    queue = None
                    break
                queue.append(v)
        if queue is None:
            break
    else:
        return 0
    bottleneck = _BIG
    v = t
    while v != s:
        u = parent[v]
        bottleneck = min(bottleneck, res[u * n + v])
        v = u
    v = t
    while v != s:
        u = parent[v]
        res[u * n + v] -= bottleneck
        res[v * n + u] += bottleneck
        v = u
    return bottleneck


def max_flow(mat, n: int, s: int, t: int, limit: int = _BIG) -> int:
    """Max s-t flow value, stopping early once limit is reached."""
    if s == t:
        raise ValueError("flow endpoints must differ")
    if limit <= 0:
        return 0
    res = list(mat)
    flow = 0
    while flow < limit:
        gain = _bfs_augment(res, n, s, t)
        if gain == 0:
            break
        flow += gain
    return min(flow, limit)


def min_cut(mat, n: int, s: int, t: int) -> tuple[int, int]:
    """Minimum s-t cut: (value, bitmask of the s side)."""
    if s == t:
        raise ValueError("cut endpoints must differ")
    res = list(mat)
    flow = 0
    while True:
        gain = _bfs_augment(res, n, s, t)
        if gain == 0:
            break
        flow += gain
    seen = 1 << s
    stack = [s]
    while stack:
        u = stack.pop()
        base = u * n
        for v in range(n):
            if res[base + v] > 0 and not seen >> v & 1:
                seen |= 1 << v
                stack.append(v)
    return flow, seen


def find_violated_cut(mat, n: int, r0: int, r1: int, conds) -> tuple[int, int] | None:
    """First subset violating one of the cut conditions, or None.

    conds is a sequence of (required, min_inside, min_outside, mode)
    tuples; subsets are scanned as ascending bitmasks, conditions in
    order, so the result is deterministic.  Roots may be -1 when absent.
    """
    full = 1 << n
    deg = degree_list(mat, n)
    cut = [0] * full
    pop = [0] * full
    for mask in range(1, full):
        low_bit = mask & -mask
        low = low_bit.bit_length() - 1
        rest = mask ^ low_bit
        e = 0
        mm = rest
        base = low * n
        while mm:
            vb = mm & -mm
            e += mat[base + vb.bit_length() - 1]
            mm ^= vb
        cut[mask] = cut[rest] + deg[low] - 2 * e
        pop[mask] = pop[rest] + 1
    for mask in range(1, full - 1):
        inside = pop[mask]
        outside = n - inside
        c = cut[mask]
        in0 = r0 >= 0 and mask >> r0 & 1
        in1 = r1 >= 0 and mask >> r1 & 1
        for idx, (req, min_in, min_out, mode) in enumerate(conds):
            if c >= req or inside < min_in or outside < min_out:
                continue
            if mode == MODE_SEP and in0 == in1:
                continue
            if mode == MODE_NONSEP and in0 != in1:
                continue
            if mode == MODE_NOROOT and in0:
                continue
            return mask, idx
    return None


def canonical_bytes(mat, n: int, roots) -> bytes:
    """Minimum encoding over root-pinning vertex orders.

    Encoding: n, root count, then per position its degree byte followed by
    the adjacency column against all earlier positions.  Equal encodings
    characterise rooted isomorphism.
    """
    r = len(roots)
    deg = degree_list(mat, n)
    rootset = set(roots)
    total = 2 + n + n * (n - 1) // 2
    best = bytearray(total)
    best[0] = n
    best[1] = r
    best_len = 2
    perm = [0] * n
    used = [False] * n
    nonroots = [v for v in range(n) if v not in rootset]

    def rec(p: int, off: int) -> None:
        nonlocal best_len
        if p == n:
            best_len = off
            return
        cands = (roots[p],) if p < r else nonroots
        for v in cands:
            if used[v]:
                continue
            seg = bytearray(1 + p)
            seg[0] = deg[v]
            for i in range(p):
                seg[1 + i] = mat[perm[i] * n + v]
            end = off + len(seg)
            overlap = min(best_len, end) - off
            if overlap > 0:
                piece = bytes(seg[:overlap])
                known = bytes(best[off : off + overlap])
                if piece > known:
                    continue
                if piece < known:
                    best_len = off
            if best_len < end:
                best[off:end] = seg
                best_len = end
            perm[p] = v
            used[v] = True
            rec(p + 1, end)
            used[v] = False

    rec(0, 2)
    if best_len != total:
        raise AssertionError("canonical search did not complete")
    return bytes(best)


def _bfs_dist(res: list[int], n: int, t: int) -> list[int]:
    """Distances to t along positive residual entries (undirected use)."""
    dist = [_BIG] * n
    dist[t] = 0
    queue = [t]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        base = u * n
        for v in range(n):
            if res[base + v] > 0 and dist[v] == _BIG:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def immerses(hmat, hn: int, hroots, pmat, pn: int, proots, want_witness: bool = False):
    """Search for a weak rooted immersion of the pattern in the host.

    Terminal maps send pattern root i to host root i and are otherwise
    tried in ascending host order.  Pattern edges (sorted, parallel copies
    adjacent) are routed one at a time over vertex-simple paths, shortest
    first, vertices ascending.  Edge-disjointness is tracked by a shared
    multiplicity budget.  Returns None, True, or (terminal_map, routes).
    """
    if pn > hn or len(hroots) != len(proots):
        return None
    hdeg = degree_list(hmat, hn)
    pdeg = degree_list(pmat, pn)
    pedges: list[tuple[int, int]] = []
    for u in range(pn):
        for v in range(u + 1, pn):
            pedges.extend([(u, v)] * pmat[u * pn + v])
    ne = len(pedges)
    suffix_need = [1] * ne
    for i in range(ne - 2, -1, -1):
        if pedges[i] == pedges[i + 1]:
            suffix_need[i] = suffix_need[i + 1] + 1
    pair_need: dict[tuple[int, int], int] = {}
    for uv in pedges:
        pair_need[uv] = pair_need.get(uv, 0) + 1

    root_of = {pv: hroots[i] for i, pv in enumerate(proots)}
    order = list(proots) + [v for v in range(pn) if v not in root_of]
    tmap = [-1] * pn
    used = [False] * hn
    res = list(hmat)
    routes: list[tuple[int, ...]] = [()] * ne
    # one working path per edge: deeper routing levels must not clobber it
    paths = [[0] * hn for _ in range(ne)]

    def dfs(cur: int, t: int, length: int, depth: int, visited: int, i: int) -> bool:
        remaining = length - depth
        base = cur * hn
        path = paths[i]
        if remaining == 1:
            if res[base + t] > 0:
                path[depth + 1] = t
                if want_witness:
                    routes[i] = tuple(path[: length + 1])
                res[base + t] -= 1
                res[t * hn + cur] -= 1
                if route(i + 1):
                    res[base + t] += 1
                    res[t * hn + cur] += 1
                    return True
                res[base + t] += 1
                res[t * hn + cur] += 1
            return False
        dist_t = dists[i]
        for w in range(hn):
            if w == t or visited >> w & 1 or res[base + w] == 0:
                continue
            if dist_t[w] > remaining - 1:
                continue
            path[depth + 1] = w
            res[base + w] -= 1
            res[w * hn + cur] -= 1
            ok = dfs(w, t, length, depth + 1, visited | (1 << w), i)
            res[base + w] += 1
            res[w * hn + cur] += 1
            if ok:
                return True
        return False

    dists: list[list[int]] = [[]] * ne

    def route(i: int) -> bool:
        if i == ne:
            return True
        u, v = pedges[i]
        s, t = tmap[u], tmap[v]
        need = suffix_need[i]
        # need 1 is covered by the reachability check below
        if need > 1 and max_flow(res, hn, s, t, need) < need:
            return False
        dist_t = _bfs_dist(res, hn, t)
        dists[i] = dist_t
        if dist_t[s] >= _BIG:
            return False
        paths[i][0] = s
        for length in range(dist_t[s], hn):
            if dfs(s, t, length, 0, 1 << s, i):
                return True
        return False

    def assign(k: int) -> bool:
        if k == pn:
            for (u, v), needk in pair_need.items():
                if max_flow(res, hn, tmap[u], tmap[v], needk) < needk:
                    return False
            return route(0)
        pv = order[k]
        forced = root_of.get(pv)
        cands = (forced,) if forced is not None else range(hn)
        for h in cands:
            if used[h] or hdeg[h] < pdeg[pv]:
                continue
            tmap[pv] = h
            used[h] = True
            if assign(k + 1):
                return True
            used[h] = False
        tmap[pv] = -1
        return False

    if not assign(0):
        return None
    if want_witness:
        return tuple(tmap), tuple(routes)
    return True
