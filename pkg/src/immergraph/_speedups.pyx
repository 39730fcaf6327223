# cython: language_level=3
"""Compiled kernels mirroring immergraph._pure step for step.

Every search keeps the reference iteration order (vertices ascending,
masks ascending, shortest paths first), so results and witnesses are
byte-identical with the pure lane.
"""

from libc.string cimport memcpy, memset

KERNEL_NAME = "compiled"

MODE_ANY = 0
MODE_SEP = 1
MODE_NONSEP = 2
MODE_NOROOT = 3

DEF MAXN = 12
DEF MAXCELLS = 144
DEF MAXEDGES = 96
DEF BIG = 1 << 29


def degree_list(const unsigned char[::1] mat, int n):
    cdef int v, u, d
    out = []
    for v in range(n):
        d = 0
        for u in range(n):
            d += mat[v * n + u]
        out.append(d)
    return out


def cut_size_mask(const unsigned char[::1] mat, int n, int mask):
    cdef int u, v, total = 0
    for u in range(n):
        if mask >> u & 1:
            for v in range(n):
                if not mask >> v & 1:
                    total += mat[u * n + v]
    return total


cdef int _bfs_augment(int* res, int n, int s, int t) noexcept nogil:
    cdef int parent[MAXN]
    cdef int queue[MAXN]
    cdef int head = 0, tail = 0
    cdef int u, v, base, bottleneck
    cdef bint found = False
    for v in range(n):
        parent[v] = -1
    parent[s] = s
    queue[tail] = s
    tail += 1
    while head < tail and not found:
        u = queue[head]
        head += 1
        base = u * n
        for v in range(n):
            if parent[v] < 0 and res[base + v] > 0:
                parent[v] = u
                if v == t:
                    found = True
                    break
                queue[tail] = v
                tail += 1
    if not found:
        return 0
    bottleneck = BIG
    v = t
    while v != s:
        u = parent[v]
        if res[u * n + v] < bottleneck:
            bottleneck = res[u * n + v]
        v = u
    v = t
    while v != s:
        u = parent[v]
        res[u * n + v] -= bottleneck
        res[v * n + u] += bottleneck
        v = u
    return bottleneck


cdef int _max_flow_c(const unsigned char* mat, int n, int s, int t, int limit) noexcept nogil:
    cdef int res[MAXCELLS]
    cdef int i, flow = 0, gain
    if limit <= 0:
        return 0
    for i in range(n * n):
        res[i] = mat[i]
    while flow < limit:
        gain = _bfs_augment(res, n, s, t)
        if gain == 0:
            break
        flow += gain
    return flow if flow < limit else limit


def max_flow(const unsigned char[::1] mat, int n, int s, int t, int limit=BIG):
    if s == t:
        raise ValueError("flow endpoints must differ")
    return _max_flow_c(&mat[0], n, s, t, limit)


def min_cut(const unsigned char[::1] mat, int n, int s, int t):
    cdef int res[MAXCELLS]
    cdef int stack[MAXN]
    cdef int i, flow = 0, gain, seen, top, u, v, base
    if s == t:
        raise ValueError("cut endpoints must differ")
    for i in range(n * n):
        res[i] = mat[i]
    while True:
        gain = _bfs_augment(res, n, s, t)
        if gain == 0:
            break
        flow += gain
    seen = 1 << s
    stack[0] = s
    top = 1
    while top:
        top -= 1
        u = stack[top]
        base = u * n
        for v in range(n):
            if res[base + v] > 0 and not seen >> v & 1:
                seen |= 1 << v
                stack[top] = v
                top += 1
    return flow, seen


def find_violated_cut(const unsigned char[::1] mat, int n, int r0, int r1, conds):
    cdef int cut[1 << MAXN]
    cdef int pop[1 << MAXN]
    cdef int deg[MAXN]
    cdef int req[16]
    cdef int min_in[16]
    cdef int min_out[16]
    cdef int mode[16]
    cdef int ncond = len(conds)
    cdef int full = 1 << n
    cdef int mask, low_bit, low, rest, e, mm, vb, base, u, v, d
    cdef int inside, outside, c, idx
    cdef bint in0, in1
    if ncond > 16:
        raise ValueError("too many conditions")
    for idx in range(ncond):
        req[idx] = conds[idx][0]
        min_in[idx] = conds[idx][1]
        min_out[idx] = conds[idx][2]
        mode[idx] = conds[idx][3]
    for v in range(n):
        d = 0
        for u in range(n):
            d += mat[v * n + u]
        deg[v] = d
    cut[0] = 0
    pop[0] = 0
    for mask in range(1, full):
        low_bit = mask & (-mask)
        low = 0
        while not low_bit >> low & 1:
            low += 1
        rest = mask ^ low_bit
        e = 0
        mm = rest
        base = low * n
        while mm:
            vb = mm & (-mm)
            v = 0
            while not vb >> v & 1:
                v += 1
            e += mat[base + v]
            mm ^= vb
        cut[mask] = cut[rest] + deg[low] - 2 * e
        pop[mask] = pop[rest] + 1
    for mask in range(1, full - 1):
        inside = pop[mask]
        outside = n - inside
        c = cut[mask]
        in0 = r0 >= 0 and mask >> r0 & 1
        in1 = r1 >= 0 and mask >> r1 & 1
        for idx in range(ncond):
            if c >= req[idx] or inside < min_in[idx] or outside < min_out[idx]:
                continue
            if mode[idx] == MODE_SEP and in0 == in1:
                continue
            if mode[idx] == MODE_NONSEP and in0 != in1:
                continue
            if mode[idx] == MODE_NOROOT and in0:
                continue
            return mask, idx
    return None


# ---- canonical form ----

cdef struct CanonState:
    const unsigned char* mat
    int n
    int r
    int roots[2]
    bint isroot[MAXN]
    int deg[MAXN]
    unsigned char best[80]
    int best_len
    int perm[MAXN]
    bint used[MAXN]


cdef void _canon_rec(CanonState* st, int p, int off) noexcept nogil:
    cdef unsigned char seg[1 + MAXN]
    cdef int seglen = 1 + p
    cdef int end = off + seglen
    cdef int v, i, overlap, cmp
    cdef bint is_cand
    if p == st.n:
        st.best_len = off
        return
    for v in range(st.n):
        if p < st.r:
            is_cand = v == st.roots[p]
        else:
            is_cand = not st.isroot[v] and not st.used[v]
        if not is_cand:
            continue
        seg[0] = <unsigned char> st.deg[v]
        for i in range(p):
            seg[1 + i] = st.mat[st.perm[i] * st.n + v]
        overlap = st.best_len - off
        if overlap > seglen:
            overlap = seglen
        if overlap > 0:
            cmp = 0
            for i in range(overlap):
                if seg[i] != st.best[off + i]:
                    cmp = 1 if seg[i] > st.best[off + i] else -1
                    break
            if cmp > 0:
                continue
            if cmp < 0:
                st.best_len = off
        if st.best_len < end:
            for i in range(seglen):
                st.best[off + i] = seg[i]
            st.best_len = end
        st.perm[p] = v
        st.used[v] = True
        _canon_rec(st, p + 1, end)
        st.used[v] = False


def canonical_bytes(const unsigned char[::1] mat, int n, roots):
    cdef CanonState st
    cdef int v, u, d, i
    cdef int total = 2 + n + n * (n - 1) // 2
    st.mat = &mat[0]
    st.n = n
    st.r = len(roots)
    for v in range(n):
        st.isroot[v] = False
        st.used[v] = False
    for i in range(st.r):
        st.roots[i] = roots[i]
        st.isroot[roots[i]] = True
    for v in range(n):
        d = 0
        for u in range(n):
            d += mat[v * n + u]
        st.deg[v] = d
    st.best[0] = <unsigned char> n
    st.best[1] = <unsigned char> st.r
    st.best_len = 2
    _canon_rec(&st, 0, 2)
    if st.best_len != total:
        raise AssertionError("canonical search did not complete")
    return bytes(st.best[:total])


# ---- immersion search ----

cdef struct ImmState:
    int hn
    int pn
    int ne
    int res[MAXCELLS]
    int hdeg[MAXN]
    int pdeg[MAXN]
    int pe_u[MAXEDGES]
    int pe_v[MAXEDGES]
    int suffix_need[MAXEDGES]
    int order[MAXN]
    int root_of[MAXN]
    int tmap[MAXN]
    bint used[MAXN]
    int dist_all[MAXEDGES * MAXN]
    # one working path per edge: deeper routing levels must not clobber it
    int path_all[MAXEDGES * (MAXN + 1)]
    bint want_witness
    int route_len[MAXEDGES]
    int route_v[MAXEDGES * (MAXN + 1)]


cdef int _flow_on_res(ImmState* st, int s, int t, int limit) noexcept nogil:
    cdef int res2[MAXCELLS]
    cdef int i, flow = 0, gain
    if limit <= 0:
        return 0
    for i in range(st.hn * st.hn):
        res2[i] = st.res[i]
    while flow < limit:
        gain = _bfs_augment(res2, st.hn, s, t)
        if gain == 0:
            break
        flow += gain
    return flow if flow < limit else limit


cdef void _dists_to(ImmState* st, int t, int* out) noexcept nogil:
    cdef int queue[MAXN]
    cdef int head = 0, tail = 0
    cdef int u, v, base
    for v in range(st.hn):
        out[v] = BIG
    out[t] = 0
    queue[tail] = t
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        base = u * st.hn
        for v in range(st.hn):
            if st.res[base + v] > 0 and out[v] == BIG:
                out[v] = out[u] + 1
                queue[tail] = v
                tail += 1


cdef bint _dfs(ImmState* st, int cur, int t, int length, int depth, int visited, int i) noexcept nogil:
    cdef int remaining = length - depth
    cdef int base = cur * st.hn
    cdef int hn = st.hn
    cdef int w, j
    cdef int* dist_t
    cdef int* path = &st.path_all[i * (MAXN + 1)]
    cdef bint ok
    if remaining == 1:
        if st.res[base + t] > 0:
            path[depth + 1] = t
            if st.want_witness:
                st.route_len[i] = length + 1
                for j in range(length + 1):
                    st.route_v[i * (MAXN + 1) + j] = path[j]
            st.res[base + t] -= 1
            st.res[t * hn + cur] -= 1
            if _route(st, i + 1):
                st.res[base + t] += 1
                st.res[t * hn + cur] += 1
                return True
            st.res[base + t] += 1
            st.res[t * hn + cur] += 1
        return False
    dist_t = &st.dist_all[i * MAXN]
    for w in range(hn):
        if w == t or visited >> w & 1 or st.res[base + w] == 0:
            continue
        if dist_t[w] > remaining - 1:
            continue
        path[depth + 1] = w
        st.res[base + w] -= 1
        st.res[w * hn + cur] -= 1
        ok = _dfs(st, w, t, length, depth + 1, visited | (1 << w), i)
        st.res[base + w] += 1
        st.res[w * hn + cur] += 1
        if ok:
            return True
    return False


cdef bint _route(ImmState* st, int i) noexcept nogil:
    cdef int u, v, s, t, need, length
    cdef int* dist_t
    if i == st.ne:
        return True
    u = st.pe_u[i]
    v = st.pe_v[i]
    s = st.tmap[u]
    t = st.tmap[v]
    need = st.suffix_need[i]
    # need 1 is covered by the reachability check below
    if need > 1 and _flow_on_res(st, s, t, need) < need:
        return False
    dist_t = &st.dist_all[i * MAXN]
    _dists_to(st, t, dist_t)
    if dist_t[s] >= BIG:
        return False
    st.path_all[i * (MAXN + 1)] = s
    for length in range(dist_t[s], st.hn):
        if _dfs(st, s, t, length, 0, 1 << s, i):
            return True
    return False


cdef bint _assign(ImmState* st, int k) noexcept nogil:
    cdef int pv, h, i, u, v, needk
    cdef bint forced
    if k == st.pn:
        for i in range(st.ne):
            if i > 0 and st.pe_u[i] == st.pe_u[i - 1] and st.pe_v[i] == st.pe_v[i - 1]:
                continue
            u = st.pe_u[i]
            v = st.pe_v[i]
            needk = st.suffix_need[i]
            if _flow_on_res(st, st.tmap[u], st.tmap[v], needk) < needk:
                return False
        return _route(st, 0)
    pv = st.order[k]
    forced = st.root_of[pv] >= 0
    for h in range(st.hn):
        if forced and h != st.root_of[pv]:
            continue
        if st.used[h] or st.hdeg[h] < st.pdeg[pv]:
            continue
        st.tmap[pv] = h
        st.used[h] = True
        if _assign(st, k + 1):
            return True
        st.used[h] = False
    st.tmap[pv] = -1
    return False


def immerses(const unsigned char[::1] hmat, int hn, hroots,
             const unsigned char[::1] pmat, int pn, proots,
             bint want_witness=False):
    cdef ImmState st
    cdef int u, v, m, i, k, d
    if pn > hn or len(hroots) != len(proots):
        return None
    st.hn = hn
    st.pn = pn
    st.want_witness = want_witness
    for v in range(hn):
        d = 0
        for u in range(hn):
            d += hmat[v * hn + u]
        st.hdeg[v] = d
        st.used[v] = False
    for i in range(hn * hn):
        st.res[i] = hmat[i]
    for v in range(pn):
        d = 0
        for u in range(pn):
            d += pmat[v * pn + u]
        st.pdeg[v] = d
        st.root_of[v] = -1
        st.tmap[v] = -1
    st.ne = 0
    for u in range(pn):
        for v in range(u + 1, pn):
            for m in range(pmat[u * pn + v]):
                if st.ne >= MAXEDGES:
                    raise ValueError("pattern too large")
                st.pe_u[st.ne] = u
                st.pe_v[st.ne] = v
                st.ne += 1
    for i in range(st.ne):
        st.suffix_need[i] = 1
    for i in range(st.ne - 2, -1, -1):
        if st.pe_u[i] == st.pe_u[i + 1] and st.pe_v[i] == st.pe_v[i + 1]:
            st.suffix_need[i] = st.suffix_need[i + 1] + 1
    for i in range(len(proots)):
        st.root_of[proots[i]] = hroots[i]
    k = 0
    for i in range(len(proots)):
        st.order[k] = proots[i]
        k += 1
    for v in range(pn):
        if st.root_of[v] < 0:
            st.order[k] = v
            k += 1
    if not _assign(&st, 0):
        return None
    if want_witness:
        tmap = tuple(st.tmap[v] for v in range(pn))
        routes = tuple(
            tuple(st.route_v[i * (MAXN + 1) + j] for j in range(st.route_len[i]))
            for i in range(st.ne)
        )
        return tmap, routes
    return True
