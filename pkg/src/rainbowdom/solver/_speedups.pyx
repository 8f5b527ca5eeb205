# distutils: language = c++
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled solver engine: a faithful mirror of _engine.

Same algorithms, same enumeration orders (taken from _common), same
results; only faster.  The state keys of the ladder DP are packed into 64
bits, which limits this engine to k <= 10 colors and (for the vertex
searches) n <= 62 vertices; the wrapper routes larger instances to the
pure engine.
"""

import time as _time

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.algorithm cimport sort as csort
from cython.operator cimport dereference as deref, preincrement as inc
from libc.stdint cimport int64_t, uint64_t

from ._common import CYCLE, cycle_inits, ladder_inits, mask_order, superset_lists, window_lb_table

cdef extern from *:
    """
    static inline int popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int popcount64(unsigned long long x) nogil
    int ctz64(unsigned long long x) nogil


cdef inline int64_t ceil_pos(int64_t a, int64_t b) nogil:
    # ceil(a / b) for a > 0, b > 0
    return (a + b - 1) // b


cdef inline uint64_t canon_pack(int* st, int nm, int nr, int* rlo, int* rhi,
                                int k) nogil:
    """Canonical packed key: sort per-color signatures inside each class range."""
    cdef int out[6]
    cdef int sigs[16]
    cdef int i, i2, c, mi, lo, hi, cnt, j, tmp
    cdef uint64_t key = 0
    for mi in range(nm):
        out[mi] = 0
    for i in range(nr):
        lo = rlo[i]
        hi = rhi[i]
        cnt = 0
        for c in range(lo, hi):
            tmp = 0
            for mi in range(nm):
                tmp |= ((st[mi] >> c) & 1) << mi
            sigs[cnt] = tmp
            cnt += 1
        for j in range(1, cnt):
            tmp = sigs[j]
            i2 = j - 1
            while i2 >= 0 and sigs[i2] < tmp:
                sigs[i2 + 1] = sigs[i2]
                i2 -= 1
            sigs[i2 + 1] = tmp
        for j in range(cnt):
            c = lo + j
            for mi in range(nm):
                out[mi] |= ((sigs[j] >> mi) & 1) << c
    for mi in range(nm):
        key |= (<uint64_t> out[mi]) << (mi * k)
    return key


cdef extern from *:
    """
    struct FrontEntry {
        unsigned long long packed;
        int w;
        unsigned long long key;
    };
    """
    cdef cppclass FrontEntry:
        unsigned long long packed
        int w
        unsigned long long key


ctypedef unordered_map[uint64_t, vector[FrontEntry]] FrontMap
ctypedef pair[uint64_t, int] KeyW


cdef bint _front_insert(FrontMap& fronts, uint64_t lo, uint64_t packed,
                        int w, uint64_t key):
    """Pareto insertion: returns True when the state was kept.

    A state is dominated by a bucket-mate whose demand fields are all
    subsets (single packed-word test) and whose weight is no larger."""
    cdef vector[FrontEntry]* bucket = &fronts[lo]
    cdef size_t i, n = bucket.size()
    cdef FrontEntry e
    for i in range(n):
        if bucket[0][i].w <= w and (bucket[0][i].packed & ~packed) == 0:
            return False
    cdef size_t out = 0
    for i in range(n):
        if not (w <= bucket[0][i].w and (packed & ~bucket[0][i].packed) == 0):
            bucket[0][out] = bucket[0][i]
            out += 1
    bucket.resize(out)
    e.packed = packed
    e.w = w
    e.key = key
    bucket.push_back(e)
    return True


cdef void _front_items(FrontMap& fronts, vector[KeyW]& items):
    items.clear()
    cdef FrontMap.iterator it = fronts.begin()
    cdef size_t i
    while it != fronts.end():
        for i in range(deref(it).second.size()):
            items.push_back(KeyW(deref(it).second[i].key,
                                 deref(it).second[i].w))
        inc(it)
    csort(items.begin(), items.end())


# ---------------------------------------------------------------------------
# ladder / cycle transfer DP


def _ladder_sweep(int family, int m, int k, int cap, bint canon,
                  bint want_witness, lb_stop=None, only_init=None):
    cdef int full = (1 << k) - 1
    cdef int k2 = 2 * k, k3 = 3 * k, k4 = 4 * k, k5 = 5 * k
    cdef int denom = k + 3
    cdef uint64_t lo_mask = ((<uint64_t> 1) << k2) - 1
    cdef int64_t nodes = 0
    cdef int best_w = -1
    cdef int best_init = -1
    cdef int stop_at = -1 if lb_stop is None else <int> lb_stop
    cdef int the_init = -1 if only_init is None else <int> only_init

    sup_py = superset_lists(k)
    cdef vector[vector[int]] sup
    sup.resize(len(sup_py))
    cdef int i, j
    for i in range(len(sup_py)):
        for j in sup_py[i]:
            sup[i].push_back(j)
    cdef vector[vector[int]] wlb
    wlb.resize(m + 1)
    for i, row in enumerate(window_lb_table(False, k, m)):
        for j in row:
            wlb[i].push_back(j)
    cdef int bmax = 4 * k

    cdef int rlo[4]
    cdef int rhi[4]
    cdef int nr, au, av, w0, ecap, r_after, cbu, cbv, w1, bnd
    cdef int du, dv, ru, rv, mu, mv, nu, nv, cu, cv, w2, du2, dv2, min_nv
    cdef int not_mu, not_mv, w, col, pi, init_idx
    cdef int64_t rest
    cdef int st[6]
    cdef uint64_t key, key2, cur
    cdef bint ok
    cdef FrontMap fronts, new_fronts
    cdef vector[KeyW] items
    cdef unordered_map[uint64_t, uint64_t] pcol
    cdef vector[unordered_map[uint64_t, uint64_t]] parents
    cdef size_t si, bi, vi

    inits = ladder_inits(k)
    for init_idx in range(len(inits)):
        if the_init >= 0 and init_idx != the_init:
            continue
        init = inits[init_idx]
        au = init[0]
        av = init[1]
        ranges = init[2]
        nr = len(ranges)
        for i in range(nr):
            rlo[i] = ranges[i][0]
            rhi[i] = ranges[i][1]
        if want_witness:
            ecap = cap
        else:
            ecap = cap if best_w < 0 else best_w - 1
        w0 = popcount64(au) + popcount64(av)
        bnd = 2 * w0
        if bnd > bmax:
            bnd = bmax
        if w0 + wlb[m - 1][bnd] > ecap:
            continue
        nodes += 1
        fronts.clear()
        parents.clear()
        r_after = m - 2
        for bi in range(sup[0].size()):
            nu = sup[0][bi]
            cbu = popcount64(nu)
            bnd = cbu + w0
            if bnd > bmax:
                bnd = bmax
            if w0 + cbu + wlb[r_after][bnd] > ecap:
                break
            for vi in range(sup[0].size()):
                nv = sup[0][vi]
                cbv = popcount64(nv)
                w1 = w0 + cbu + cbv
                bnd = cbu + cbv + w0
                if bnd > bmax:
                    bnd = bmax
                if w1 + wlb[r_after][bnd] > ecap:
                    break
                du = full & ~(au | nv) if nu == 0 else 0
                dv = full & ~(av | nu) if nv == 0 else 0
                ru = full & ~(av | nu) if au == 0 else 0
                rv = full & ~(au | nv) if av == 0 else 0
                st[0] = nu; st[1] = nv; st[2] = du
                st[3] = dv; st[4] = ru; st[5] = rv
                if canon:
                    key = canon_pack(st, 6, nr, rlo, rhi, k)
                else:
                    key = (<uint64_t> st[0]) | (<uint64_t> st[1]) << k \
                        | (<uint64_t> st[2]) << k2 | (<uint64_t> st[3]) << k3 \
                        | (<uint64_t> st[4]) << k4 | (<uint64_t> st[5]) << k5
                _front_insert(fronts, key & lo_mask, key >> k2, w1, key)

        _front_items(fronts, items)
        for col in range(2, m):
            r_after = m - 1 - col
            new_fronts.clear()
            pcol.clear()
            for si in range(items.size()):
                key = items[si].first
                w = items[si].second
                nodes += 1
                mu = <int> (key & <uint64_t> full)
                mv = <int> ((key >> k) & <uint64_t> full)
                du = <int> ((key >> k2) & <uint64_t> full)
                dv = <int> ((key >> k3) & <uint64_t> full)
                ru = <int> ((key >> k4) & <uint64_t> full)
                rv = <int> ((key >> k5) & <uint64_t> full)
                min_nv = popcount64(dv)
                not_mu = full & ~mu
                not_mv = full & ~mv
                for bi in range(sup[du].size()):
                    nu = sup[du][bi]
                    cu = popcount64(nu)
                    bnd = cu + min_nv + w0
                    if bnd > bmax:
                        bnd = bmax
                    if w + cu + min_nv + wlb[r_after][bnd] > ecap:
                        break
                    for vi in range(sup[dv].size()):
                        nv = sup[dv][vi]
                        cv = popcount64(nv)
                        w2 = w + cu + cv
                        bnd = cu + cv + w0
                        if bnd > bmax:
                            bnd = bmax
                        if w2 + wlb[r_after][bnd] > ecap:
                            break
                        du2 = not_mu & ~nv if nu == 0 else 0
                        dv2 = not_mv & ~nu if nv == 0 else 0
                        st[0] = nu; st[1] = nv; st[2] = du2
                        st[3] = dv2; st[4] = ru; st[5] = rv
                        if canon:
                            key2 = canon_pack(st, 6, nr, rlo, rhi, k)
                        else:
                            key2 = (<uint64_t> st[0]) | (<uint64_t> st[1]) << k \
                                | (<uint64_t> st[2]) << k2 | (<uint64_t> st[3]) << k3 \
                                | (<uint64_t> st[4]) << k4 | (<uint64_t> st[5]) << k5
                        if _front_insert(new_fronts, key2 & lo_mask,
                                         key2 >> k2, w2, key2):
                            if want_witness:
                                pcol[key2] = key
            fronts.swap(new_fronts)
            _front_items(fronts, items)
            if want_witness:
                parents.push_back(pcol)
            if items.size() == 0:
                break
        if items.size() == 0:
            continue

        for si in range(items.size()):
            key = items[si].first
            w = items[si].second
            if w > ecap:
                continue
            mu = <int> (key & <uint64_t> full)
            mv = <int> ((key >> k) & <uint64_t> full)
            du = <int> ((key >> k2) & <uint64_t> full)
            dv = <int> ((key >> k3) & <uint64_t> full)
            ru = <int> ((key >> k4) & <uint64_t> full)
            rv = <int> ((key >> k5) & <uint64_t> full)
            if family == 1:  # prism closure
                ok = (du & ~au) == 0 and (dv & ~av) == 0 \
                    and (ru & ~mu) == 0 and (rv & ~mv) == 0
            else:  # mobius closure
                ok = (du & ~av) == 0 and (dv & ~au) == 0 \
                    and (ru & ~mv) == 0 and (rv & ~mu) == 0
            if not ok:
                continue
            if best_w < 0 or w < best_w:
                best_w = w
                best_init = init_idx
                if want_witness:
                    cols = []
                    cur = key
                    for pi in range(<int> parents.size() - 1, -1, -1):
                        cols.append((<int> (cur & <uint64_t> full),
                                     <int> ((cur >> k) & <uint64_t> full)))
                        cur = parents[pi][cur]
                    cols.append((<int> (cur & <uint64_t> full),
                                 <int> ((cur >> k) & <uint64_t> full)))
                    cols.append((au, av))
                    cols.reverse()
                    return w, [c[0] for c in cols] + [c[1] for c in cols], \
                        nodes, init_idx
        if not want_witness and stop_at >= 0 and best_w == stop_at:
            break
    return (best_w if best_w >= 0 else None), None, nodes, best_init


def _cycle_sweep(int m, int k, int cap, bint canon, bint want_witness,
                 lb_stop=None, only_init=None):
    cdef int full = (1 << k) - 1
    cdef int k2 = 2 * k
    cdef int denom = k + 2
    cdef int64_t nodes = 0
    cdef int best_w = -1
    cdef int best_init = -1
    cdef int stop_at = -1 if lb_stop is None else <int> lb_stop
    cdef int the_init = -1 if only_init is None else <int> only_init

    sup_py = superset_lists(k)
    cdef vector[vector[int]] sup
    sup.resize(len(sup_py))
    cdef int i, j
    for i in range(len(sup_py)):
        for j in sup_py[i]:
            sup[i].push_back(j)
    cdef vector[vector[int]] wlb
    wlb.resize(m + 1)
    for i, row in enumerate(window_lb_table(True, k, m)):
        for j in row:
            wlb[i].push_back(j)
    cdef int bmax = 2 * k

    cdef int rlo[4]
    cdef int rhi[4]
    cdef int nr, a, w0, ecap, r_after, cb, w1, dem, r0, mc, nb, w2, dem2, w, bnd
    cdef int not_mc, col, pi, init_idx
    cdef int64_t rest
    cdef int st[3]
    cdef uint64_t key, key2, cur
    cdef FrontMap fronts, new_fronts
    cdef vector[KeyW] items
    cdef unordered_map[uint64_t, uint64_t] pcol
    cdef vector[unordered_map[uint64_t, uint64_t]] parents
    cdef size_t si, bi

    inits = cycle_inits(k)
    for init_idx in range(len(inits)):
        if the_init >= 0 and init_idx != the_init:
            continue
        init = inits[init_idx]
        a = init[0]
        ranges = init[1]
        nr = len(ranges)
        for i in range(nr):
            rlo[i] = ranges[i][0]
            rhi[i] = ranges[i][1]
        if want_witness:
            ecap = cap
        else:
            ecap = cap if best_w < 0 else best_w - 1
        w0 = popcount64(a)
        bnd = 2 * w0
        if bnd > bmax:
            bnd = bmax
        if w0 + wlb[m - 1][bnd] > ecap:
            continue
        nodes += 1
        fronts.clear()
        parents.clear()
        r_after = m - 2
        for bi in range(sup[0].size()):
            nb = sup[0][bi]
            cb = popcount64(nb)
            w1 = w0 + cb
            bnd = cb + w0
            if bnd > bmax:
                bnd = bmax
            if w1 + wlb[r_after][bnd] > ecap:
                break
            dem = full & ~a if nb == 0 else 0
            r0 = full & ~nb if a == 0 else 0
            st[0] = nb; st[1] = dem; st[2] = r0
            if canon:
                key = canon_pack(st, 3, nr, rlo, rhi, k)
            else:
                key = (<uint64_t> st[0]) | (<uint64_t> st[1]) << k \
                    | (<uint64_t> st[2]) << k2
            _front_insert(fronts, key & <uint64_t> full, key >> k, w1, key)

        _front_items(fronts, items)
        for col in range(2, m):
            r_after = m - 1 - col
            new_fronts.clear()
            pcol.clear()
            for si in range(items.size()):
                key = items[si].first
                w = items[si].second
                nodes += 1
                mc = <int> (key & <uint64_t> full)
                dem = <int> ((key >> k) & <uint64_t> full)
                r0 = <int> ((key >> k2) & <uint64_t> full)
                not_mc = full & ~mc
                for bi in range(sup[dem].size()):
                    nb = sup[dem][bi]
                    cb = popcount64(nb)
                    w2 = w + cb
                    bnd = cb + w0
                    if bnd > bmax:
                        bnd = bmax
                    if w2 + wlb[r_after][bnd] > ecap:
                        break
                    dem2 = not_mc if nb == 0 else 0
                    st[0] = nb; st[1] = dem2; st[2] = r0
                    if canon:
                        key2 = canon_pack(st, 3, nr, rlo, rhi, k)
                    else:
                        key2 = (<uint64_t> st[0]) | (<uint64_t> st[1]) << k \
                            | (<uint64_t> st[2]) << k2
                    if _front_insert(new_fronts, key2 & <uint64_t> full,
                                     key2 >> k, w2, key2):
                        if want_witness:
                            pcol[key2] = key
            fronts.swap(new_fronts)
            _front_items(fronts, items)
            if want_witness:
                parents.push_back(pcol)
            if items.size() == 0:
                break
        if items.size() == 0:
            continue

        for si in range(items.size()):
            key = items[si].first
            w = items[si].second
            if w > ecap:
                continue
            mc = <int> (key & <uint64_t> full)
            dem = <int> ((key >> k) & <uint64_t> full)
            r0 = <int> ((key >> k2) & <uint64_t> full)
            if (dem & ~a) != 0 or (r0 & ~mc) != 0:
                continue
            if best_w < 0 or w < best_w:
                best_w = w
                best_init = init_idx
                if want_witness:
                    out = []
                    cur = key
                    for pi in range(<int> parents.size() - 1, -1, -1):
                        out.append(<int> (cur & <uint64_t> full))
                        cur = parents[pi][cur]
                    out.append(<int> (cur & <uint64_t> full))
                    out.append(a)
                    out.reverse()
                    return w, out, nodes, init_idx
        if not want_witness and stop_at >= 0 and best_w == stop_at:
            break
    return (best_w if best_w >= 0 else None), None, nodes, best_init


def ladder_solve(int family, int m, int k):
    """Mirror of the pure engine's ladder_solve; see _engine for the contract."""
    cdef int n, d
    if family == CYCLE:
        n, d = m, 2
    else:
        n, d = 2 * m, 3
    lb = n if k >= 2 * d else (k * n + 2 * d - 1) // (2 * d)
    if lb >= n:
        return n, [1] * n, 0
    nodes = 0
    value = None
    init_idx = -1
    cap = lb
    while cap < n:
        if family == CYCLE:
            value, _, used, init_idx = _cycle_sweep(m, k, cap, True, False,
                                                    lb_stop=lb)
        else:
            value, _, used, init_idx = _ladder_sweep(family, m, k, cap, True,
                                                     False, lb_stop=lb)
        nodes += used
        if value is not None:
            break
        cap += 1
    if value is None:
        return n, [1] * n, nodes
    if family == CYCLE:
        _, masks, used, _ = _cycle_sweep(m, k, value, False, True,
                                         only_init=init_idx)
    else:
        _, masks, used, _ = _ladder_sweep(family, m, k, value, False, True,
                                          only_init=init_idx)
    nodes += used
    return value, masks, nodes


# ---------------------------------------------------------------------------
# branch and bound for gamma_rk


cdef struct BBGlobals:
    int n
    int k
    int full
    int dmax
    int lb_stop
    int lex_target        # -1 when optimizing
    int best_w
    int64_t nodes
    int64_t max_nodes     # -1 when unlimited
    double deadline       # -1.0 when none
    bint aborted
    bint done


cdef void bb_dfs(BBGlobals* S, int pos, int w, int demand, int border,
                 int* masks, int* cov, int* unn, int* miss,
                 int* order, int* nbr_off, int* nbr_dat,
                 int* cand, int n_cand, int* best_masks, int* saved):
    cdef int v, s, ci, w2, d2, b2, u, i, old, newm, miss_v, rem, rem2, gap
    cdef int remaining, off0, off1, processed, bound
    cdef bint ok
    S.nodes += 1
    if S.max_nodes >= 0 and S.nodes > S.max_nodes:
        S.aborted = True
        return
    if S.deadline >= 0 and S.nodes % 256 == 0:
        if _time.monotonic() > S.deadline:
            S.aborted = True
            return
    if pos == S.n:
        if S.lex_target >= 0:
            S.best_w = w
            for i in range(S.n):
                best_masks[i] = masks[i]
            S.done = True
        elif w < S.best_w:
            S.best_w = w
            for i in range(S.n):
                best_masks[i] = masks[i]
            if w <= S.lb_stop:
                S.done = True
        return
    v = order[pos]
    remaining = S.n - pos - 1
    off0 = nbr_off[v]
    off1 = nbr_off[v + 1]
    for ci in range(n_cand):
        s = cand[ci]
        w2 = w + popcount64(s)
        if S.lex_target < 0:
            if w2 >= S.best_w:
                break
        elif w2 > S.lex_target:
            break
        if s == 0 and unn[v] == 0 and cov[v] != S.full:
            continue
        d2 = demand
        b2 = border + popcount64(s) * unn[v]
        if s == 0:
            miss_v = S.full & ~cov[v]
            miss[v] = miss_v
            d2 += popcount64(miss_v)
        else:
            miss[v] = 0
        ok = True
        processed = off0
        for i in range(off0, off1):
            u = nbr_dat[i]
            unn[u] -= 1
            processed = i + 1
            if masks[u] == -1:
                saved[i - off0] = cov[u]
                cov[u] |= s
            elif masks[u] == 0:
                old = miss[u]
                saved[i - off0] = old
                newm = old & ~s
                if newm != old:
                    miss[u] = newm
                    d2 -= popcount64(old) - popcount64(newm)
                if unn[u] == 0 and newm != 0:
                    ok = False
                    break
            else:
                b2 -= popcount64(masks[u])
        if ok:
            rem = <int> ceil_pos(d2, S.dmax) if d2 > 0 else 0
            gap = S.k * remaining - b2
            if gap > 0:
                rem2 = <int> ceil_pos(gap, S.dmax + S.k)
                if rem2 > rem:
                    rem = rem2
            bound = w2 + rem
            if (S.lex_target < 0 and bound < S.best_w) or \
                    (S.lex_target >= 0 and bound <= S.lex_target):
                masks[v] = s
                bb_dfs(S, pos + 1, w2, d2, b2, masks, cov, unn, miss,
                       order, nbr_off, nbr_dat, cand, n_cand, best_masks,
                       saved + (off1 - off0))
                masks[v] = -1
        for i in range(off0, processed):
            u = nbr_dat[i]
            unn[u] += 1
            if masks[u] == -1:
                cov[u] = saved[i - off0]
            elif masks[u] == 0:
                miss[u] = saved[i - off0]
        miss[v] = 0
        if S.done or S.aborted:
            return


def gamma_bb(int n, int k, nbrs, order, int lb_stop, max_nodes=None,
             deadline=None, lex_target=None):
    """Mirror of _engine.gamma_bb; see there for the contract."""
    cdef BBGlobals S
    S.n = n
    S.k = k
    S.full = (1 << k) - 1
    S.lb_stop = lb_stop
    S.lex_target = -1 if lex_target is None else <int> lex_target
    S.nodes = 0
    S.max_nodes = -1 if max_nodes is None else <int64_t> max_nodes
    S.deadline = -1.0 if deadline is None else <double> deadline
    S.aborted = False
    S.done = False

    cdef vector[int] masks_v, cov_v, unn_v, miss_v, order_v, off_v, dat_v
    cdef vector[int] cand_v, best_v, saved_v
    cdef int v, u, total
    masks_v.assign(n, -1)
    cov_v.assign(n, 0)
    unn_v.assign(n, 0)
    miss_v.assign(n, 0)
    total = 0
    off_v.push_back(0)
    for v in range(n):
        unn_v[v] = len(nbrs[v])
        total += len(nbrs[v])
    for v in range(n):
        for u in nbrs[v]:
            dat_v.push_back(u)
        off_v.push_back(<int> dat_v.size())
    for v in order:
        order_v.push_back(v)
    for s in mask_order(k):
        cand_v.push_back(s)
    saved_v.assign(total + 64, 0)

    S.dmax = 1
    for v in range(n):
        if unn_v[v] > S.dmax:
            S.dmax = unn_v[v]

    if lex_target is None:
        S.best_w = n
        best_v.assign(n, 1)
        if S.best_w <= lb_stop:
            return S.best_w, [best_v[v] for v in range(n)], 0, True
    else:
        S.best_w = S.lex_target + 1
        best_v.assign(n, -1)

    bb_dfs(&S, 0, 0, 0, 0,
           masks_v.data(), cov_v.data(), unn_v.data(), miss_v.data(),
           order_v.data(), off_v.data(), dat_v.data(),
           cand_v.data(), <int> cand_v.size(), best_v.data(), saved_v.data())
    return S.best_w, [best_v[v] for v in range(n)], S.nodes, not S.aborted


# ---------------------------------------------------------------------------
# minimum dominating set


cdef struct DSGlobals:
    int n
    uint64_t all_mask
    int best_size
    uint64_t best_set
    int64_t nodes
    int64_t max_nodes
    double deadline
    bint aborted
    int max_closed


cdef void ds_dfs(DSGlobals* S, uint64_t covered, int count, uint64_t picked,
                 uint64_t banned, uint64_t* closed):
    cdef uint64_t uncov, used, u, doms, d, pick_doms, newly
    cdef int cnt, other, rem, v, pick_v, pick_pc, pc, w
    S.nodes += 1
    if S.max_nodes >= 0 and S.nodes > S.max_nodes:
        S.aborted = True
        return
    if S.deadline >= 0 and S.nodes % 256 == 0:
        if _time.monotonic() > S.deadline:
            S.aborted = True
            return
    if covered == S.all_mask:
        if count < S.best_size:
            S.best_size = count
            S.best_set = picked
        return
    uncov = S.all_mask & ~covered
    used = 0
    cnt = 0
    u = uncov
    while u:
        v = ctz64(u)
        if (closed[v] & used) == 0:
            used |= closed[v]
            cnt += 1
        u &= u - 1
    other = <int> ceil_pos(popcount64(uncov), S.max_closed)
    rem = cnt if cnt > other else other
    if count + rem >= S.best_size:
        return
    pick_v = -1
    pick_pc = 0
    pick_doms = 0
    u = uncov
    while u:
        v = ctz64(u)
        doms = closed[v] & ~banned
        if doms == 0:
            return
        pc = popcount64(doms)
        if pick_v < 0 or pc < pick_pc:
            pick_v = v
            pick_pc = pc
            pick_doms = doms
        u &= u - 1
    newly = 0
    d = pick_doms
    while d:
        w = ctz64(d)
        ds_dfs(S, covered | closed[w], count + 1, picked | ((<uint64_t> 1) << w),
               banned | newly, closed)
        if S.aborted:
            return
        newly |= (<uint64_t> 1) << w
        d &= d - 1


def domset_bb(int n, closed, max_nodes=None, deadline=None):
    """Mirror of _engine.domset_bb; see there for the contract."""
    if n == 0:
        return 0, [], 0, True
    cdef DSGlobals S
    S.n = n
    S.all_mask = ((<uint64_t> 1) << n) - 1
    S.nodes = 0
    S.max_nodes = -1 if max_nodes is None else <int64_t> max_nodes
    S.deadline = -1.0 if deadline is None else <double> deadline
    S.aborted = False

    cdef vector[uint64_t] closed_v
    cdef int v, best_v_idx, best_gain, gain, size
    cdef uint64_t cov, chosen
    for v in range(n):
        closed_v.push_back(<uint64_t> closed[v])

    cov = 0
    chosen = 0
    size = 0
    while cov != S.all_mask:
        best_v_idx = -1
        best_gain = -1
        for v in range(n):
            gain = popcount64(closed_v[v] & ~cov)
            if gain > best_gain:
                best_v_idx = v
                best_gain = gain
        cov |= closed_v[best_v_idx]
        chosen |= (<uint64_t> 1) << best_v_idx
        size += 1
    S.best_size = size
    S.best_set = chosen
    S.max_closed = 1
    for v in range(n):
        if popcount64(closed_v[v]) > S.max_closed:
            S.max_closed = popcount64(closed_v[v])

    ds_dfs(&S, 0, 0, 0, 0, closed_v.data())
    members = [v for v in range(n) if (S.best_set >> v) & 1]
    return S.best_size, members, S.nodes, not S.aborted
