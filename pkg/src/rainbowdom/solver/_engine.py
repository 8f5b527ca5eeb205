"""Pure-Python solver engine.

Three exact kernels, all deterministic:

* a transfer dynamic program over ladder columns (or cycle vertices) whose
  state records the current column's color masks plus the colors still owed
  to uncolored vertices, with the seam closed by enumerating orbit
  representatives of the first column;
* a branch-and-bound search assigning color subsets vertex by vertex;
* a bitset branch-and-bound for minimum dominating sets.

The compiled extension mirrors these routines exactly; enumeration orders
come from _common so both engines return identical results.
"""

from __future__ import annotations

import time

from ._common import (
    CYCLE,
    PRISM,
    canon_state,
    cycle_inits,
    ladder_inits,
    mask_order,
    superset_lists,
    window_lb_table,
)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# ladder / cycle transfer DP


def _front_insert(fronts, lo, packed, w, key):
    """Insert a state into its (column masks) bucket unless Pareto-dominated.

    A state is dominated by a bucket-mate whose demand fields are all
    subsets and whose weight is no larger; dominated entries can never lead
    to a better completion, so dropping them preserves exactness (closure
    tests are monotone in the demand fields).  Returns True when inserted.
    """
    bucket = fronts.get(lo)
    if bucket is None:
        fronts[lo] = [(packed, w, key)]
        return True
    for p, pw, _ in bucket:
        if pw <= w and p & ~packed == 0:
            return False
    keep = [e for e in bucket if not (w <= e[1] and packed & ~e[0] == 0)]
    keep.append((packed, w, key))
    fronts[lo] = keep
    return True


def _front_items(fronts):
    items = []
    for bucket in fronts.values():
        for _, w, key in bucket:
            items.append((key, w))
    items.sort()
    return items


def _ladder_sweep(family, m, k, cap, canon, want_witness, lb_stop=None,
                  only_init=None):
    """One capped sweep.  Returns (best, witness, nodes, best_init_index).

    In witness mode (usually restricted to the init that achieved the
    optimum) the first closure found is returned immediately.  In value mode
    all first-column representatives are scanned with a shrinking effective
    cap.
    """
    full = (1 << k) - 1
    sup = superset_lists(k)
    wlb = window_lb_table(False, k, m)
    bmax = 4 * k
    k2, k3, k4, k5 = 2 * k, 3 * k, 4 * k, 5 * k
    lo_mask = (1 << k2) - 1
    nodes = 0
    best_w = None
    best_init = -1

    for init_idx, (au, av, ranges) in enumerate(ladder_inits(k)):
        if only_init is not None and init_idx != only_init:
            continue
        if want_witness:
            ecap = cap
        else:
            ecap = cap if best_w is None else best_w - 1
        w0 = au.bit_count() + av.bit_count()
        if w0 + wlb[m - 1][min(2 * w0, bmax)] > ecap:
            continue
        nodes += 1
        fronts = {}
        parents = []
        r_after = m - 2
        for bu in sup[0]:
            cbu = bu.bit_count()
            if w0 + cbu + wlb[r_after][min(cbu + w0, bmax)] > ecap:
                break
            for bv in sup[0]:
                cbv = bv.bit_count()
                w1 = w0 + cbu + cbv
                if w1 + wlb[r_after][min(cbu + cbv + w0, bmax)] > ecap:
                    break
                du = full & ~(au | bv) if bu == 0 else 0
                dv = full & ~(av | bu) if bv == 0 else 0
                ru = full & ~(av | bu) if au == 0 else 0
                rv = full & ~(au | bv) if av == 0 else 0
                st = [bu, bv, du, dv, ru, rv]
                if canon:
                    st = canon_state(st, ranges)
                key = (
                    st[0] | st[1] << k | st[2] << k2 | st[3] << k3
                    | st[4] << k4 | st[5] << k5
                )
                _front_insert(fronts, key & lo_mask, key >> k2, w1, key)

        items = _front_items(fronts)
        for col in range(2, m):
            r_after = m - 1 - col
            new_fronts = {}
            pcol = {} if want_witness else None
            for key, w in items:
                nodes += 1
                mu = key & full
                mv = (key >> k) & full
                du = (key >> k2) & full
                dv = (key >> k3) & full
                ru = (key >> k4) & full
                rv = (key >> k5) & full
                min_nv = dv.bit_count()
                not_mu = full & ~mu
                not_mv = full & ~mv
                for nu in sup[du]:
                    cu = nu.bit_count()
                    if w + cu + min_nv + wlb[r_after][min(cu + min_nv + w0, bmax)] > ecap:
                        break
                    for nv in sup[dv]:
                        cv = nv.bit_count()
                        w2 = w + cu + cv
                        if w2 + wlb[r_after][min(cu + cv + w0, bmax)] > ecap:
                            break
                        du2 = not_mu & ~nv if nu == 0 else 0
                        dv2 = not_mv & ~nu if nv == 0 else 0
                        if canon:
                            st = canon_state([nu, nv, du2, dv2, ru, rv], ranges)
                            key2 = (
                                st[0] | st[1] << k | st[2] << k2 | st[3] << k3
                                | st[4] << k4 | st[5] << k5
                            )
                        else:
                            key2 = (
                                nu | nv << k | du2 << k2 | dv2 << k3
                                | ru << k4 | rv << k5
                            )
                        if _front_insert(new_fronts, key2 & lo_mask,
                                         key2 >> k2, w2, key2):
                            if want_witness:
                                pcol[key2] = key
            items = _front_items(new_fronts)
            if want_witness:
                parents.append(pcol)
            if not items:
                break
        if not items:
            continue

        for key, w in items:
            if w > ecap:
                continue
            mu = key & full
            mv = (key >> k) & full
            du = (key >> k2) & full
            dv = (key >> k3) & full
            ru = (key >> k4) & full
            rv = (key >> k5) & full
            if family == PRISM:
                ok = (du & ~au) == 0 and (dv & ~av) == 0 \
                    and (ru & ~mu) == 0 and (rv & ~mv) == 0
            else:
                ok = (du & ~av) == 0 and (dv & ~au) == 0 \
                    and (ru & ~mv) == 0 and (rv & ~mu) == 0
            if not ok:
                continue
            if best_w is None or w < best_w:
                best_w = w
                best_init = init_idx
                if want_witness:
                    cols = []
                    cur = key
                    for pcol in reversed(parents):
                        cols.append((cur & full, (cur >> k) & full))
                        cur = pcol[cur]
                    cols.append((cur & full, (cur >> k) & full))
                    cols.append((au, av))
                    cols.reverse()
                    masks = [c[0] for c in cols] + [c[1] for c in cols]
                    return w, masks, nodes, init_idx
        if not want_witness and lb_stop is not None and best_w == lb_stop:
            break
    return best_w, None, nodes, best_init


def _cycle_sweep(m, k, cap, canon, want_witness, lb_stop=None, only_init=None):
    full = (1 << k) - 1
    sup = superset_lists(k)
    wlb = window_lb_table(True, k, m)
    bmax = 2 * k
    k2 = 2 * k
    nodes = 0
    best_w = None
    best_init = -1

    for init_idx, (a, ranges) in enumerate(cycle_inits(k)):
        if only_init is not None and init_idx != only_init:
            continue
        if want_witness:
            ecap = cap
        else:
            ecap = cap if best_w is None else best_w - 1
        w0 = a.bit_count()
        if w0 + wlb[m - 1][min(2 * w0, bmax)] > ecap:
            continue
        nodes += 1
        fronts = {}
        parents = []
        r_after = m - 2
        for b in sup[0]:
            cb = b.bit_count()
            w1 = w0 + cb
            if w1 + wlb[r_after][min(cb + w0, bmax)] > ecap:
                break
            dem = full & ~a if b == 0 else 0
            r0 = full & ~b if a == 0 else 0
            st = [b, dem, r0]
            if canon:
                st = canon_state(st, ranges)
            key = st[0] | st[1] << k | st[2] << k2
            _front_insert(fronts, key & full, key >> k, w1, key)

        items = _front_items(fronts)
        for col in range(2, m):
            r_after = m - 1 - col
            new_fronts = {}
            pcol = {} if want_witness else None
            for key, w in items:
                nodes += 1
                mc = key & full
                dem = (key >> k) & full
                r0 = (key >> k2) & full
                not_mc = full & ~mc
                for nb in sup[dem]:
                    cb = nb.bit_count()
                    w2 = w + cb
                    if w2 + wlb[r_after][min(cb + w0, bmax)] > ecap:
                        break
                    dem2 = not_mc if nb == 0 else 0
                    if canon:
                        st = canon_state([nb, dem2, r0], ranges)
                        key2 = st[0] | st[1] << k | st[2] << k2
                    else:
                        key2 = nb | dem2 << k | r0 << k2
                    if _front_insert(new_fronts, key2 & full, key2 >> k,
                                     w2, key2):
                        if want_witness:
                            pcol[key2] = key
            items = _front_items(new_fronts)
            if want_witness:
                parents.append(pcol)
            if not items:
                break
        if not items:
            continue

        for key, w in items:
            if w > ecap:
                continue
            mc = key & full
            dem = (key >> k) & full
            r0 = (key >> k2) & full
            if (dem & ~a) != 0 or (r0 & ~mc) != 0:
                continue
            if best_w is None or w < best_w:
                best_w = w
                best_init = init_idx
                if want_witness:
                    out = []
                    cur = key
                    for pcol in reversed(parents):
                        out.append(cur & full)
                        cur = pcol[cur]
                    out.append(cur & full)
                    out.append(a)
                    out.reverse()
                    return w, out, nodes, init_idx
        if not want_witness and lb_stop is not None and best_w == lb_stop:
            break
    return best_w, None, nodes, best_init


def ladder_solve(family: int, m: int, k: int):
    """Exact minimum weight for a cycle, prism or Moebius ladder.

    Iterative deepening from the regular-graph lower bound: a capped sweep
    returns the true minimum whenever the cap is at or above it, so the
    first cap that yields a value is exact.  The all-{1} coloring is a
    valid weight-n fallback for every family and k, so when the lower bound
    already equals n the optimum is n with that witness and no sweep is
    needed.  A second sweep restricted to the successful first column
    reconstructs a witness.

    Returns (value, per-vertex masks, nodes).
    """
    if family == CYCLE:
        n, d = m, 2
    else:
        n, d = 2 * m, 3
    lb = n if k >= 2 * d else _ceil_div(k * n, 2 * d)
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
# general branch and bound for gamma_rk


def gamma_bb(n, k, nbrs, order, lb_stop, max_nodes=None, deadline=None,
             lex_target=None):
    """Exact search over per-vertex color subsets.

    Vertices are assigned along `order`; candidate subsets are tried in
    (cardinality, value) order.  Pruning uses the outstanding rainbow demand
    of already-empty vertices divided by the maximum degree, a counting
    bound on the unassigned suffix, and the incumbent.  With `lex_target`
    set, returns the lexicographically first assignment of weight at most
    the target instead (used for canonical witnesses).

    Returns (value, masks, nodes, optimal).
    """
    full = (1 << k) - 1
    cand = mask_order(k)
    dmax = max((len(nbrs[v]) for v in range(n)), default=0) or 1
    masks = [-1] * n
    cov = [0] * n
    unn = [len(nbrs[v]) for v in range(n)]
    miss = [0] * n

    state = {
        "best_w": n if lex_target is None else lex_target + 1,
        "best_masks": list(masks),
        "nodes": 0,
        "aborted": False,
        "done": False,
    }
    if lex_target is None:
        state["best_masks"] = [1] * n
        if state["best_w"] <= lb_stop:
            return state["best_w"], state["best_masks"], 0, True

    def dfs(pos, w, demand, border):
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            state["aborted"] = True
            return
        if deadline is not None and state["nodes"] % 256 == 0 \
                and time.monotonic() > deadline:
            state["aborted"] = True
            return
        if pos == n:
            if lex_target is not None:
                state["best_w"] = w
                state["best_masks"] = list(masks)
                state["done"] = True
            elif w < state["best_w"]:
                state["best_w"] = w
                state["best_masks"] = list(masks)
                if w <= lb_stop:
                    state["done"] = True
            return
        v = order[pos]
        remaining = n - pos - 1
        for s in cand:
            w2 = w + s.bit_count()
            if lex_target is None:
                if w2 >= state["best_w"]:
                    break
            elif w2 > lex_target:
                break
            if s == 0 and unn[v] == 0 and cov[v] != full:
                continue
            d2 = demand
            b2 = border + s.bit_count() * unn[v]
            if s == 0:
                miss_v = full & ~cov[v]
                miss[v] = miss_v
                d2 += miss_v.bit_count()
            else:
                miss[v] = 0
            ok = True
            touched = []
            for u in nbrs[v]:
                unn[u] -= 1
                mu = masks[u]
                if mu == -1:
                    touched.append((u, cov[u], -1))
                    cov[u] |= s
                elif mu == 0:
                    old = miss[u]
                    new = old & ~s
                    touched.append((u, old, 0))
                    if new != old:
                        miss[u] = new
                        d2 -= old.bit_count() - new.bit_count()
                    if unn[u] == 0 and new:
                        ok = False
                        break
                else:
                    touched.append((u, 0, 1))
                    b2 -= mu.bit_count()
            if ok:
                rem = _ceil_div(d2, dmax) if d2 > 0 else 0
                gap = k * remaining - b2
                if gap > 0:
                    rem2 = _ceil_div(gap, dmax + k)
                    if rem2 > rem:
                        rem = rem2
                bound = w2 + rem
                if (lex_target is None and bound < state["best_w"]) or \
                        (lex_target is not None and bound <= lex_target):
                    masks[v] = s
                    dfs(pos + 1, w2, d2, b2)
                    masks[v] = -1
            for u, saved, kind in reversed(touched):
                unn[u] += 1
                if kind == -1:
                    cov[u] = saved
                elif kind == 0:
                    miss[u] = saved
            miss[v] = 0
            if state["done"] or state["aborted"]:
                return

    dfs(0, 0, 0, 0)
    optimal = not state["aborted"]
    return state["best_w"], state["best_masks"], state["nodes"], optimal


# ---------------------------------------------------------------------------
# minimum dominating set


def domset_bb(n, closed, max_nodes=None, deadline=None):
    """Branch and bound for a minimum dominating set over bitset neighborhoods.

    Greedy incumbent first; branching covers the uncovered vertex with the
    fewest available dominators, excluding earlier siblings on the way down.

    Returns (size, chosen vertex list, nodes, optimal).
    """
    all_mask = (1 << n) - 1
    if n == 0:
        return 0, [], 0, True
    cov = 0
    chosen = 0
    size = 0
    while cov != all_mask:
        best_v, best_gain = -1, -1
        for v in range(n):
            gain = (closed[v] & ~cov).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        cov |= closed[best_v]
        chosen |= 1 << best_v
        size += 1
    max_closed = max(closed[v].bit_count() for v in range(n))

    state = {
        "best_size": size,
        "best_set": chosen,
        "nodes": 0,
        "aborted": False,
    }

    def packing_lb(uncov):
        used = 0
        cnt = 0
        u = uncov
        while u:
            v = (u & -u).bit_length() - 1
            if closed[v] & used == 0:
                used |= closed[v]
                cnt += 1
            u &= u - 1
        return cnt

    def dfs(covered, count, picked, banned):
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            state["aborted"] = True
            return
        if deadline is not None and state["nodes"] % 256 == 0 \
                and time.monotonic() > deadline:
            state["aborted"] = True
            return
        if covered == all_mask:
            if count < state["best_size"]:
                state["best_size"] = count
                state["best_set"] = picked
            return
        uncov = all_mask & ~covered
        rem = packing_lb(uncov)
        other = _ceil_div(uncov.bit_count(), max_closed)
        if other > rem:
            rem = other
        if count + rem >= state["best_size"]:
            return
        pick_v, pick_doms = -1, None
        u = uncov
        while u:
            v = (u & -u).bit_length() - 1
            doms = closed[v] & ~banned
            if doms == 0:
                return
            if pick_doms is None or doms.bit_count() < pick_doms.bit_count():
                pick_v, pick_doms = v, doms
            u &= u - 1
        newly_banned = 0
        d = pick_doms
        while d:
            w = (d & -d).bit_length() - 1
            dfs(covered | closed[w], count + 1, picked | (1 << w),
                banned | newly_banned)
            if state["aborted"]:
                return
            newly_banned |= 1 << w
            d &= d - 1

    dfs(0, 0, 0, 0)
    members = [v for v in range(n) if state["best_set"] >> v & 1]
    return state["best_size"], members, state["nodes"], not state["aborted"]


# ---------------------------------------------------------------------------
# single-color rainbow side search (RDR certification)


def rainbow_side_exists(side, nbrs, d, max_nodes=None):
    """Single colors 1..d on `side` so that every outside neighbor sees d
    pairwise distinct colors, or False; None when the node budget runs out.

    On success returns the color list parallel to `side`.  Standard
    backtracking; the first side vertex is pinned to color 1 to factor out
    color symmetry (sound for existence, and any witness works).
    """
    used = {}
    for a in side:
        for b in nbrs[a]:
            used[b] = 0
    chosen = [0] * len(side)
    count = 0

    def dfs(i):
        nonlocal count
        count += 1
        if max_nodes is not None and count > max_nodes:
            return None
        if i == len(side):
            return list(chosen)
        a = side[i]
        limit = 1 if i == 0 else d
        for c in range(limit):
            bit = 1 << c
            if any(used[b] & bit for b in nbrs[a]):
                continue
            for b in nbrs[a]:
                used[b] |= bit
            chosen[i] = c + 1
            res = dfs(i + 1)
            for b in nbrs[a]:
                used[b] &= ~bit
            if res is not False:
                return res
        return False

    return dfs(0)
