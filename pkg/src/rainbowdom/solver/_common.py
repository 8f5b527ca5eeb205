"""Enumeration orders shared by the pure and compiled solver engines.

Both engines must traverse candidates in exactly the same order so that
results (including reported witnesses) are identical; everything
order-sensitive is therefore generated here, once.
"""

from __future__ import annotations

from functools import lru_cache

CYCLE, PRISM, MOBIUS = 0, 1, 2

FAMILY_CODES = {"cycle": CYCLE, "prism": PRISM, "mobius": MOBIUS}


def popcount(x: int) -> int:
    return x.bit_count()


@lru_cache(maxsize=None)
def mask_order(k: int) -> tuple[int, ...]:
    """All color subsets of {1..k} ordered by cardinality, then value."""
    return tuple(sorted(range(1 << k), key=lambda s: (s.bit_count(), s)))


@lru_cache(maxsize=None)
def superset_lists(k: int) -> tuple[tuple[int, ...], ...]:
    """For every demand mask d, the masks containing d in candidate order."""
    order = mask_order(k)
    return tuple(
        tuple(s for s in order if s & d == d) for d in range(1 << k)
    )


@lru_cache(maxsize=None)
def ladder_inits(k: int):
    """Orbit representatives for the first ladder column under color
    permutations and the rail-swap automorphism.

    Every coloring can be permuted so its first column is one of these
    pairs, so minimizing over them is exhaustive.  Each entry is
    (outer_mask, inner_mask, color_class_ranges) where the ranges partition
    the colors into the four classes fixed setwise by the stabilizer of the
    pair (shared, outer-only, inner-only, unused).
    """
    out = []
    for i in range(k + 1):
        for j in range(i, k + 1):
            for t in range(min(i, j) + 1):
                if i + j - t > k:
                    continue
                au = (1 << i) - 1
                av = ((1 << t) - 1) | (((1 << (j - t)) - 1) << i)
                ranges = tuple(
                    (lo, hi)
                    for lo, hi in ((0, t), (t, i), (i, i + j - t), (i + j - t, k))
                    if hi > lo
                )
                out.append((au, av, ranges))
    out.sort(key=lambda e: (popcount(e[0]) + popcount(e[1]), e[0], e[1]))
    return tuple(out)


@lru_cache(maxsize=None)
def cycle_inits(k: int):
    """Orbit representatives for the first cycle vertex: one mask per size."""
    out = []
    for p in range(k + 1):
        a = (1 << p) - 1
        ranges = tuple((lo, hi) for lo, hi in ((0, p), (p, k)) if hi > lo)
        out.append((a, ranges))
    return tuple(out)


@lru_cache(maxsize=None)
def window_lb_table(is_cycle: bool, k: int, rmax: int) -> tuple[tuple[int, ...], ...]:
    """Admissible weight lower bounds LB[r][b] for r unassigned columns whose
    boundary receives at most b color incidences from outside.

    For any valid coloring restricted to a window of r columns: every empty
    vertex needs k incidences, of which at most b in total arrive from the
    two outside boundary columns; a color inside serves at most d empty
    neighbors; both endpoints of a colored-colored edge are wasted for that
    purpose; and the colored/empty degree sums balance up to the cut-edge
    endpoints.  With c colored among the window vertices,

        d*w >= k*c0 - b + 2*e2,
        e2 >= ceil((d*(c - c0) - cut_ends) / 2),
        w >= c,

    and minimizing over c gives a bound that grows at the true per-column
    rate, keeping search bands constant-width in the column count.
    """
    if is_cycle:
        d, per_col, cut_ends = 2, 1, 2
    else:
        d, per_col, cut_ends = 3, 2, 4
    bmax = 2 * per_col * k
    table = [tuple([0] * (bmax + 1))]
    for r in range(1, rmax + 1):
        total = per_col * r
        row = []
        for b in range(bmax + 1):
            best = None
            for c in range(total + 1):
                c0 = total - c
                e2_min = max(0, -(-(d * (c - c0) - cut_ends) // 2))
                demand = k * c0 - b + 2 * e2_min
                w = max(c, -(-demand // d) if demand > 0 else 0)
                if best is None or w < best:
                    best = w
            row.append(best)
        table.append(tuple(row))
    return tuple(table)


def canon_state(masks: list[int], ranges) -> list[int]:
    """Canonical orbit representative of a DP state under the stabilizer.

    Colors inside one class range are interchangeable; sorting their
    per-color signatures (one bit from each mask) yields a well-defined
    representative, so equivalent states collapse to one dictionary key.
    """
    nm = len(masks)
    out = [0] * nm
    for lo, hi in ranges:
        sigs = []
        for c in range(lo, hi):
            s = 0
            for mi in range(nm):
                s |= ((masks[mi] >> c) & 1) << mi
            sigs.append(s)
        sigs.sort(reverse=True)
        for idx, s in enumerate(sigs):
            c = lo + idx
            for mi in range(nm):
                out[mi] |= ((s >> mi) & 1) << c
    return out
