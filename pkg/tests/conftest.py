"""Shared test helpers: independent oracles and seeded random generators.

The oracles here deliberately avoid the library's solver machinery: the
enumeration oracle checks validity with its own inline neighborhood scan
and prunes on weight alone, so solver results are compared against a
genuinely independent computation.
"""

from __future__ import annotations

import itertools
import random

from rainbowdom import Graph, build_graph


def brute_gamma_rk(g: Graph, k: int, cap: int | None = None) -> int:
    """Minimum k-RDF weight by exhaustive enumeration (weight-pruned only)."""
    full = (1 << k) - 1
    nbrs = [g.neighbors(v) for v in range(g.n)]
    best = [g.n + 1 if cap is None else cap + 1]
    masks = [0] * g.n

    def valid() -> bool:
        for v in range(g.n):
            if masks[v] == 0:
                seen = 0
                for w in nbrs[v]:
                    seen |= masks[w]
                if seen != full:
                    return False
        return True

    def rec(v: int, w: int):
        if w >= best[0]:
            return
        if v == g.n:
            if valid():
                best[0] = w
            return
        for s in range(full + 1):
            masks[v] = s
            rec(v + 1, w + bin(s).count("1"))
        masks[v] = 0

    rec(0, 0)
    return best[0]


def brute_min_domset(g: Graph) -> int:
    """Domination number by increasing-size subset enumeration."""
    closed = g.adjacency_masks()
    for v in range(g.n):
        closed[v] |= 1 << v
    all_mask = (1 << g.n) - 1
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            cov = 0
            for v in combo:
                cov |= closed[v]
            if cov == all_mask:
                return size
    return g.n


def random_regular_graph(n: int, d: int, rng: random.Random, tries: int = 2000):
    """Pairing-model d-regular simple graph on n vertices, or None."""
    if n * d % 2 or d >= n:
        return None
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            a, b = stubs[i], stubs[i + 1]
            if a == b:
                ok = False
                break
            e = (a, b) if a < b else (b, a)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return build_graph(n, sorted(edges))
    return None


def random_connected_cubic(n: int, rng: random.Random):
    from rainbowdom import is_connected

    while True:
        g = random_regular_graph(n, 3, rng)
        if g is not None and is_connected(g):
            return g


def random_coloring(g: Graph, k: int, rng: random.Random):
    from rainbowdom import ColorAssignment

    sets = []
    for _ in range(g.n):
        sets.append(frozenset(c for c in range(1, k + 1) if rng.random() < 0.25))
    return ColorAssignment(k, tuple(sets))


def random_valid_krdf(g: Graph, k: int, rng: random.Random):
    """A valid k-RDF grown by repairing a random seed assignment.

    While some empty vertex misses a color, one missing color is added to a
    random neighbor; each step reduces the total missing count.
    """
    from rainbowdom import ColorAssignment, verify_krdf

    sets = [set(c for c in range(1, k + 1) if rng.random() < 0.15)
            for _ in range(g.n)]
    while True:
        f = ColorAssignment(k, tuple(frozenset(s) for s in sets))
        report = verify_krdf(g, f)
        if report.valid:
            return f
        v, missing = report.violations[0]
        nbrs = g.neighbors(v)
        if not nbrs:
            sets[v].add(min(missing))
            continue
        u = rng.choice(list(nbrs))
        sets[u].add(rng.choice(sorted(missing)))


def random_cayley_cubic_spec(rng: random.Random, max_order: int = 24):
    """A random connected cubic Cayley spec over an abelian group."""
    from rainbowdom import AbelianGroupSpec, RainbowDomError, cayley_abelian, is_connected

    while True:
        order = rng.choice([x for x in range(4, max_order + 1, 2)])
        shapes = [(order,)]
        for a in (2, 3, 4):
            if order % a == 0 and order // a >= 2:
                shapes.append((a, order // a))
        shape = tuple(rng.choice(shapes))
        els = list(itertools.product(*[range(f) for f in shape]))

        def neg(e):
            return tuple((-x) % f for x, f in zip(e, shape))

        ident = tuple([0] * len(shape))
        invol = [e for e in els if e != ident and neg(e) == e]
        non_invol = [e for e in els if e != ident and neg(e) != e]
        if rng.random() < 0.6 and non_invol and invol:
            a = rng.choice(non_invol)
            conn = (a, neg(a), rng.choice(invol))
        elif len(invol) >= 3:
            conn = tuple(rng.sample(invol, 3))
        else:
            continue
        try:
            spec = AbelianGroupSpec(shape, conn)
        except RainbowDomError:
            continue
        if len(spec.connection) != 3:
            continue
        if is_connected(cayley_abelian(spec)):
            return spec
