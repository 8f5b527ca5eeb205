"""Immutable simple graphs plus generators for the families the toolkit handles.

Vertices are always 0..n-1 and edge sets are canonicalized with the smaller
endpoint first, so generated graphs and their JSON files are reproducible.
Fixed numbering conventions:

* circular ladders (prism / Moebius): outer-rail vertex u_i -> i,
  inner-rail vertex v_i -> m+i;
* products with a complete graph: layer i of vertex v -> v*k + i;
* Cayley graphs over Z_{m1} x ... x Z_{mr}: coordinate tuples in
  mixed-radix (row-major) order;
* wreath graphs C_m[2K_1]: vertex (position i, twin s) -> 2*i + s.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    DuplicateEdge,
    IdentityInConnectionSet,
    IndexOutOfRange,
    LoopEdge,
    NotInverseClosed,
    ParameterTooSmall,
)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        adj = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(xs)) for xs in adj))

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks (bit v set when v is adjacent)."""
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def with_name(self, name: str | None) -> "Graph":
        return Graph(self.n, self.edges, name)

    def __repr__(self):
        label = self.name or "graph"
        return f"Graph({label}, n={self.n}, m={len(self.edges)})"


class Family(str, Enum):
    """Named graph families recognized by the toolkit."""

    CYCLE = "cycle"
    PRISM = "prism"
    MOBIUS = "mobius"
    COMPLETE_BIPARTITE = "complete_bipartite"
    FRANKLIN = "franklin"
    HYPERCUBE = "hypercube"
    WREATH = "wreath"
    CAYLEY_ABELIAN = "cayley_abelian"


def build_graph(n: int, edges, name: str | None = None) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Raises LoopEdge, DuplicateEdge or IndexOutOfRange on bad input.
    """
    if n < 0:
        raise IndexOutOfRange(f"vertex count must be nonnegative, got {n}")
    canon = []
    seen = set()
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"edge ({a},{b}) out of range for n={n}")
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed more than once")
        seen.add(e)
        canon.append(e)
    return Graph(n, tuple(sorted(canon)), name)


def regular_degree(g: Graph):
    """The common degree d when g is regular, else None."""
    if g.n == 0:
        return None
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) == 1:
        return degs.pop()
    return None


def is_connected(g: Graph) -> bool:
    """True when g has a single connected component (n <= 1 counts)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def bipartition(g: Graph):
    """A 2-coloring certificate (side_a, side_b) as sorted tuples, or None.

    The two sides partition the vertex set; isolated vertices land on side a.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side_a = tuple(v for v in range(g.n) if color[v] == 0)
    side_b = tuple(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def girth(g: Graph):
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for src in range(g.n):
        dist = {src: 0}
        parent = {src: -1}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    cycle = dist[v] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
        if best == 3:
            break
    return best


# ---------------------------------------------------------------------------
# family generators


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterTooSmall(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(n, edges, f"cycle({n})")


def prism(m: int) -> Graph:
    """Circular ladder: two m-cycles (rails) joined by a perfect matching."""
    if m < 3:
        raise ParameterTooSmall(f"prism needs m >= 3, got {m}")
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges.append((i, m + i))          # rung
        edges.append((i, j))              # outer rail
        edges.append((m + i, m + j))      # inner rail
    return build_graph(2 * m, edges, f"prism({m})")


def mobius_ladder(m: int) -> Graph:
    """Circular ladder with the rails cross-joined at the seam."""
    if m < 2:
        raise ParameterTooSmall(f"mobius_ladder needs m >= 2, got {m}")
    edges = []
    for i in range(m):
        edges.append((i, m + i))          # rungs, every column
    for i in range(m - 1):
        edges.append((i, i + 1))
        edges.append((m + i, m + i + 1))
    edges.append((m - 1, m))              # u_{m-1} ~ v_0
    edges.append((2 * m - 1, 0))          # v_{m-1} ~ u_0
    return build_graph(2 * m, edges, f"mobius_ladder({m})")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterTooSmall(f"complete_bipartite needs a,b >= 1, got ({a},{b})")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return build_graph(a + b, edges, f"complete_bipartite({a},{b})")


def franklin() -> Graph:
    """The 12-vertex cubic bipartite graph of girth 4 (LCF [5,-5]^6)."""
    n = 12
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(0, n, 2):
        edges.append((i, (i + 5) % n))
    return build_graph(n, edges, "franklin")


def hypercube(dim: int) -> Graph:
    if dim < 1:
        raise ParameterTooSmall(f"hypercube needs dim >= 1, got {dim}")
    n = 1 << dim
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(dim) if not v >> b & 1]
    return build_graph(n, edges, f"hypercube({dim})")


def wreath(m: int) -> Graph:
    """Lexicographic product C_m[2K_1]: each cycle position doubled."""
    if m < 3:
        raise ParameterTooSmall(f"wreath needs m >= 3, got {m}")
    edges = []
    for i in range(m):
        j = (i + 1) % m
        for s in range(2):
            for t in range(2):
                edges.append((2 * i + s, 2 * j + t))
    return build_graph(2 * m, edges, f"wreath({m})")


@dataclass(frozen=True)
class AbelianGroupSpec:
    """A finite abelian group Z_{m1} x ... x Z_{mr} with a connection set.

    Connection elements are coordinate tuples; for a rank-1 group plain
    integers are accepted and normalized.  The set must exclude the identity
    and be closed under negation.
    """

    factors: tuple[int, ...]
    connection: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        factors = tuple(int(m) for m in self.factors)
        if not factors or any(m < 2 for m in factors):
            raise ParameterTooSmall(f"group factors must all be >= 2, got {factors}")
        rank = len(factors)
        norm = []
        for el in self.connection:
            if isinstance(el, int):
                el = (el,)
            if len(el) != rank:
                raise IndexOutOfRange(
                    f"connection element {el} does not match rank {rank}"
                )
            norm.append(tuple(x % m for x, m in zip(el, factors)))
        conn = tuple(dict.fromkeys(norm))
        identity = (0,) * rank
        if identity in conn:
            raise IdentityInConnectionSet("connection set contains the identity")
        conn_set = set(conn)
        for el in conn:
            neg = tuple((-x) % m for x, m in zip(el, factors))
            if neg not in conn_set:
                raise NotInverseClosed(f"{el} is in the connection set but {neg} is not")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "connection", conn)

    @property
    def order(self) -> int:
        out = 1
        for m in self.factors:
            out *= m
        return out

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*[range(m) for m in self.factors]))


def cayley_abelian(spec: AbelianGroupSpec) -> Graph:
    """Cayley graph of the abelian group: g ~ h iff g - h is a connection element.

    Vertices enumerate coordinate tuples in mixed-radix order, so the graph
    is reproducible from the spec alone.
    """
    elements = spec.elements()
    index = {el: i for i, el in enumerate(elements)}
    edges = set()
    for g_el in elements:
        for s in spec.connection:
            h = tuple((x + y) % m for x, y, m in zip(g_el, s, spec.factors))
            a, b = index[g_el], index[h]
            edges.add((a, b) if a < b else (b, a))
    label = "cayley(" + "x".join(str(m) for m in spec.factors) + ")"
    return build_graph(len(elements), sorted(edges), label)


def cartesian_product_complete(g: Graph, k: int) -> Graph:
    """Cartesian product of g with a complete graph on k vertices.

    Vertex (v, i) maps to v*k + i; (v,i) ~ (w,j) iff v=w and i != j, or
    v ~ w and i = j.
    """
    if k < 1:
        raise ParameterTooSmall(f"product needs k >= 1, got {k}")
    edges = []
    for v in range(g.n):
        for i in range(k):
            for j in range(i + 1, k):
                edges.append((v * k + i, v * k + j))
    for a, b in g.edges:
        for i in range(k):
            edges.append((a * k + i, b * k + i))
    name = f"{g.name or 'graph'} x K_{k}"
    return build_graph(g.n * k, edges, name)


# ---------------------------------------------------------------------------
# isomorphism testing


def _refine_colors(g: Graph, rounds: int | None = None):
    """Iterated neighborhood refinement; returns a stable color per vertex."""
    colors = [g.degree(v) for v in range(g.n)]
    if rounds is None:
        rounds = max(g.n, 1)
    for _ in range(rounds):
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def _mapping_is_isomorphism(g1: Graph, g2: Graph, mapping) -> bool:
    if sorted(mapping) != list(range(g2.n)):
        return False
    mapped = {(min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
              for a, b in g1.edges}
    return mapped == set(g2.edges)


def graphs_isomorphic(g1: Graph, g2: Graph):
    """A vertex bijection preserving adjacency (list: g1 index -> g2 index), or None.

    Backtracking search with color-refinement invariants for pruning; meant
    for desk-scale graphs (n up to a few dozen).  Any returned mapping is
    re-verified edge by edge before being handed out.
    """
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    n = g1.n
    if n == 0:
        return []
    c1 = _refine_colors(g1)
    c2 = _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return None

    candidates = {v: [w for w in range(n) if c2[w] == c1[v]] for v in range(n)}
    adj1 = [set(g1.neighbors(v)) for v in range(n)]
    adj2 = [set(g2.neighbors(v)) for v in range(n)]

    mapping = [-1] * n
    used = [False] * n

    def pick_next(assigned):
        # prefer vertices with many already-mapped neighbors, then few candidates
        best, best_key = -1, None
        for v in range(n):
            if mapping[v] != -1:
                continue
            mapped_nbrs = sum(1 for w in adj1[v] if mapping[w] != -1)
            key = (-mapped_nbrs, len(candidates[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def extend(assigned):
        if assigned == n:
            return True
        v = pick_next(assigned)
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in adj1[v]:
                if mapping[u] != -1 and mapping[u] not in adj2[w]:
                    ok = False
                    break
            if ok:
                for u in range(n):
                    if mapping[u] != -1 and u not in adj1[v] and mapping[u] in adj2[w]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(assigned + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if not extend(0):
        return None
    if not _mapping_is_isomorphism(g1, g2, mapping):
        return None
    return list(mapping)
