"""Color assignments, the rainbow-domination verifier, counting statistics,
closed-form bounds, the discharging step and the color-lift construction.

A color assignment gives every vertex a subset of {1..k}.  It is a valid
k-rainbow dominating function when every vertex with the empty set sees all
k colors in its neighborhood.  Everything in this module is exact integer
arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadOrder, ColorOutOfRange, InvalidInput, KOutOfRange, SizeMismatch
from .graphs import Graph, bipartition, regular_degree

MAX_COLORS = 15


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class ColorAssignment:
    """Per-vertex color subsets of {1..k}, indexed by vertex."""

    k: int
    colors: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not 1 <= self.k <= MAX_COLORS:
            raise ColorOutOfRange(f"k must be in 1..{MAX_COLORS}, got {self.k}")
        frozen = []
        masks = []
        for v, cs in enumerate(self.colors):
            cs = frozenset(cs)
            mask = 0
            for c in cs:
                if not 1 <= c <= self.k:
                    raise ColorOutOfRange(f"vertex {v} has color {c} outside 1..{self.k}")
                mask |= 1 << (c - 1)
            frozen.append(cs)
            masks.append(mask)
        object.__setattr__(self, "colors", tuple(frozen))
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_masks(cls, k: int, masks) -> "ColorAssignment":
        sets = [frozenset(c + 1 for c in range(k) if m >> c & 1) for m in masks]
        return cls(k, tuple(sets))

    def masks(self) -> tuple[int, ...]:
        """Color subsets as bitmasks (bit c-1 set when color c is present)."""
        return self._masks

    def __len__(self):
        return len(self.colors)


def weight(f: ColorAssignment) -> int:
    """Total number of (vertex, color) incidences."""
    return sum(len(cs) for cs in f.colors)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[tuple[int, frozenset[int]], ...]


def _check_size(g: Graph, f: ColorAssignment):
    if len(f) != g.n:
        raise SizeMismatch(f"assignment covers {len(f)} vertices, graph has {g.n}")


def verify_krdf(g: Graph, f: ColorAssignment) -> VerificationReport:
    """Check the rainbow condition: every empty vertex sees all k colors.

    The report lists each failing vertex with the colors its neighborhood
    is missing.
    """
    _check_size(g, f)
    full = (1 << f.k) - 1
    masks = f.masks()
    violations = []
    for v in range(g.n):
        if masks[v]:
            continue
        seen = 0
        for w in g.neighbors(v):
            seen |= masks[w]
        if seen != full:
            missing = full & ~seen
            violations.append(
                (v, frozenset(c + 1 for c in range(f.k) if missing >> c & 1))
            )
    return VerificationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class ColoringStats:
    """Exact counts describing one assignment on one graph.

    per_color[i-1] counts vertices carrying color i; by_cardinality[j] counts
    vertices with exactly j colors; colored/uncolored split the vertex set;
    the three edge counts split edges by how many endpoints are colored.
    """

    k: int
    per_color: tuple[int, ...]
    by_cardinality: tuple[int, ...]
    colored: int
    uncolored: int
    edges_both_empty: int
    edges_one_colored: int
    edges_both_colored: int
    weight: int

    @property
    def n(self) -> int:
        return self.colored + self.uncolored

    @property
    def edge_count(self) -> int:
        return self.edges_both_empty + self.edges_one_colored + self.edges_both_colored


def coloring_stats(g: Graph, f: ColorAssignment) -> ColoringStats:
    _check_size(g, f)
    per_color = [0] * f.k
    by_card = [0] * (f.k + 1)
    for cs in f.colors:
        by_card[len(cs)] += 1
        for c in cs:
            per_color[c - 1] += 1
    e = [0, 0, 0]
    for a, b in g.edges:
        e[(len(f.colors[a]) > 0) + (len(f.colors[b]) > 0)] += 1
    colored = g.n - by_card[0]
    return ColoringStats(
        k=f.k,
        per_color=tuple(per_color),
        by_cardinality=tuple(by_card),
        colored=colored,
        uncolored=by_card[0],
        edges_both_empty=e[0],
        edges_one_colored=e[1],
        edges_both_colored=e[2],
        weight=sum(i * c for i, c in enumerate(by_card)),
    )


def check_counting_identities(stats: ColoringStats, d: int) -> bool:
    """Edge/vertex counting identities for any assignment on a d-regular graph.

    Checks that the mixed-edge count equals both colored-side and empty-side
    degree sums minus twice the same-side edges, plus the sandwich bounds
    they imply for the colored-vertex count.  All comparisons are integer
    exact (cleared of denominators).
    """
    c, c0 = stats.colored, stats.uncolored
    e0, e1, e2 = stats.edges_both_empty, stats.edges_one_colored, stats.edges_both_colored
    n = stats.n
    if e1 != c * d - 2 * e2 or e1 != c0 * d - 2 * e0:
        return False
    if not (c0 * d - 2 * e0 <= c * d <= c0 * d + 2 * e2):
        return False
    if not (n * d - 2 * e0 <= 2 * c * d <= n * d + 2 * e2):
        return False
    return True


def check_weight_bounds(stats: ColoringStats, d: int, k: int) -> bool:
    """Weight lower bounds that hold for every VALID k-RDF on a d-regular graph.

    Integer-exact forms of: d*w >= (n-c)k + 2e2; (k+d)w >= kn + 2e2;
    d*w >= (k-d)n + (2d-k)c; d*w >= dn - (2d-k)c0.
    """
    w = stats.weight
    n, c, c0, e2 = stats.n, stats.colored, stats.uncolored, stats.edges_both_colored
    if d * w < (n - c) * k + 2 * e2:
        return False
    if (k + d) * w < k * n + 2 * e2:
        return False
    if d * w < (k - d) * n + (2 * d - k) * c:
        return False
    if d * w < d * n - (2 * d - k) * c0:
        return False
    return True


# ---------------------------------------------------------------------------
# closed-form bounds


def lower_bound_general(n: int, max_degree: int, k: int) -> int:
    """ceil(kn / (max_degree + k)): valid for every graph."""
    return _ceil_div(k * n, max_degree + k)


def lower_bound_regular(n: int, d: int, k: int) -> int:
    """ceil(kn / 2d) for k <= 2d, and n once k reaches 2d."""
    if k >= 2 * d:
        return n
    return _ceil_div(k * n, 2 * d)


def upper_bound_monotone(gamma_k: int, k: int, k_prime: int) -> int:
    """Upper bound for k' colors from the optimum at k < k' colors."""
    if k_prime <= k:
        raise BadOrder(f"need k' > k, got k'={k_prime}, k={k}")
    return gamma_k + (k_prime - k) * (gamma_k // k)


def c_c0_bounds(n: int, d: int, k: int, gamma: int) -> tuple[int, int]:
    """Bounds on colored / uncolored vertex counts of any optimal k-RDF.

    Returns (largest possible colored count, smallest possible empty count)
    on a d-regular graph of order n with optimum gamma; defined for 0 < k < 2d.
    """
    if not 0 < k < 2 * d:
        raise KOutOfRange(f"need 0 < k < 2d = {2*d}, got k={k}")
    c_max = (d * gamma + (d - k) * n) // (2 * d - k)
    c0_min = _ceil_div(d * (n - gamma), 2 * d - k)
    return c_max, c0_min


@dataclass(frozen=True)
class RdrConditions:
    """Necessary conditions for a graph to attain the regular lower bound."""

    regular_d: int | None
    divisibility: bool
    bipartite: bool

    @property
    def passed(self) -> bool:
        return self.regular_d is not None and self.divisibility and self.bipartite


def rdr_necessary_conditions(g: Graph) -> RdrConditions:
    """Regularity, 2d | n, and bipartiteness.

    All three passing is necessary but not sufficient for the graph to be
    rainbow-domination regular.
    """
    d = regular_degree(g)
    if d is None or d == 0:
        return RdrConditions(None if d is None else d, False, bipartition(g) is not None)
    return RdrConditions(d, g.n % (2 * d) == 0, bipartition(g) is not None)


# ---------------------------------------------------------------------------
# discharging and color lifting


def _move_is_valid(g: Graph, masks: list[int], k: int) -> bool:
    full = (1 << k) - 1
    for v in range(g.n):
        if masks[v]:
            continue
        seen = 0
        for w in g.neighbors(v):
            seen |= masks[w]
        if seen != full:
            return False
    return True


def discharge(g: Graph, f: ColorAssignment) -> tuple[ColorAssignment, int]:
    """Greedy verified discharging: move single colors onto empty neighbors.

    Repeatedly looks for a vertex carrying more colors than it has empty
    neighbors (and at least one empty neighbor), and a single color move to
    an empty neighbor that keeps the assignment a valid k-RDF.  Moves are
    tried in order (lowest vertex, lowest color, lowest-index neighbor) and
    each applied move is re-verified, so weight is preserved exactly and the
    empty-vertex count strictly decreases per move.
    """
    _check_size(g, f)
    if not verify_krdf(g, f).valid:
        raise InvalidInput("discharge requires a valid k-RDF")
    masks = list(f.masks())
    moves = 0
    while True:
        applied = False
        for v in range(g.n):
            if not masks[v]:
                continue
            empties = [u for u in g.neighbors(v) if not masks[u]]
            if not empties or bin(masks[v]).count("1") <= len(empties):
                continue
            for c in range(f.k):
                bit = 1 << c
                if not masks[v] & bit:
                    continue
                for u in empties:
                    masks[v] &= ~bit
                    masks[u] = bit
                    if _move_is_valid(g, masks, f.k):
                        applied = True
                        moves += 1
                        break
                    masks[v] |= bit
                    masks[u] = 0
                if applied:
                    break
            if applied:
                break
        if not applied:
            return ColorAssignment.from_masks(f.k, masks), moves


def lift_color(f: ColorAssignment, i: int) -> ColorAssignment:
    """Extend to k+1 colors by adding color k+1 wherever color i appears.

    Preserves validity: every empty vertex already sees color i somewhere in
    its neighborhood, so it sees k+1 there too.  Weight grows by the number
    of vertices carrying color i.
    """
    if not 1 <= i <= f.k:
        raise ColorOutOfRange(f"lift color {i} outside 1..{f.k}")
    new = [set(cs) for cs in f.colors]
    for cs in new:
        if i in cs:
            cs.add(f.k + 1)
    return ColorAssignment(f.k + 1, tuple(frozenset(cs) for cs in new))
