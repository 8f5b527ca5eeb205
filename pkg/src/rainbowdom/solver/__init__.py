"""Exact solvers: branch and bound, ladder transfer DP, product oracle,
and rainbow-domination-regular certification.

A compiled extension accelerates the three search kernels when available;
`BACKEND` reports which engine is active.  Set RAINBOWDOM_PURE=1 in the
environment to force the pure-Python engine.  Both engines follow the same
enumeration orders, so values and witnesses are identical.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from ..errors import ColorOutOfRange, InvalidInput
from ..graphs import (
    Family,
    Graph,
    bipartition,
    cartesian_product_complete,
    cycle,
    is_connected,
    mobius_ladder,
    prism,
    regular_degree,
)
from ..rainbow import (
    MAX_COLORS,
    ColorAssignment,
    lower_bound_general,
    lower_bound_regular,
    rdr_necessary_conditions,
    verify_krdf,
)
from . import _engine as _pure
from ._common import FAMILY_CODES

_compiled = None
if not os.environ.get("RAINBOWDOM_PURE"):
    try:
        from . import _speedups as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"

# compiled kernels use 64-bit state keys / vertex masks
_COMPILED_MAX_N = 62
_COMPILED_MAX_K = 10


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a search; exceeding them yields a non-optimal result."""

    max_nodes: int | None = None
    max_time: float | None = None

    def deadline(self) -> float | None:
        if self.max_time is None:
            return None
        return time.monotonic() + self.max_time


@dataclass(frozen=True)
class SolveResult:
    """An exact optimum (or, after a budget cut, the best incumbent)."""

    value: int
    witness: ColorAssignment
    method: str
    nodes_explored: int
    elapsed: float
    optimal: bool = True


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int
    elapsed: float
    optimal: bool = True


def _applicable_lower_bound(g: Graph, k: int) -> int:
    max_deg = max((g.degree(v) for v in range(g.n)), default=0)
    lb = lower_bound_general(g.n, max_deg, k) if max_deg else g.n
    d = regular_degree(g)
    if d:
        lb = max(lb, lower_bound_regular(g.n, d, k))
    return min(lb, g.n)


def _check_result(g: Graph, k: int, value: int,
                  witness: ColorAssignment) -> None:
    """Always-on sanity gate: witness valid, weight matches, bound respected."""
    report = verify_krdf(g, witness)
    if not report.valid:
        raise AssertionError("solver produced an invalid witness")
    w = sum(len(cs) for cs in witness.colors)
    if w != value:
        raise AssertionError(f"witness weight {w} != reported value {value}")
    lb = _applicable_lower_bound(g, k)
    if value < lb:
        raise AssertionError(f"reported value {value} below lower bound {lb}")


def _validate_k(k: int) -> None:
    if not 1 <= k <= MAX_COLORS:
        raise ColorOutOfRange(f"k must be in 1..{MAX_COLORS}, got {k}")


def exact_gamma_rk(g: Graph, k: int, budget: SearchBudget | None = None,
                   canonical: bool = False) -> SolveResult:
    """Exact k-rainbow domination number by branch and bound.

    Vertices are assigned in descending-degree order; candidate subsets in
    (cardinality, value) order, so cheap colorings surface early.  Search
    stops as soon as the incumbent matches the applicable lower bound.
    With `canonical`, a second pass extracts the lexicographically smallest
    optimal witness under the same enumeration order.
    """
    _validate_k(k)
    if g.n < 1:
        raise InvalidInput("graph must have at least one vertex")
    budget = budget or SearchBudget()
    start = time.monotonic()
    lb = _applicable_lower_bound(g, k)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    nbrs = [list(g.neighbors(v)) for v in range(g.n)]
    engine = _engine_for(n=g.n, k=k)
    value, masks, nodes, optimal = engine.gamma_bb(
        g.n, k, nbrs, order, lb,
        max_nodes=budget.max_nodes, deadline=budget.deadline(),
    )
    if canonical and optimal:
        _, masks, extra, ok = engine.gamma_bb(
            g.n, k, nbrs, order, lb,
            max_nodes=None, deadline=None, lex_target=value,
        )
        nodes += extra
    witness = ColorAssignment.from_masks(k, masks)
    _check_result(g, k, value, witness)
    return SolveResult(value, witness, "BranchBound", nodes,
                       time.monotonic() - start, optimal)


def exact_gamma_rk_ladder(family: Family | str, m: int, k: int) -> SolveResult:
    """Exact value for a cycle, prism or Moebius ladder by column-sweep DP.

    The state tracks the current column's masks plus outstanding demands of
    its empty vertices; the wrap-around is closed by enumerating first-column
    orbit representatives.  Must agree with the general solver.
    """
    fam = family.value if isinstance(family, Family) else str(family)
    if fam not in FAMILY_CODES:
        raise InvalidInput(f"ladder solver handles cycle/prism/mobius, not {fam!r}")
    _validate_k(k)
    code = FAMILY_CODES[fam]
    if fam == "cycle":
        g = cycle(m)
    elif fam == "prism":
        g = prism(m)
    else:
        g = mobius_ladder(m)
    start = time.monotonic()
    engine = _engine_for(n=g.n, k=k, ladder=True)
    value, masks, nodes = engine.ladder_solve(code, m, k)
    witness = ColorAssignment.from_masks(k, masks)
    _check_result(g, k, value, witness)
    return SolveResult(value, witness, "LadderDP", nodes,
                       time.monotonic() - start, True)


def min_dominating_set(g: Graph, budget: SearchBudget | None = None) -> DominationResult:
    """Exact domination number with witness set, by bitset branch and bound."""
    budget = budget or SearchBudget()
    start = time.monotonic()
    closed = g.adjacency_masks()
    for v in range(g.n):
        closed[v] |= 1 << v
    engine = _engine_for(n=g.n, k=1)
    size, members, nodes, optimal = engine.domset_bb(
        g.n, closed, max_nodes=budget.max_nodes, deadline=budget.deadline(),
    )
    if optimal:
        covered = 0
        for v in members:
            covered |= closed[v]
        if covered != (1 << g.n) - 1 or len(members) != size:
            raise AssertionError("dominating-set witness failed verification")
    return DominationResult(size, tuple(members), nodes,
                            time.monotonic() - start, optimal)


def gamma_rk_via_product(g: Graph, k: int,
                         budget: SearchBudget | None = None) -> SolveResult:
    """Exact gamma_rk through the domination number of the product with K_k.

    A dominating set {(v,i)} of the product maps back to the assignment
    f(v) = {i+1 : (v,i) chosen} of equal weight, and conversely, so the two
    optima coincide.
    """
    _validate_k(k)
    start = time.monotonic()
    product = cartesian_product_complete(g, k)
    res = min_dominating_set(product, budget)
    masks = [0] * g.n
    for x in res.witness:
        masks[x // k] |= 1 << (x % k)
    witness = ColorAssignment.from_masks(k, masks)
    if res.optimal:
        _check_result(g, k, res.value, witness)
    return SolveResult(res.value, witness, "ProductOracle", res.nodes_explored,
                       time.monotonic() - start, res.optimal)


def rdr_witness(g: Graph, budget: SearchBudget | None = None):
    """A valid weight-n/2 d-rainbow dominating function when g is d-RDR.

    Returns the certificate assignment, False when no such assignment
    exists, or None when the node budget runs out.  The witness colors one
    bipartition side with single colors so that every opposite vertex sees
    all d colors; its weight n/2 meets the regular lower bound, which is
    what makes the certificate optimal.
    """
    budget = budget or SearchBudget()
    conds = rdr_necessary_conditions(g)
    if not conds.passed:
        return False
    d = conds.regular_d
    if not is_connected(g):
        res = exact_gamma_rk(g, d, budget)
        if not res.optimal:
            return None
        return res.witness if res.value * 2 == g.n else False
    side_a, side_b = bipartition(g)
    if len(side_a) != len(side_b):
        return False
    nbrs = {v: list(g.neighbors(v)) for v in range(g.n)}
    for side in (side_a, side_b):
        found = _pure.rainbow_side_exists(list(side), nbrs, d,
                                          max_nodes=budget.max_nodes)
        if found is None:
            return None
        if found is not False:
            masks = [0] * g.n
            for v, color in zip(side, found):
                masks[v] = 1 << (color - 1)
            witness = ColorAssignment.from_masks(d, masks)
            _check_result(g, d, g.n // 2, witness)
            return witness
    return False


def is_rdr(g: Graph, budget: SearchBudget | None = None):
    """Certify d-rainbow-domination regularity: True, False, or None (budget out).

    Fails fast on the necessary conditions (regular, 2d | n, bipartite).
    For a connected survivor the optimum n/2 is attained exactly when one
    bipartition side admits single colors 1..d with every opposite vertex
    seeing d distinct ones; both sides are searched exhaustively.
    """
    witness = rdr_witness(g, budget)
    if witness is None:
        return None
    return witness is not False


def _engine_for(n: int, k: int, ladder: bool = False):
    if _compiled is None:
        return _pure
    if ladder:
        return _compiled if k <= _COMPILED_MAX_K else _pure
    return _compiled if n <= _COMPILED_MAX_N and k <= _COMPILED_MAX_K else _pure
