"""Exact optimum of total weight over staircase-free weightings.

Two independent routes compute ex-style optima at desk scale:

* brute_force_optimum enumerates every weighting (vectorized, chunked) and is
  the oracle for the branch-and-bound path;
* bnb_optimum runs a depth-first search over edge weights in colex order with
  clique-feasibility caps, the additive bound partial + k * remaining, seeding
  from both extremal constructions, and an optional first-vertex-star symmetry
  reduction.

The branch-and-bound inner loop runs in a compiled extension when available
and in a node-for-node equivalent pure-Python kernel otherwise; set
RBLAB_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernel_py
from ._tables import colex_pairs
from .errors import InvalidParameterError, ResourceLimitError
from .model import turan_graph, turan_number
from .nesting import WeightedGraph
from .sequences import is_staircase_free

if os.environ.get("RBLAB_PURE") == "1":
    _kernel = _kernel_py
else:
    try:
        from . import _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _kernel_py

BRUTE_FORCE_GUARD = 10**8


def kernel_backend() -> str:
    """Which branch-and-bound kernel is active: "compiled" or "pure"."""
    return _kernel.BACKEND


@dataclass(frozen=True)
class SearchReport:
    n: int
    r: int
    k: int
    optimum: int
    witness: WeightedGraph
    nodes_explored: int
    nodes_pruned: int
    elapsed: float
    mode: str  # "oracle" | "branch-and-bound"
    complete: bool
    backend: str

    def __post_init__(self):
        if self.witness.total_weight() != self.optimum:
            raise AssertionError("witness total does not match reported optimum")
        if not is_staircase_free(self.witness, self.r):
            raise AssertionError("witness contains a staircase-dominating clique")


def construction_values(n: int, r: int, k: int) -> tuple[int, int]:
    """(clique construction value, Turan construction value).

    The clique construction is the constant weighting min(k, C(r,2)-1); the
    Turan construction puts weight k on the (r-1)-partite Turan edges.  Both
    are staircase-free, so the optimum is at least their maximum.
    """
    return (min(k, comb(r, 2) - 1) * comb(n, 2), k * turan_number(n, r - 1))


def construction_witness(n: int, r: int, k: int) -> WeightedGraph:
    """The better of the two constructions (clique one on ties)."""
    clique_val, turan_val = construction_values(n, r, k)
    if clique_val >= turan_val:
        return WeightedGraph.constant(n, k, min(k, comb(r, 2) - 1))
    return WeightedGraph.on_support(n, k, turan_graph(n, r - 1), k)


def _weights_from_colex(n: int, k: int, colex_weights) -> WeightedGraph:
    mapping = {pair: w for pair, w in zip(colex_pairs(n), colex_weights)}
    return WeightedGraph.from_map(n, k, mapping)


def brute_force_optimum(n: int, r: int, k: int, chunk: int = 1 << 18) -> SearchReport:
    """Full enumeration of all (k+1)^C(n,2) weightings (the oracle route).

    Vectorized mixed-radix decoding over chunks; guarded to 10^8 assignments.
    """
    if n < 2 or r < 3 or k < 0:
        raise InvalidParameterError(f"need n >= 2, r >= 3, k >= 0, got n={n} r={r} k={k}")
    edge_count = comb(n, 2)
    total_count = (k + 1) ** edge_count
    if total_count > BRUTE_FORCE_GUARD:
        raise ResourceLimitError(
            f"(k+1)^C(n,2) = {total_count} exceeds the {BRUTE_FORCE_GUARD} guard"
        )
    t0 = time.perf_counter()
    pairs = colex_pairs(n)
    pair_pos = {p: i for i, p in enumerate(pairs)}
    h = comb(r, 2)
    from itertools import combinations

    subset_rows = [
        [pair_pos[(u, v)] for u, v in combinations(S, 2)]
        for S in combinations(range(1, n + 1), r)
    ]
    radix = (k + 1) ** np.arange(edge_count, dtype=np.int64)
    bound = np.arange(1, h + 1, dtype=np.int64)
    best = -1
    best_idx = -1
    for lo in range(0, total_count, chunk):
        hi = min(lo + chunk, total_count)
        idx = np.arange(lo, hi, dtype=np.int64)
        weights = (idx[:, None] // radix[None, :]) % (k + 1)
        feasible = np.ones(len(idx), dtype=bool)
        for row in subset_rows:
            sub = np.sort(weights[:, row], axis=1)
            feasible &= ~(sub >= bound).all(axis=1)
        totals = weights.sum(axis=1)
        totals[~feasible] = -1
        j = int(totals.argmax())
        if totals[j] > best:
            best = int(totals[j])
            best_idx = int(idx[j])
    witness_colex = [(best_idx // int(rx)) % (k + 1) for rx in radix]
    return SearchReport(
        n=n,
        r=r,
        k=k,
        optimum=best,
        witness=_weights_from_colex(n, k, witness_colex),
        nodes_explored=total_count,
        nodes_pruned=0,
        elapsed=time.perf_counter() - t0,
        mode="oracle",
        complete=True,
        backend="numpy",
    )


def bnb_optimum(
    n: int,
    r: int,
    k: int,
    *,
    max_nodes: int = 0,
    max_seconds: float = 0.0,
    symmetry: int = 1,
    kernel=None,
) -> SearchReport:
    """Exact branch-and-bound optimum (scalable route).

    max_nodes/max_seconds of 0 mean unlimited; on budget exhaustion the report
    carries the best verified lower bound with complete=False.  symmetry=1
    (default) restricts vertex 1's star to nonincreasing weights, which every
    weighting attains after relabeling; symmetry=0 searches unreduced.
    """
    if r < 3 or n < r:
        raise InvalidParameterError(f"need n >= r >= 3, got n={n} r={r}")
    if not 0 <= k <= 2**31 - 1:
        raise InvalidParameterError(f"need 0 <= k < 2^31, got k={k}")
    if symmetry not in (0, 1):
        raise InvalidParameterError(f"symmetry must be 0 or 1, got {symmetry}")
    kern = kernel if kernel is not None else _kernel
    t0 = time.perf_counter()
    incumbent = max(construction_values(n, r, k))
    best, best_w, explored, pruned, complete = kern.run_bnb(
        n, r, k, incumbent, max_nodes, max_seconds, symmetry
    )
    witness = (
        _weights_from_colex(n, k, best_w)
        if best_w is not None
        else construction_witness(n, r, k)
    )
    return SearchReport(
        n=n,
        r=r,
        k=k,
        optimum=best,
        witness=witness,
        nodes_explored=explored,
        nodes_pruned=pruned,
        elapsed=time.perf_counter() - t0,
        mode="branch-and-bound",
        complete=complete,
        backend=kern.BACKEND,
    )


@dataclass(frozen=True)
class GridCell:
    n: int
    r: int
    k: int
    optimum: int
    bound: int
    status: str  # "EQUAL" | "VIOLATION" | "INCOMPLETE"
    mode: str


@dataclass(frozen=True)
class GridReport:
    cells: tuple[GridCell, ...]

    def counts(self) -> dict[str, int]:
        out = {"EQUAL": 0, "VIOLATION": 0, "INCOMPLETE": 0}
        for cell in self.cells:
            out[cell.status] += 1
        return out

    def ok(self) -> bool:
        return all(cell.status == "EQUAL" for cell in self.cells)


def _grid_k_values(n: int, r: int, k_policy) -> list[int]:
    """k values per cell: an explicit list, or the two threshold regimes.

    The thresholds policy keeps only k >= C(r,2) (the conjecture's range); at
    n = r-1 both thresholds fall below it and C(r,2) itself is used instead.
    """
    if k_policy != "thresholds":
        return sorted(set(int(k) for k in k_policy))
    from .model import thresholds as _thresholds

    th = _thresholds(n, r)
    ks = [k for k in (th.k1, th.k2) if k >= comb(r, 2)]
    return ks if ks else [comb(r, 2)]


def verify_conjecture_grid(
    r_values,
    n_max: int,
    k_policy="thresholds",
    *,
    max_nodes: int = 0,
    oracle_guard: int = 10**6,
) -> GridReport:
    """Compare computed optima against the conjectured closed form on a grid.

    Cells run the oracle when small enough (or when n < r, where the search
    preconditions do not hold), branch-and-bound otherwise.  Incomplete
    branch-and-bound cells are marked INCOMPLETE, never EQUAL.
    """
    from .model import conjectured_bound

    cells = []
    for r in sorted(set(r_values)):
        for n in range(r - 1, n_max + 1):
            for k in _grid_k_values(n, r, k_policy):
                if n < r or (k + 1) ** comb(n, 2) <= oracle_guard:
                    report = brute_force_optimum(n, r, k)
                else:
                    report = bnb_optimum(n, r, k, max_nodes=max_nodes)
                bound = conjectured_bound(n, r, k)
                if not report.complete:
                    status = "INCOMPLETE"
                elif report.optimum == bound:
                    status = "EQUAL"
                else:
                    status = "VIOLATION"
                cells.append(
                    GridCell(
                        n=n,
                        r=r,
                        k=k,
                        optimum=report.optimum,
                        bound=bound,
                        status=status,
                        mode=report.mode,
                    )
                )
    return GridReport(cells=tuple(cells))
