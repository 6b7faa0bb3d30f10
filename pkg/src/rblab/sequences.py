"""Weight sequences, dominance, the level bound tables, and clique packing.

The bound tables drive the packing procedure: level s cliques must have a
weight sequence dominating b[s], where the b sequences interpolate between a
single heavy edge (s = 2) and the staircase (1, 2, ..., C(r,2)) that
characterizes rainbow cliques (s = r).  Dominance is POINTWISE: a >= b at
every position.  That is the notion every downstream check relies on (it is
exactly Hall's condition for the rainbow matching); a lexicographic variant
is provided for experiments only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ContractViolationError, InvalidParameterError
from .nesting import WeightedGraph

WeightSeq = tuple[int, ...]


def weight_seq(wg: WeightedGraph, vertices) -> WeightSeq:
    """Nondecreasing sequence of the weights inside a vertex subset."""
    vs = sorted(set(vertices))
    if len(vs) < 2:
        raise InvalidParameterError("weight sequence needs at least 2 vertices")
    if vs[0] < 1 or vs[-1] > wg.n:
        raise InvalidParameterError(f"vertices {vs} outside [1,{wg.n}]")
    return tuple(sorted(wg.weight(u, v) for u, v in combinations(vs, 2)))


def dominates(a: WeightSeq, b: WeightSeq) -> bool:
    """Pointwise dominance of equal-length nondecreasing sequences."""
    if len(a) != len(b):
        raise InvalidParameterError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x >= y for x, y in zip(a, b))


def dominates_lex(a: WeightSeq, b: WeightSeq) -> bool:
    """Lexicographic comparison; experimental alternative, not used by any check."""
    if len(a) != len(b):
        raise InvalidParameterError(f"length mismatch: {len(a)} vs {len(b)}")
    return a >= b


def staircase(r: int) -> WeightSeq:
    """(1, 2, ..., C(r,2)): the sequence whose domination marks a rainbow K_r."""
    return tuple(range(1, comb(r, 2) + 1))


@dataclass(frozen=True)
class BoundTables:
    """Per-level constants and weight-sequence bounds for clique order r.

    a[s] for 2 <= s <= r; b[s] (length C(s,2)) for 2 <= s <= r; c[s] (length s)
    for 2 <= s <= r-1, where c[s] collects the values of b[s+1] missing from
    b[s].
    """

    r: int
    a: dict[int, int]
    b: dict[int, WeightSeq]
    c: dict[int, WeightSeq]


def bound_tables(r: int) -> BoundTables:
    if r < 3:
        raise InvalidParameterError(f"bound tables need r >= 3, got {r}")
    h = comb(r, 2)
    a = {s: h - comb(s + 1, 2) + 2 for s in range(2, r)}
    a[r] = 1
    b: dict[int, WeightSeq] = {2: (h,), r: tuple(range(1, h + 1))}
    for s in range(3, r):
        b[s] = (a[s],) + tuple(range(a[s - 1], h + 1))
    c: dict[int, WeightSeq] = {}
    for s in range(2, r):
        missing = list(b[s + 1])
        for x in b[s]:
            missing.remove(x)
        c[s] = tuple(missing)
    _check_tables(r, a, b, c)
    return BoundTables(r=r, a=a, b=b, c=c)


def _check_tables(r: int, a, b, c):
    h = comb(r, 2)
    if a[r] != 1 or a[r - 1] != 2:
        raise ContractViolationError("level constants off at the top levels")
    for s in range(3, r):
        if a[s - 1] - a[s] != s:
            raise ContractViolationError(f"level constant step wrong at s={s}")
    for s in range(2, r + 1):
        if len(b[s]) != comb(s, 2) or list(b[s]) != sorted(b[s]):
            raise ContractViolationError(f"bound sequence malformed at s={s}")
    for s in range(2, r):
        if len(b[s + 1]) != len(b[s]) + len(c[s]):
            raise ContractViolationError(f"missing-value count wrong at s={s}")
    if c[2] != (a[3], a[2]) or (r >= 4 and c[2] != (h - 4, h - 1)):
        raise ContractViolationError("pair-level missing values wrong")


def has_bounded_clique(wg: WeightedGraph, s: int, bound: WeightSeq):
    """Lexicographically smallest s-subset whose weight sequence dominates bound."""
    if not 2 <= s <= wg.n:
        raise InvalidParameterError(f"need 2 <= s <= n = {wg.n}, got s={s}")
    if len(bound) != comb(s, 2):
        raise InvalidParameterError(
            f"bound length {len(bound)} != C({s},2) = {comb(s, 2)}"
        )
    for subset in combinations(range(1, wg.n + 1), s):
        if dominates(weight_seq(wg, subset), bound):
            return subset
    return None


def is_staircase_free(wg: WeightedGraph, r: int) -> bool:
    """True when no r-clique's weight sequence dominates (1, ..., C(r,2))."""
    if r > wg.n:
        return True
    return has_bounded_clique(wg, r, staircase(r)) is None


@dataclass(frozen=True)
class Packing:
    """Vertex-disjoint cliques picked greedily level by level (r-1 down to 2).

    levels[s] holds the chosen s-cliques (each a sorted vertex tuple);
    leftover is the residual vertex set.
    """

    r: int
    n: int
    levels: dict[int, tuple[tuple[int, ...], ...]]
    leftover: tuple[int, ...]

    def m(self, s: int) -> int:
        """Total vertex count at level s (leftover vertices count at level 1)."""
        if s == 1:
            return len(self.leftover)
        return s * len(self.levels.get(s, ()))

    def members_at(self, s: int) -> tuple[tuple[int, ...], ...]:
        if s == 1:
            return tuple((v,) for v in self.leftover)
        return self.levels.get(s, ())

    def minimal_nonempty_level(self) -> int | None:
        for s in range(1, self.r):
            if self.m(s) > 0:
                return s
        return None

    def level_of(self, member: tuple[int, ...]) -> int | None:
        s = len(member)
        return s if member in self.members_at(s) else None


def greedy_packing(wg: WeightedGraph, r: int, *, rng=None) -> Packing:
    """Pack cliques top-down under the per-level bounds, greedily to maximality.

    Default pick is the lexicographically smallest candidate; passing an rng
    picks uniformly among candidates instead (any maximal packing is valid,
    and the test suite exercises both).  At every level no candidate remains
    among the residual vertices on exit, so maximality holds by construction.
    """
    if wg.n < 2 or r < 3:
        raise InvalidParameterError(f"need n >= 2 and r >= 3, got n={wg.n} r={r}")
    tables = bound_tables(r)
    remaining = set(range(1, wg.n + 1))
    levels: dict[int, tuple[tuple[int, ...], ...]] = {}
    for s in range(r - 1, 1, -1):
        chosen = []
        while True:
            candidates = [
                sub
                for sub in combinations(sorted(remaining), s)
                if dominates(weight_seq(wg, sub), tables.b[s])
            ]
            if not candidates:
                break
            pick = candidates[0] if rng is None else candidates[rng.randrange(len(candidates))]
            chosen.append(pick)
            remaining -= set(pick)
        levels[s] = tuple(chosen)
    return Packing(r=r, n=wg.n, levels=levels, leftover=tuple(sorted(remaining)))


def verify_packing(wg: WeightedGraph, r: int, packing: Packing) -> list[str]:
    """Certificate check: disjointness, per-member dominance, level maximality.

    Returns human-readable defect descriptions (empty for a valid packing).
    Maximality of level s means no s-subset of the vertices left after levels
    r-1 .. s dominates b[s].
    """
    tables = bound_tables(r)
    defects = []
    seen: set[int] = set()
    for s in range(r - 1, 1, -1):
        for member in packing.levels.get(s, ()):
            if len(member) != s:
                defects.append(f"member {member} has wrong size for level {s}")
            if seen & set(member):
                defects.append(f"member {member} overlaps earlier members")
            seen.update(member)
            if not dominates(weight_seq(wg, member), tables.b[s]):
                defects.append(f"member {member} fails the level-{s} bound")
    if seen | set(packing.leftover) != set(range(1, wg.n + 1)) or seen & set(
        packing.leftover
    ):
        defects.append("levels and leftover do not partition the vertex set")
    residual = set(range(1, wg.n + 1))
    for s in range(r - 1, 1, -1):
        for member in packing.levels.get(s, ()):
            residual -= set(member)
        for sub in combinations(sorted(residual), s):
            if dominates(weight_seq(wg, sub), tables.b[s]):
                defects.append(f"level {s} not maximal: {sub} dominates its bound")
                break
    return defects


@dataclass(frozen=True)
class VertexBoundViolation:
    """A (level, member, vertex) triple breaking the star-weight inequality."""

    s: int
    member: tuple[int, ...]
    vertex: int
    lhs: int
    rhs: int


def check_claim_vertex(
    wg: WeightedGraph, r: int, k: int, delta: int, packing: Packing
) -> list[VertexBoundViolation]:
    """Star-weight bound from a packed clique to outside vertices at its level or below.

    For every level s in {2..r-1}, member F of level s, and vertex v at level
    <= s outside F: sum of w(v,u) over u in F must be at most
    (s-1)k + a[s+1] - delta.  Returns all violating triples (expected empty
    whenever the graph is staircase-free and k >= C(r,2) + delta).
    """
    if delta not in (0, 1):
        raise InvalidParameterError(f"delta must be 0 or 1, got {delta}")
    if k < comb(r, 2) + delta:
        raise ContractViolationError(f"need k >= C(r,2)+delta = {comb(r, 2) + delta}")
    if not is_staircase_free(wg, r):
        raise ContractViolationError("graph has a staircase-dominating clique")
    tables = bound_tables(r)
    violations = []
    for s in range(2, r):
        low_vertices = set()
        for i in range(1, s + 1):
            for member in packing.members_at(i):
                low_vertices.update(member)
        for member in packing.members_at(s):
            rhs = (s - 1) * k + tables.a[s + 1] - delta
            for v in sorted(low_vertices - set(member)):
                lhs = sum(wg.weight(v, u) for u in member)
                if lhs > rhs:
                    violations.append(
                        VertexBoundViolation(s=s, member=member, vertex=v, lhs=lhs, rhs=rhs)
                    )
    return violations


def check_claim_45(r: int, k: int) -> bool | None:
    """Arithmetic comparison (s-1)k + a[s+1] - 1 <= sk(r-2)/(r-1) for all levels.

    Specific to clique orders 4 and 5; returns None (not applicable) for other
    r.  Checked in cleared-denominator integers.
    """
    if r not in (4, 5):
        return None
    if k < comb(r, 2):
        raise InvalidParameterError(f"need k >= C(r,2) = {comb(r, 2)}, got {k}")
    tables = bound_tables(r)
    return all(
        (r - 1) * ((s - 1) * k + tables.a[s + 1] - 1) <= (r - 2) * s * k
        for s in range(2, r)
    )


def check_claim_induction(
    wg: WeightedGraph,
    r: int,
    k: int,
    delta: int,
    packing: Packing,
    member: tuple[int, ...],
) -> bool:
    """Deletion bound for a member of the minimal nonempty level.

    Verifies, in cleared-denominator integers, that the weight inside the
    member plus the weight leaving it is at most
    k*(C(s,2) + s(n-s)(r-2)/(r-1)) + (1-delta)(n-s).

    Level-1 members (single leftover vertices) are accepted; the result for
    them is reported verbatim, since the only available edge bound at level 1
    comes from pair-level maximality and genuinely allows violations when
    delta = 1.
    """
    if delta not in (0, 1):
        raise InvalidParameterError(f"delta must be 0 or 1, got {delta}")
    if k < comb(r, 2) + delta:
        raise ContractViolationError(f"need k >= C(r,2)+delta = {comb(r, 2) + delta}")
    s = packing.minimal_nonempty_level()
    if s is None or packing.level_of(member) != s:
        raise ContractViolationError("member must belong to the minimal nonempty level")
    n = wg.n
    inside = set(member)
    outside = [v for v in range(1, n + 1) if v not in inside]
    f_inside = sum(wg.weight(u, v) for u, v in combinations(sorted(inside), 2))
    f_cross = sum(wg.weight(u, v) for u in inside for v in outside)
    lhs = f_inside + f_cross
    rhs_scaled = k * ((r - 1) * comb(s, 2) + (r - 2) * s * (n - s)) + (r - 1) * (
        1 - delta
    ) * (n - s)
    return (r - 1) * lhs <= rhs_scaled
