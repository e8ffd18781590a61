"""Solvers driven by an interval-plus-label representation.

Maximal clique enumeration and max-weight clique, plus bounded search trees
for independent set and dominating set parameterized by solution size and
label count.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import CapExceeded
from .simrep import RepError, intervals_intersect, verify_representation

DISTINCT_LABEL_SET_CAP = 20


def _distinct_label_sets(rep):
    """Distinct nonempty label sets, in first-occurrence order of their
    sorted contents (deterministic, independent of endpoint values)."""
    return sorted({ls for ls in rep.labels if ls}, key=sorted)


def _sweep_groups(rep, vertices):
    """Maximal groups of pairwise-intersecting open intervals among the
    given vertices.  Closes are processed before opens at equal coordinates,
    so touching intervals never land in one group."""
    events = []
    for v in vertices:
        l, r = rep.intervals[v]
        events.append((l, 1, v))  # open
        events.append((r, 0, v))  # close
    events.sort(key=lambda e: (e[0], e[1]))
    active = set()
    groups = []
    dirty = False
    for _, kind, v in events:
        if kind == 1:
            active.add(v)
            dirty = True
        else:
            if dirty:
                groups.append(frozenset(active))
                dirty = False
            active.remove(v)
    return groups


def _is_maximal_clique(g, clique):
    mask = 0
    for v in clique:
        mask |= 1 << v
    for u in range(g.n):
        if mask >> u & 1:
            continue
        if g.closed_mask(u) & mask == mask:
            return False
    return True


def enumerate_maximal_cliques(g, rep):
    """All maximal cliques of g, each once, sorted lexicographically.

    For every pairwise-intersecting selection of the distinct label sets,
    the vertices carrying a selected set pairwise share labels, so each
    maximal group of pairwise-intersecting intervals among them is a clique;
    every maximal clique of g shows up as such a group for the selection
    made of its own label sets.  Candidates not maximal in g are dropped.
    """
    res = verify_representation(g, rep)
    if not res:
        raise RepError(
            f"representation does not match graph: {res.kind} pair {res.pair}"
        )
    sets = _distinct_label_sets(rep)
    if len(sets) > DISTINCT_LABEL_SET_CAP:
        raise CapExceeded(
            f"{len(sets)} distinct label sets exceed cap {DISTINCT_LABEL_SET_CAP}"
        )
    by_set = {ls: [v for v in range(g.n) if rep.labels[v] == ls] for ls in sets}
    found = set()
    t = len(sets)
    for mask in range(1, 1 << t):
        chosen = [sets[i] for i in range(t) if mask >> i & 1]
        if any(
            not (a & b)
            for i, a in enumerate(chosen)
            for b in chosen[i + 1 :]
        ):
            continue
        vertices = [v for ls in chosen for v in by_set[ls]]
        for group in _sweep_groups(rep, vertices):
            if _is_maximal_clique(g, group):
                found.add(group)
    for v in range(g.n):
        if g.degree(v) == 0:
            found.add(frozenset([v]))
    out = sorted(tuple(sorted(c)) for c in found)
    if rep.d <= 6:
        assert len(out) <= (1 << (1 << rep.d)) * max(1, g.n)
    return [set(c) for c in out]


def max_weight_clique(g, rep):
    """Maximum total-weight clique (unit weights when g is unweighted);
    scans the maximal cliques.  Returns (weight, clique). Ties go to the
    lexicographically least vertex tuple."""
    best = None
    for clique in enumerate_maximal_cliques(g, rep):
        c = tuple(sorted(clique))
        w = sum((g.weight(v) for v in c), Fraction(0))
        key = (-w, c)
        if best is None or key < best:
            best = key
    if best is None:
        return Fraction(0), set()
    return -best[0], set(best[1])


class SearchStats:
    """Instrumentation for the bounded search trees: counts nodes that
    branch (the tree has depth <= k and branching factor <= 2^d, so the
    counter stays within 2^(k*d))."""

    def __init__(self):
        self.nodes = 0


def _first_ending_per_label_set(rep, vertices):
    """For each distinct label set among the vertices, the one with the
    smallest right endpoint (ties to the smaller id)."""
    best = {}
    for v in sorted(vertices):
        ls = rep.labels[v]
        if ls not in best or rep.intervals[v][1] < rep.intervals[best[ls]][1]:
            best[ls] = v
    return sorted(best.values())


def independent_set_fpt(g, rep, k, stats=None):
    """Decide whether g has an independent set of size k; returns a witness
    list on yes, None on no.

    Branches, per distinct label set among the remaining vertices, on the
    first-ending vertex of that set: some maximum independent set can always
    be rewritten to use it.  Isolated vertices are collected up front since
    they join any independent set.
    """
    res = verify_representation(g, rep)
    if not res:
        raise RepError(
            f"representation does not match graph: {res.kind} pair {res.pair}"
        )
    if stats is None:
        stats = SearchStats()
    if k < 0:
        raise ValueError("target size must be nonnegative")
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    taken = isolated[: min(k, len(isolated))]
    alive = 0
    for v in range(g.n):
        if g.degree(v) > 0:
            alive |= 1 << v
    failed = set()

    def rec(alive_mask, need):
        if need == 0:
            return []
        if alive_mask.bit_count() < need or (alive_mask, need) in failed:
            return None
        stats.nodes += 1
        vertices = [v for v in range(g.n) if alive_mask >> v & 1]
        for u in _first_ending_per_label_set(rep, vertices):
            sub = rec(alive_mask & ~g.closed_mask(u), need - 1)
            if sub is not None:
                return [u] + sub
        failed.add((alive_mask, need))
        return None

    need = k - len(taken)
    sub = rec(alive, need)
    if sub is None:
        return None
    return sorted(taken + sub)


def dominating_set_fpt(g, rep, k, stats=None):
    """Decide whether g has a dominating set of size at most k; returns a
    witness list on yes, None on no.

    Picks the first-ending undominated vertex v; some minimum dominating set
    covers v by the last-ending vertex of one of the distinct label sets in
    N[v], so those are the branches.  Isolated vertices can only dominate
    themselves and are collected up front.
    """
    res = verify_representation(g, rep)
    if not res:
        raise RepError(
            f"representation does not match graph: {res.kind} pair {res.pair}"
        )
    if stats is None:
        stats = SearchStats()
    if k < 0:
        raise ValueError("target size must be nonnegative")
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    if len(isolated) > k:
        return None
    undominated = 0
    for v in range(g.n):
        if g.degree(v) > 0:
            undominated |= 1 << v
    failed = set()

    def last_ending_per_label_set(vertices):
        best = {}
        for u in sorted(vertices):
            ls = rep.labels[u]
            if ls not in best or rep.intervals[u][1] > rep.intervals[best[ls]][1]:
                best[ls] = u
        return sorted(best.values())

    def rec(und_mask, budget):
        if und_mask == 0:
            return []
        if budget == 0 or (und_mask, budget) in failed:
            return None
        stats.nodes += 1
        v = min(
            (v for v in range(g.n) if und_mask >> v & 1),
            key=lambda v: (rep.intervals[v][1], v),
        )
        closed = [u for u in range(g.n) if g.closed_mask(v) >> u & 1]
        for u in last_ending_per_label_set(closed):
            sub = rec(und_mask & ~g.closed_mask(u), budget - 1)
            if sub is not None:
                return [u] + sub
        failed.add((und_mask, budget))
        return None

    sub = rec(undominated, k - len(isolated))
    if sub is None:
        return None
    return sorted(isolated + sub)
