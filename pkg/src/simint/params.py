"""Exact small-scale parameter computation and witness extraction.

Covers the label count parameter (minimum d over all valid representations),
edge clique cover, pathwidth, linear mim-width, path-independence number,
and the witness constructions tying them together.  Everything here is
capped: these searches are exponential and refuse oversized inputs instead
of approximating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .constructors import EdgeCliqueCover, PathDecomposition
from .graphs import (
    CapExceeded,
    Graph,
    Problem,
    _mask_to_vertices,
    brute_force,
    induced_subgraph,
    max_induced_matching,
)
from .simrep import RepError, SimRep, verify_representation

ECC_EXACT_EDGE_CAP = 24
LAYOUT_VERTEX_CAP = 7
PATHWIDTH_VERTEX_CAP = 10
LMIM_VERIFY_VERTEX_CAP = 12


def _refuse_above(value, cap, what):
    if value > cap:
        raise CapExceeded(f"{what}: size {value} exceeds cap {cap}")


def maximal_cliques_masks(adj, n):
    """All maximal cliques of the graph given by adjacency bit masks, as
    sorted vertex tuples in lexicographic order (Bron-Kerbosch)."""
    out = []

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append(tuple(_mask_to_vertices(r)))
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        cand = p & ~adj[pivot]
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit
            cand &= ~bit

    full = (1 << n) - 1
    if n:
        bk(0, full, 0)
    return sorted(out)


def maximal_cliques(g):
    return maximal_cliques_masks(g.adj, g.n)


def _clique_edge_masks(cliques, edge_index):
    masks = []
    for q in cliques:
        mask = 0
        for i, a in enumerate(q):
            for b in q[i + 1 :]:
                idx = edge_index.get((a, b))
                if idx is not None:
                    mask |= 1 << idx
        masks.append(mask)
    return masks


def _min_cover(edge_list, cliques, ub):
    """Minimum-cardinality cover of the edges by the given cliques, if one
    of size <= ub exists, else None.  Branches on the first uncovered edge.
    Returns clique indices; deterministic (first optimum in ascending
    branch order)."""
    m = len(edge_list)
    if m == 0:
        return []
    full = (1 << m) - 1
    edge_index = {e: i for i, e in enumerate(edge_list)}
    cmask = _clique_edge_masks(cliques, edge_index)
    containing = [
        [j for j in range(len(cliques)) if cmask[j] >> i & 1] for i in range(m)
    ]
    if any(not c for c in containing):
        return None
    best = [ub + 1, None]

    def rec(covered, chosen):
        if covered == full:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), list(chosen)
            return
        if len(chosen) + 1 >= best[0]:
            return
        free = ~covered & full
        e = (free & -free).bit_length() - 1
        for j in containing[e]:
            chosen.append(j)
            rec(covered | cmask[j], chosen)
            chosen.pop()

    rec(0, [])
    return best[1]


def ecc_greedy(g):
    """Cover the edges by repeatedly taking the maximal clique covering the
    most still-uncovered edges (ties to the lexicographically least clique)."""
    edges = g.sorted_edges()
    if not edges:
        return EdgeCliqueCover(())
    edge_index = {e: i for i, e in enumerate(edges)}
    cliques = [q for q in maximal_cliques(g) if len(q) >= 2]
    cmask = _clique_edge_masks(cliques, edge_index)
    full = (1 << len(edges)) - 1
    covered = 0
    chosen = []
    while covered != full:
        j = min(
            range(len(cliques)),
            key=lambda j: (-((cmask[j] & ~covered).bit_count()), cliques[j]),
        )
        chosen.append(cliques[j])
        covered |= cmask[j]
    return EdgeCliqueCover(chosen)


def ecc_exact(g, cap=ECC_EXACT_EDGE_CAP):
    """Minimum edge clique cover by branch and bound over uncovered edges;
    returns (value, EdgeCliqueCover).  Refuses graphs above the edge cap."""
    edges = g.sorted_edges()
    _refuse_above(len(edges), cap, "exact edge clique cover")
    if not edges:
        return 0, EdgeCliqueCover(())
    cliques = [q for q in maximal_cliques(g) if len(q) >= 2]
    ub = ecc_greedy(g).size
    chosen = _min_cover(edges, cliques, ub)
    assert chosen is not None
    return len(chosen), EdgeCliqueCover([cliques[j] for j in chosen])


def enumerate_interval_layouts(n):
    """All interleavings of n open/close interval endpoint pairs, up to
    order isomorphism: vertices are numbered by first opening, endpoints
    are the event positions 1..2n.  Yields tuples of (l, r) integer pairs.
    """
    _refuse_above(n, LAYOUT_VERTEX_CAP, "interval layout enumeration")
    if n == 0:
        yield ()
        return
    lo = [0] * n
    hi = [0] * n

    def rec(pos, opened, open_set):
        if pos == 2 * n:
            yield tuple((lo[v], hi[v]) for v in range(n))
            return
        if opened < n:
            lo[opened] = pos + 1
            open_set.append(opened)
            yield from rec(pos + 1, opened + 1, open_set)
            open_set.pop()
        for i in range(len(open_set)):
            v = open_set.pop(i)
            hi[v] = pos + 1
            yield from rec(pos + 1, opened, open_set)
            open_set.insert(i, v)

    yield from rec(0, 0, [])


def _interval_realizer(adj, n):
    """Open intervals with endpoints 1..2n realizing the graph given by
    adjacency masks, or None if it is not an interval graph.

    Searches event sequences: a vertex may open only while all currently
    open vertices are its neighbors and none of its neighbors has already
    closed; it may close only once all its neighbors have opened.  Failures
    are memoized on (opened, open) state."""
    full = (1 << n) - 1
    if n == 0:
        return []
    events = []
    failed = set()

    def rec(opened, open_):
        if opened == full and open_ == 0:
            return True
        if (opened, open_) in failed:
            return False
        closed = opened & ~open_
        cand = open_
        while cand:
            bit = cand & -cand
            cand &= ~bit
            v = bit.bit_length() - 1
            if adj[v] & ~opened == 0:
                events.append((v, False))
                if rec(opened, open_ & ~bit):
                    return True
                events.pop()
        cand = ~opened & full
        while cand:
            bit = cand & -cand
            cand &= ~bit
            v = bit.bit_length() - 1
            if open_ & ~adj[v] == 0 and adj[v] & closed == 0:
                events.append((v, True))
                if rec(opened | bit, open_ | bit):
                    return True
                events.pop()
        failed.add((opened, open_))
        return False

    if not rec(0, 0):
        return None
    intervals = [[0, 0] for _ in range(n)]
    for pos, (v, is_open) in enumerate(events):
        intervals[v][0 if is_open else 1] = pos + 1
    return [tuple(iv) for iv in intervals]


def _edge_supersets(g):
    """Interval candidates F with E(g) subseteq E(F), ascending by number
    of added edges; yields (adjacency masks, added edge list)."""
    non_edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    for size in range(len(non_edges) + 1):
        for extra in itertools.combinations(non_edges, size):
            adj = list(g.adj)
            for u, v in extra:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            yield adj, extra


def si_decide(g, d):
    """Does g admit a representation on at most d labels?  Returns a
    verified SimRep on yes, None on no.

    Searches interval supergraphs F of g; for each, the labels correspond
    to vertex sets that must cover every g-edge while avoiding every edge
    of F that is not an edge of g (such a pair would become a spurious
    adjacency).  Those sets are exactly cliques of the graph whose only
    non-edges are the F-minus-g pairs, so a bounded cover search decides
    each F."""
    _refuse_above(g.n, LAYOUT_VERTEX_CAP, "label-count decision")
    if d < 0:
        raise ValueError("label budget must be nonnegative")
    edges = g.sorted_edges()
    if not edges:
        intervals = tuple((Fraction(2 * v + 1), Fraction(2 * v + 2)) for v in range(g.n))
        return SimRep(0, intervals, (frozenset(),) * g.n)
    if d == 0:
        return None
    full = (1 << g.n) - 1
    for adj, extra in _edge_supersets(g):
        intervals = _interval_realizer(adj, g.n)
        if intervals is None:
            continue
        # cliques allowed as label classes: avoid F-edges that g lacks
        h_adj = [
            (full & ~(1 << v)) & ~(adj[v] & ~g.adj[v]) for v in range(g.n)
        ]
        cliques = maximal_cliques_masks(h_adj, g.n)
        chosen = _min_cover(edges, cliques, d)
        if chosen is None:
            continue
        labels = [set() for _ in range(g.n)]
        for t, j in enumerate(chosen):
            for v in cliques[j]:
                labels[v].add(t + 1)
        rep = SimRep(
            d,
            tuple((Fraction(l), Fraction(r)) for l, r in intervals),
            tuple(frozenset(ls) for ls in labels),
        )
        assert verify_representation(g, rep)
        return rep
    return None


def si_exact(g):
    """Minimum label count and a witness representation, by ascending
    decision.  Zero exactly for edgeless graphs; never exceeds the edge
    count (one label per edge always works)."""
    _refuse_above(g.n, LAYOUT_VERTEX_CAP, "exact label count")
    for d in range(g.m + 1):
        rep = si_decide(g, d)
        if rep is not None:
            return d, rep
    raise AssertionError("unreachable: one label per edge always suffices")


def _boundary_size(g, mask):
    full = (1 << g.n) - 1
    outside = full & ~mask
    return sum(1 for v in _mask_to_vertices(mask) if g.adj[v] & outside)


def _ordering_dp(g, cost):
    """min over vertex orderings of the max over prefixes of cost(prefix
    mask); returns (value, ordering).  cost(full) and cost(0) count too."""
    n = g.n
    full = (1 << n) - 1
    f = [0] * (1 << n)
    for mask in range(1, 1 << n):
        c = cost(mask)
        best = None
        sub = mask
        while sub:
            bit = sub & -sub
            sub &= ~bit
            cand = f[mask & ~bit]
            if best is None or cand < best:
                best = cand
        f[mask] = max(c, best)
    order = []
    mask = full
    while mask:
        target = f[mask]
        for v in range(n):
            bit = 1 << v
            if mask & bit and max(cost(mask), f[mask & ~bit]) == target:
                order.append(v)
                mask &= ~bit
                break
    order.reverse()
    return f[full], order


def _bags_from_ordering(g, order):
    """Path decomposition bags from a vertex ordering: bag j holds the j-th
    vertex plus every earlier vertex still having a neighbor at position
    >= j.  Width equals the ordering's vertex separation."""
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    for j, v in enumerate(order):
        bag = {v}
        for u in order[:j]:
            if any(pos[w] >= j for w in g.neighbors(u)):
                bag.add(u)
        bags.append(bag)
    return PathDecomposition(bags)


def pathwidth_exact(g):
    """Exact pathwidth via the vertex-separation subset dynamic program;
    returns (value, PathDecomposition)."""
    _refuse_above(g.n, PATHWIDTH_VERTEX_CAP, "exact pathwidth")
    if g.n == 0:
        return 0, PathDecomposition(())
    value, order = _ordering_dp(g, lambda mask: _boundary_size(g, mask))
    pd = _bags_from_ordering(g, order)
    pd.validate(g)
    assert pd.width == value
    return value, pd


@dataclass(frozen=True)
class LmimWitness:
    """A vertex ordering with per-prefix-cut induced matching bounds."""

    order: tuple
    cut_values: tuple  # None entries when left unverified
    bound: int
    verified: bool

    def validate(self, g):
        for i in range(1, len(self.order) + 1):
            left = set(self.order[:i])
            cut = [
                e for e in g.sorted_edges() if (e[0] in left) != (e[1] in left)
            ]
            value, _ = max_induced_matching(g, cut)
            if value > self.bound:
                raise AssertionError(
                    f"cut after position {i} has induced matching {value} > {self.bound}"
                )


def _cut_mim(g, mask):
    full = (1 << g.n) - 1
    cut = [
        e
        for e in g.sorted_edges()
        if bool(mask >> e[0] & 1) != bool(mask >> e[1] & 1)
    ]
    value, _ = max_induced_matching(g, cut)
    return value


def linear_mim_exact(g):
    """Exact linear mim-width by subset dynamic programming over orderings;
    returns (value, LmimWitness) with every cut certified."""
    _refuse_above(g.n, LAYOUT_VERTEX_CAP, "exact linear mim-width")
    if g.n == 0:
        return 0, LmimWitness((), (), 0, True)
    cache = {}

    def cost(mask):
        if mask not in cache:
            cache[mask] = _cut_mim(g, mask)
        return cache[mask]

    value, order = _ordering_dp(g, cost)
    cuts = []
    left = 0
    for v in order:
        left |= 1 << v
        cuts.append(cost(left))
    witness = LmimWitness(tuple(order), tuple(cuts), value, True)
    witness.validate(g)
    return value, witness


def path_alpha_exact(g):
    """Minimum over interval supergraphs F of g of the largest independence
    number (in g) of a maximal clique of F."""
    _refuse_above(g.n, LAYOUT_VERTEX_CAP, "exact path-independence number")
    if g.n == 0:
        return 0
    best = None
    for adj, extra in _edge_supersets(g):
        intervals = _interval_realizer(adj, g.n)
        if intervals is None:
            continue
        worst = 0
        for bag in _interval_sweep_bags(intervals):
            sub, _ = induced_subgraph(g, bag)
            alpha, _ = brute_force(Problem.MAX_INDEPENDENT_SET, sub)
            worst = max(worst, alpha)
        if best is None or worst < best:
            best = worst
        if best == 1:
            return 1
    return best


def _interval_sweep_bags(intervals):
    """Maximal groups of pairwise intersecting open intervals, in sweep
    order (closes processed before opens at equal coordinates)."""
    events = []
    for v, (l, r) in enumerate(intervals):
        events.append((l, 1, v))
        events.append((r, 0, v))
    events.sort(key=lambda e: (e[0], e[1]))
    active = set()
    bags = []
    dirty = False
    for _, kind, v in events:
        if kind == 1:
            active.add(v)
            dirty = True
        else:
            if dirty:
                bags.append(sorted(active))
                dirty = False
            active.remove(v)
    return bags


@dataclass(frozen=True)
class ThinnessWitness:
    """A vertex partition plus an ordering certifying an upper bound on
    thinness: within the order, whenever two same-class vertices both
    precede a third, a neighbor of the earlier one is a neighbor of the
    later one too."""

    partition: tuple
    order: tuple

    def validate(self, g):
        klass = {}
        for i, part in enumerate(self.partition):
            for v in part:
                klass[v] = i
        pos = {v: i for i, v in enumerate(self.order)}
        for a in self.order:
            for b in self.order:
                if pos[a] >= pos[b] or klass[a] != klass[b]:
                    continue
                for c in self.order:
                    if pos[c] > pos[b] and g.has_edge(a, c) and not g.has_edge(b, c):
                        raise AssertionError(
                            f"vertices {a},{b},{c} violate the thinness property"
                        )


def _right_end_order(rep):
    return tuple(sorted(range(rep.n), key=lambda v: (rep.intervals[v][1], v)))


def thinness_witness(g, rep):
    """Partition vertices by equal label sets and order them by ascending
    right endpoint; this certifies thinness <= 2^d."""
    res = verify_representation(g, rep)
    if not res:
        raise RepError(
            f"representation does not match graph: {res.kind} pair {res.pair}"
        )
    classes = {}
    for v in range(g.n):
        classes.setdefault(rep.labels[v], []).append(v)
    partition = tuple(
        tuple(classes[ls]) for ls in sorted(classes, key=sorted)
    )
    assert len(partition) <= 2**rep.d
    witness = ThinnessWitness(partition, _right_end_order(rep))
    witness.validate(g)
    return witness


def lmim_witness(g, rep):
    """Order by ascending right endpoint; every prefix cut then has induced
    matching at most d.  Cuts are certified by brute force up to the
    verification cap, beyond which the witness is emitted unverified."""
    res = verify_representation(g, rep)
    if not res:
        raise RepError(
            f"representation does not match graph: {res.kind} pair {res.pair}"
        )
    order = _right_end_order(rep)
    if g.n > LMIM_VERIFY_VERTEX_CAP:
        return LmimWitness(order, (None,) * g.n, rep.d, False)
    cuts = []
    left = 0
    for v in order:
        left |= 1 << v
        cuts.append(_cut_mim(g, left))
    witness = LmimWitness(order, tuple(cuts), rep.d, True)
    witness.validate(g)
    return witness


def path_decomposition_from_rep(g, rep):
    """Bags are the maximal cliques of the interval factor, in sweep order.

    Each bag is a clique of the label factor, so the result is a valid path
    decomposition whose bags have bounded size (at most d times the clique
    number) and bounded independence number in g (at most d)."""
    res = verify_representation(g, rep)
    if not res:
        raise RepError(
            f"representation does not match graph: {res.kind} pair {res.pair}"
        )
    if g.n == 0:
        return PathDecomposition(())
    raw = _interval_sweep_bags(rep.intervals)
    sets = [frozenset(b) for b in raw]
    bags = [
        b
        for i, b in enumerate(sets)
        if not any(i != j and b < other for j, other in enumerate(sets))
        and b not in sets[:i]
    ]
    pd = PathDecomposition(bags)
    pd.validate(g)
    return pd
