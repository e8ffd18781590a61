"""Constructions of interval-plus-label representations.

Every constructor returns a representation that is valid for its input graph
by construction; the acceptance tests re-check them with the verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Family, Graph, GraphError, make_named_graph
from .simrep import MAX_LABELS, RepError, SimRep, restrict


class ConstructionError(ValueError):
    """Invalid input to a constructor (bad cover, bad decomposition, ...)."""


@dataclass(frozen=True)
class EdgeCliqueCover:
    """A sequence of cliques covering every edge of a graph."""

    cliques: tuple

    def __init__(self, cliques):
        object.__setattr__(
            self, "cliques", tuple(tuple(sorted(set(q))) for q in cliques)
        )

    @property
    def size(self):
        return len(self.cliques)

    def validate(self, g):
        """Raise ConstructionError naming the first offending clique or edge."""
        if self.size > MAX_LABELS:
            raise ConstructionError(
                f"cover has {self.size} cliques, exceeding the label cap {MAX_LABELS}"
            )
        for i, q in enumerate(self.cliques):
            for v in q:
                if not (0 <= v < g.n):
                    raise ConstructionError(f"clique {i}: vertex {v} out of range")
            if not g.is_clique(q):
                bad = next(
                    (u, v)
                    for a, u in enumerate(q)
                    for v in q[a + 1 :]
                    if not g.has_edge(u, v)
                )
                raise ConstructionError(
                    f"clique {i}: vertices {bad[0]} and {bad[1]} are not adjacent"
                )
        covered = set()
        for q in self.cliques:
            for a, u in enumerate(q):
                for v in q[a + 1 :]:
                    covered.add((u, v))
        for e in g.sorted_edges():
            if e not in covered:
                raise ConstructionError(f"edge {e[0]}-{e[1]} not covered by any clique")


def construct_from_ecc(g, cover):
    """Representation with d = cover size: all intervals equal, labels by
    clique membership.  Two vertices then share a label iff some clique
    contains both, which happens iff they are adjacent."""
    cover.validate(g)
    iv = (Fraction(0), Fraction(1))
    labels = []
    for v in range(g.n):
        labels.append(frozenset(i + 1 for i, q in enumerate(cover.cliques) if v in q))
    return SimRep(cover.size, (iv,) * g.n, tuple(labels))


def construct_from_edges(g):
    """Representation with one label per edge (the trivial clique cover)."""
    return construct_from_ecc(g, EdgeCliqueCover(g.sorted_edges()))


def bipartition(g):
    """A 2-coloring (X, Y) of g found by BFS, or None if g is not bipartite."""
    color = [None] * g.n
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return (
        [v for v in range(g.n) if color[v] == 0],
        [v for v in range(g.n) if color[v] == 1],
    )


def construct_bipartite(g, sides=None):
    """Representation of a bipartite graph with d = size of the smaller side.

    The smaller side gets one private label each on a common interval; the
    larger side gets pairwise disjoint subintervals and collects the labels
    of its neighbors.
    """
    if sides is None:
        sides = bipartition(g)
        if sides is None:
            raise ConstructionError("graph is not bipartite")
    xs, ys = (sorted(set(s)) for s in sides)
    if sorted(xs + ys) != list(range(g.n)):
        raise ConstructionError("sides must partition the vertex set")
    xset = set(xs)
    for u, v in g.sorted_edges():
        if (u in xset) == (v in xset):
            raise ConstructionError(f"edge {u}-{v} does not cross the given sides")
    if len(xs) > len(ys):
        xs, ys = ys, xs
    if len(xs) > MAX_LABELS:
        raise ConstructionError(
            f"smaller side has {len(xs)} vertices, exceeding the label cap"
        )
    d = len(xs)
    label_of = {x: i + 1 for i, x in enumerate(xs)}
    intervals = [None] * g.n
    labels = [None] * g.n
    for x in xs:
        intervals[x] = (Fraction(0), Fraction(1))
        labels[x] = frozenset([label_of[x]])
    q = max(1, len(ys))
    for j, y in enumerate(ys):
        intervals[y] = (Fraction(3 * j + 1, 3 * q), Fraction(3 * j + 2, 3 * q))
        labels[y] = frozenset(label_of[x] for x in g.neighbors(y) if x in label_of)
    return SimRep(d, tuple(intervals), tuple(labels))


def construct_3partite(s):
    """The complete 3-partite graph with equal parts of size s, together
    with a representation on s*s labels.

    Parts X, Y, Z use vertices 0..s-1, s..2s-1, 2s..3s-1.  Y and Z share a
    common interval; Y vertex i carries the label block {(i-1)s+1..is} and Z
    vertex j the transversal {(t-1)s+j : t}, so each Y-Z pair meets in
    exactly one label while pairs inside Y or inside Z share none.  X
    vertices carry all labels on pairwise disjoint subintervals.
    """
    if s < 1:
        raise ConstructionError("part size must be positive")
    if s * s > MAX_LABELS:
        raise ConstructionError(f"needs {s * s} labels, exceeding the cap {MAX_LABELS}")
    g = make_named_graph(Family.COMPLETE_3PARTITE, (s, s, s))
    d = s * s
    full = frozenset(range(1, d + 1))
    intervals = [None] * (3 * s)
    labels = [None] * (3 * s)
    for i in range(s):
        intervals[i] = (Fraction(3 * i + 1, 3 * s), Fraction(3 * i + 2, 3 * s))
        labels[i] = full
    for i in range(s):
        intervals[s + i] = (Fraction(0), Fraction(1))
        labels[s + i] = frozenset(range(i * s + 1, i * s + s + 1))
    for j in range(s):
        intervals[2 * s + j] = (Fraction(0), Fraction(1))
        labels[2 * s + j] = frozenset(t * s + j + 1 for t in range(s))
    return g, SimRep(d, tuple(intervals), tuple(labels))


def construct_cycle(n):
    """The cycle on n >= 4 vertices with a two-label representation.

    Vertices 1..n-1 form an interval path on label 1; vertex 0 spans them
    all on label 2, which only the path ends 1 and n-1 also carry.
    """
    if n < 4:
        raise ConstructionError("two labels are only needed for cycles on >= 4 vertices")
    g = make_named_graph(Family.CYCLE, (n,))
    intervals = [None] * n
    labels = [None] * n
    intervals[0] = (Fraction(0), Fraction(2 * n + 1))
    labels[0] = frozenset([2])
    for i in range(1, n):
        intervals[i] = (Fraction(2 * i), Fraction(2 * i + 3))
        labels[i] = frozenset([1, 2]) if i in (1, n - 1) else frozenset([1])
    return g, SimRep(2, tuple(intervals), tuple(labels))


@dataclass(frozen=True)
class PathDecomposition:
    """A sequence of bags covering vertices and edges, with each vertex's
    bags consecutive."""

    bags: tuple

    def __init__(self, bags):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, g):
        """Raise ConstructionError citing the first violated axiom."""
        seen = set()
        for i, b in enumerate(self.bags):
            for v in b:
                if not (0 <= v < g.n):
                    raise ConstructionError(f"bag {i}: vertex {v} out of range")
            seen |= b
        for v in range(g.n):
            if v not in seen:
                raise ConstructionError(f"vertex {v} appears in no bag")
        for u, v in g.sorted_edges():
            if not any(u in b and v in b for b in self.bags):
                raise ConstructionError(f"edge {u}-{v} contained in no bag")
        for v in range(g.n):
            idx = [i for i, b in enumerate(self.bags) if v in b]
            if idx and idx[-1] - idx[0] + 1 != len(idx):
                raise ConstructionError(f"bags containing vertex {v} are not consecutive")


def _normalize_bags(pd, g):
    """Rewrite the bag sequence so every bag has the maximum size k and
    consecutive bags differ by exactly one swapped vertex.

    Padding uses fresh helper vertices (ids >= g.n), each living in a
    consecutive run of bags and adjacent to nothing.  Returns (sequence of
    size-k vertex sets, k, total vertex count including helpers).
    """
    k = max(len(b) for b in pd.bags)
    fresh = g.n
    cur = sorted(pd.bags[0])
    while len(cur) < k:
        cur.append(fresh)
        fresh += 1
    seq = [frozenset(cur)]
    current = set(cur)
    for b in pd.bags[1:]:
        incoming = sorted(b - current)
        if not incoming:
            continue
        outgoing = sorted(current - b, key=lambda v: (v < g.n, v))
        # drop stale helpers first, then real vertices in ascending order
        while len(incoming) < len(outgoing):
            incoming.append(fresh)
            fresh += 1
        for x, y in zip(outgoing, incoming):
            current.remove(x)
            current.add(y)
            seq.append(frozenset(current))
    return seq, k, fresh


def _pair_sweep(occupants, ends, adjacent, label_a, label_b, out_labels):
    """Assign the two labels of one slot pair along the bag sequence.

    occupants = (slot_i sequence, slot_j sequence) of vertex reigns in
    order.  One vertex is active and owns the current label; a co-occupant
    outliving it takes over, keeping the label iff the two are adjacent.
    Co-occupants ending earlier receive the label only when adjacent.
    """

    def key(v):
        return (ends[v], -v)

    si, sj = occupants
    pi = pj = 0
    if key(si[0]) >= key(sj[0]):
        active_slot = 0
    else:
        active_slot = 1
    active = (si, sj)[active_slot][0]
    label = label_a
    out_labels[active].add(label)
    while True:
        other_seq = (si, sj)[1 - active_slot]
        other_ptr = (pi, pj)[1 - active_slot]
        if other_ptr >= len(other_seq):
            return
        other = other_seq[other_ptr]
        if key(other) < key(active):
            if adjacent(active, other):
                out_labels[other].add(label)
            if 1 - active_slot == 0:
                pi += 1
            else:
                pj += 1
        else:
            if not adjacent(active, other):
                label = label_b if label == label_a else label_a
            out_labels[other].add(label)
            if active_slot == 0:
                pi += 1
            else:
                pj += 1
            active = other
            active_slot = 1 - active_slot


def construct_from_path_decomposition(g, pd):
    """Representation from a path decomposition of width k-1 on k(k-1) labels.

    Bags are normalized to constant size k with single-swap transitions;
    each vertex occupies one of k slots for its whole life and its interval
    is its bag range.  Every slot pair gets two private labels distributed
    by a sweep so that co-occupying vertices share one iff adjacent.
    """
    pd.validate(g)
    if g.n == 0:
        return SimRep(0, (), ())
    seq, k, total = _normalize_bags(pd, g)
    if k * (k - 1) > MAX_LABELS:
        raise ConstructionError(
            f"width {k - 1} needs {k * (k - 1)} labels, exceeding the cap {MAX_LABELS}"
        )
    # slot assignment by inheritance across single-swap transitions
    slot_of = {}
    slots = [None] * k
    for s, v in enumerate(sorted(seq[0])):
        slot_of[v] = s
        slots[s] = v
    first = {v: 0 for v in seq[0]}
    last = {v: 0 for v in seq[0]}
    reigns = [[slots[s]] for s in range(k)]
    for t in range(1, len(seq)):
        gone = next(iter(seq[t - 1] - seq[t]))
        new = next(iter(seq[t] - seq[t - 1]))
        s = slot_of[gone]
        slot_of[new] = s
        slots[s] = new
        reigns[s].append(new)
        first[new] = t
        for v in seq[t]:
            last[v] = t
    ends = {v: last[v] for v in first}

    def adjacent(u, v):
        return u < g.n and v < g.n and g.has_edge(u, v)

    out_labels = {v: set() for v in first}
    pair_index = 0
    for i in range(k):
        for j in range(i + 1, k):
            _pair_sweep(
                (reigns[i], reigns[j]),
                ends,
                adjacent,
                2 * pair_index + 1,
                2 * pair_index + 2,
                out_labels,
            )
            pair_index += 1
    quarter = Fraction(1, 4)
    intervals = tuple(
        (Fraction(first[v] + 1) - quarter, Fraction(last[v] + 1) + quarter)
        for v in range(total)
    )
    labels = tuple(frozenset(out_labels[v]) for v in range(total))
    full = SimRep(k * (k - 1), intervals, labels)
    return restrict(full, range(g.n))
