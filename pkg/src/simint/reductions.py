"""Hardness-construction generators and verifiers.

Two constructions are provided as instance factories: an edge-disjoint-paths
to coloring gadget producing two-label interval graphs, and a multicolored
independent set to independent dominating set gadget producing (k+2)-label
interval graphs.  Both emit representations that are checked end to end by
brute-force oracles in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import CapExceeded, Digraph, Graph, GraphError, topological_sort
from .simrep import SimRep, realized_graph

DISJOINT_PATHS_ARC_CAP = 12


class GadgetError(ValueError):
    """Instance outside a construction's domain."""


@dataclass(frozen=True)
class DisjointPathsInstance:
    """Demand routing instance: route, for every H-arc (x, y), a path from
    y to x in G, all paths pairwise arc-disjoint."""

    G: Digraph
    H: Digraph

    def validate(self):
        if self.G.n != self.H.n:
            raise GadgetError("G and H must share a vertex set")
        if not self.G.is_acyclic():
            raise GadgetError("G must be acyclic")
        for v in range(self.G.n):
            balance = (
                self.G.in_degree(v)
                + self.H.in_degree(v)
                - self.G.out_degree(v)
                - self.H.out_degree(v)
            )
            if balance != 0:
                raise GadgetError(f"vertex {v}: G+H in/out degrees differ")


def xi(inst):
    """Total excess H-degree: sum over vertices of max(0, d_H(v) - 1)."""
    return sum(max(0, inst.H.degree(v) - 1) for v in range(inst.H.n))


def preprocess_degree_one(inst):
    """Equivalent instance in which every vertex touches at most one H-arc.

    While some vertex w has H-degree at least 2, a fresh vertex w' splits
    one of its H-arcs: an incoming (v, w) becomes (v, w') with the G-arc
    (w', w) added; an outgoing (w, v) becomes (w', v) with the G-arc
    (w, w') added.  Each step lowers the excess degree by one and keeps the
    instance acyclic, balanced, and solution-equivalent.  Deterministic:
    smallest such w, then its smallest H-neighbor v.
    """
    inst.validate()
    while True:
        over = [v for v in range(inst.H.n) if inst.H.degree(v) >= 2]
        if not over:
            return inst
        w = min(over)
        n = inst.G.n
        g_arcs = set(inst.G.arcs)
        h_arcs = set(inst.H.arcs)
        incoming = sorted(v for (v, t) in h_arcs if t == w)
        if incoming:
            v = incoming[0]
            g_arcs.add((n, w))
            h_arcs.remove((v, w))
            h_arcs.add((v, n))
        else:
            v = min(t for (s, t) in h_arcs if s == w)
            g_arcs.add((w, n))
            h_arcs.remove((w, v))
            h_arcs.add((n, v))
        inst = DisjointPathsInstance(Digraph(n + 1, g_arcs), Digraph(n + 1, h_arcs))


def disjoint_paths_oracle(inst, cap=DISJOINT_PATHS_ARC_CAP):
    """Exhaustive decision of the routing problem by backtracking over
    arc-disjoint path assignments; refuses instances with too many G-arcs."""
    inst.validate()
    if len(inst.G.arcs) > cap:
        raise CapExceeded(
            f"disjoint paths oracle: {len(inst.G.arcs)} arcs exceed cap {cap}"
        )
    demands = sorted(inst.H.arcs)

    def paths(src, dst, used):
        # all arc-sets of paths src -> dst avoiding `used` (G acyclic)
        if src == dst:
            yield frozenset()
            return
        for t in sorted(inst.G.out_neighbors(src)):
            arc = (src, t)
            if arc in used:
                continue
            for rest in paths(t, dst, used | {arc}):
                yield rest | {arc}

    def rec(idx, used):
        if idx == len(demands):
            return True
        x, y = demands[idx]
        for p in paths(y, x, used):
            if rec(idx + 1, used | p):
                return True
        return False

    return rec(0, frozenset())


@dataclass(frozen=True)
class ColoringGadget:
    graph: Graph
    rep: SimRep
    k: int


def coloring_gadget(inst):
    """Two-label interval graph whose chromatic number is |E(H)| exactly
    when the routing instance is solvable.

    Over a topological order of G (positions 1..n), every G-arc (u, v)
    becomes the interval (pos u, pos v) with labels {1}; every H-arc (x, y)
    becomes three intervals: (0, pos y) and (pos x, n+1) with labels {1, 2}
    and (pos y, pos x) with labels {2}.
    """
    inst.validate()
    for v in range(inst.H.n):
        if inst.H.degree(v) > 1:
            raise GadgetError(f"vertex {v} touches more than one H-arc")
    # order vertices so every demand's start precedes its end: topologically
    # sort G together with the reversed H-arcs.  If that digraph is cyclic,
    # replacing each reversed demand by its routing path would close a cycle
    # inside the acyclic G, so the instance is not routable at all.
    combined = sorted(
        set(inst.G.arcs) | {(y, x) for x, y in inst.H.arcs}
    )
    try:
        order = topological_sort(Digraph(inst.G.n, combined))
    except GraphError:
        raise GadgetError(
            "some demand cannot run backwards in any topological order; "
            "the instance admits no routing"
        ) from None
    pos = {v: i + 1 for i, v in enumerate(order)}
    n = inst.G.n
    intervals = []
    labels = []
    for u, v in sorted(inst.G.arcs, key=lambda a: (pos[a[0]], pos[a[1]])):
        intervals.append((Fraction(pos[u]), Fraction(pos[v])))
        labels.append(frozenset([1]))
    for x, y in sorted(inst.H.arcs, key=lambda a: (pos[a[0]], pos[a[1]])):
        i, j = pos[x], pos[y]
        if i <= j:
            raise GadgetError(
                f"H-arc ({x}, {y}) precedes its return path in topological order"
            )
        intervals.append((Fraction(0), Fraction(j)))
        labels.append(frozenset([1, 2]))
        intervals.append((Fraction(i), Fraction(n + 1)))
        labels.append(frozenset([1, 2]))
        intervals.append((Fraction(j), Fraction(i)))
        labels.append(frozenset([2]))
    rep = SimRep(2, tuple(intervals), tuple(labels))
    return ColoringGadget(realized_graph(rep), rep, len(inst.H.arcs))


@dataclass(frozen=True)
class MispInstance:
    """Multicolored independent set instance: k classes of q vertices each;
    class i holds graph vertices (i-1)q .. iq-1 (vertex (i, j), 1-based,
    is graph vertex (i-1)q + j - 1).  Edge order is significant."""

    k: int
    q: int
    edges: tuple

    @property
    def m(self):
        return len(self.edges)

    @property
    def n(self):
        return self.k * self.q

    def vertex(self, i, j):
        return (i - 1) * self.q + (j - 1)

    def class_of(self, v):
        return v // self.q + 1

    def index_of(self, v):
        return v % self.q + 1

    def graph(self):
        return Graph(self.n, [tuple(sorted(e)) for e in self.edges])

    def validate(self):
        if self.k < 1 or self.q < 1:
            raise GadgetError("need at least one class and one vertex per class")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise GadgetError(f"bad edge ({u}, {v})")
            if self.class_of(u) == self.class_of(v) and self.k > 1:
                # with several classes the coloring must be proper; with a
                # single class an internal edge never constrains the (always
                # possible) one-vertex choice, so the degenerate case is kept
                raise GadgetError(
                    f"edge ({u}, {v}) lies inside class {self.class_of(u)}"
                )
            key = frozenset((u, v))
            if key in seen:
                raise GadgetError(f"duplicate edge ({u}, {v})")
            seen.add(key)

    def has_multicolored_independent_set(self):
        g = self.graph()
        for tup in itertools.product(range(self.q), repeat=self.k):
            vs = [i * self.q + j for i, j in enumerate(tup)]
            if g.is_independent_set(vs):
                return True
        return False


@dataclass(frozen=True)
class IdspGadget:
    graph: Graph
    rep: SimRep
    k: int
    q: int
    m: int
    target: int
    w_index: dict  # (i, j, gamma) -> vertex id of the gamma-th interval of (i, j)
    s_index: dict  # (i, gamma) -> vertex id
    e_index: dict  # gamma -> vertex id


def _edge_plans(inst, gamma, g, eps):
    """All workable label placements for edge number gamma.

    The edge between vertex (p, x) and vertex (s, t) with p < s gets the
    interval slot between positions gamma and gamma + 1.  For every other
    index a of class p and b of class s, exactly one unit interval of that
    vertex must pick up the edge's label, chosen to either end ("end") or
    start ("start") at its grid point gamma + (a-1)/q + class*eps.  A
    placement is workable when any two same-label intervals from the two
    classes that overlap belong to vertices that are themselves adjacent
    in the source graph (such a pair is never selected together by an
    independent choice, so the overlap is harmless).  A vertex may also
    skip carrying the label ("drop") provided every cross-class pair of
    non-carrying vertices -- the two endpoints plus all dropped vertices
    -- is adjacent in the source graph: any selection that would rely on
    the missing carrier to dominate the edge interval is then already
    non-independent.  Each plan also fixes the edge interval itself: it
    must reach every chosen carrier interval while staying strictly
    inside the slot (gamma, gamma + 1].
    """
    q = inst.q
    u, v = inst.edges[gamma - 1]
    p, x = inst.class_of(u), inst.index_of(u)
    s, t = inst.class_of(v), inst.index_of(v)
    if p > s:
        p, x, s, t = s, t, p, x
    chains = [(p, a) for a in range(1, q + 1) if a != x]
    if p == s:
        # degenerate one-class edge: every vertex of the class must carry
        # the label, the endpoints included, so that any single choice
        # dominates the edge interval
        chains = [(p, a) for a in range(1, q + 1)]
    else:
        chains += [(s, b) for b in range(1, q + 1) if b != t]

    def grid(i, j):
        return gamma + Fraction(j - 1, q) + i * eps

    def carriers(sides):
        out = []
        for (i, j), side in zip(chains, sides):
            if side == "drop":
                continue
            tau = grid(i, j)
            if side == "end":
                out.append((i, j, gamma, (tau - 1, tau)))
            else:
                out.append((i, j, gamma + 1, (tau, tau + 1)))
        return out

    # prefer no drops, then the layout "lower class ends, higher starts"
    def preference(sides):
        drops = sum(side == "drop" for side in sides)
        flips = sum(
            side != "drop" and (side == "start") != (i == s)
            for (i, j), side in zip(chains, sides)
        )
        return (drops, flips)

    plans = []
    if len(chains) <= 8:
        side_choices = itertools.product(
            ("end", "start", "drop"), repeat=len(chains)
        )
    else:
        side_choices = [
            tuple("start" if i == s else "end" for i, _ in chains),
            tuple("end" if i == s else "start" for i, _ in chains),
        ]
    for sides in sorted(side_choices, key=lambda sd: (preference(sd), sd)):
        dropped = [c for c, side in zip(chains, sides) if side == "drop"]
        if dropped:
            bare_p = [(p, x)] + [c for c in dropped if c[0] == p]
            bare_s = [(s, t)] + [c for c in dropped if c[0] == s]
            if any(
                not g.has_edge(inst.vertex(*a), inst.vertex(*b))
                for a in bare_p
                for b in bare_s
                if (a, b) != ((p, x), (s, t))
            ):
                continue
        picks = carriers(sides)
        ok = True
        for (i1, j1, _, iv1), (i2, j2, _, iv2) in itertools.combinations(picks, 2):
            if i1 == i2:
                continue
            if iv1[0] < iv2[1] and iv2[0] < iv1[1]:
                if not g.has_edge(inst.vertex(i1, j1), inst.vertex(i2, j2)):
                    ok = False
                    break
        if not ok:
            continue
        ends = [iv[1] for _, _, _, iv in picks if iv[1] < gamma + 1]
        starts = [iv[0] for _, _, _, iv in picks if iv[0] > gamma]
        # the edge interval must start below every carrier end and stop
        # above every carrier start, while staying inside the slot
        lo = (min(ends) if ends else gamma + 1) - eps / 4
        hi = max((max(starts) if starts else gamma) + eps / 4, lo + eps / 8)
        if not (gamma < lo < hi <= gamma + 1):
            continue
        if any(not (iv[0] < hi and lo < iv[1]) for _, _, _, iv in picks):
            continue
        plans.append((picks, (lo, hi)))
    return plans


def _layout_edges(inst, g, eps):
    """One workable placement per edge, or None where the search fails.

    Same-label interference is possible only between edges two slots
    apart (they share a label and their carrier intervals can meet in
    the slot between them), so each parity class is laid out by a chain
    search over consecutive same-parity edges.
    """

    def compatible(plan_a, plan_b):
        for i1, j1, _, iv1 in plan_a[0]:
            for i2, j2, _, iv2 in plan_b[0]:
                if i1 == i2:
                    continue
                if iv1[0] < iv2[1] and iv2[0] < iv1[1]:
                    if not g.has_edge(inst.vertex(i1, j1), inst.vertex(i2, j2)):
                        return False
        return True

    chosen = {}
    for parity in (1, 0):
        gammas = [gm for gm in range(1, inst.m + 1) if gm % 2 == parity]
        options = {gm: _edge_plans(inst, gm, g, eps) for gm in gammas}
        viable = {}
        for gm in reversed(gammas):
            nxt = gm + 2
            viable[gm] = [
                plan
                for plan in options[gm]
                if nxt not in options
                or any(compatible(plan, np) for np in viable.get(nxt, []))
            ]
        prev = None
        for gm in gammas:
            pick = None
            for plan in viable.get(gm, []):
                if prev is None or compatible(prev, plan):
                    pick = plan
                    break
            if pick is None:
                raise GadgetError(
                    "no consistent label placement for edge %d" % gm
                )
            chosen[gm] = pick
            prev = pick
    return chosen


def misp_to_idsp_gadget(inst):
    """Interval graph on k+2 labels whose minimum independent dominating
    set has size k(m+1) exactly when the instance has a multicolored
    independent set.

    Vertex (i, j) becomes m+1 unit intervals shifted by (j-1)/q plus a
    class shift of i*eps; class i also gets 2mq+2 short filler intervals
    on label {i}.  Edge gamma becomes one interval inside the slot
    (gamma, gamma + 1) on label k+1 (gamma odd) or k+2 (gamma even), and
    that label is copied onto one unit interval of every same-class
    vertex other than the edge's own endpoints, placed so that the
    carriers of the two endpoint classes never overlap each other (see
    _edge_plans).  A choice of one vertex per class then dominates every
    edge interval exactly when it avoids at least one endpoint of every
    edge, and stays independent exactly when it is independent in the
    source graph.
    """
    inst.validate()
    k, q, m = inst.k, inst.q, inst.m
    if m < 1:
        raise GadgetError("the construction needs at least one edge")
    eps = Fraction(1, 2 * q * (k + 1))
    g = inst.graph()

    def w_interval(i, j, gamma):
        base = Fraction(j - 1, q) + i * eps
        return (gamma - 1 + base, gamma + base)

    intervals = []
    labels = []
    w_index = {}
    extra = {}  # w_index key -> set of edge labels carried
    for i in range(1, k + 1):
        for j in range(1, q + 1):
            for gamma in range(1, m + 2):
                w_index[(i, j, gamma)] = len(intervals)
                intervals.append(w_interval(i, j, gamma))
                labels.append(None)  # assigned once carriers are known
                extra[(i, j, gamma)] = set()
    s_index = {}
    for i in range(1, k + 1):
        for gamma in range(0, 2 * m * q + 2):
            s_index[(i, gamma)] = len(intervals)
            # the 2mq+2 fillers tile the vertex-interval span at step
            # 1/(2q), touching but never overlapping: a filler can then be
            # dominated only by a unit interval of its own class, which
            # forces any small dominating set to run along a single
            # vertex's interval family with no gaps
            intervals.append(
                (
                    Fraction(q - 1, q) + Fraction(gamma, 2 * q) + i * eps,
                    Fraction(q - 1, q) + Fraction(gamma + 1, 2 * q) + i * eps,
                )
            )
            labels.append(frozenset([i]))
    plans = _layout_edges(inst, g, eps)
    e_index = {}
    edge_data = []
    for gamma in range(1, m + 1):
        label = k + 1 if gamma % 2 else k + 2
        plan = plans[gamma]
        assert plan is not None, f"no label placement found for edge {gamma}"
        picks, iv = plan
        assert iv[0] < iv[1]
        for i, j, idx, carrier in picks:
            assert intervals[w_index[(i, j, idx)]] == carrier
            extra[(i, j, idx)].add(label)
        e_index[gamma] = len(intervals)
        intervals.append(iv)
        labels.append(frozenset([label]))
        edge_data.append((label, iv))

    def intersects(a, b):
        return a[0] < b[1] and b[0] < a[1]

    for (i, j, gamma), vid in w_index.items():
        touching = [
            label for label, iv in edge_data if intersects(intervals[vid], iv)
        ]
        assert len(touching) <= 2 and len(set(touching)) == len(touching)
        carried = extra[(i, j, gamma)]
        assert len(carried) <= 2
        labels[vid] = frozenset({i} | carried)

    assert len(intervals) == k * q * (m + 1) + k * (2 * m * q + 2) + m
    rep = SimRep(k + 2, tuple(intervals), tuple(labels))
    return IdspGadget(
        realized_graph(rep),
        rep,
        k,
        q,
        m,
        k * (m + 1),
        w_index,
        s_index,
        e_index,
    )


def check_w_structure(gadget, ids):
    """Does the vertex set contain, for every class i, the complete
    interval family of some vertex (i, j)?"""
    ids = set(ids)
    for i in range(1, gadget.k + 1):
        if not any(
            all(
                gadget.w_index[(i, j, gamma)] in ids
                for gamma in range(1, gadget.m + 2)
            )
            for j in range(1, gadget.q + 1)
        ):
            return False
    return True


def parse_dp_instance(text):
    """Routing instance format: first non-comment line "n", then lines
    "g u v" or "h u v" for arcs; '#' starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise GadgetError("empty instance")
    try:
        n = int(lines[0][1])
    except ValueError:
        raise GadgetError(f"line {lines[0][0]}: expected a vertex count") from None
    g_arcs, h_arcs = [], []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("g", "h"):
            raise GadgetError(f"line {lineno}: expected 'g u v' or 'h u v'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GadgetError(f"line {lineno}: bad vertex ids") from None
        (g_arcs if parts[0] == "g" else h_arcs).append((u, v))
    try:
        inst = DisjointPathsInstance(Digraph(n, g_arcs), Digraph(n, h_arcs))
    except GraphError as exc:
        raise GadgetError(str(exc)) from None
    inst.validate()
    return inst


def parse_misp_instance(text):
    """Instance format: first non-comment line "k q m", then m lines
    "i a j b" meaning an edge between vertex a of class i and vertex b of
    class j (all 1-based); file order fixes the edge order."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise GadgetError("empty instance")
    parts = lines[0][1].split()
    if len(parts) != 3:
        raise GadgetError(f"line {lines[0][0]}: expected 'k q m'")
    try:
        k, q, m = (int(p) for p in parts)
    except ValueError:
        raise GadgetError(f"line {lines[0][0]}: bad header") from None
    if len(lines) - 1 != m:
        raise GadgetError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 4:
            raise GadgetError(f"line {lineno}: expected 'i a j b'")
        try:
            i, a, j, b = (int(p) for p in parts)
        except ValueError:
            raise GadgetError(f"line {lineno}: bad edge") from None
        if not (1 <= i <= k and 1 <= j <= k and 1 <= a <= q and 1 <= b <= q):
            raise GadgetError(f"line {lineno}: edge endpoint out of range")
        edges.append(((i - 1) * q + (a - 1), (j - 1) * q + (b - 1)))
    inst = MispInstance(k, q, tuple(edges))
    inst.validate()
    return inst
