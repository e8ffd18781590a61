"""Graph data model, edge-list parsing, named families, and brute-force oracles.

Vertices are dense integers 0..n-1.  Adjacency is stored as per-vertex bit
masks so that adjacency tests and neighborhood removals are O(1) word
operations, which matters inside the branch-and-bound oracles.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction


class GraphError(ValueError):
    """Malformed graph input or invalid operation arguments."""


class CapExceeded(RuntimeError):
    """An exact oracle was asked to exceed its configured size cap."""


# Default caps, chosen so a single oracle call stays well under 10 s.
SUBSET_ORACLE_CAP = 16
COLORING_ORACLE_CAP = 10
INDUCED_MATCHING_CAP = 10


class Problem(Enum):
    MAX_INDEPENDENT_SET = "max_independent_set"
    MIN_DOMINATING_SET = "min_dominating_set"
    MIN_INDEPENDENT_DOMINATING_SET = "min_independent_dominating_set"
    CHROMATIC_NUMBER = "chromatic_number"
    CLIQUE_NUMBER = "clique_number"
    MAX_INDUCED_MATCHING = "max_induced_matching"


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_3PARTITE = "complete_3partite"
    COMPLEMENT_OF_MATCHING = "complement_of_matching"
    STAR = "star"


class Graph:
    """Simple undirected graph with optional positive rational vertex weights.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("n", "edges", "adj", "weights", "_hash")

    def __init__(self, n, edges=(), weights=None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = set()
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(adj)
        if weights is None:
            self.weights = None
        else:
            w = [Fraction(1)] * n
            for v, wt in dict(weights).items():
                wt = Fraction(wt)
                if wt <= 0:
                    raise GraphError(f"weight of vertex {v} must be positive")
                w[v] = wt
            self.weights = tuple(w)
        self._hash = hash((self.n, self.edges, self.weights))

    @property
    def m(self):
        return len(self.edges)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    def closed_mask(self, v):
        return self.adj[v] | (1 << v)

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def weight(self, v):
        return Fraction(1) if self.weights is None else self.weights[v]

    def sorted_edges(self):
        return sorted(self.edges)

    def complement(self):
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(self.n), 2)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, edges)

    def is_clique(self, vertices):
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def is_independent_set(self, vertices):
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def is_dominating_set(self, vertices):
        covered = 0
        for v in vertices:
            covered |= self.closed_mask(v)
        return covered == (1 << self.n) - 1 if self.n else True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.weights) == (other.n, other.edges, other.weights)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Simple directed graph; used by the reduction generators."""

    __slots__ = ("n", "arcs")

    def __init__(self, n, arcs=()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = set()
        for a in arcs:
            u, v = a
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc {a} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.add((u, v))
        self.n = n
        self.arcs = frozenset(norm)

    def out_neighbors(self, v):
        return sorted(w for u, w in self.arcs if u == v)

    def in_degree(self, v):
        return sum(1 for _, w in self.arcs if w == v)

    def out_degree(self, v):
        return sum(1 for u, _ in self.arcs if u == v)

    def degree(self, v):
        return sum(1 for a in self.arcs if v in a)

    def is_acyclic(self):
        return topological_sort(self) is not None

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n, self.arcs) == (other.n, other.arcs)

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def topological_sort(dg):
    """Kahn's algorithm, smallest id first; None if the digraph has a cycle."""
    indeg = [dg.in_degree(v) for v in range(dg.n)]
    avail = sorted(v for v in range(dg.n) if indeg[v] == 0)
    order = []
    while avail:
        v = avail.pop(0)
        order.append(v)
        changed = False
        for w in dg.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                avail.append(w)
                changed = True
        if changed:
            avail.sort()
    return order if len(order) == dg.n else None


def parse_graph(text):
    """Parse the edge-list format: header "n m", then m lines "u v" (u < v).

    '#' starts a comment line; blank lines are ignored.  Raises GraphError
    naming the offending line number.
    """
    header = None
    edges = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: header must be 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: header must be 'n m'") from None
            if n < 0 or m < 0:
                raise GraphError(f"line {lineno}: negative count in header")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected integer vertex ids") from None
        if not (0 <= u < v < n):
            raise GraphError(f"line {lineno}: edge ({u}, {v}) violates 0 <= u < v < n")
        if (u, v) in edges:
            raise GraphError(f"line {lineno}: duplicate edge ({u}, {v})")
        edges.append((u, v))
    if header is None:
        raise GraphError("empty document, missing 'n m' header")
    if len(edges) != m:
        raise GraphError(f"header announced {m} edges but document has {len(edges)}")
    return Graph(n, edges)


def write_graph(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def induced_subgraph(g, vertices):
    """Induced subgraph with vertices relabeled 0..|s|-1; returns (graph, id_map).

    id_map[new_id] = old_id, sorted ascending by old id.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    weights = None
    if g.weights is not None:
        weights = {i: g.weights[v] for i, v in enumerate(vs)}
    return Graph(len(vs), edges, weights), vs


def make_named_graph(family, params):
    """Build a named family member.  Canonical numbering per family:

    PATH(k): 0-1-...-k-1.  CYCLE(k): 0-1-...-k-1-0.  COMPLETE(k).
    COMPLETE_BIPARTITE(a, b): side X = 0..a-1, side Y = a..a+b-1.
    COMPLETE_3PARTITE(a, b, c): parts 0..a-1, a..a+b-1, a+b..a+b+c-1.
    COMPLEMENT_OF_MATCHING(n): even n, matched pairs (2i, 2i+1) removed from K_n.
    STAR(k): center 0 with k leaves 1..k.
    """
    family = Family(family)
    params = list(params)
    if any(p <= 0 for p in params):
        raise GraphError("all size parameters must be positive")
    if family is Family.PATH:
        (k,) = params
        return Graph(k, [(i, i + 1) for i in range(k - 1)])
    if family is Family.CYCLE:
        (k,) = params
        if k < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return Graph(k, [(i, (i + 1) % k) for i in range(k)])
    if family is Family.COMPLETE:
        (k,) = params
        return Graph(k, itertools.combinations(range(k), 2))
    if family is Family.COMPLETE_BIPARTITE:
        a, b = params
        return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if family is Family.COMPLETE_3PARTITE:
        a, b, c = params
        parts = [list(range(a)), list(range(a, a + b)), list(range(a + b, a + b + c))]
        edges = []
        for p, q in itertools.combinations(parts, 2):
            edges.extend((u, v) for u in p for v in q)
        return Graph(a + b + c, edges)
    if family is Family.COMPLEMENT_OF_MATCHING:
        (k,) = params
        if k % 2:
            raise GraphError("complement of a matching needs an even vertex count")
        matched = {(2 * i, 2 * i + 1) for i in range(k // 2)}
        edges = [e for e in itertools.combinations(range(k), 2) if e not in matched]
        return Graph(k, edges)
    if family is Family.STAR:
        (k,) = params
        return Graph(k + 1, [(0, i) for i in range(1, k + 1)])
    raise GraphError(f"unknown family {family}")


def _check_cap(actual, cap, what):
    if actual > cap:
        raise CapExceeded(f"{what}: size {actual} exceeds oracle cap {cap}")


def _mask_to_vertices(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _best_subset(g, feasible, maximize):
    """Scan all vertex subsets; return the optimum with the lexicographically
    smallest witness (compared as the sorted vertex-id tuple)."""
    best = None
    for mask in range(1 << g.n):
        if not feasible(mask):
            continue
        vs = tuple(_mask_to_vertices(mask))
        key = (-len(vs), vs) if maximize else (len(vs), vs)
        if best is None or key < best[0]:
            best = (key, vs)
    return best[1] if best else None


def is_k_colorable(g, k, order=None):
    """Backtracking k-colorability test; returns a coloring list or None.

    The coloring is canonical: vertices are colored in the given order and a
    fresh color is only opened when every used color fails.
    """
    if k <= 0:
        return [] if g.n == 0 else None
    order = list(range(g.n)) if order is None else list(order)
    color = [-1] * g.n

    def rec(idx, used):
        if idx == len(order):
            return True
        v = order[idx]
        limit = min(used + 1, k)
        for c in range(limit):
            if all(color[u] != c for u in g.neighbors(v)):
                color[v] = c
                if rec(idx + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    return color[:] if rec(0, 0) else None


def _edge_conflicts(edges, g):
    """Conflict masks for an induced-matching search restricted to `edges`.

    Two edges conflict if they share a vertex or some edge of `edges` joins
    their endpoints."""
    eset = set(edges)
    masks = [0] * len(edges)
    for i, (a, b) in enumerate(edges):
        for j, (c, d) in enumerate(edges):
            if i == j:
                continue
            if len({a, b, c, d}) < 4 or any(
                tuple(sorted(p)) in eset for p in ((a, c), (a, d), (b, c), (b, d))
            ):
                masks[i] |= 1 << j
    return masks


def max_independent_set_in_conflict_graph(conflict, want_witness=True):
    """Exact maximum independent set on a small conflict graph given as bit
    masks; witness is the lexicographically smallest index tuple."""
    t = len(conflict)
    best = [0, ()]

    def rec(idx, chosen, chosen_mask, banned):
        remaining = t - idx
        if len(chosen) + remaining < best[0]:
            return
        if idx == t:
            key = (len(chosen), tuple(chosen))
            if key[0] > best[0] or (key[0] == best[0] and (not best[1] or key[1] < best[1])):
                best[0], best[1] = key[0], key[1]
            return
        if not (banned >> idx) & 1:
            chosen.append(idx)
            rec(idx + 1, chosen, chosen_mask | 1 << idx, banned | conflict[idx])
            chosen.pop()
        rec(idx + 1, chosen, chosen_mask, banned)

    rec(0, [], 0, 0)
    return best[0], list(best[1])


def max_induced_matching(g, edges=None):
    """Maximum induced matching among `edges` (default: all edges of g),
    induced with respect to that same edge set."""
    edges = sorted(g.edges) if edges is None else sorted(edges)
    conflict = _edge_conflicts(edges, g)
    value, idxs = max_independent_set_in_conflict_graph(conflict)
    return value, [edges[i] for i in idxs]


def _min_independent_dominating_set(g):
    """Branch and bound for a minimum maximal independent set."""
    full = (1 << g.n) - 1
    best = [g.n + 1, None]

    def rec(chosen, dominated, forbidden):
        if dominated == full:
            key = (len(chosen), tuple(chosen))
            if key[0] < best[0] or (key[0] == best[0] and (best[1] is None or key[1] < best[1])):
                best[0], best[1] = key[0], key[1]
            return
        if len(chosen) >= best[0]:
            return
        undominated = full & ~dominated
        v = (undominated & -undominated).bit_length() - 1
        for u in _mask_to_vertices(g.closed_mask(v) & ~forbidden):
            chosen.append(u)
            rec(chosen, dominated | g.closed_mask(u), forbidden | g.closed_mask(u))
            chosen.pop()

    rec([], 0, 0)
    return list(best[1]) if best[1] is not None else []


def brute_force(problem, g, cap=None):
    """Exact optimum of a small-instance problem; returns (value, witness).

    Witnesses: vertex lists for the subset problems, an edge list for
    MAX_INDUCED_MATCHING, and a color list for CHROMATIC_NUMBER.  Refuses
    (CapExceeded) above the cap rather than approximating.
    """
    problem = Problem(problem)
    if problem in (
        Problem.MAX_INDEPENDENT_SET,
        Problem.MIN_DOMINATING_SET,
        Problem.MIN_INDEPENDENT_DOMINATING_SET,
        Problem.CLIQUE_NUMBER,
    ):
        _check_cap(g.n, SUBSET_ORACLE_CAP if cap is None else cap, problem.value)
    elif problem is Problem.MAX_INDUCED_MATCHING:
        _check_cap(g.n, INDUCED_MATCHING_CAP if cap is None else cap, problem.value)
    else:
        _check_cap(g.n, COLORING_ORACLE_CAP if cap is None else cap, problem.value)

    full = (1 << g.n) - 1

    if problem is Problem.MAX_INDEPENDENT_SET:
        def indep(mask):
            return all(not (g.adj[v] & mask) for v in _mask_to_vertices(mask))
        witness = _best_subset(g, indep, maximize=True)
        return len(witness), list(witness)

    if problem is Problem.CLIQUE_NUMBER:
        def clique(mask):
            vs = _mask_to_vertices(mask)
            return all((g.adj[v] & mask) == mask & ~(1 << v) for v in vs)
        witness = _best_subset(g, clique, maximize=True)
        return len(witness), list(witness)

    if problem is Problem.MIN_DOMINATING_SET:
        def dom(mask):
            covered = 0
            for v in _mask_to_vertices(mask):
                covered |= g.closed_mask(v)
            return covered == full
        witness = _best_subset(g, dom, maximize=False)
        return len(witness), list(witness)

    if problem is Problem.MIN_INDEPENDENT_DOMINATING_SET:
        witness = _min_independent_dominating_set(g)
        return len(witness), witness

    if problem is Problem.CHROMATIC_NUMBER:
        if g.n == 0:
            return 0, []
        for k in range(1, g.n + 1):
            coloring = is_k_colorable(g, k)
            if coloring is not None:
                return k, coloring
        raise AssertionError("unreachable")

    if problem is Problem.MAX_INDUCED_MATCHING:
        return max_induced_matching(g)

    raise GraphError(f"unknown problem {problem}")
