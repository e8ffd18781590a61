"""Interval-plus-label-set representations of graphs.

A representation assigns to every vertex an open interval with exact rational
endpoints and a label set drawn from {1..d}.  Two vertices are adjacent in
the represented graph iff their intervals intersect AND their label sets
intersect.  Open-interval semantics throughout: intervals touching at an
endpoint do not intersect.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphError

MAX_LABELS = 128


class RepError(ValueError):
    """Invalid representation or representation document."""


def intervals_intersect(a, b):
    """Open-interval intersection: true iff l(a) < r(b) and l(b) < r(a)."""
    return a[0] < b[1] and b[0] < a[1]


@dataclass(frozen=True)
class SimRep:
    """A d-simultaneous interval representation.

    intervals[v] = (l, r) with Fraction endpoints, l < r; labels[v] is a
    frozenset subset of {1..d}.  Immutable value type.
    """

    d: int
    intervals: tuple
    labels: tuple

    def __post_init__(self):
        if not (0 <= self.d <= MAX_LABELS):
            raise RepError(f"label count d={self.d} outside 0..{MAX_LABELS}")
        if len(self.intervals) != len(self.labels):
            raise RepError("intervals and labels differ in length")
        for v, (l, r) in enumerate(self.intervals):
            if not (isinstance(l, Fraction) and isinstance(r, Fraction)):
                raise RepError(f"vertex {v}: endpoints must be Fractions")
            if l >= r:
                raise RepError(f"vertex {v}: degenerate interval ({l}, {r})")
        for v, ls in enumerate(self.labels):
            if not isinstance(ls, frozenset):
                raise RepError(f"vertex {v}: labels must be a frozenset")
            if any(not (1 <= x <= self.d) for x in ls):
                raise RepError(f"vertex {v}: label out of range 1..{self.d}")

    @property
    def n(self):
        return len(self.intervals)

    def adjacent(self, u, v):
        return intervals_intersect(self.intervals[u], self.intervals[v]) and bool(
            self.labels[u] & self.labels[v]
        )

    def right_end_order(self):
        """Vertex ids sorted by ascending right endpoint, ties by id."""
        return sorted(range(self.n), key=lambda v: (self.intervals[v][1], v))


def make_rep(d, intervals, labels):
    """Convenience constructor accepting plain numbers and iterables."""
    ivs = tuple((Fraction(l), Fraction(r)) for l, r in intervals)
    lss = tuple(frozenset(ls) for ls in labels)
    return SimRep(d, ivs, lss)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    pair: tuple = None
    kind: str = None  # "missing" (edge lost) or "spurious" (edge invented)

    def __bool__(self):
        return self.ok


def verify_representation(g, rep):
    """Check rep against g pair by pair.

    Returns VerifyResult; on failure the lexicographically first violating
    pair, flagged "missing" if a g-edge is not realized and "spurious" if a
    non-edge is.
    """
    if rep.n != g.n:
        raise RepError(f"representation covers {rep.n} vertices, graph has {g.n}")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            realized = rep.adjacent(u, v)
            if g.has_edge(u, v) and not realized:
                return VerifyResult(False, (u, v), "missing")
            if not g.has_edge(u, v) and realized:
                return VerifyResult(False, (u, v), "spurious")
    return VerifyResult(True)


def realized_graph(rep):
    """The graph a representation actually represents."""
    edges = [
        (u, v)
        for u in range((rep.n))
        for v in range(u + 1, rep.n)
        if rep.adjacent(u, v)
    ]
    return Graph(rep.n, edges)


def interval_supergraph(rep):
    """The interval factor F: uv is an edge iff the intervals intersect."""
    edges = [
        (u, v)
        for u in range(rep.n)
        for v in range(u + 1, rep.n)
        if intervals_intersect(rep.intervals[u], rep.intervals[v])
    ]
    return Graph(rep.n, edges)


def label_graph(rep):
    """The label factor H: uv is an edge iff the label sets intersect."""
    edges = [
        (u, v)
        for u in range(rep.n)
        for v in range(u + 1, rep.n)
        if rep.labels[u] & rep.labels[v]
    ]
    return Graph(rep.n, edges)


def restrict(rep, vertices):
    """Restriction to a vertex subset (relabeled 0..|s|-1, ascending old ids).

    Restricting a valid representation of g yields a valid representation of
    the corresponding induced subgraph.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < rep.n):
            raise RepError(f"vertex {v} not in representation")
    return SimRep(
        rep.d,
        tuple(rep.intervals[v] for v in vs),
        tuple(rep.labels[v] for v in vs),
    )


def canonicalize(rep):
    """Order-preserving rewrite of all endpoints onto small integers.

    Distinct endpoint values map to distinct integers 1, 2, ...; exactly
    equal endpoints stay equal.  The open-interval intersection pattern is
    unchanged and the rewrite is idempotent.
    """
    values = sorted({x for iv in rep.intervals for x in iv})
    rank = {x: Fraction(i + 1) for i, x in enumerate(values)}
    return SimRep(
        rep.d,
        tuple((rank[l], rank[r]) for l, r in rep.intervals),
        rep.labels,
    )


def relabel(rep, perm):
    """Rename labels by a permutation dict {old: new} of {1..d}."""
    if sorted(perm) != list(range(1, rep.d + 1)) or sorted(perm.values()) != list(
        range(1, rep.d + 1)
    ):
        raise RepError("perm must be a permutation of 1..d")
    return SimRep(
        rep.d,
        rep.intervals,
        tuple(frozenset(perm[x] for x in ls) for ls in rep.labels),
    )


def to_track_representation(rep):
    """Export to a d-track interval model: one line of intervals per label.

    On track i, vertices carrying label i keep their interval; every other
    vertex gets a dummy interval strictly right of all real intervals on the
    track, pairwise disjoint.  Adjacency in the represented graph equals
    intersection on some track.
    """
    if rep.d == 0:
        raise RepError("cannot export zero tracks; re-encode with d >= 1")
    hi = max(r for _, r in rep.intervals)
    tracks = []
    for i in range(1, rep.d + 1):
        track = []
        dummy = 0
        for v in range(rep.n):
            if i in rep.labels[v]:
                track.append(rep.intervals[v])
            else:
                track.append((hi + dummy, hi + dummy + 1))
                dummy += 1
        tracks.append(track)
    return tracks


def _fraction_str(x):
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(s, path):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise RepError(f"{path}: not a rational number: {s!r}") from None


def write_rep(g, rep):
    """Serialize (graph, representation) to the canonical JSON document."""
    if rep.n != g.n:
        raise RepError("graph and representation disagree on vertex count")
    doc = {
        "n": g.n,
        "d": rep.d,
        "vertices": [
            {
                "id": v,
                "l": _fraction_str(rep.intervals[v][0]),
                "r": _fraction_str(rep.intervals[v][1]),
                "labels": sorted(rep.labels[v]),
            }
            for v in range(g.n)
        ],
        "edges": [list(e) for e in g.sorted_edges()],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_rep(text):
    """Parse a representation document; returns (Graph, SimRep).

    Schema violations raise RepError naming the offending path.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepError(f"document: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise RepError("document: expected an object")
    for key in ("n", "d", "vertices", "edges"):
        if key not in doc:
            raise RepError(f"{key}: missing")
    n, d = doc["n"], doc["d"]
    if not isinstance(n, int) or n < 0:
        raise RepError("n: must be a nonnegative integer")
    if not isinstance(d, int) or not (0 <= d <= MAX_LABELS):
        raise RepError(f"d: must be an integer in 0..{MAX_LABELS}")
    if not isinstance(doc["vertices"], list) or len(doc["vertices"]) != n:
        raise RepError("vertices: must be a list of length n")
    intervals = [None] * n
    labels = [None] * n
    for idx, entry in enumerate(doc["vertices"]):
        path = f"vertices[{idx}]"
        if not isinstance(entry, dict):
            raise RepError(f"{path}: expected an object")
        vid = entry.get("id")
        if not isinstance(vid, int) or not (0 <= vid < n):
            raise RepError(f"{path}.id: invalid vertex id {vid!r}")
        if intervals[vid] is not None:
            raise RepError(f"{path}.id: duplicate vertex id {vid}")
        l = _parse_fraction(entry.get("l"), f"{path}.l")
        r = _parse_fraction(entry.get("r"), f"{path}.r")
        if l >= r:
            raise RepError(f"{path}: degenerate interval ({l}, {r})")
        ls = entry.get("labels")
        if not isinstance(ls, list) or any(not isinstance(x, int) for x in ls):
            raise RepError(f"{path}.labels: must be a list of integers")
        if any(not (1 <= x <= d) for x in ls):
            raise RepError(f"{path}.labels: label out of range 1..{d}")
        intervals[vid] = (l, r)
        labels[vid] = frozenset(ls)
    edges = []
    for idx, e in enumerate(doc["edges"]):
        path = f"edges[{idx}]"
        if not (isinstance(e, list) and len(e) == 2):
            raise RepError(f"{path}: expected [u, v]")
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < v < n):
            raise RepError(f"{path}: edge {e} violates 0 <= u < v < n")
        edges.append((u, v))
    try:
        g = Graph(n, edges)
    except GraphError as exc:
        raise RepError(f"edges: {exc}") from None
    return g, SimRep(d, tuple(intervals), tuple(labels))
