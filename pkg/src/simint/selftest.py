"""Self-contained acceptance checks, shared by the CLI and the test suite.

Each criterion function returns a CriterionResult; run_all executes the
requested subset.  All randomness is driven by an explicit seed so the
checks are reproducible bit for bit.
"""

import itertools
import random
import time
from dataclasses import dataclass, field

from .graphs import (
    CapExceeded,
    Family,
    Graph,
    Problem,
    brute_force,
    induced_subgraph,
    make_named_graph,
)
from .simrep import (
    canonicalize,
    read_rep,
    relabel,
    verify_representation,
    write_rep,
)
from .constructors import (
    EdgeCliqueCover,
    construct_3partite,
    construct_bipartite,
    construct_cycle,
    construct_from_ecc,
    construct_from_edges,
    construct_from_path_decomposition,
)
from .solvers import (
    SearchStats,
    dominating_set_fpt,
    enumerate_maximal_cliques,
    independent_set_fpt,
)
from .params import (
    ecc_exact,
    ecc_greedy,
    linear_mim_exact,
    lmim_witness,
    path_alpha_exact,
    path_decomposition_from_rep,
    pathwidth_exact,
    si_exact,
    thinness_witness,
)
from .reductions import (
    DisjointPathsInstance,
    MispInstance,
    check_w_structure,
    coloring_gadget,
    disjoint_paths_oracle,
    misp_to_idsp_gadget,
    preprocess_degree_one,
    xi,
)
from .graphs import Digraph


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    checks: int
    failures: list = field(default_factory=list)
    skips: list = field(default_factory=list)
    seconds: float = 0.0

    def summary(self):
        state = "pass" if self.passed else "FAIL"
        parts = [
            f"criterion {self.number} ({self.name}): {state}",
            f"checks={self.checks}",
            f"failures={len(self.failures)}",
        ]
        if self.skips:
            parts.append(f"skipped={len(self.skips)}")
        parts.append(f"time={self.seconds:.1f}s")
        return " ".join(parts)


class _Recorder:
    def __init__(self):
        self.checks = 0
        self.failures = []
        self.skips = []

    def check(self, ok, message):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def skip(self, message):
        self.skips.append(message)


def _random_graph(rng, n, p):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# criterion 1: exact label counts of the named families


def criterion_named_families(seed=0):
    rec = _Recorder()
    cases = [("edgeless n=5", Graph(5, []), 0)]
    for k in range(2, 8):
        cases.append((f"path n={k}", make_named_graph(Family.PATH, (k,)), 1))
    for n in range(4, 8):
        cases.append((f"cycle n={n}", make_named_graph(Family.CYCLE, (n,)), 2))
    cases.append(
        ("K_2,2", make_named_graph(Family.COMPLETE_BIPARTITE, (2, 2)), 2)
    )
    cases.append(
        ("K_3,3", make_named_graph(Family.COMPLETE_BIPARTITE, (3, 3)), 3)
    )
    cases.append(
        ("K_2,2,2", make_named_graph(Family.COMPLETE_3PARTITE, (2, 2, 2)), 4)
    )
    for name, g, want in cases:
        try:
            got, rep = si_exact(g)
        except CapExceeded as exc:
            rec.skip(f"{name}: {exc}")
            continue
        rec.check(got == want, f"{name}: label count {got}, expected {want}")
        rec.check(
            bool(verify_representation(g, rep)),
            f"{name}: witness representation does not verify",
        )
    return rec


# ---------------------------------------------------------------------------
# criterion 2: maximal clique counts on complements of perfect matchings


def criterion_comatch_cliques(seed=0):
    rec = _Recorder()
    for n in (4, 6, 8):
        g = make_named_graph(Family.COMPLEMENT_OF_MATCHING, (n,))
        rep = construct_from_ecc(g, ecc_greedy(g))
        cliques = enumerate_maximal_cliques(g, rep)
        want = 2 ** (n // 2)
        rec.check(
            len(cliques) == want,
            f"n={n}: found {len(cliques)} maximal cliques, expected {want}",
        )
        bound = 2 ** (2**rep.d) * g.n
        rec.check(
            len(cliques) <= bound,
            f"n={n}: clique count {len(cliques)} exceeds bound {bound}",
        )
    return rec


# ---------------------------------------------------------------------------
# criterion 3: parameter inequalities over all small connected graphs


def _connected_atlas_graphs(max_n):
    """All connected graphs with 2..max_n vertices, one per isomorphism
    class, from the networkx graph atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for ng in graph_atlas_g():
        n = ng.number_of_nodes()
        if not (2 <= n <= max_n) or not nx.is_connected(ng):
            continue
        nodes = sorted(ng.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        out.append(
            Graph(n, [(index[u], index[v]) for u, v in ng.edges()])
        )
    return out


def criterion_inequalities(seed=0, max_n=6):
    rec = _Recorder()
    for g in _connected_atlas_graphs(max_n):
        label = f"n={g.n} edges={g.sorted_edges()}"
        try:
            si, _ = si_exact(g)
            ecc, _ = ecc_exact(g)
            lmim, _ = linear_mim_exact(g)
            palpha = path_alpha_exact(g)
            pw, _ = pathwidth_exact(g)
        except CapExceeded as exc:
            rec.skip(f"{label}: {exc}")
            continue
        omega, _ = brute_force(Problem.CLIQUE_NUMBER, g)
        rec.check(lmim <= si, f"{label}: lmim {lmim} > si {si}")
        rec.check(si <= ecc, f"{label}: si {si} > ecc {ecc}")
        rec.check(ecc <= g.m, f"{label}: ecc {ecc} > edge count {g.m}")
        rec.check(palpha <= si, f"{label}: path-alpha {palpha} > si {si}")
        rec.check(
            pw <= si * omega - 1,
            f"{label}: pathwidth {pw} > si*omega-1 = {si * omega - 1}",
        )
        rec.check(
            si <= pw * pw + pw,
            f"{label}: si {si} > pw^2+pw = {pw * pw + pw}",
        )
    return rec


# ---------------------------------------------------------------------------
# criterion 4: FPT solvers against brute force


def criterion_fpt_oracle(seed=0, graphs=200):
    rec = _Recorder()
    rng = random.Random(seed)
    for t in range(graphs):
        n = rng.randint(1, 10)
        p = rng.choice((0.2, 0.35, 0.5, 0.7))
        g = _random_graph(rng, n, p)
        rep = construct_from_ecc(g, ecc_greedy(g))
        alpha, _ = brute_force(Problem.MAX_INDEPENDENT_SET, g)
        gamma, _ = brute_force(Problem.MIN_DOMINATING_SET, g)
        label = f"graph {t} (n={n})"
        for k in range(n + 1):
            stats = SearchStats()
            wit = independent_set_fpt(g, rep, k, stats)
            rec.check(
                (wit is not None) == (k <= alpha),
                f"{label}: IS k={k} answered {wit is not None}, alpha={alpha}",
            )
            rec.check(
                stats.nodes <= 2 ** (k * rep.d),
                f"{label}: IS k={k} used {stats.nodes} nodes > 2^(kd)",
            )
            if wit is not None:
                rec.check(
                    len(wit) == k and g.is_independent_set(wit),
                    f"{label}: IS k={k} witness invalid",
                )
            stats = SearchStats()
            wit = dominating_set_fpt(g, rep, k, stats)
            rec.check(
                (wit is not None) == (gamma <= k),
                f"{label}: DS k={k} answered {wit is not None}, gamma={gamma}",
            )
            rec.check(
                stats.nodes <= 2 ** (k * rep.d),
                f"{label}: DS k={k} used {stats.nodes} nodes > 2^(kd)",
            )
            if wit is not None:
                rec.check(
                    len(wit) <= k and g.is_dominating_set(wit),
                    f"{label}: DS k={k} witness invalid",
                )
    return rec


# ---------------------------------------------------------------------------
# criterion 5: constructor outputs verify


def _random_bipartite(rng, a, b, p):
    edges = [
        (u, a + v) for u in range(a) for v in range(b) if rng.random() < p
    ]
    return Graph(a + b, edges)


def criterion_constructors(seed=0, per_method=20):
    rec = _Recorder()
    rng = random.Random(seed)
    # fixed fixtures first
    triangle = Graph(3, [(0, 1), (0, 2), (1, 2)])
    rec.check(
        bool(
            verify_representation(
                triangle,
                construct_from_ecc(triangle, EdgeCliqueCover([(0, 1, 2)])),
            )
        ),
        "triangle with its single-clique cover does not verify",
    )
    c4 = make_named_graph(Family.CYCLE, (4,))
    rec.check(
        bool(verify_representation(c4, construct_from_edges(c4))),
        "C4 edge-cover representation does not verify",
    )
    for t in range(per_method):
        g = _random_graph(rng, rng.randint(1, 10), rng.choice((0.3, 0.5, 0.7)))
        rec.check(
            bool(verify_representation(g, construct_from_edges(g))),
            f"edges method, input {t}: output does not verify",
        )
    for t in range(per_method):
        g = _random_graph(rng, rng.randint(1, 10), rng.choice((0.3, 0.5, 0.7)))
        rep = construct_from_ecc(g, ecc_greedy(g))
        rec.check(
            bool(verify_representation(g, rep)),
            f"ecc method, input {t}: output does not verify",
        )
    for t in range(per_method):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        g = _random_bipartite(rng, a, b, rng.choice((0.3, 0.6, 1.0)))
        rec.check(
            bool(verify_representation(g, construct_bipartite(g))),
            f"bipartite method, input {t}: output does not verify",
        )
    for s in (1, 2, 3, 4):
        g, rep = construct_3partite(s)
        rec.check(
            bool(verify_representation(g, rep)),
            f"3-partite method, part size {s}: output does not verify",
        )
    for n in range(4, 14):
        g, rep = construct_cycle(n)
        rec.check(
            bool(verify_representation(g, rep)),
            f"cycle method, n={n}: output does not verify",
        )
    for t in range(per_method):
        g = _random_graph(rng, rng.randint(2, 7), rng.choice((0.3, 0.5, 0.8)))
        try:
            _, pd = pathwidth_exact(g)
        except CapExceeded as exc:
            rec.skip(f"path decomposition input {t}: {exc}")
            continue
        rep = construct_from_path_decomposition(g, pd)
        rec.check(
            bool(verify_representation(g, rep)),
            f"path decomposition method, input {t}: output does not verify",
        )
    return rec


# ---------------------------------------------------------------------------
# criterion 6: witness extractors


def _witness_fixtures(rng, count):
    """Graphs without isolated vertices: a vertex with an empty label set
    can share a bag with arbitrarily many others, so the bag-independence
    bound only makes sense when every vertex carries at least one label."""
    fixtures = [construct_cycle(4), construct_cycle(7), construct_3partite(2)]
    while len(fixtures) < count:
        g = _random_graph(rng, rng.randint(2, 12), rng.choice((0.25, 0.45, 0.65)))
        keep = [v for v in range(g.n) if g.degree(v) > 0]
        if len(keep) < 2:
            continue
        g, _ = induced_subgraph(g, keep)
        fixtures.append((g, construct_from_ecc(g, ecc_greedy(g))))
    return fixtures


def criterion_witnesses(seed=0, count=30):
    rec = _Recorder()
    rng = random.Random(seed)
    for idx, (g, rep) in enumerate(_witness_fixtures(rng, count)):
        label = f"fixture {idx} (n={g.n}, d={rep.d})"
        try:
            tw = thinness_witness(g, rep)
            tw.validate(g)
            rec.check(
                len(tw.partition) <= 2**rep.d,
                f"{label}: thinness witness has {len(tw.partition)} classes",
            )
        except AssertionError as exc:
            rec.check(False, f"{label}: thinness witness invalid: {exc}")
        lw = lmim_witness(g, rep)
        rec.check(
            lw.verified,
            f"{label}: linear mim-width witness left unverified",
        )
        if lw.verified:
            bad = [c for c in lw.cut_values if c > rep.d]
            rec.check(
                not bad,
                f"{label}: cut induced matching {max(bad or [0])} exceeds d={rep.d}",
            )
            try:
                lw.validate(g)
                rec.check(True, "")
            except AssertionError as exc:
                rec.check(False, f"{label}: lmim witness fails validation: {exc}")
        omega, _ = brute_force(Problem.CLIQUE_NUMBER, g)
        pd = path_decomposition_from_rep(g, rep)
        try:
            pd.validate(g)
            rec.check(True, "")
        except Exception as exc:
            rec.check(False, f"{label}: decomposition invalid: {exc}")
        for b, bag in enumerate(pd.bags):
            sub, _ = induced_subgraph(g, sorted(bag))
            alpha, _ = brute_force(Problem.MAX_INDEPENDENT_SET, sub)
            rec.check(
                alpha <= rep.d,
                f"{label}: bag {b} has independence number {alpha} > d={rep.d}",
            )
            rec.check(
                len(bag) <= rep.d * max(omega, 1),
                f"{label}: bag {b} has size {len(bag)} > d*omega",
            )
    return rec


# ---------------------------------------------------------------------------
# criterion 7: coloring construction vs the routing oracle


def _shuffled_dp(rng, n, g_arcs, h_arcs):
    perm = list(range(n))
    rng.shuffle(perm)
    return DisjointPathsInstance(
        Digraph(n, [(perm[u], perm[v]) for u, v in g_arcs]),
        Digraph(n, [(perm[u], perm[v]) for u, v in h_arcs]),
    )


def _dp_instances(rng):
    """Small routing instances with known structure: unions of disjoint
    cycles are routable; swapping the heads of two return demands makes
    them compete across components, which is not."""
    out = []
    # single cycles of growing length
    for length in (2, 3, 4, 5, 6, 7):
        arcs = [(i, i + 1) for i in range(length)]
        out.append(_shuffled_dp(rng, length + 1, arcs, [(length, 0)]))
    # two disjoint 2-arc cycles, honest and head-swapped
    arcs = [(0, 1), (1, 2), (3, 4), (4, 5)]
    for _ in range(4):
        out.append(_shuffled_dp(rng, 6, arcs, [(2, 0), (5, 3)]))
        out.append(_shuffled_dp(rng, 6, arcs, [(2, 3), (5, 0)]))
    # one long and one short cycle, honest and head-swapped
    arcs = [(0, 1), (1, 2), (2, 3), (4, 5)]
    for _ in range(3):
        out.append(_shuffled_dp(rng, 6, arcs, [(3, 0), (5, 4)]))
        out.append(_shuffled_dp(rng, 6, arcs, [(3, 4), (5, 0)]))
    # two demands meeting at one vertex: needs the degree-one preprocessing
    for _ in range(4):
        out.append(_shuffled_dp(rng, 3, [(0, 1), (2, 0)], [(1, 0), (0, 2)]))
    return out


def criterion_coloring_gadget(seed=0):
    rec = _Recorder()
    rng = random.Random(seed)
    for idx, inst in enumerate(_dp_instances(rng)):
        label = f"instance {idx}"
        answer = disjoint_paths_oracle(inst)
        steps = 0
        while xi(inst) > 0:
            before = xi(inst)
            inst = preprocess_degree_one(inst)
            steps += 1
            rec.check(
                xi(inst) < before,
                f"{label}: preprocessing step {steps} did not decrease xi",
            )
            rec.check(
                disjoint_paths_oracle(inst) == answer,
                f"{label}: preprocessing step {steps} changed the answer",
            )
        gad = coloring_gadget(inst)
        rec.check(
            bool(verify_representation(gad.graph, gad.rep)),
            f"{label}: emitted representation does not verify",
        )
        rec.check(gad.rep.d == 2, f"{label}: emitted d={gad.rep.d}, expected 2")
        chi, _ = brute_force(
            Problem.CHROMATIC_NUMBER, gad.graph, cap=gad.graph.n
        )
        rec.check(
            (chi == gad.k) == answer,
            f"{label}: chromatic number {chi}, k={gad.k}, routable={answer}",
        )
        rec.check(
            chi >= gad.k,
            f"{label}: chromatic number {chi} below the guaranteed k={gad.k}",
        )
    return rec


# ---------------------------------------------------------------------------
# criterion 8: independent dominating set construction


def _all_minimum_ids(g, size):
    """Every independent dominating set of exactly the given size.

    Branches on the first undominated vertex: some member of its closed
    neighborhood must join the set."""
    out = []
    n = g.n
    full = (1 << n) - 1

    def rec(chosen, banned, dominated):
        if dominated == full:
            if len(chosen) == size:
                out.append(tuple(chosen))
            return
        if len(chosen) == size:
            return
        v = (~dominated & full).bit_length() - 1
        for u in range(n):
            if (g.closed_mask(v) >> u) & 1 and not (banned >> u) & 1:
                chosen.append(u)
                rec(
                    chosen,
                    banned | g.closed_mask(u),
                    dominated | g.closed_mask(u),
                )
                chosen.pop()

    rec([], 0, 0)
    return sorted(set(tuple(sorted(s)) for s in out))


def _small_misp_instances():
    """Every instance with k <= 2, q <= 2, m <= 2, in every edge order."""
    out = [MispInstance(1, 2, ((0, 1),))]
    out.append(MispInstance(2, 1, ((0, 1),)))
    pairs = [(a, 2 + b) for a in range(2) for b in range(2)]
    for m in (1, 2):
        for seq in itertools.permutations(pairs, m):
            out.append(MispInstance(2, 2, tuple(seq)))
    return out


def criterion_idsp_gadget(seed=0):
    rec = _Recorder()
    for inst in _small_misp_instances():
        label = f"k={inst.k} q={inst.q} edges={inst.edges}"
        gad = misp_to_idsp_gadget(inst)
        rec.check(
            bool(verify_representation(gad.graph, gad.rep)),
            f"{label}: emitted representation does not verify",
        )
        yes = inst.has_multicolored_independent_set()
        # the family-union criterion, over every choice tuple
        for tup in itertools.product(range(1, inst.q + 1), repeat=inst.k):
            chosen = [
                inst.vertex(i + 1, j) for i, j in enumerate(tup)
            ]
            indep = inst.graph().is_independent_set(chosen)
            family = sorted(
                gad.w_index[(i + 1, j, c)]
                for i, j in enumerate(tup)
                for c in range(1, inst.m + 2)
            )
            is_ids = gad.graph.is_independent_set(
                family
            ) and gad.graph.is_dominating_set(family)
            rec.check(
                is_ids == indep,
                f"{label}: tuple {tup} independent={indep} but family IDS={is_ids}",
            )
        value, _ = brute_force(
            Problem.MIN_INDEPENDENT_DOMINATING_SET, gad.graph, cap=64
        )
        rec.check(
            (value == gad.target) == yes,
            f"{label}: minimum IDS {value}, target {gad.target}, instance yes={yes}",
        )
        rec.check(
            value >= gad.target,
            f"{label}: minimum IDS {value} below the guaranteed target",
        )
        if value == gad.target:
            for ids in _all_minimum_ids(gad.graph, value):
                rec.check(
                    check_w_structure(gad, ids),
                    f"{label}: minimum IDS {ids} misses every full family union",
                )
    return rec


# ---------------------------------------------------------------------------
# criterion 9: determinism and invariance


def criterion_determinism(seed=0):
    rec = _Recorder()
    rng = random.Random(seed)
    fixtures = [construct_cycle(5), construct_3partite(2)]
    for _ in range(8):
        g = _random_graph(rng, rng.randint(2, 8), rng.choice((0.3, 0.5)))
        fixtures.append((g, construct_from_ecc(g, ecc_greedy(g))))
    for idx, (g, rep) in enumerate(fixtures):
        label = f"fixture {idx} (n={g.n}, d={rep.d})"
        canon = canonicalize(rep)
        rec.check(
            canonicalize(canon) == canon,
            f"{label}: canonicalization is not idempotent",
        )
        back_g, back_rep = read_rep(write_rep(g, rep))
        rec.check(
            back_g == g and back_rep == rep,
            f"{label}: serialization round trip altered the model",
        )
        perm = {i: rep.d + 1 - i for i in range(1, rep.d + 1)}
        variants = [canon, relabel(rep, perm)]
        base_cliques = enumerate_maximal_cliques(g, rep)
        for vi, var in enumerate(variants):
            rec.check(
                bool(verify_representation(g, var)),
                f"{label}: variant {vi} no longer verifies",
            )
            rec.check(
                enumerate_maximal_cliques(g, var) == base_cliques,
                f"{label}: variant {vi} changed the maximal clique list",
            )
        for k in (1, 2, g.n // 2):
            base_is = independent_set_fpt(g, rep, k)
            base_ds = dominating_set_fpt(g, rep, k)
            for vi, var in enumerate(variants):
                rec.check(
                    independent_set_fpt(g, var, k) == base_is,
                    f"{label}: variant {vi} changed the IS answer at k={k}",
                )
                rec.check(
                    dominating_set_fpt(g, var, k) == base_ds,
                    f"{label}: variant {vi} changed the DS answer at k={k}",
                )
    return rec


# ---------------------------------------------------------------------------


CRITERIA = (
    (1, "named-family label counts", criterion_named_families),
    (2, "matching-complement clique counts", criterion_comatch_cliques),
    (3, "parameter inequalities", criterion_inequalities),
    (4, "FPT solvers vs brute force", criterion_fpt_oracle),
    (5, "constructor validity", criterion_constructors),
    (6, "witness extractors", criterion_witnesses),
    (7, "coloring construction", criterion_coloring_gadget),
    (8, "independent dominating set construction", criterion_idsp_gadget),
    (9, "determinism", criterion_determinism),
)


def run_criterion(number, seed=0):
    for num, name, fn in CRITERIA:
        if num == number:
            start = time.monotonic()
            rec = fn(seed=seed)
            rec.failures = [m for m in rec.failures if m]
            return CriterionResult(
                num,
                name,
                not rec.failures,
                rec.checks,
                rec.failures,
                rec.skips,
                time.monotonic() - start,
            )
    raise ValueError(f"no criterion numbered {number}")


def run_all(seed=0, only=None):
    numbers = sorted(only) if only else [num for num, _, _ in CRITERIA]
    return [run_criterion(num, seed=seed) for num in numbers]
