"""Named verification suites: every structural theorem as an executable
desk-scale check over seeded corpora.

Each suite returns a SuiteResult with one-line failure descriptions; the
acceptance tests and the ``verify`` CLI subcommand both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .closures import (
    EligibilityMode,
    c_closure,
    is_c_closed,
    minimum_supergraph_oracle,
    o_closure,
    r_closure,
    supergraph_search,
    validate_c_trace,
)
from .errors import ExhaustionError
from .families import (
    ComponentSpec,
    FamilyKind,
    FamilyParams,
    P_HEAVY_UNION,
    VerdictStatus,
    classify_theorem,
    generate,
    recognize,
)
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_2_connected,
    is_connected,
    path_graph,
    sample_graphs,
)
from .hamiltonicity import is_hamiltonian
from .heaviness import is_pattern_o_heavy, o_heavy_pairs
from .patterns import (
    PatternKind,
    REFERENCE,
    find_induced,
    find_induced_naive,
    has_induced,
    is_free,
    net_profile,
)
from .regions import (
    decompose,
    generalized_claw_or_net,
    region_law_violations,
    validate_generalized,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    table: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"
        if self.notes:
            line += f" ({'; '.join(self.notes)})"
        return line


# -- corpora -------------------------------------------------------------------


def curated_graphs() -> dict[str, Graph]:
    graphs = {
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "K23": complete_bipartite(2, 3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "P6": path_graph(6),
        "G8": Graph.from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                                   (4, 5), (5, 6), (6, 7), (1, 4), (0, 5), (0, 6), (2, 7)]),
    }
    for kind in (PatternKind.CLAW, PatternKind.NET, PatternKind.BULL,
                 PatternKind.DIAMOND, PatternKind.WOUNDED, PatternKind.Z1, PatternKind.Z2):
        graphs[kind.value] = REFERENCE[kind]
    return graphs


def random_corpus(seed: int = 0, per_cell: int = 13) -> list[Graph]:
    """Deterministic ~500-graph corpus, n in [5, 12], mixed densities."""
    out = []
    ps = (0.2, 0.35, 0.5, 0.65, 0.8)
    for n in range(5, 13):
        for j, p in enumerate(ps):
            out.extend(sample_graphs(n, p, seed=seed * 1000 + n * 10 + j, limit=per_cell))
    return out


def full_corpus(seed: int = 0) -> list[Graph]:
    return list(curated_graphs().values()) + random_corpus(seed)


def _claw_o_heavy(g: Graph) -> bool:
    return is_pattern_o_heavy(g, PatternKind.CLAW)


def claw_free_samples(corpus) -> list[Graph]:
    return [g for g in corpus if not has_induced(g, PatternKind.CLAW)]


def claw_o_heavy_samples(corpus) -> list[Graph]:
    return [g for g in corpus if _claw_o_heavy(g)]


# -- acceptance grids ----------------------------------------------------------


def _c1n_grid() -> list[FamilyParams]:
    shapes: list[FamilyParams] = []
    for k in range(10, 21):
        shapes.append(FamilyParams(FamilyKind.C1N, (k,), ()))
    chains = [
        ((2, 6, 2), (2, 2)), ((3, 6, 3), (2, 2)), ((3, 8, 3), (2, 3)),
        ((4, 4, 4), (2, 2)), ((3, 8, 3), (3, 3)), ((4, 6, 4), (2, 2)),
        ((2, 10, 2), (2, 2)), ((5, 6, 5), (3, 3)), ((4, 8, 4), (2, 2)),
        ((3, 10, 3), (3, 3)), ((6, 6, 6), (2, 2)), ((5, 8, 5), (4, 4)),
        ((2, 4, 4, 2), (2, 2, 2)), ((3, 4, 4, 3), (2, 2, 2)),
        ((2, 6, 4, 2), (2, 2, 2)), ((4, 4, 4, 4), (2, 2, 2)),
        ((2, 4, 4, 4, 2), (2, 2, 2, 2)), ((3, 4, 4, 4, 3), (2, 2, 2, 2)),
        ((2, 4, 6, 4, 2), (2, 2, 2, 2)),
    ]
    shapes.extend(FamilyParams(FamilyKind.C1N, sizes, juncs) for sizes, juncs in chains)
    return shapes


def _c2n_grid() -> list[FamilyParams]:
    shapes: list[FamilyParams] = []
    for n in range(10, 21):
        shapes.append(FamilyParams(FamilyKind.C2N, (2,) * n, (1,) * n))
    cycles = [
        ((4, 4, 4), (2, 2, 2)), ((4, 6, 4), (2, 2, 2)), ((4, 4, 4), (2, 2, 1)),
        ((3, 3, 3, 3), (2, 1, 2, 1)), ((4, 4, 4, 4), (2, 2, 2, 2)),
        ((3, 4, 3, 4), (1, 2, 1, 2)), ((4, 4, 3, 3), (2, 2, 1, 1)),
        ((5, 5, 5), (2, 2, 2)), ((6, 4, 6), (2, 2, 2)), ((5, 4, 5, 4), (2, 2, 2, 2)),
        ((3, 2, 2, 2, 2, 2, 2, 2, 2), (1,) * 9),
        ((3, 3, 2, 2, 2, 2, 2, 2), (1,) * 8),
    ]
    shapes.extend(FamilyParams(FamilyKind.C2N, sizes, juncs) for sizes, juncs in cycles)
    return shapes


def _c3nq_grid() -> list[FamilyParams]:
    return [FamilyParams(FamilyKind.C3NQ, (k,), ()) for k in range(6, 17)]


def _c1np_grid() -> list[FamilyParams]:
    chain2 = ComponentSpec("c1n", (2,), (2,))
    chain3 = ComponentSpec("c1n", (3,), (2,))
    cycle33 = ComponentSpec("c2n", (3, 3), (2, 1, 2))
    cycle44 = ComponentSpec("c2n", (4, 4), (2, 2, 2))
    shapes = []
    for k in range(7, 14):
        shapes.append(FamilyParams(FamilyKind.C1NP, (k,), (), (chain2, cycle33)))
    for k in range(8, 13):
        shapes.append(FamilyParams(FamilyKind.C1NP, (k,), (), (chain3, cycle33)))
    for k in range(9, 12):
        shapes.append(FamilyParams(FamilyKind.C1NP, (k,), (), (chain2, chain2, cycle33)))
    shapes.append(FamilyParams(FamilyKind.C1NP, (10,), (), (cycle33, cycle33)))
    shapes.append(FamilyParams(FamilyKind.C1NP, (10,), (), (chain2, cycle44)))
    return shapes


def _c2np_grid() -> list[FamilyParams]:
    bridge3 = ComponentSpec("c2n_bridge", (3,), (1, 2))
    bridge1v = ComponentSpec("c2n_bridge", (2, 2), (1, 1, 1))
    prime2 = ComponentSpec("c1n_prime", (2,), (2,))
    chain2 = ComponentSpec("c1n", (2,), (2,))
    shapes = []
    for k in range(8, 15):
        shapes.append(FamilyParams(FamilyKind.C2NP, (k, 4), (), (bridge3, bridge1v)))
    for k in range(8, 13):
        shapes.append(FamilyParams(FamilyKind.C2NP, (k, 5), (), (bridge3, prime2)))
    for k in range(9, 12):
        shapes.append(FamilyParams(FamilyKind.C2NP, (k, 5), (), (bridge3, bridge1v, chain2)))
    for k in range(10, 14):
        shapes.append(FamilyParams(FamilyKind.C2NP, (k, 4), (), (bridge3, bridge3)))
    return shapes


def _c1npq_grid() -> list[FamilyParams]:
    c3 = ComponentSpec("c3nq")
    chain2 = ComponentSpec("c1n", (2,), (2,))
    cycle33 = ComponentSpec("c2n", (3, 3), (2, 1, 2))
    shapes = []
    for k in range(6, 17):
        shapes.append(FamilyParams(FamilyKind.C1NPQ, (k,), (), (c3,)))
    for k in range(8, 15):
        shapes.append(FamilyParams(FamilyKind.C1NPQ, (k,), (), (c3, chain2)))
    for k in range(10, 13):
        shapes.append(FamilyParams(FamilyKind.C1NPQ, (k,), (), (c3, c3)))
    for k in range(10, 13):
        shapes.append(FamilyParams(FamilyKind.C1NPQ, (k,), (), (c3, chain2, chain2)))
    shapes.append(FamilyParams(FamilyKind.C1NPQ, (11,), (), (c3, cycle33)))
    return shapes


def _c2npq_grid() -> list[FamilyParams]:
    c3 = ComponentSpec("c3nq")
    bridge3 = ComponentSpec("c2n_bridge", (3,), (1, 2))
    bridge1v = ComponentSpec("c2n_bridge", (2, 2), (1, 1, 1))
    shapes = []
    for k in range(9, 14):
        shapes.append(FamilyParams(FamilyKind.C2NPQ, (k, 2), (), (c3, bridge1v, bridge1v)))
    for k in range(10, 13):
        shapes.append(FamilyParams(FamilyKind.C2NPQ, (k, 2), (), (c3, bridge3, bridge1v)))
    shapes.append(FamilyParams(FamilyKind.C2NPQ, (11, 2), (), (c3, bridge3, bridge3)))
    return shapes


def acceptance_grids() -> dict[FamilyKind, list[tuple[FamilyParams, int]]]:
    """Pinned parameter grid: at least 50 members per family, 10 <= n <= 20."""
    raw = {
        FamilyKind.C1N: _c1n_grid(),
        FamilyKind.C2N: _c2n_grid(),
        FamilyKind.C3NQ: _c3nq_grid(),
        FamilyKind.C1NP: _c1np_grid(),
        FamilyKind.C2NP: _c2np_grid(),
        FamilyKind.C1NPQ: _c1npq_grid(),
        FamilyKind.C2NPQ: _c2npq_grid(),
    }
    grids = {}
    for kind, shapes in raw.items():
        members: list[tuple[FamilyParams, int]] = []
        seeds = 0
        while len(members) < 50:
            for shape in shapes:
                members.append((shape, seeds))
            seeds += 1
        grids[kind] = members
    return grids


# -- suites --------------------------------------------------------------------


def _suite(name):
    def wrap(fn):
        def run(seed: int = 0, node_budget: int | None = None) -> SuiteResult:
            start = time.monotonic()
            result = SuiteResult(name, True, 0)
            fn(result, seed, node_budget)
            result.elapsed = time.monotonic() - start
            result.passed = not result.failures
            return result

        run.__name__ = fn.__name__
        run.suite_name = name
        return run

    return wrap


@_suite("closure-preservation")
def suite_closure_preservation(result: SuiteResult, seed: int, node_budget) -> None:
    corpus = full_corpus(seed)
    result.notes.append(f"corpus size {len(corpus)}")
    for i, g in enumerate(corpus):
        before = is_hamiltonian(g, node_budget)
        if before.undecided:
            result.failures.append(f"graph {i}: oracle undecided")
            continue
        closed_o, _ = o_closure(g)
        after = is_hamiltonian(closed_o, node_budget)
        result.checked += 1
        if before.result != after.result:
            result.failures.append(f"graph {i}: o-closure changed hamiltonicity")
        if not has_induced(g, PatternKind.CLAW):
            closed_r, _ = r_closure(g)
            result.checked += 1
            if is_hamiltonian(closed_r, node_budget).result != before.result:
                result.failures.append(f"graph {i}: r-closure changed hamiltonicity")
        if _claw_o_heavy(g):
            closed_c, _ = c_closure(g)
            result.checked += 1
            if is_hamiltonian(closed_c, node_budget).result != before.result:
                result.failures.append(f"graph {i}: c-closure changed hamiltonicity")


@_suite("minimality-oracle")
def suite_minimality_oracle(result: SuiteResult, seed: int, node_budget) -> None:
    corpus = full_corpus(seed)
    eligible = [
        g for g in claw_o_heavy_samples(corpus) if len(g.non_edges()) <= 14
    ]
    result.notes.append(f"{len(eligible)} claw-o-heavy samples with <= 14 non-edges")
    from .graphs import emit_graph6

    for i, g in enumerate(eligible):
        closed, _ = c_closure(g, EligibilityMode.AMENDED)
        search = supergraph_search(g, budget=14)
        result.checked += 1
        if not search.unique_minimum:
            result.failures.append(f"sample {i}: minimum supergraph not unique")
            continue
        agree = closed == search.graph_for(search.minima[0])
        result.table.append(
            f"{emit_graph6(g)} added={len(search.minima[0])} "
            f"agree={'yes' if agree else 'NO'}"
        )
        if not agree:
            result.failures.append(f"sample {i}: closure disagrees with the supergraph oracle")
    c4 = cycle_graph(4)
    literal, _ = c_closure(c4, EligibilityMode.LITERAL)
    result.checked += 1
    if literal != c4 or minimum_supergraph_oracle(c4) == literal:
        result.failures.append("literal mode must diverge on C4 (stay C4, oracle gives K4)")


@_suite("uniqueness")
def suite_uniqueness(result: SuiteResult, seed: int, node_budget) -> None:
    corpus = full_corpus(seed)
    policies = ("min", "max", "random")
    for i, g in enumerate(corpus):
        closures = [o_closure(g, policy=p, seed=seed + 1)[0] for p in policies]
        result.checked += 1
        if len({c for c in closures}) != 1:
            result.failures.append(f"graph {i}: o-closure depends on the join order")
        if not has_induced(g, PatternKind.CLAW):
            closures = [r_closure(g, policy=p, seed=seed + 1)[0] for p in policies]
            result.checked += 1
            if len(set(closures)) != 1:
                result.failures.append(f"graph {i}: r-closure depends on the completion order")
        if _claw_o_heavy(g):
            closures = [c_closure(g, policy=p, seed=seed + 1)[0] for p in policies]
            result.checked += 1
            if len(set(closures)) != 1:
                result.failures.append(f"graph {i}: c-closure depends on the completion order")


@_suite("closure-contracts")
def suite_closure_contracts(result: SuiteResult, seed: int, node_budget) -> None:
    corpus = full_corpus(seed)
    for i, g in enumerate(corpus):
        if not has_induced(g, PatternKind.CLAW):
            closed, _ = r_closure(g)
            result.checked += 1
            if not is_free(closed, (PatternKind.CLAW, PatternKind.DIAMOND)):
                result.failures.append(f"graph {i}: r-closure output not claw/diamond-free")
        if _claw_o_heavy(g):
            closed, trace = c_closure(g, EligibilityMode.AMENDED)
            result.checked += 1
            if not is_free(closed, (PatternKind.CLAW, PatternKind.DIAMOND)):
                result.failures.append(f"graph {i}: c-closure output not claw/diamond-free")
            if o_heavy_pairs(closed):
                result.failures.append(f"graph {i}: c-closure output keeps an o-heavy pair")
            problems = validate_c_trace(trace)
            result.checked += 1
            if problems:
                result.failures.append(f"graph {i}: trace law violation: {problems[0]}")


_HEAVINESS_CELLS: dict[PatternKind, list[tuple[int, float]]] = {
    PatternKind.P4: [(6, 0.7), (7, 0.75), (8, 0.8)],
    PatternKind.P5: [(6, 0.6), (7, 0.7), (8, 0.75)],
    PatternKind.C3: [(6, 0.3), (6, 0.35), (7, 0.3)],
    PatternKind.Z1: [(6, 0.6), (7, 0.7), (8, 0.75)],
    PatternKind.Z2: [(6, 0.55), (7, 0.65), (8, 0.7)],
    PatternKind.BULL: [(6, 0.6), (7, 0.7), (8, 0.75)],
    PatternKind.NET: [(6, 0.55), (7, 0.6), (8, 0.7)],
    PatternKind.WOUNDED: [(6, 0.5), (7, 0.6), (8, 0.65)],
}


@_suite("heaviness-propagation")
def suite_heaviness_propagation(result: SuiteResult, seed: int, node_budget) -> None:
    target = 100
    for s_kind, cells in _HEAVINESS_CELLS.items():
        accepted: list[Graph] = []

        def predicate(g: Graph) -> bool:
            return (
                is_2_connected(g)
                and is_pattern_o_heavy(g, PatternKind.CLAW)
                and is_pattern_o_heavy(g, s_kind)
            )

        cell_round = 0
        while len(accepted) < target and cell_round < 40:
            n, p = cells[cell_round % len(cells)]
            sampler = sample_graphs(
                n, p, seed=seed * 100 + cell_round * 7 + n, predicate=predicate,
                limit=target - len(accepted), max_attempts=40_000,
            )
            try:
                accepted.extend(sampler)
            except ExhaustionError:
                pass
            cell_round += 1
        result.notes.append(f"{s_kind.value}: {len(accepted)} accepted")
        if not accepted:
            continue
        for g in accepted:
            closed, _ = c_closure(g)
            profile = net_profile(closed)
            result.checked += 1
            if has_induced(closed, PatternKind.CLAW):
                result.failures.append(f"{s_kind.value}: closure not claw-free")
            if s_kind is PatternKind.WOUNDED:
                if not profile.n_pq_heavy:
                    result.failures.append(f"{s_kind.value}: closure nets not all p- or q-heavy")
            elif not profile.n_p_heavy:
                result.failures.append(f"{s_kind.value}: closure nets not all p-heavy")


@_suite("family-forward")
def suite_family_forward(result: SuiteResult, seed: int, node_budget) -> None:
    grids = acceptance_grids()
    for kind, members in grids.items():
        count = 0
        for params, member_seed in members:
            g = generate(params, member_seed + seed)
            count += 1
            result.checked += 1
            label = f"{kind.value}[{params.clique_sizes}/{member_seed}]"
            if not (10 <= g.n <= 20):
                result.failures.append(f"{label}: order {g.n} outside the grid range")
            cert = is_hamiltonian(g, node_budget)
            if cert.result is not True:
                result.failures.append(f"{label}: member not hamiltonian")
            profile = net_profile(g)
            if kind in P_HEAVY_UNION:
                if not is_2_connected(g):
                    result.failures.append(f"{label}: not 2-connected")
                if has_induced(g, PatternKind.CLAW):
                    result.failures.append(f"{label}: not claw-free")
                if not is_c_closed(g):
                    result.failures.append(f"{label}: not closed under degree-sum completion")
                if not profile.n_p_heavy:
                    result.failures.append(f"{label}: nets not all p-heavy")
            else:
                if not profile.n_pq_heavy:
                    result.failures.append(f"{label}: nets not all p- or q-heavy")
            witness = recognize(g)
            if kind not in witness.families:
                result.failures.append(f"{label}: recognizer misses the generating family")
        result.notes.append(f"{kind.value}: {count} members")


@_suite("thcpq-reverse")
def suite_thcpq_reverse(result: SuiteResult, seed: int, node_budget) -> None:
    candidates: list[Graph] = [g for g in full_corpus(seed) if 10 <= g.n <= 14]
    for n in range(10, 15):
        for j, p in enumerate((0.5, 0.65, 0.8)):
            candidates.extend(sample_graphs(n, p, seed=seed * 977 + n * 13 + j, limit=20))
    grids = acceptance_grids()
    perturbed = 0
    for kind, members in grids.items():
        for params, member_seed in members[:10]:
            base = generate(params, member_seed + seed)
            if not (10 <= base.n <= 14):
                continue
            base_edges = base.edges()
            for dropped in base_edges:
                kept = [e for e in base_edges if e != dropped]
                candidates.append(Graph.from_edges(base.n, kept))
                perturbed += 1
            for u, v in base.non_edges():
                candidates.append(base.add_edges([(u, v)])[0])
                perturbed += 1
    result.notes.append(f"{len(candidates)} candidates ({perturbed} perturbations)")
    hits = 0
    for g in candidates:
        if has_induced(g, PatternKind.CLAW) or not is_2_connected(g):
            continue
        if not is_c_closed(g):
            continue
        if not net_profile(g).n_pq_heavy:
            continue
        hits += 1
        result.checked += 1
        verdict = classify_theorem(g)
        if verdict.status is VerdictStatus.COUNTEREXAMPLE_CANDIDATE:
            result.failures.append("hypothesis-satisfying graph not matched by any family")
    result.notes.append(f"{hits} hypothesis-satisfying graphs classified")


@_suite("detector-oracle")
def suite_detector_oracle(result: SuiteResult, seed: int, node_budget) -> None:
    graphs: list[Graph] = []
    for j, (n, p) in enumerate([(5, 0.4), (6, 0.5), (7, 0.5), (8, 0.45), (9, 0.4)]):
        graphs.extend(sample_graphs(n, p, seed=seed * 31 + j, limit=20))
    for i, g in enumerate(graphs):
        for kind in PatternKind:
            result.checked += 1
            if find_induced(g, kind) != find_induced_naive(g, kind):
                result.failures.append(f"graph {i}: detector mismatch for {kind.value}")


@_suite("region-properties")
def suite_region_properties(result: SuiteResult, seed: int, node_budget) -> None:
    corpus = [g for g in full_corpus(seed) if g.n <= 12]
    for i, g in enumerate(corpus):
        if not _claw_o_heavy(g):
            continue
        problems = region_law_violations(decompose(g), path_search_limit=10)
        result.checked += 1
        if problems:
            result.failures.append(f"graph {i}: {problems[0]}")
    rng = random.Random(seed + 4242)
    draws = 0
    attempts = 0
    while draws < 1000 and attempts < 5000:
        attempts += 1
        n = rng.randrange(4, 12)
        g = next(iter(sample_graphs(n, rng.choice((0.25, 0.4, 0.6)), seed=attempts, limit=1)))
        if not is_connected(g):
            continue
        z1, z2, z3 = rng.sample(range(n), 3)
        gcn = generalized_claw_or_net(g, z1, z2, z3)
        result.checked += 1
        draws += 1
        problems = validate_generalized(g, gcn)
        if problems:
            result.failures.append(f"draw {draws}: {problems[0]}")
        if set(gcn.termini()) != {z1, z2, z3}:
            result.failures.append(f"draw {draws}: wrong termini")
    result.notes.append(f"{draws} generalized claw/net draws")


@_suite("npq-hamiltonicity")
def suite_npq_hamiltonicity(result: SuiteResult, seed: int, node_budget) -> None:
    corpus = [g for g in full_corpus(seed) if g.n <= 14]
    grids = acceptance_grids()
    for kind, members in grids.items():
        for params, member_seed in members[:8]:
            g = generate(params, member_seed + seed)
            if g.n <= 14:
                corpus.append(g)
    hits = 0
    for i, g in enumerate(corpus):
        if has_induced(g, PatternKind.CLAW) or not is_2_connected(g):
            continue
        if not net_profile(g).n_pq_heavy:
            continue
        hits += 1
        result.checked += 1
        cert = is_hamiltonian(g, node_budget)
        if cert.result is not True:
            result.failures.append(f"graph {i}: 2-connected claw-free pq-heavy but not hamiltonian")
    result.notes.append(f"{hits} qualifying graphs")


SUITES = {
    fn.suite_name: fn
    for fn in (
        suite_closure_preservation,
        suite_minimality_oracle,
        suite_uniqueness,
        suite_closure_contracts,
        suite_heaviness_propagation,
        suite_family_forward,
        suite_thcpq_reverse,
        suite_detector_oracle,
        suite_region_properties,
        suite_npq_hamiltonicity,
    )
}


def run_suite(name: str, seed: int = 0, node_budget: int | None = None) -> SuiteResult:
    if name not in SUITES:
        from .errors import InputError

        raise InputError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](seed=seed, node_budget=node_budget)
