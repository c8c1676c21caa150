import pytest

from hamclosure.closures import (
    EligibilityMode,
    bc_local,
    c_closure,
    c_eligible,
    c_mode_divergence,
    is_c_closed,
    minimum_supergraph_oracle,
    o_closure,
    parse_trace,
    r_closure,
    r_eligible,
    replay_steps,
    supergraph_search,
    trace_to_text,
    validate_c_trace,
)
from hamclosure.errors import BudgetError, NonUniqueMinimumError, PreconditionError
from hamclosure.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
)
from hamclosure.heaviness import is_pattern_o_heavy, o_heavy_pairs
from hamclosure.patterns import REFERENCE, PatternKind, is_free


class TestOClosure:
    def test_c4_becomes_k4(self):
        closed, trace = o_closure(cycle_graph(4))
        assert closed == complete_graph(4)
        assert len(trace.steps) == 2

    def test_p3_fixed(self):
        assert o_closure(path_graph(3))[0] == path_graph(3)

    def test_k23_adds_exactly_the_heavy_diagonal(self):
        closed, _ = o_closure(complete_bipartite(2, 3))
        assert closed.has_edge(0, 1)
        assert closed.edge_count == 7
        assert not o_heavy_pairs(closed)

    def test_policies_agree(self, corpus):
        for g in corpus[:80]:
            results = {o_closure(g, policy=p, seed=11)[0] for p in ("min", "max", "random")}
            assert len(results) == 1

    def test_trace_replay(self):
        g = complete_bipartite(2, 3)
        closed, trace = o_closure(g)
        assert trace.replay() == closed
        assert replay_steps(g, trace.steps) == closed


class TestRClosure:
    def test_eligibility_examples(self, net):
        diamond = REFERENCE[PatternKind.DIAMOND]
        assert r_eligible(diamond, 0)
        assert not r_eligible(cycle_graph(5), 0)
        assert not r_eligible(net, 0)

    def test_diamond_single_step_to_k4(self):
        closed, trace = r_closure(REFERENCE[PatternKind.DIAMOND])
        assert closed == complete_graph(4)
        assert len(trace.steps) == 1

    def test_c5_and_bull_fixed(self):
        assert r_closure(cycle_graph(5))[0] == cycle_graph(5)
        bull = REFERENCE[PatternKind.BULL]
        assert r_closure(bull)[0] == bull

    def test_claw_input_rejected(self):
        with pytest.raises(PreconditionError):
            r_closure(REFERENCE[PatternKind.CLAW])
        with pytest.raises(PreconditionError):
            r_eligible(REFERENCE[PatternKind.CLAW], 0)

    def test_output_contract(self, corpus):
        for g in corpus[:120]:
            if not is_free(g, (PatternKind.CLAW,)):
                continue
            closed, _ = r_closure(g)
            assert is_free(closed, (PatternKind.CLAW, PatternKind.DIAMOND))


class TestCEligibility:
    def test_bc_local_examples(self, net):
        assert bc_local(cycle_graph(4), 0) == [(1, 3)]
        assert bc_local(net, 0) == []
        assert bc_local(complete_graph(4), 0) == []

    def test_c4_discriminates_the_modes(self):
        c4 = cycle_graph(4)
        assert c_eligible(c4, 0, EligibilityMode.AMENDED)
        assert not c_eligible(c4, 0, EligibilityMode.LITERAL)

    def test_net_corner_not_eligible(self, net):
        assert not c_eligible(net, 0, EligibilityMode.AMENDED)
        assert not c_eligible(net, 0, EligibilityMode.LITERAL)

    def test_precondition_checked(self):
        with pytest.raises(PreconditionError):
            c_eligible(REFERENCE[PatternKind.CLAW], 0)


class TestCClosure:
    def test_examples(self, net, g8):
        assert c_closure(net)[0] == net
        assert c_closure(cycle_graph(4))[0] == complete_graph(4)
        assert c_closure(g8)[0] == g8
        assert is_c_closed(net) and is_c_closed(g8)
        assert not is_c_closed(cycle_graph(4))

    def test_literal_mode_keeps_c4(self):
        amended, literal, diverges = c_mode_divergence(cycle_graph(4))
        assert diverges
        assert amended == complete_graph(4)
        assert literal == cycle_graph(4)

    def test_small_graphs_unchanged(self):
        for n in range(3):
            g = empty_graph(n)
            assert o_closure(g)[0] == g
            if n > 0:
                assert c_closure(g)[0] == g
        two = Graph.from_edges(2, [(0, 1)])
        assert c_closure(two)[0] == two

    def test_trace_laws(self, corpus):
        checked = 0
        for g in corpus[:120]:
            if not is_pattern_o_heavy(g, PatternKind.CLAW):
                continue
            _, trace = c_closure(g)
            assert validate_c_trace(trace) == []
            checked += 1
        assert checked > 5

    def test_heavy_vertices_pairwise_adjacent_after_closure(self, corpus):
        from hamclosure.heaviness import heavy_vertices

        for g in corpus[:120]:
            if not is_pattern_o_heavy(g, PatternKind.CLAW):
                continue
            closed, _ = c_closure(g)
            heavy = heavy_vertices(closed)
            for i, u in enumerate(heavy):
                for v in heavy[i + 1:]:
                    assert closed.has_edge(u, v)


class TestSupergraphOracle:
    def test_c4(self):
        assert minimum_supergraph_oracle(cycle_graph(4)) == complete_graph(4)

    def test_net_already_minimal(self, net):
        assert minimum_supergraph_oracle(net) == net

    def test_g8_already_minimal(self, g8):
        assert minimum_supergraph_oracle(g8, budget=16) == g8

    def test_claw_minimum_is_not_unique(self):
        # the precondition boundary: the search is well-defined on any
        # graph, but on the claw three symmetric one-edge supergraphs tie
        claw = REFERENCE[PatternKind.CLAW]
        search = supergraph_search(claw)
        assert len(search.minima) == 3
        assert all(len(m) == 1 for m in search.minima)
        assert not search.unique_minimum
        with pytest.raises(NonUniqueMinimumError):
            minimum_supergraph_oracle(claw)
        with pytest.raises(PreconditionError):
            c_closure(claw)

    def test_budget_refusal(self):
        with pytest.raises(BudgetError):
            minimum_supergraph_oracle(empty_graph(8), budget=16)


class TestTraceFormat:
    def test_round_trip(self):
        _, trace = c_closure(cycle_graph(4))
        text = trace_to_text(trace)
        assert parse_trace(text) == trace.steps
        for line in text.splitlines():
            assert " += " in line

    def test_o_pair_subject_format(self):
        _, trace = o_closure(complete_bipartite(2, 3))
        text = trace_to_text(trace)
        assert text.splitlines()[0].startswith("o-pair 0-1 += 0-1")
