from unittest import mock

from django.test import SimpleTestCase

from hypothesis import given, settings

from veds.graphs.constants import Algorithm, Branch
from veds.graphs.exceptions import ContractError, InputError
from veds.graphs.formats import read_graph
from veds.graphs.fixtures import fixture_path
from veds.graphs.graph import (
    VertexRef,
    build_graph,
    induced_subgraph,
    is_connected,
    is_ve_dominating_set,
)
from veds.graphs.ordering import compute_lex_convex_ordering
from veds.graphs.tests.strategies import (
    connected_convex_graphs,
    convex_graphs,
    shuffled_y,
)
from veds.oracle.bruteforce import brute_force_gamma_ve
from veds.solver.baseline import solve_baseline
from veds.solver.exact import _ExactSolver, solve_exact
from veds.solver.results import TraceStep


def load(name):
    document = read_graph(fixture_path(name))
    return document.graph, compute_lex_convex_ordering(document.graph, document.yorder)


def identity_ordering(g):
    return compute_lex_convex_ordering(g, range(1, g.n2 + 1))


def path(n):
    """
    The path y1 x1 y2 x2 ... yn xn on 2n vertices.
    """
    edges = [(i, i) for i in range(1, n + 1)] + [(i, i + 1) for i in range(1, n)]
    return build_graph(n, n, edges)


class SolveExactTests(SimpleTestCase):
    def test_counterexample_has_a_universal_vertex(self):
        g, ordering = load("counterexample.cbg")

        result = solve_exact(g, ordering)

        self.assertEqual(result.gamma_ve, 1)
        self.assertEqual(result.witness, (VertexRef.y(2),))
        self.assertEqual(result.algorithm, Algorithm.exact)
        self.assertEqual(
            result.trace, (TraceStep(1, 1, Branch.universal, VertexRef.y(2)),)
        )

    def test_p8_takes_gprime_on_a_tie(self):
        g, ordering = load("p8.cbg")

        result = solve_exact(g, ordering)

        self.assertEqual(result.gamma_ve, 2)
        self.assertEqual(result.witness, (VertexRef.x(2), VertexRef.x(4)))
        self.assertEqual(
            result.trace,
            (
                TraceStep(1, 1, Branch.gprime, VertexRef.x(2)),
                TraceStep(3, 3, Branch.universal, VertexRef.x(4)),
            ),
        )

    def test_single_edge(self):
        g = build_graph(1, 1, [(1, 1)])

        result = solve_exact(g, identity_ordering(g))

        self.assertEqual((result.gamma_ve, result.witness), (1, (VertexRef.x(1),)))

    def test_edgeless_graph(self):
        g = build_graph(2, 3, [])

        result = solve_exact(g, identity_ordering(g))

        self.assertEqual((result.gamma_ve, result.witness, result.trace), (0, (), ()))

    def test_components_are_summed(self):
        g = build_graph(2, 2, [(1, 1), (2, 2)])

        result = solve_exact(g, identity_ordering(g))

        self.assertEqual(result.gamma_ve, 2)
        self.assertEqual(result.witness, (VertexRef.x(1), VertexRef.x(2)))
        self.assertEqual(
            [step.branch for step in result.trace],
            [Branch.component_split, Branch.universal, Branch.universal],
        )

    def test_foreign_ordering_rejected(self):
        g, _ = load("p8.cbg")
        _, ordering = load("counterexample.cbg")

        with self.assertRaises(InputError):
            solve_exact(g, ordering)

    def test_long_path_runs_without_recursion(self):
        g = path(300)

        result = solve_exact(g, identity_ordering(g))

        # a path on k vertices needs floor((k + 2) / 4)
        self.assertEqual(result.gamma_ve, 150)
        self.assertTrue(is_ve_dominating_set(g, result.witness))

    def test_memo_table_shares_states(self):
        g = path(10)
        ordering = identity_ordering(g)

        memoized = solve_exact(g, ordering)
        plain = solve_exact(g, ordering, memoize=False)

        self.assertEqual(memoized.gamma_ve, plain.gamma_ve)
        self.assertLess(memoized.states, plain.states)


class OracleEquivalenceTests(SimpleTestCase):
    @settings(max_examples=200)
    @given(convex_graphs(max_side=6))
    def test_matches_brute_force(self, g):
        result = solve_exact(g, identity_ordering(g))

        self.assertEqual(result.gamma_ve, brute_force_gamma_ve(g).gamma_ve)
        self.assertEqual(len(result.witness), result.gamma_ve)
        self.assertTrue(is_ve_dominating_set(g, result.witness))

    @settings(max_examples=200)
    @given(shuffled_y(convex_graphs(max_side=6)))
    def test_declared_yorder_matches_brute_force(self, instance):
        g, yorder = instance

        result = solve_exact(g, compute_lex_convex_ordering(g, yorder))

        self.assertEqual(result.gamma_ve, brute_force_gamma_ve(g).gamma_ve)
        self.assertTrue(is_ve_dominating_set(g, result.witness))

    @given(convex_graphs(max_side=5))
    def test_memoized_and_plain_agree(self, g):
        ordering = identity_ordering(g)

        self.assertEqual(
            solve_exact(g, ordering).gamma_ve,
            solve_exact(g, ordering, memoize=False).gamma_ve,
        )

    @given(connected_convex_graphs())
    def test_never_worse_than_baseline(self, g):
        ordering = identity_ordering(g)

        baseline = solve_baseline(g, ordering)

        self.assertLessEqual(solve_exact(g, ordering).gamma_ve, baseline.gamma_ve)
        self.assertTrue(is_ve_dominating_set(g, baseline.witness))

    @given(convex_graphs(max_side=4), convex_graphs(max_side=4))
    def test_disjoint_union_is_additive(self, first, second):
        edges = list(first.edges()) + [
            (first.n1 + i, first.n2 + j) for i, j in second.edges()
        ]
        union = build_graph(first.n1 + second.n1, first.n2 + second.n2, edges)

        self.assertEqual(
            solve_exact(union, identity_ordering(union)).gamma_ve,
            solve_exact(first, identity_ordering(first)).gamma_ve
            + solve_exact(second, identity_ordering(second)).gamma_ve,
        )


class SolveBaselineTests(SimpleTestCase):
    def test_counterexample_pivots_miss_the_optimum(self):
        g, ordering = load("counterexample.cbg")

        baseline = solve_baseline(g, ordering)

        self.assertEqual(baseline.witness, (VertexRef.x(1), VertexRef.x(3)))
        self.assertEqual(baseline.gamma_ve, 2)
        self.assertEqual(solve_exact(g, ordering).gamma_ve, 1)
        self.assertEqual(brute_force_gamma_ve(g).gamma_ve, 1)

    def test_p8_pivots_are_optimal(self):
        g, ordering = load("p8.cbg")

        baseline = solve_baseline(g, ordering)

        self.assertEqual(baseline.witness, (VertexRef.x(2), VertexRef.x(4)))
        self.assertEqual([step.branch for step in baseline.trace], [Branch.chain] * 2)

    def test_complete_graph_single_pivot(self):
        g = build_graph(2, 3, [(i, j) for i in (1, 2) for j in (1, 2, 3)])

        baseline = solve_baseline(g, identity_ordering(g))

        self.assertEqual(baseline.witness, (VertexRef.x(2),))

    def test_disconnected_graph_rejected(self):
        g = build_graph(2, 2, [(1, 1), (2, 2)])
        self.assertFalse(is_connected(g))

        with self.assertRaises(ContractError):
            solve_baseline(g, identity_ordering(g))


class StateOrderingTests(SimpleTestCase):
    def expanded_solver(self, g, ordering):
        solver = _ExactSolver(g, ordering, memoize=True)
        solver.evaluate(
            solver.node_for(
                [i for i in range(1, g.n1 + 1) if g.neighbours_of_x(i)],
                [j for j in range(1, g.n2 + 1) if g.neighbours_of_y(j)],
            )
        )
        return solver

    @given(shuffled_y(convex_graphs(max_side=6)))
    def test_cut_orderings_match_recomputed_ones(self, instance):
        g, yorder = instance
        solver = self.expanded_solver(g, compute_lex_convex_ordering(g, yorder))

        for node in solver.nodes:
            if not node.xs or not node.ys:
                continue
            sub = induced_subgraph(g, node.xs, node.ys)
            expected = compute_lex_convex_ordering(
                sub.graph, sub.restrict_order(yorder)
            )

            actual = solver.local_ordering(node.xs, node.ys)

            self.assertEqual(
                actual.xperm, tuple(sub.x_backward[i - 1] for i in expected.xperm)
            )
            self.assertEqual(
                actual.yperm, tuple(sub.y_backward[j - 1] for j in expected.yperm)
            )
            self.assertEqual(
                (actual.left_x, actual.right_x, actual.left_y, actual.right_y),
                (expected.left_x, expected.right_x, expected.left_y, expected.right_y),
            )

    def test_states_build_no_subgraphs(self):
        g = path(200)
        ordering = identity_ordering(g)

        with mock.patch(
            "veds.graphs.graph.build_graph", side_effect=AssertionError("rebuilt")
        ):
            result = solve_exact(g, ordering)

        self.assertEqual(result.gamma_ve, 100)
