from django.test import SimpleTestCase

from veds.graphs.constants import Branch
from veds.graphs.exceptions import ContractError
from veds.graphs.formats import read_graph
from veds.graphs.fixtures import fixture_path
from veds.graphs.graph import build_graph
from veds.graphs.ordering import compute_lex_convex_ordering
from veds.solver.frontier import FrontierIndices, frontier_indices, reduce_to_suffix


def load(name):
    document = read_graph(fixture_path(name))
    return document.graph, compute_lex_convex_ordering(document.graph, document.yorder)


def complete(n1, n2):
    edges = [(i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1)]
    g = build_graph(n1, n2, edges)
    return g, compute_lex_convex_ordering(g, range(1, n2 + 1))


class FrontierIndicesTests(SimpleTestCase):
    def test_p8(self):
        g, ordering = load("p8.cbg")

        fi = frontier_indices(g, ordering)

        self.assertEqual(
            fi,
            FrontierIndices(
                r_prime=1, r=2, s=2, l=3, p=4, alpha=1, k_alpha=2, l_alpha=2
            ),
        )

    def test_counterexample(self):
        g, ordering = load("counterexample.cbg")

        fi = frontier_indices(g, ordering)

        self.assertEqual(
            fi,
            FrontierIndices(
                r_prime=2, r=1, s=2, l=3, p=3, alpha=2, k_alpha=3, l_alpha=None
            ),
        )

    def test_complete_graph(self):
        g, ordering = complete(2, 3)

        fi = frontier_indices(g, ordering)

        self.assertEqual((fi.r, fi.s, fi.l, fi.p), (2, 3, None, None))
        self.assertEqual((fi.alpha, fi.k_alpha, fi.l_alpha), (3, 2, None))

    def test_alpha_absent_when_no_vertex_sees_all_of_j1(self):
        # x3 only sees y2, which lies right of N(x1) = {y1}
        g = build_graph(3, 3, [(1, 1), (2, 1), (2, 2), (2, 3), (3, 2)])
        ordering = compute_lex_convex_ordering(g, (1, 2, 3))

        fi = frontier_indices(g, ordering)

        self.assertEqual((fi.r_prime, fi.s), (1, 3))
        self.assertIsNone(fi.alpha)
        self.assertIsNone(fi.k_alpha)
        with self.assertRaises(ContractError):
            reduce_to_suffix(g, ordering, fi, Branch.gtilde)

    def test_edgeless_graph_rejected(self):
        g = build_graph(2, 2, [])
        ordering = compute_lex_convex_ordering(g, (1, 2))

        with self.assertRaises(ContractError):
            frontier_indices(g, ordering)

    def test_disconnected_graph_rejected(self):
        g = build_graph(2, 2, [(1, 1), (2, 2)])
        ordering = compute_lex_convex_ordering(g, (1, 2))

        with self.assertRaises(ContractError):
            frontier_indices(g, ordering)


class ReduceToSuffixTests(SimpleTestCase):
    def test_p8_gprime_is_p4(self):
        g, ordering = load("p8.cbg")
        fi = frontier_indices(g, ordering)

        sub = reduce_to_suffix(g, ordering, fi, Branch.gprime)

        self.assertEqual((sub.x_backward, sub.y_backward), ((3, 4), (3, 4)))
        self.assertEqual(sub.graph.m, 3)

    def test_p8_gtilde_is_p5(self):
        g, ordering = load("p8.cbg")
        fi = frontier_indices(g, ordering)

        sub = reduce_to_suffix(g, ordering, fi, Branch.gtilde)

        self.assertEqual((sub.x_backward, sub.y_backward), ((3, 4), (2, 3, 4)))
        self.assertEqual(sub.graph.m, 4)

    def test_complete_graph_gprime_is_empty(self):
        g, ordering = complete(2, 2)
        fi = frontier_indices(g, ordering)

        sub = reduce_to_suffix(g, ordering, fi, Branch.gprime)

        self.assertEqual((sub.graph.n1, sub.graph.n2), (0, 0))

    def test_isolated_vertices_are_dropped(self):
        g, ordering = load("counterexample.cbg")
        fi = frontier_indices(g, ordering)

        sub = reduce_to_suffix(g, ordering, fi, Branch.gprime)

        # x3 ~ y3 is all that survives of X >= x3, Y >= y3
        self.assertEqual((sub.x_backward, sub.y_backward), ((3,), (3,)))

    def test_unknown_branch(self):
        g, ordering = load("p8.cbg")
        fi = frontier_indices(g, ordering)

        with self.assertRaises(ContractError):
            reduce_to_suffix(g, ordering, fi, "sideways")
