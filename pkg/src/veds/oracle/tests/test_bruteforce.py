from django.test import SimpleTestCase, override_settings

from veds.graphs.constants import Algorithm
from veds.graphs.exceptions import CapacityError
from veds.graphs.fixtures import fixture_path
from veds.graphs.formats import read_graph
from veds.graphs.graph import VertexRef, build_graph
from veds.oracle.bruteforce import brute_force_gamma_ve, brute_force_min_cover
from veds.reductions.formats import read_set_system
from veds.reductions.setsystems import build_set_system


class BruteForceGammaTests(SimpleTestCase):
    def test_counterexample(self):
        g = read_graph(fixture_path("counterexample.cbg")).graph

        result = brute_force_gamma_ve(g)

        self.assertEqual(result.gamma_ve, 1)
        self.assertEqual(result.witness, (VertexRef.y(2),))
        self.assertEqual(result.algorithm, Algorithm.bruteforce)
        self.assertGreater(result.states, 1)

    def test_path(self):
        g = read_graph(fixture_path("p8.cbg")).graph

        self.assertEqual(brute_force_gamma_ve(g).gamma_ve, 2)

    def test_edgeless(self):
        result = brute_force_gamma_ve(build_graph(2, 3, []))

        self.assertEqual((result.gamma_ve, result.witness), (0, ()))

    def test_capacity_argument(self):
        g = read_graph(fixture_path("p8.cbg")).graph

        with self.assertRaisesMessage(CapacityError, "n1 + n2 <= 7 (got 8)"):
            brute_force_gamma_ve(g, max_vertices=7)

    @override_settings(VEDS_BRUTE_FORCE_MAX_VERTICES=5)
    def test_capacity_setting(self):
        g = read_graph(fixture_path("counterexample.cbg")).graph

        with self.assertRaises(CapacityError):
            brute_force_gamma_ve(g)


class BruteForceMinCoverTests(SimpleTestCase):
    def test_single_set(self):
        ss = read_set_system(fixture_path("two.scp"))

        self.assertEqual(brute_force_min_cover(ss), (2,))

    def test_least_pair(self):
        ss = read_set_system(fixture_path("three.scp"))

        self.assertEqual(brute_force_min_cover(ss), (1, 2))

    def test_coverless(self):
        self.assertIsNone(brute_force_min_cover(build_set_system(3, [[1], [2]])))

    def test_capacity(self):
        ss = read_set_system(fixture_path("three.scp"))

        with self.assertRaisesMessage(CapacityError, "q <= 2 (got 3)"):
            brute_force_min_cover(ss, max_sets=2)
