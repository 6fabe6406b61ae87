from unittest import mock

from django.test import SimpleTestCase, override_settings

from veds.graphs.exceptions import CapacityError, GenerationError, InputError
from veds.graphs.fixtures import fixture_path
from veds.graphs.formats import read_graph
from veds.oracle.crosscheck import TrialOutcome, cross_check


class CrossCheckTests(SimpleTestCase):
    def test_exact_matches_oracle(self):
        report = cross_check(1000, size_cap=14, seed=7)

        self.assertEqual(report.trials, 1000)
        self.assertEqual(report.disagreements, [])
        self.assertEqual(report.agreements, 1000)
        self.assertTrue(all(gap >= 0 for gap in report.baseline_gaps))

    def test_deterministic(self):
        first = cross_check(25, size_cap=10, seed=3)
        second = cross_check(25, size_cap=10, seed=3)

        self.assertEqual(first, second)

    def test_failed_generation_is_reported(self):
        with mock.patch(
            "veds.oracle.crosscheck.gen_random_convex_bipartite",
            side_effect=GenerationError("no connected instance"),
        ):
            report = cross_check(4, size_cap=8, seed=1, workers=1)

        self.assertEqual(report.trials, 4)
        self.assertEqual(report.agreements, 0)
        for outcome in report.outcomes:
            self.assertEqual(outcome.m, 0)
            self.assertEqual(outcome.error, "GenerationError: no connected instance")
            self.assertLessEqual(outcome.n1 + outcome.n2, 8)

    def test_connected_trials_are_generated(self):
        report = cross_check(200, size_cap=14, seed=7, workers=1)

        errors = [outcome.error for outcome in report.outcomes if outcome.error]
        self.assertEqual(errors, [])
        for outcome in report.outcomes[::2]:
            self.assertLessEqual(outcome.n2, outcome.n1)

    def test_no_trials(self):
        report = cross_check(0)

        self.assertEqual((report.trials, report.agreements), (0, 0))
        self.assertEqual(report.baseline_gaps, {})
        self.assertEqual(report.max_baseline_gap, 0)

    def test_named_instance(self):
        document = read_graph(fixture_path("counterexample.cbg"))

        report = cross_check(0, instances=[("counterexample", document)])

        (outcome,) = report.outcomes
        self.assertEqual(outcome.label, "counterexample")
        self.assertEqual((outcome.exact, outcome.oracle, outcome.baseline), (1, 1, 2))
        self.assertEqual(report.baseline_gaps, {1: 1})
        self.assertEqual(report.max_baseline_gap, 1)

    def test_arguments(self):
        with self.assertRaises(InputError):
            cross_check(-1)
        with self.assertRaises(InputError):
            cross_check(1, size_cap=1)

    @override_settings(VEDS_BRUTE_FORCE_MAX_VERTICES=10)
    def test_size_cap_above_capacity(self):
        with self.assertRaisesMessage(CapacityError, "brute-force capacity of 10"):
            cross_check(1, size_cap=11)


class TrialOutcomeTests(SimpleTestCase):
    def test_error_is_a_disagreement(self):
        outcome = TrialOutcome(index=0, label="random", n1=1, n2=1, m=1, error="boom")

        self.assertFalse(outcome.agrees)
        self.assertIsNone(outcome.baseline_gap)

    def test_gap(self):
        outcome = TrialOutcome(
            index=0, label="random", n1=3, n2=3, m=5, exact=1, oracle=1, baseline=2
        )

        self.assertTrue(outcome.agrees)
        self.assertEqual(outcome.baseline_gap, 1)
