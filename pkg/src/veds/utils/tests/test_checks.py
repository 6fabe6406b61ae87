from django.test import SimpleTestCase, override_settings

from veds.utils.checks import check_capacities


class CapacityCheckTests(SimpleTestCase):
    def test_defaults_pass(self):
        self.assertEqual(check_capacities(None), [])

    @override_settings(VEDS_BRUTE_FORCE_MAX_VERTICES=0, VEDS_GENERATOR_MAX_RETRIES="10")
    def test_non_positive_capacity(self):
        errors = check_capacities(None)

        self.assertEqual([error.id for error in errors], ["utils.E001", "utils.E001"])
        self.assertIn("VEDS_BRUTE_FORCE_MAX_VERTICES", errors[0].msg)
        self.assertIn("VEDS_GENERATOR_MAX_RETRIES", errors[1].msg)

    @override_settings(VEDS_BENCH_SIZES=[100, 0])
    def test_bench_sizes(self):
        (error,) = check_capacities(None)

        self.assertEqual(error.id, "utils.E002")

    @override_settings(VEDS_BRUTE_FORCE_MAX_VERTICES=40)
    def test_brute_force_ceiling(self):
        (error,) = check_capacities(None)

        self.assertEqual(error.id, "utils.E003")
        self.assertIn("2**40", error.msg)
