import tempfile
from io import StringIO
from unittest import mock

from django.test import SimpleTestCase

from veds.cli.main import COMMANDS, run, usage
from veds.graphs.fixtures import fixture_path


@mock.patch("sys.stderr", new_callable=StringIO)
@mock.patch("sys.stdout", new_callable=StringIO)
class RunTests(SimpleTestCase):
    def test_no_arguments(self, stdout, stderr):
        self.assertEqual(run([]), 2)
        self.assertIn("usage: veds <subcommand>", stderr.getvalue())

    def test_help(self, stdout, stderr):
        self.assertEqual(run(["--help"]), 0)
        for name in COMMANDS:
            self.assertIn(name, stdout.getvalue())

    def test_unknown_subcommand(self, stdout, stderr):
        self.assertEqual(run(["colour"]), 2)
        self.assertIn("unknown subcommand 'colour'", stderr.getvalue())

    def test_solve(self, stdout, stderr):
        self.assertEqual(run(["solve", fixture_path("counterexample.cbg")]), 0)
        self.assertEqual(stdout.getvalue(), "gamma_ve = 1\n")

    def test_input_error(self, stdout, stderr):
        self.assertEqual(run(["solve", "/nonexistent/graph.cbg"]), 2)
        self.assertIn("cannot read graph file", stderr.getvalue())

    def test_capacity_error(self, stdout, stderr):
        with tempfile.NamedTemporaryFile("w", suffix=".cbg") as infile:
            infile.write("graph 12 12\n")
            infile.flush()

            self.assertEqual(run(["oracle", "ve", infile.name]), 3)

        self.assertIn("brute force is limited", stderr.getvalue())

    def test_exclusive_flags(self, stdout, stderr):
        args = ["gen", "convex", "--n1", "2", "--n2", "2", "--density", "0.5"]

        code = run([*args, "--seed", "1", "--out", "/nonexistent/g.cbg", "--json"])

        self.assertEqual(code, 2)
        self.assertIn("not allowed with argument", stderr.getvalue())

    def test_unwritable_output(self, stdout, stderr):
        args = ["gen", "convex", "--n1", "2", "--n2", "2", "--density", "0.5"]

        code = run([*args, "--seed", "1", "--out", "/nonexistent/dir/g.cbg"])

        self.assertEqual(code, 2)
        self.assertIn("cannot write", stderr.getvalue())

    def test_usage_lists_both_grammars(self, stdout, stderr):
        text = usage()

        self.assertIn("graph <n1> <n2>", text)
        self.assertIn("universe <p>", text)
