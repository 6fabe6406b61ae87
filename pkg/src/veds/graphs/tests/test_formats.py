import os
import tempfile

from django.test import SimpleTestCase

from veds.graphs.exceptions import InputError
from veds.graphs.fixtures import fixture_path
from veds.graphs.formats import (
    GraphDocument,
    dump_graph,
    parse_graph,
    read_graph,
    write_graph,
)
from veds.graphs.graph import build_graph


class ParseGraphTests(SimpleTestCase):
    def test_fixture(self):
        document = read_graph(fixture_path("counterexample.cbg"))

        g = document.graph
        self.assertEqual((g.n1, g.n2, g.m), (3, 3, 5))
        self.assertEqual(document.yorder, (1, 2, 3))

    def test_comments_and_blank_lines(self):
        document = parse_graph("# a comment\n\ngraph 2 1  # sizes\nedge 2 1\n")

        self.assertEqual(list(document.graph.edges()), [(2, 1)])
        self.assertIsNone(document.yorder)

    def test_header_must_come_first(self):
        with self.assertRaisesMessage(InputError, "line 1: expected 'graph <n1> <n2>'"):
            parse_graph("edge 1 1\ngraph 1 1\n")

    def test_bad_integer_reports_line(self):
        with self.assertRaisesMessage(InputError, "line 2: 'edge' expects integers"):
            parse_graph("graph 1 1\nedge 1 one\n")

    def test_unknown_directive(self):
        with self.assertRaisesMessage(InputError, "line 2: unknown directive 'vertex'"):
            parse_graph("graph 1 1\nvertex 1\n")

    def test_out_of_range_edge(self):
        with self.assertRaisesMessage(InputError, "edge (1, 2) is out of range"):
            parse_graph("graph 1 1\nedge 1 2\n")

    def test_empty_file(self):
        with self.assertRaisesMessage(InputError, "empty graph file"):
            parse_graph("# nothing here\n")

    def test_repeated_yorder(self):
        with self.assertRaisesMessage(InputError, "line 3: 'yorder' given twice"):
            parse_graph("graph 1 1\nyorder 1\nyorder 1\n")

    def test_missing_file(self):
        with self.assertRaisesMessage(InputError, "cannot read graph file"):
            read_graph("/nonexistent/graph.cbg")


class DumpGraphTests(SimpleTestCase):
    def test_canonical_text(self):
        g = build_graph(2, 2, [(2, 2), (1, 1), (2, 1)])

        text = dump_graph(g, yorder=(2, 1), comment="small")

        self.assertEqual(
            text, "# small\ngraph 2 2\nedge 1 1\nedge 2 1\nedge 2 2\nyorder 2 1\n"
        )

    def test_write_and_read_back(self):
        original = read_graph(fixture_path("p8.cbg"))

        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "p8.cbg")
            write_graph(path, original, comment="copy")
            reread = read_graph(path)

        self.assertEqual(reread, GraphDocument(original.graph, original.yorder))
