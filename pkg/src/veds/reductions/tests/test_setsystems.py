import os
import tempfile

from django.test import SimpleTestCase

from veds.graphs.exceptions import InputError
from veds.graphs.fixtures import fixture_path
from veds.reductions.certificates import comb_certificate, star_certificate
from veds.reductions.formats import (
    dump_certificate,
    dump_set_system,
    parse_certificate,
    parse_set_system,
    read_certificate,
    read_set_system,
    write_certificate,
)
from veds.reductions.setsystems import build_set_system


class SetSystemTests(SimpleTestCase):
    def test_two_sets(self):
        ss = read_set_system(fixture_path("two.scp"))

        self.assertEqual((ss.p, ss.q), (2, 2))
        self.assertEqual(ss.members(2), frozenset({1, 2}))
        self.assertEqual(ss.sets_containing(1), (1, 2))
        self.assertTrue(ss.within_reduction_bounds)

    def test_is_cover(self):
        ss = read_set_system(fixture_path("three.scp"))

        self.assertTrue(ss.is_cover([1, 2]))
        self.assertTrue(ss.is_cover([1, 3]))
        self.assertFalse(ss.is_cover([2, 3]))
        self.assertFalse(ss.is_cover([4]))

    def test_uncovered_elements(self):
        ss = build_set_system(3, [[1], [1, 2]])

        self.assertEqual(ss.uncovered, (3,))
        self.assertTrue(ss.coverless)

    def test_more_sets_than_elements_is_flagged(self):
        ss = build_set_system(1, [[1], [1]])

        self.assertFalse(ss.within_reduction_bounds)

    def test_empty_set_rejected(self):
        with self.assertRaisesMessage(InputError, "set 2 is empty"):
            build_set_system(2, [[1], []])

    def test_element_out_of_range(self):
        with self.assertRaisesMessage(InputError, "outside 1..2: [3]"):
            build_set_system(2, [[1, 3]])


class SetSystemFormatTests(SimpleTestCase):
    def test_parse_and_dump(self):
        ss = parse_set_system("universe 3\nset 2: 3 2\nset 1: 1  # first\n")

        self.assertEqual(ss.sets, (frozenset({1}), frozenset({2, 3})))
        self.assertEqual(dump_set_system(ss), "universe 3\nset 1: 1\nset 2: 2 3\n")

    def test_universe_first(self):
        with self.assertRaisesMessage(InputError, "line 1: expected 'universe <p>'"):
            parse_set_system("set 1: 1\n")

    def test_gaps_in_numbering(self):
        with self.assertRaisesMessage(InputError, "numbered 1..2"):
            parse_set_system("universe 2\nset 1: 1\nset 3: 2\n")

    def test_duplicate_set(self):
        with self.assertRaisesMessage(InputError, "line 3: set 1 given twice"):
            parse_set_system("universe 2\nset 1: 1\nset 1: 2\n")

    def test_non_integer_member(self):
        message = "line 2: set members must be integers"
        with self.assertRaisesMessage(InputError, message):
            parse_set_system("universe 2\nset 1: one\n")

    def test_missing_file(self):
        with self.assertRaisesMessage(InputError, "cannot read set-system file"):
            read_set_system("/nonexistent/system.scp")


class CertificateFormatTests(SimpleTestCase):
    def test_star_sidecar(self):
        cert = star_certificate(4, center=3)

        text = dump_certificate(cert)

        self.assertEqual(text, "tree star center=x3\n")
        self.assertEqual(parse_certificate(text, 4), cert)

    def test_comb_sidecar(self):
        cert = comb_certificate((3, 4, 5), (1, 2, 6))

        text = dump_certificate(cert)

        self.assertEqual(text, "tree comb backbone=x3,x4,x5 teeth=x1,x2,x6\n")
        self.assertEqual(parse_certificate(text, 6), cert)

    def test_file_round_trip(self):
        cert = comb_certificate((2, 3), (1, 4))

        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "comb.tree")
            write_certificate(path, cert)
            self.assertEqual(read_certificate(path, 4), cert)

    def test_rejects_other_trees(self):
        with self.assertRaisesMessage(InputError, "expected 'tree star"):
            parse_certificate("tree path order=x1,x2\n", 2)

    def test_rejects_y_vertices(self):
        with self.assertRaisesMessage(InputError, "X side"):
            parse_certificate("tree star center=y1\n", 2)

    def test_comb_needs_both_fields(self):
        with self.assertRaisesMessage(InputError, "both"):
            parse_certificate("tree comb backbone=x1\n", 2)
