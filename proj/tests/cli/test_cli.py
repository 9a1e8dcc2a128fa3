"""End-to-end checks of the command-line tool: outputs and exit statuses.

Usage: test_cli.py <smoothloc binary> <data directory>
"""

import os
import subprocess
import sys
import tempfile
import unittest

BIN = None
DATA = None


def run(*args):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name)


class Validate(unittest.TestCase):
    def test_frame(self):
        code, out, _ = run("validate", data("c4.lat"))
        self.assertEqual(code, 0)
        self.assertIn("4 elements, distributive", out)
        self.assertIn("12 of 12 hold", out)

    def test_pentagon_names_witness_by_label(self):
        code, out, _ = run("validate", data("n5.lat"))
        self.assertEqual(code, 1)
        self.assertIn("not distributive", out)
        self.assertRegex(out, r"[xyz] ∧ \([xyz] ∨ [xyz]\)")

    def test_m3(self):
        self.assertEqual(run("validate", data("m3.lat"))[0], 1)

    def test_not_a_lattice(self):
        code, out, _ = run("validate", data("vee.lat"))
        self.assertEqual(code, 1)
        self.assertIn("not a lattice", out)

    def test_missing_file(self):
        self.assertEqual(run("validate", data("missing.lat"))[0], 2)

    def test_malformed_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".lat", delete=False) as f:
            f.write("lattice X\nelements 2\ncovers\n0 zz\nend\n")
        try:
            code, _, err = run("validate", f.name)
            self.assertEqual(code, 2)
            self.assertIn("line 4", err)
        finally:
            os.unlink(f.name)


class Usage(unittest.TestCase):
    def test_no_subcommand(self):
        self.assertEqual(run()[0], 2)

    def test_unknown_flag(self):
        self.assertEqual(run("sublocales", data("c4.lat"), "--bogus")[0], 2)

    def test_bad_choice(self):
        self.assertEqual(run("sublocales", data("c4.lat"), "--which", "nope")[0], 2)

    def test_help(self):
        self.assertEqual(run("--help")[0], 0)


class Sublocales(unittest.TestCase):
    def test_smooth_c4(self):
        code, out, _ = run("sublocales", data("c4.lat"), "--which", "smooth")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "8 smooth sublocales")
        self.assertEqual(len(lines), 9)
        self.assertTrue(any("{0,b,1}" in l and "not locally closed" in l for l in lines))

    def test_all_c3(self):
        code, out, _ = run("sublocales", data("c3.lat"))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("4 sublocales"))

    def test_closed_joins_c3(self):
        code, out, _ = run("sublocales", data("c3.lat"), "--which", "closed-joins")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("3 "))

    def test_builtin_name(self):
        code, out, _ = run("sublocales", "B2", "--which", "open-meets")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("4 "))

    def test_corpus_frame_name(self):
        code, out, _ = run("validate", "T4_355")
        self.assertEqual(code, 0)
        self.assertIn("16 elements", out)

    def test_output_is_stable(self):
        self.assertEqual(run("sublocales", data("c4.lat")), run("sublocales", data("c4.lat")))


class LcAndBrunsLakser(unittest.TestCase):
    def test_lc_c4(self):
        code, out, _ = run("lc", data("c4.lat"))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("7 locally closed pairs"))

    def test_bruns_lakser_diamond(self):
        code, out, _ = run("bruns-lakser", data("diamond_sl.lat"))
        self.assertEqual(code, 0)
        self.assertIn("admissible upper sets", out)

    def test_bruns_lakser_corpus_name(self):
        self.assertEqual(run("bruns-lakser", "J4_1")[0], 0)


class Iso(unittest.TestCase):
    def test_smooth_c4(self):
        code, out, _ = run("iso", data("c4.lat"), "--flavor", "smooth")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "S_b ≅ AU(LC): 8 ↔ 8, verified")

    def test_closed_c3(self):
        code, out, _ = run("iso", data("c3.lat"), "--flavor", "closed")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "S_c ≅ AU(L): 3 ↔ 3, verified")


class Lift(unittest.TestCase):
    def test_identity(self):
        code, out, _ = run("lift", data("id_c3.mor"), "--target", "sb")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertIn("lift exists; verified", lines)
        self.assertEqual(sum("↦" in l for l in lines), 4)

    def test_inclusion(self):
        self.assertEqual(run("lift", data("c3_to_c4.mor"))[0], 0)

    def test_other_targets(self):
        for target in ("sc", "so", "s"):
            code, out, _ = run("lift", data("c4_to_c3.mor"), "--target", target)
            self.assertEqual(code, 0, target)
            self.assertIn("verified", out)

    def test_collapse(self):
        self.assertEqual(run("lift", data("c4_to_2.mor"), "--target", "s")[0], 0)

    def test_bad_morphism(self):
        with tempfile.NamedTemporaryFile("w", suffix=".mor", dir=DATA, delete=False) as f:
            f.write("morphism bad from c3.lat to c4.lat\nmap 0 0\nmap 1 3\n")
        try:
            self.assertEqual(run("lift", f.name)[0], 2)
        finally:
            os.unlink(f.name)


class Hasse(unittest.TestCase):
    def test_round_trip(self):
        code, out, _ = run("hasse", data("c4.lat"), "--format", "dot", "--of", "smooth")
        self.assertEqual(code, 0)
        self.assertEqual(out.count("->"), 12)
        with tempfile.NamedTemporaryFile("w", suffix=".dot", delete=False) as f:
            f.write(out)
        try:
            # A cube of 8 smooth sublocales read back as a frame.
            code, back, _ = run("validate", f.name)
            self.assertEqual(code, 0)
            self.assertIn("8 elements, distributive", back)
            code, again, _ = run("hasse", f.name, "--format", "dot")
            self.assertEqual(code, 0)
            self.assertEqual(again.count("->"), 12)
        finally:
            os.unlink(f.name)

    def test_format_required(self):
        self.assertEqual(run("hasse", data("c4.lat"))[0], 2)


class Verify(unittest.TestCase):
    def test_small_run(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "r.jsonl")
            code, stdout, _ = run("verify", "--max-size", "4", "--out", out, "--no-timing")
            self.assertEqual(code, 0, stdout)
            self.assertIn("0 failed", stdout)
            with open(out) as f:
                first = f.read()
            run("verify", "--max-size", "4", "--out", out, "--no-timing")
            with open(out) as f:
                self.assertEqual(first, f.read())

    def test_unwritable_output(self):
        self.assertEqual(run("verify", "--max-size", "2", "--out", "/nonexistent/x.jsonl")[0], 2)

    def test_size_out_of_range(self):
        self.assertEqual(run("verify", "--max-size", "40")[0], 2)


if __name__ == "__main__":
    BIN, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
