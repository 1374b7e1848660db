"""End-to-end checks of the weil command-line tool: outputs and exit codes."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

WEIL = sys.argv[1]
ROOT = sys.argv[2]
DATA = os.path.join(ROOT, "data")


def run(*args):
    return subprocess.run([WEIL, *args], capture_output=True, text=True, timeout=300)


def data(*parts):
    return os.path.join(DATA, *parts)


class Cli(unittest.TestCase):
    def test_algebra_valid_and_invalid(self):
        r = run("algebra", "--algebra", data("algebras", "jet12.json"))
        self.assertEqual(r.returncode, 0)
        info = json.loads(r.stdout)
        self.assertEqual(info["dim"], 3)
        self.assertEqual(info["height"], 2)
        r = run("algebra", "--algebra", data("algebras", "r_times_r.json"))
        self.assertEqual(r.returncode, 1)
        self.assertFalse(json.loads(r.stdout)["valid"])

    def test_eval(self):
        r = run("eval", "--algebra", data("algebras", "dual.json"), "x^2*y", "--at", "1+e1", "2")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.strip(), "2+4*e1")

    def test_bracket(self):
        r = run("bracket", "--structure", data("structures", "so3.json"), "x", "y")
        self.assertEqual((r.returncode, r.stdout.strip()), (0, "x3"))
        r = run("bracket", "--structure", data("structures", "symplectic2.json"),
                "--algebra", data("algebras", "dual.json"), "x", "y", "--format", "json")
        self.assertEqual(json.loads(r.stdout)["bracket"], "(1)")

    def test_jacobi(self):
        self.assertEqual(run("jacobi", "--structure", data("structures", "so3.json")).returncode, 0)
        r = run("jacobi", "--structure", data("structures", "not_poisson.json"))
        self.assertEqual(r.returncode, 1)
        out = json.loads(r.stdout)
        self.assertFalse(out["jacobi"])
        self.assertEqual(out["indices"], [1, 2, 3])

    def test_diff_and_prolong(self):
        r = run("diff", "--structure", data("structures", "symplectic2.json"),
                "--cochain", data("cochains", "base_p0.json"))
        self.assertEqual(r.returncode, 0)
        self.assertEqual(json.loads(r.stdout)["coeffs"], {"1": "2*x2", "2": "-2*x1"})
        r = run("diff", "--structure", data("structures", "symplectic2.json"),
                "--algebra", data("algebras", "dual.json"), "--cochain", data("cochains", "weil_p1.json"))
        self.assertEqual(r.returncode, 0)
        self.assertEqual(json.loads(r.stdout)["complex"], "weil")
        r = run("prolong", "--algebra", data("algebras", "dual.json"), "x*y", "--at", "1+e1", "e1")
        self.assertEqual(r.returncode, 0)
        self.assertIn("e1", r.stdout)

    def test_cohomology_and_golden(self):
        golden = os.path.join(ROOT, "tests", "golden", "so3_base_D1.json")
        r = run("cohomology", "--structure", data("structures", "so3.json"), "--degree", "1", "--golden", golden)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual([row["H"] for row in json.loads(r.stdout)["table"]], [1, 0, 0, 1])
        with tempfile.TemporaryDirectory() as tmp:
            bad = os.path.join(tmp, "bad.json")
            with open(golden) as f:
                text = f.read().replace('"D": 1', '"D": 7')
            with open(bad, "w") as f:
                f.write(text)
            r = run("cohomology", "--structure", data("structures", "so3.json"), "--degree", "1", "--golden", bad)
            self.assertNotEqual(r.returncode, 0)
            out = os.path.join(tmp, "out.json")
            r = run("cohomology", "--structure", data("structures", "symplectic2.json"),
                    "--algebra", data("algebras", "dual.json"), "--complex", "weil", "--degree", "2",
                    "--seed", "5", "--out", out)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(out) as f:
                rep = json.load(f)
            self.assertEqual(rep["seed"], 5)
            self.assertEqual([row["A_rank"] for row in rep["table"]], [1, 0, 0])

    def test_inhomogeneous_is_not_certified(self):
        r = run("cohomology", "--structure", data("structures", "inhomogeneous.json"), "--degree", "1")
        self.assertEqual(r.returncode, 1)
        self.assertFalse(json.loads(r.stdout)["certified"])

    def test_errors(self):
        self.assertEqual(run("cohomology", "--structure", "missing.json").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("verify", "--suite", "nope").returncode, 2)
        self.assertEqual(run("cohomology", "--structure", data("structures", "so3.json"),
                             "--complex", "mixed").returncode, 2)

    def test_verify(self):
        r = run("verify", "--suite", "weil", "--seed", "3")
        self.assertEqual(r.returncode, 0)
        self.assertIn("PASS jet axioms", r.stdout)
        r = run("verify", "--suite", "complexes", "--sign-variant", "printed")
        self.assertEqual(r.returncode, 1)
        self.assertIn("FAIL nilpotency", r.stdout)
        self.assertIn("p=0", r.stdout)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
