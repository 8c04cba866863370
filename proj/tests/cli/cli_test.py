"""End-to-end checks of the zsum command-line tool."""
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

ZSUM = sys.argv.pop(1)


def run(*args):
    return subprocess.run([ZSUM, *args], capture_output=True, text=True, timeout=600)


def run_json(*args):
    proc = run(*args)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


class Commands(unittest.TestCase):
    def test_group_info(self):
        out = run_json("group", "info", "--group", "5,10")
        self.assertEqual((out["order"], out["exponent"], out["rank"], out["d_star"]), (50, 10, 2, 13))

    def test_davenport(self):
        self.assertEqual(run_json("davenport", "d", "--group", "6")["d"], 5)
        self.assertEqual(run_json("davenport", "d", "--group", "3,3", "--serial")["d"], 4)
        self.assertEqual(run_json("davenport", "dstar", "--group", "5,10")["d_star"], 13)

    def test_dgk(self):
        out = run_json("dgk", "brute", "--group", "2,4")
        self.assertEqual(out["d_gk"], 4)
        self.assertFalse(out["capped"])
        self.assertEqual(run_json("dgk", "brute", "--group", "3,3", "--prime", "13")["prime"], 13)
        self.assertEqual(run_json("dgk", "bound", "--group", "5,10")["bound"], 25)

    def test_verify_counterexample(self):
        with tempfile.TemporaryDirectory() as tmp:
            cert = Path(tmp) / "cert.json"
            out = run_json("dgk", "verify-counterexample", "--p", "5", "--n", "2", "--cert-out", str(cert))
            self.assertTrue(out["uncoverable"])
            self.assertEqual(out["length"], 14)
            self.assertEqual(out["d_star"], 13)
            self.assertTrue(out["verified"])
            self.assertEqual(out["mode"], "uncoverable")
            self.assertTrue(run_json("cover", "verify", "--cert", str(cert))["verified"])
            doc = json.loads(cert.read_text())
            doc["distributions_checked"] += 1
            cert.write_text(json.dumps(doc))
            self.assertEqual(run("cover", "verify", "--cert", str(cert)).returncode, 1)

    def test_dgr(self):
        out = run_json("dgr", "brute", "--group", "2,4", "--prime", "2", "--cap", "6")
        self.assertEqual(out["l"], 4)
        self.assertIn("witness_sequence", out)
        self.assertIn("elapsed_ms", out)
        out = run_json("--no-timing", "dgr", "brute", "--group", "2,4", "--prime", "2", "--cap", "6")
        self.assertNotIn("elapsed_ms", out)

    def test_cover_exists(self):
        out = run_json("cover", "exists", "--group", "3,3", "--sequence", "1,0x2;0,1x2")
        self.assertEqual(out["mode"], "uncoverable")
        self.assertTrue(out["verified"])
        with tempfile.TemporaryDirectory() as tmp:
            cert = Path(tmp) / "cover.json"
            out = run_json("cover", "exists", "--group", "3,3", "--sequence", "1,0x2;0,1x3", "--cert-out", str(cert))
            self.assertEqual(out["mode"], "cover")
            self.assertTrue(out["verified"])
            self.assertTrue(run_json("cover", "verify", "--cert", str(cert))["verified"])

    def test_tsv(self):
        proc = run("davenport", "d", "--group", "6", "--format", "tsv")
        self.assertEqual(proc.returncode, 0)
        header, row = proc.stdout.strip().split("\n")
        self.assertEqual(dict(zip(header.split("\t"), row.split("\t")))["d"], "5")


class Determinism(unittest.TestCase):
    def test_thread_count_does_not_change_bytes(self):
        commands = [
            ("davenport", "d", "--group", "2,8"),
            ("dgk", "brute", "--group", "3,3"),
            ("--no-timing", "dgr", "brute", "--group", "2,4", "--prime", "2"),
            ("dgk", "verify-counterexample", "--p", "5", "--n", "2"),
            ("cover", "exists", "--group", "5,10", "--sequence", "0,1x4;1,1x4;2,1x4;3,1x5"),
        ]
        for cmd in commands:
            outputs = {run(*cmd, "--threads", t).stdout for t in ("1", "3", "1")}
            self.assertEqual(len(outputs), 1, cmd)


class ExitCodes(unittest.TestCase):
    def test_usage(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("bogus").returncode, 2)
        self.assertEqual(run("davenport", "d", "--group", "4,2").returncode, 2)
        self.assertEqual(run("davenport", "d").returncode, 2)
        self.assertEqual(run("dgk", "brute", "--group", "2,4", "--format", "xml").returncode, 2)
        self.assertEqual(run("cover", "exists", "--group", "3,3", "--sequence", "1,0y2").returncode, 2)
        self.assertEqual(run("dgk", "verify-counterexample", "--p", "3", "--n", "2", "--budget-secs", "5").returncode, 2)
        self.assertEqual(run("dgk", "verify-counterexample", "--p", "5", "--n", "3").returncode, 2)

    def test_budget(self):
        proc = run("dgk", "verify-counterexample", "--p", "7", "--n", "3", "--budget-secs", "0.2")
        self.assertEqual(proc.returncode, 3, proc.stderr)
        self.assertEqual(run("davenport", "d", "--group", "8,8", "--budget-secs", "0.2").returncode, 3)


if __name__ == "__main__":
    unittest.main()
