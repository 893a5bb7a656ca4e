import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings


def run(*args):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err)
    return out.getvalue(), err.getvalue()


def run_json(*args):
    return json.loads(run(*args)[0])


class ComputeCommandTests(SimpleTestCase):
    def test_cup(self):
        data = run_json("compute", "cup", "--v", "2,3,1", "--w", "3,1,2")
        self.assertEqual(data["window"], 3)
        self.assertEqual(data["terms"], [{"perm": [1, 3, 2], "coeff": "1"}, {"perm": [2, 1, 3], "coeff": "1"}])

    def test_kmul_in_both_bases(self):
        data = run_json("compute", "kmul", "--v", "1,2", "--w", "2,1")
        self.assertEqual(data["terms"], [{"perm": [1, 2], "coeff": "1"}])
        data = run_json("compute", "kmul", "--v", "2,3,1", "--w", "3,1,2", "--basis", "I")
        self.assertEqual(data["basis"], "I")

    def test_convert(self):
        data = run_json("compute", "convert", "--w", "2,1", "--source", "I", "--target", "O")
        self.assertEqual(data["terms"], [{"perm": [1, 2], "coeff": "-1"}, {"perm": [2, 1], "coeff": "1"}])

    def test_kchevalley(self):
        data = run_json("compute", "kchevalley", "--weight", "1,0", "--w", "2,1")
        self.assertEqual(data["terms"], [{"perm": [1, 2], "coeff": "1"}, {"perm": [2, 1], "coeff": "1"}])

    def test_mobius(self):
        out, _ = run("compute", "mobius", "--n", "3", "--v", "1,2,3", "--w", "3,2,1")
        self.assertEqual(json.loads(out), -1)

    def test_lr(self):
        data = run_json("compute", "lr", "--d", "2", "--n", "4", "--lam", "1", "--mu", "1")
        self.assertEqual({tuple(t["partition"]): t["coeff"] for t in data}, {(1, 1): "1", (2, 0): "1"})

    def test_pieri(self):
        data = run_json("compute", "pieri", "--n", "4", "--index", "2,4", "--mode", "cohomology")
        self.assertEqual([t["index"] for t in data], [[1, 4], [2, 3]])

    def test_hilbert(self):
        data = run_json("compute", "hilbert", "--n", "2", "--j", "2", "--k", "-2")
        self.assertEqual(data["euler"], "0")

    def test_linear_subspace_must_fit(self):
        with self.assertRaises(CommandError) as ctx:
            run("compute", "hilbert", "--n", "2", "--j", "3")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_short_options_are_not_django_abbreviations(self):
        self.assertEqual(json.loads(run("compute", "mobius", "--n", "2", "--v", "1,2", "--w", "2,1")[0]), -1)
        data = run_json("compute", "cup", "--n", "3", "--v", "2,3,1", "--w", "3,1,2")
        self.assertEqual(data["window"], 3)

    def test_cone(self):
        data = run_json("compute", "cone", "--d", "4")
        self.assertEqual((data["c2"], data["c1"], data["c0"]), ("4", "-3", "-1"))
        self.assertTrue(data["violates_signs"])

    def test_output_is_deterministic(self):
        args = ("compute", "kmul", "--v", "2,3,1", "--w", "3,1,2")
        self.assertEqual(run(*args)[0], run(*args)[0])

    def test_window_mismatch_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("compute", "cup", "--n", "4", "--v", "2,1,3", "--w", "1,3,2")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_window_guard(self):
        with self.assertRaises(CommandError) as ctx:
            run("compute", "lr", "--d", "2", "--n", "9", "--lam", "1", "--mu", "1")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_engine_errors_exit_with_one(self):
        with self.assertRaises(CommandError) as ctx:
            run("compute", "kchevalley", "--weight", "0,1", "--w", "2,1")
        self.assertEqual(ctx.exception.returncode, 1)

    def test_small_cone_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("compute", "cone", "--d", "2")
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):
    def test_passing_suites(self):
        out, err = run("verify", "mobius", "hilbert", "--n", "3")
        reports = json.loads(out)
        self.assertEqual([r["suite"] for r in reports], ["hilbert", "mobius"])
        self.assertTrue(all(r["pass"] for r in reports))
        self.assertIn("2 suite(s) passed", err)

    def test_cone_suite(self):
        reports = json.loads(run("verify", "cone", "--dmax", "4")[0])
        self.assertTrue(reports[0]["pass"])
        self.assertEqual(reports[0]["counts"]["cones"], 2)


class ExportCommandTests(SimpleTestCase):
    def test_poset_dot(self):
        out, _ = run("export", "poset", "--n", "2", "--format", "dot")
        self.assertEqual(out, 'digraph bruhat_S2 {\n  "1,2";\n  "2,1";\n  "1,2" -> "2,1";\n}\n')

    def test_grassmannian_poset_json(self):
        data = run_json("export", "poset", "--d", "2", "--n", "4")
        self.assertEqual(len(data["elements"]), 6)
        self.assertEqual(data["elements"][0], "1,2")

    def test_table_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "tables" / "k2.json"
            out, _ = run("export", "table", "--n", "2", "--theory", "K", "--output", str(target))
            payload = json.loads(target.read_text(encoding="utf-8"))
        self.assertIn("Wrote table export", out)
        self.assertEqual(payload["theory"], "K")
        self.assertEqual(payload["window"], 2)

    def test_tables_have_no_dot_form(self):
        with self.assertRaises(CommandError) as ctx:
            run("export", "table", "--n", "2", "--format", "dot")
        self.assertEqual(ctx.exception.returncode, 2)


class CacheCommandTests(TestCase):
    databases = {"default", "tables"}

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        override = override_settings(SCHUBERT_CACHE_DIR=Path(self.tmp.name))
        override.enable()
        self.addCleanup(override.disable)

    def test_build_then_load(self):
        out, _ = run("cache", "build", "--n", "2")
        self.assertEqual(out.count("Stored"), 4)
        out, _ = run("cache", "load", "--n", "2", "--theory", "K", "--recompute")
        self.assertIn("checksum ok", out)

    def test_load_missing_table(self):
        with self.assertRaises(CommandError) as ctx:
            run("cache", "load", "--n", "3", "--theory", "H")
        self.assertEqual(ctx.exception.returncode, 1)

    def test_gc_without_stale_tables(self):
        out, _ = run("cache", "gc", "--dry-run")
        self.assertIn("No stale tables", out)
