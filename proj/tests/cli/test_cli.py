"""End-to-end tests of the zipfkit command-line tool.

Usage: test_cli.py ZIPFKIT_EXE SCHEMA_DIR
"""

import csv
import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

EXE = None
SCHEMAS = None


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validate(doc, name):
    jsonschema.Draft202012Validator(schema(name)).validate(doc)


class CliCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls._tmp = tempfile.TemporaryDirectory(prefix="zipfkit_cli_")
        cls.root = pathlib.Path(cls._tmp.name)
        cls.corpus = cls.root / "dual.tokens"
        cls.run_ok(["--out-dir", str(cls.root), "simulate", "dual", "--tokens", "150000", "--seed", "5",
                    "--out", str(cls.corpus)])
        cls.corpus_b = cls.root / "dual_b.tokens"
        cls.run_ok(["--out-dir", str(cls.root), "simulate", "dual", "--tokens", "150000", "--seed", "6",
                    "--out", str(cls.corpus_b)])

    @classmethod
    def tearDownClass(cls):
        cls._tmp.cleanup()

    @classmethod
    def run_cli(cls, args, env=None, cwd=None):
        full_env = dict(os.environ)
        full_env.pop("ZIPFKIT_OUT_DIR", None)
        if env:
            full_env.update(env)
        return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, cwd=cwd)

    @classmethod
    def run_ok(cls, args, **kw):
        p = cls.run_cli(args, **kw)
        if p.returncode != 0:
            raise AssertionError(f"{args} exited {p.returncode}: {p.stderr}")
        return p

    def out_dir(self, name):
        d = self.root / name
        d.mkdir(exist_ok=True)
        return d

    def assert_exit(self, args, code, stderr_has=None, **kw):
        p = self.run_cli(args, **kw)
        self.assertEqual(p.returncode, code, msg=p.stderr)
        if stderr_has:
            self.assertIn(stderr_has, p.stderr)
        return p


class ExitCodes(CliCase):
    def test_version_and_help(self):
        p = self.assert_exit(["--version"], 0)
        self.assertRegex(p.stdout.strip(), r"^\d+\.\d+\.\d+$")
        self.assert_exit(["--help"], 0)

    def test_usage_errors_exit_2(self):
        self.assert_exit([], 2)
        self.assert_exit(["frobnicate"], 2)
        self.assert_exit(["analyze", str(self.corpus), "--no-such-flag"], 2)
        self.assert_exit(["simulate", "markov", "--seed", "1"], 2)
        self.assert_exit(["simulate", "dual", "--tokens", "100"], 2, "seed")
        self.assert_exit(["simulate", "dual", "--seed", "1", "--p-high", "1.5"], 2, "p_high")
        self.assert_exit(["test", "kruskal", str(self.corpus)], 2)
        self.assert_exit(["growth", str(self.corpus)], 2)

    def test_data_errors_exit_1(self):
        d = self.out_dir("errors")
        self.assert_exit(["--out-dir", str(d), "analyze", str(self.root / "missing.txt")], 1)
        bad = d / "bad.txt"
        bad.write_bytes(b"fine words\nbroken \xff byte\n")
        self.assert_exit(["--out-dir", str(d), "analyze", str(bad)], 1, "byte offset 18")
        tiny = d / "tiny.txt"
        tiny.write_text("a b c a b a\n")
        self.assert_exit(["--out-dir", str(d), "analyze", str(tiny)], 1, "3000")
        self.assertEqual(list(d.glob("*.json")), [])


class Analyze(CliCase):
    def test_report_and_artifacts(self):
        d = self.out_dir("analyze")
        self.run_ok(["--out-dir", str(d), "analyze", str(self.corpus), "--stem", "run", "--middle-end", "3000",
                     "--growth-levels", "4"])
        report = json.loads((d / "run.report.json").read_text())
        validate(report, "analysis_report")
        self.assertEqual(report["bounds"], {"upper_end": 200, "middle_end": 3000})
        self.assertGreater(report["bend"], 0.3)
        headers = {
            "run.rank_frequency.csv": ["rank", "frequency", "word"],
            "run.lower_binned.csv": ["bin_lo", "bin_hi", "center", "mean_frequency", "population"],
            "run.heaps.csv": ["tokens", "types"],
            "run.fitted.csv": ["segment", "rank", "fitted_frequency"],
            "run.table.csv": ["word", "count"],
            "run.spectrum.csv": ["frequency", "type_count"],
            "run.growth_histogram.csv": ["segment", "ratio_bin", "word_count"],
        }
        for name, header in headers.items():
            with open(d / name, newline="") as f:
                self.assertEqual(next(csv.reader(f)), header, name)
        with open(d / "run.rank_frequency.csv", newline="") as f:
            rows = list(csv.DictReader(f))
        self.assertEqual(len(rows), report["corpus"]["types"])
        self.assertEqual(sum(int(r["frequency"]) for r in rows), report["corpus"]["tokens"])

    def test_deterministic_with_shuffle_seed(self):
        outputs = []
        for name in ("det1", "det2"):
            d = self.out_dir(name)
            self.run_ok(["--out-dir", str(d), "analyze", str(self.corpus), "--stem", "x", "--shuffle-seed", "9"])
            outputs.append((d / "x.report.json").read_bytes())
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(json.loads(outputs[0])["seed"], 9)

    def test_batch_with_jobs(self):
        d = self.out_dir("batch")
        self.run_ok(["--out-dir", str(d), "analyze", str(self.corpus), str(self.corpus_b), "--jobs", "2"])
        for stem in ("dual", "dual_b"):
            validate(json.loads((d / f"{stem}.report.json").read_text()), "analysis_report")

    def test_search_and_explicit_bounds(self):
        d = self.out_dir("bounds")
        self.run_ok(["--out-dir", str(d), "analyze", str(self.corpus), "--stem", "e", "--bounds", "150", "2500"])
        self.assertEqual(json.loads((d / "e.report.json").read_text())["bounds_method"], "explicit")
        self.run_ok(["--out-dir", str(d), "analyze", str(self.corpus), "--stem", "s", "--search-bounds"])
        searched = json.loads((d / "s.report.json").read_text())
        validate(searched, "analysis_report")
        self.assertEqual(searched["bounds_method"], "search")
        self.assertGreaterEqual(searched["search_residual"], 0.0)
        self.assert_exit(["--out-dir", str(d), "analyze", str(self.corpus), "--bounds", "2500", "150"], 1)

    def test_out_dir_from_environment(self):
        d = self.out_dir("envdir")
        self.run_ok(["analyze", str(self.corpus), "--stem", "env"], env={"ZIPFKIT_OUT_DIR": str(d)})
        self.assertTrue((d / "env.report.json").exists())


class Config(CliCase):
    def test_json_and_ini_config(self):
        d = self.out_dir("config")
        js = d / "cfg.json"
        js.write_text(json.dumps({"out_dir": str(d), "analyze": {"middle_end": 2500, "stem": "fromjson"}}))
        self.run_ok(["--config", str(js), "analyze", str(self.corpus)])
        self.assertEqual(json.loads((d / "fromjson.report.json").read_text())["bounds"]["middle_end"], 2500)

        ini = d / "cfg.ini"
        ini.write_text(f"out_dir = {d}\n[analyze]\nmiddle_end = 2200\nstem = fromini\n")
        self.run_ok(["--config", str(ini), "analyze", str(self.corpus), "--middle-end", "2400"])
        self.assertEqual(json.loads((d / "fromini.report.json").read_text())["bounds"]["middle_end"], 2400)

    def test_unknown_config_key_is_usage_error(self):
        d = self.out_dir("config_bad")
        bad = d / "bad.json"
        bad.write_text(json.dumps({"analyze": {"midle_end": 2500}}))
        self.assert_exit(["--out-dir", str(d), "--config", str(bad), "analyze", str(self.corpus)], 2)


class Simulate(CliCase):
    def test_same_seed_same_bytes(self):
        d = self.out_dir("sim")
        for model in ("simon", "typing", "dual"):
            a = d / f"{model}_a.tokens"
            b = d / f"{model}_b.tokens"
            for path in (a, b):
                self.run_ok(["--out-dir", str(d), "simulate", model, "--tokens", "20000", "--seed", "3",
                             "--out", str(path)])
            self.assertEqual(a.read_bytes(), b.read_bytes(), model)
            self.assertEqual(len(a.read_text().split()), 20000)

    def test_simulate_analyze(self):
        d = self.out_dir("sim_analyze")
        self.run_ok(["--out-dir", str(d), "simulate", "dual", "--tokens", "100000", "--seed", "2", "--analyze"])
        report = json.loads((d / "dual_seed2.report.json").read_text())
        validate(report, "analysis_report")
        self.assertEqual(report["seed"], 2)
        self.assertEqual(report["bounds"]["middle_end"], 3000)

    def test_simon_all_new_words(self):
        d = self.out_dir("sim_alpha")
        out = d / "s.tokens"
        self.run_ok(["simulate", "simon", "--tokens", "100", "--seed", "1", "--alpha", "1", "--out", str(out)])
        self.assertEqual(len(set(out.read_text().split())), 100)


class GrowthTrendCompare(CliCase):
    def test_growth(self):
        d = self.out_dir("growth")
        self.run_ok(["--out-dir", str(d), "growth", str(self.corpus), "--levels", "5", "--seed", "4"])
        doc = json.loads((d / "dual.growth.json").read_text())
        validate(doc, "growth")
        self.assertTrue(doc["shuffled"])
        self.assertEqual(len(doc["level_sizes"]), 5)
        for s in doc["segments"]:
            self.assertEqual(sum(s["histogram"]), s["words"])
        with open(d / "dual.growth_words.csv", newline="") as f:
            self.assertEqual(len(list(csv.reader(f))) - 1, len(doc["per_word"]))

    def test_trend_from_reports_and_prefixes(self):
        d = self.out_dir("trend")
        tokens = self.corpus.read_text().split()
        reports = []
        for i, n in enumerate((60000, 80000, 110000, 150000)):
            part = d / f"part{i}.tokens"
            part.write_text("\n".join(tokens[:n]) + "\n")
            self.run_ok(["--out-dir", str(d), "analyze", str(part)])
            reports.append(str(d / f"part{i}.report.json"))
        self.run_ok(["--out-dir", str(d), "trend", *reports, "--name", "fromreports"])
        validate(json.loads((d / "fromreports.trend.json").read_text()), "trend")
        self.assert_exit(["--out-dir", str(d), "trend", *reports[:3]], 1)
        self.run_ok(["--out-dir", str(d), "trend", "--prefixes", str(self.corpus), "--levels", "4", "--name", "pre"])
        doc = json.loads((d / "pre.trend.json").read_text())
        validate(doc, "trend")
        self.assertEqual(doc["trend"]["e3"]["mode"], "limit")

    def test_compare_corpora(self):
        d = self.out_dir("compare")
        ea = d / "ea.csv"
        eb = d / "eb.csv"
        ea.write_text("language,e1\nx,-1.0\ny,-1.1\nz,-0.9\n")
        eb.write_text("language,e1\nx,-1.3\ny,-1.4\nz,-1.2\n")
        self.run_ok(["--out-dir", str(d), "compare", str(self.corpus), str(self.corpus_b), "--middle-end", "3000",
                     "--exponents-a", str(ea), "--exponents-b", str(eb), "--column", "e1"])
        doc = json.loads((d / "compare.json").read_text())
        validate(doc, "compare")
        self.assertGreater(doc["ochiai"]["upper"], doc["ochiai"]["lower"])
        self.assertEqual(doc["exponent_test"]["method"], "wilcoxon_rank_sum_exact")
        self.assertAlmostEqual(doc["exponent_test"]["p_value"], 0.1, places=12)
        self.run_ok(["--out-dir", str(d), "compare", str(self.corpus), str(self.corpus), "--name", "self"])
        same = json.loads((d / "self.json").read_text())
        self.assertEqual(same["ochiai"], {"upper": 1.0, "middle": 1.0, "lower": 1.0})

    def test_compare_models(self):
        d = self.out_dir("models")
        for name in ("m1", "m2"):
            self.run_ok(["--out-dir", str(d), "compare", "--models", "--tokens", "100000", "--seed", "1",
                         "--name", name])
        a = (d / "m1.models.json").read_bytes()
        self.assertEqual(a, (d / "m2.models.json").read_bytes())
        doc = json.loads(a)
        validate(doc, "models")
        bends = {m["model"]: m.get("bend") for m in doc["models"]}
        self.assertGreater(bends["dual"], 0.3)


class Stats(CliCase):
    def write(self, name, text):
        p = self.out_dir("stats") / name
        p.write_text(text)
        return str(p)

    def test_wilcoxon_exact(self):
        p = self.run_ok(["test", "wilcoxon", self.write("x.txt", "1\n2\n"), self.write("y.txt", "3\n4\n")])
        doc = json.loads(p.stdout)
        validate(doc, "test_result")
        self.assertEqual(doc["p_value"], 1.0 / 3.0)

    def test_anova_and_pearson(self):
        groups = [self.write(f"g{i}.txt", "\n".join(map(str, g)) + "\n")
                  for i, g in enumerate(([1, 2, 3], [2, 3, 4], [3, 4, 5]))]
        doc = json.loads(self.run_ok(["test", "anova", *groups]).stdout)
        validate(doc, "test_result")
        self.assertAlmostEqual(doc["statistic"], 3.0, places=12)
        self.assertEqual(doc["df"], [2.0, 6.0])
        xs = self.write("px.csv", "id,value\na,1\nb,2\nc,3\nd,4\n")
        ys = self.write("py.csv", "id,value\na,2\nb,4\nc,6\nd,8\n")
        out = self.out_dir("stats") / "pearson.json"
        self.run_ok(["test", "pearson", xs, ys, "--column", "value", "--out", str(out)])
        self.assertAlmostEqual(json.loads(out.read_text())["statistic"], 1.0, places=12)

    def test_bad_numbers_are_data_errors(self):
        self.assert_exit(["test", "wilcoxon", self.write("bad.txt", "1\nabc\n"), self.write("ok.txt", "1\n2\n")], 1)


if __name__ == "__main__":
    EXE = sys.argv[1]
    SCHEMAS = pathlib.Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
