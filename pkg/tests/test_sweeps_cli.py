import json
import pathlib
import shutil
import subprocess
import sys

import pytest

from lorentzpoly import corpus
from lorentzpoly.sweeps import (
    SweepBounds,
    SweepCapError,
    SweepSpec,
    compositions_within,
    partitions_within,
    run_sweep,
    strict_partitions_within,
    subpartitions,
)
from lorentzpoly.symmetric import Partition


def lorentz(*args, stdin=None):
    result = subprocess.run(
        [sys.executable, "-m", "lorentzpoly.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )
    return result


class TestEnumeration:
    def test_partition_counts(self):
        assert sum(1 for _ in partitions_within(8, 4)) == 53
        assert sum(1 for _ in partitions_within(10, 10)) == 139

    def test_subpartitions(self):
        got = {p.parts for p in subpartitions(Partition((2, 1)))}
        assert got == {(), (1,), (2,), (1, 1), (2, 1)}

    def test_strict_partitions(self):
        got = {p.parts for p in strict_partitions_within(3, 2)}
        assert got == {(), (1,), (2,), (3,), (2, 1), (3, 1), (3, 2)}

    def test_compositions(self):
        got = set(compositions_within(2, 2))
        assert got == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}


class TestSweeps:
    def test_schubert_certify_s4(self):
        report = run_sweep(SweepSpec("schubert", "certify", SweepBounds(n=4)))
        assert report.instances_checked == 24
        assert report.ok

    def test_schubert_support_s5(self):
        report = run_sweep(SweepSpec("schubert", "support_only", SweepBounds(n=5)))
        assert report.instances_checked == 120
        assert report.ok

    def test_schubert_inequality_s5(self):
        # coefficient log-concavity along root directions across all of S5
        report = run_sweep(SweepSpec("schubert", "inequality", SweepBounds(n=5)))
        assert report.ok

    def test_kostka_inequality_small(self):
        report = run_sweep(
            SweepSpec("schur", "inequality", SweepBounds(boxes=6, parts=3, vars=3))
        )
        assert report.ok

    def test_failure_report_structure(self):
        # Grothendieck polynomials are inhomogeneous, so their supports are
        # legitimately not M-convex; the sweep must say so reproducibly
        report = run_sweep(SweepSpec("grothendieck", "support_only", SweepBounds(n=3)))
        assert not report.ok
        failure = report.failures[0]
        assert set(failure) == {"instance", "target", "detail", "certificate", "repro"}
        assert failure["instance"] == "w=132"
        assert failure["certificate"]["kind"] == "support_not_m_convex"
        assert failure["repro"] == (
            "lorentz sweep --family grothendieck --mode support_only --n 3 "
            "--only 'w=132'"
        )
        # the repro command re-runs just that instance and fails the same way
        rerun = run_sweep(
            SweepSpec("grothendieck", "support_only", SweepBounds(n=3)), only="w=132"
        )
        assert rerun.instances_checked == 1
        assert rerun.failures[0]["certificate"] == failure["certificate"]

    def test_cap_exceeded(self):
        with pytest.raises(SweepCapError):
            run_sweep(SweepSpec("schubert", "certify", SweepBounds(n=9)))

    def test_missing_bound(self):
        with pytest.raises(SweepCapError):
            run_sweep(SweepSpec("schubert", "certify", SweepBounds()))

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            SweepSpec("nope", "certify", SweepBounds())

    def test_determinism_modulo_wall_time(self):
        spec = SweepSpec("schur", "certify", SweepBounds(boxes=4, parts=2, vars=2))
        first = run_sweep(spec).to_dict()
        second = run_sweep(spec).to_dict()
        first.pop("wall_time_s")
        second.pop("wall_time_s")
        assert first == second

    def test_parallel_matches_serial(self):
        spec = SweepSpec("schubert", "certify", SweepBounds(n=4))
        serial = run_sweep(spec, jobs=1).to_dict()
        parallel = run_sweep(spec, jobs=2).to_dict()
        serial.pop("wall_time_s")
        parallel.pop("wall_time_s")
        assert serial == parallel

    def test_only_filter(self):
        report = run_sweep(
            SweepSpec("schubert", "certify", SweepBounds(n=4)), only="w=1432"
        )
        assert report.instances_checked == 1

    def test_report_schema(self):
        report = run_sweep(SweepSpec("schubert", "certify", SweepBounds(n=3)))
        data = report.to_dict()
        assert set(data) == {"spec", "instances_checked", "failures", "wall_time_s", "version"}
        assert set(data["spec"]) == {"family", "mode", "bounds"}


class TestCli:
    def test_gen_schur_display(self):
        result = lorentz("gen", "--family", "schur", "--lambda", "2,0", "--vars", "2")
        assert result.returncode == 0
        assert result.stdout == "vars: 2\nx1^2 + x1 x2 + x2^2\n"

    def test_gen_schubert_staircase(self):
        result = lorentz("gen", "--family", "schubert", "--w", "321")
        assert result.stdout.splitlines()[1] == "x1^2 x2"

    def test_gen_key_monomial(self):
        result = lorentz("gen", "--family", "key", "--mu", "2,1")
        assert result.stdout.splitlines()[1] == "x1^2 x2"

    def test_gen_missing_params_exits_2(self):
        result = lorentz("gen", "--family", "schur")
        assert result.returncode == 2

    def test_certify_exit_codes(self):
        raw = lorentz("gen", "--family", "schur", "--lambda", "2,0", "--vars", "2")
        refused = lorentz("certify", "-", stdin=raw.stdout)
        assert refused.returncode == 1
        assert "NotLorentzian" in refused.stdout
        normalized = lorentz(
            "gen", "--family", "schur", "--lambda", "2,0", "--vars", "2", "--normalize"
        )
        accepted = lorentz("certify", "-", stdin=normalized.stdout)
        assert accepted.returncode == 0
        assert "Lorentzian" in accepted.stdout

    def test_certify_parse_error_exits_2(self):
        result = lorentz("certify", "-", stdin="vars: 2\nx1 + @\n")
        assert result.returncode == 2
        assert "line 2" in result.stderr

    def test_certify_json_schema(self):
        raw = lorentz("gen", "--family", "schubert", "--w", "1423")
        result = lorentz("certify", "-", "--out", "json", stdin=raw.stdout)
        data = json.loads(result.stdout)
        assert data["verdict"] == "NotLorentzian"
        assert set(data) == {"verdict", "arity", "degree", "checks", "failure"}

    def test_gen_component_and_scale(self):
        result = lorentz(
            "gen", "--family", "grothendieck", "--w", "132",
            "--component", "1", "--normalize", "--scale", "-1",
        )
        assert result.stdout.splitlines()[1] == "x1 x2"

    def test_sweep_cli_json(self):
        result = lorentz(
            "sweep", "--family", "schubert", "--n", "3", "--out", "json"
        )
        assert result.returncode == 0
        data = json.loads(result.stdout)
        assert data["instances_checked"] == 6
        assert data["failures"] == []

    def test_sweep_cap_exits_2(self):
        result = lorentz("sweep", "--family", "schubert", "--n", "9")
        assert result.returncode == 2

    def test_paper_suite_passes(self):
        result = lorentz("paper-suite")
        assert result.returncode == 0
        lines = result.stdout.strip().splitlines()
        assert len(lines) == 8
        assert all(line.startswith("PASS") for line in lines)

    def test_corpus_verify(self):
        result = lorentz("corpus", "verify")
        assert result.returncode == 0
        assert all(line.startswith("PASS") for line in result.stdout.strip().splitlines())

    def test_certify_corpus_file_path(self):
        path = (
            pathlib.Path(corpus.__file__).parent
            / "corpus_data"
            / "normalized-character-sl4.poly"
        )
        result = lorentz("certify", str(path))
        assert result.returncode == 0
        assert "Lorentzian" in result.stdout

    def test_sweep_failure_exits_1(self):
        result = lorentz(
            "sweep", "--family", "grothendieck", "--mode", "support_only", "--n", "3"
        )
        assert result.returncode == 1
        assert "repro" in result.stdout


class TestCorpus:
    def test_names_and_load(self):
        assert "normalized-schur-31111.poly" in corpus.names()
        poly = corpus.load("normalized-schur-31111.poly")
        assert poly.arity == 5 and len(poly.terms) == 15

    def test_verify_detects_tampering(self, tmp_path):
        source = pathlib.Path(corpus.__file__).parent / "corpus_data"
        for name in source.iterdir():
            shutil.copy(name, tmp_path / name.name)
        victim = tmp_path / "schur-2.poly"
        victim.write_text(victim.read_text().replace("x1^2", "2 x1^2"))
        results = corpus.verify(root=tmp_path)
        failed = {name for name, ok, _ in results if not ok}
        assert failed == {"schur-2.poly"}

    def test_verify_detects_corruption(self, tmp_path):
        source = pathlib.Path(corpus.__file__).parent / "corpus_data"
        for name in source.iterdir():
            shutil.copy(name, tmp_path / name.name)
        victim = tmp_path / "grothendieck-132.poly"
        victim.write_text("vars: 3\nx1 + +\n")
        results = corpus.verify(root=tmp_path)
        entry = [r for r in results if r[0] == "grothendieck-132.poly"][0]
        assert not entry[1] and "parse error" in entry[2]
