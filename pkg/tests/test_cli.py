"""End-to-end tests of the command-line interface.

Commands run in-process through `run(argv)`; stdout is captured with
capsys so the tests check the exact bytes a user would see.
"""

import json
import pathlib

import pytest

from polydepth.catalog import catalog_group, catalog_names
from polydepth.cli import run
from polydepth.finitegroup import format_cayley_table
from polydepth.pi1 import ElementaryAmenable, free, pi1_to_json
from polydepth.topology import (
    EXAMPLE_COMPLEXES,
    Explicit,
    Sphere,
    complex_to_json,
    product,
    space_to_json,
    wedge,
)


def _write_json(tmp_path, name, body):
    path = tmp_path / name
    path.write_text(json.dumps(body))
    return str(path)


def _space_file(tmp_path, space):
    return _write_json(tmp_path, "space.json", space_to_json(space))


class TestBoundCommand:
    def test_wedge_s1_s2_text_report(self, tmp_path, capsys):
        path = _space_file(tmp_path, wedge(Sphere(1), Sphere(2)))
        assert run(["bound", path]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "rule=Cor-free-2dim bound=2"

    def test_json_round_trips_through_report_schema(self, tmp_path, capsys):
        path = _space_file(tmp_path, product(Sphere(1), Sphere(2)))
        assert run(["bound", path, "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["rule"] == "Cor-abelian"
        assert body["bound"] == 2
        assert body["sl_pi1"] == 1
        assert body["per_degree"] == {"2": 1, "3": 0}
        assert body["exact_depth"] == 2

    def test_inapplicable_bound_exits_two_with_report(self, tmp_path, capsys):
        space = Explicit(
            EXAMPLE_COMPLEXES["torus"],
            ElementaryAmenable(hirsch=1, cd_finite=False),
        )
        path = _space_file(tmp_path, space)
        assert run(["bound", path]) == 2
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "no bound applicable"
        assert "Thm4.1 failed" in out and "Thm4.8 failed" in out

    def test_inapplicable_bound_json_still_structured(self, tmp_path, capsys):
        space = Explicit(
            EXAMPLE_COMPLEXES["torus"],
            ElementaryAmenable(hirsch=1, cd_finite=False),
        )
        path = _space_file(tmp_path, space)
        assert run(["bound", path, "--format", "json"]) == 2
        body = json.loads(capsys.readouterr().out)
        assert body["rule"] is None and body["bound"] is None
        assert len(body["failures"]) == 2

    def test_forced_rule_runs_that_family(self, tmp_path, capsys):
        path = _space_file(tmp_path, product(Sphere(1), Sphere(1)))
        assert run(["bound", path, "--rule", "Thm4.8"]) == 0
        assert (
            capsys.readouterr().out.splitlines()[0]
            == "rule=Cor-abelian-2dim bound=3"
        )

    def test_forced_rule_mismatch_is_inapplicable(self, tmp_path, capsys):
        path = _space_file(tmp_path, product(Sphere(1), Sphere(1)))
        assert run(["bound", path, "--rule", "Cor-free"]) == 2
        out = capsys.readouterr().out
        assert "requested rule Cor-free" in out
        assert "Cor-abelian" in out

    def test_forced_rule_domain_error_is_inapplicable(self, tmp_path, capsys):
        path = _space_file(tmp_path, Sphere(3))
        assert run(["bound", path, "--rule", "Thm4.8"]) == 2
        assert "DimensionNotTwo" in capsys.readouterr().out


class TestHomologyCommand:
    def test_text_profile(self, tmp_path, capsys):
        path = _space_file(tmp_path, Sphere(2))
        assert run(["homology", path]) == 0
        assert capsys.readouterr().out == "H0 = Z\nH1 = 0\nH2 = Z\n"

    def test_universal_cover_flag(self, tmp_path, capsys):
        path = _space_file(tmp_path, product(Sphere(1), Sphere(2)))
        assert run(["homology", path, "--universal-cover"]) == 0
        assert capsys.readouterr().out == "H0 = Z\nH1 = 0\nH2 = Z\n"

    def test_json_profile(self, tmp_path, capsys):
        path = _space_file(tmp_path, product(Sphere(1), Sphere(1)))
        assert run(["homology", path, "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["groups"]["1"] == {"free_rank": 2, "torsion": []}

    def test_unsupported_cover_exits_two(self, tmp_path, capsys):
        path = _space_file(tmp_path, wedge(Sphere(1), Sphere(1)))
        assert run(["homology", path, "--universal-cover"]) == 2
        assert "error:" in capsys.readouterr().err


class TestSlCommand:
    def test_catalog_source_pinned_line(self, capsys):
        assert run(["sl", "--catalog", "Z6"]) == 0
        assert capsys.readouterr().out == "sl=2 witness=Z6>Z3>1\n"

    def test_table_source(self, tmp_path, capsys):
        path = tmp_path / "s3.table"
        path.write_text(format_cayley_table(catalog_group("S3")))
        assert run(["sl", "--table", str(path)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("sl=2 witness=")

    def test_descriptor_source_free_group(self, tmp_path, capsys):
        path = _write_json(tmp_path, "pi1.json", pi1_to_json(free(3)))
        assert run(["sl", "--descriptor", path]) == 0
        assert capsys.readouterr().out == "sl=3\n"

    def test_json_format_includes_witness(self, capsys):
        assert run(["sl", "--catalog", "Q8", "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body == {"group": "Q8", "sl": 1, "witness": "Q8>1"}

    def test_cap_exceeded_exits_two(self, capsys):
        assert run(["sl", "--catalog", "Z24", "--cap", "16"]) == 2
        assert "OrderExceedsCap" in capsys.readouterr().err

    def test_unknown_catalog_name_is_malformed_input(self, capsys):
        assert run(["sl", "--catalog", "Nope"]) == 1
        assert "input error" in capsys.readouterr().err

    def test_cd_infinite_descriptor_exits_two(self, tmp_path, capsys):
        path = _write_json(
            tmp_path,
            "pi1.json",
            pi1_to_json(ElementaryAmenable(hirsch=2, cd_finite=False)),
        )
        assert run(["sl", "--descriptor", path]) == 2
        assert "CdNotFinite" in capsys.readouterr().err


class TestVerifyCommand:
    def test_prop32_passes_for_whole_catalog(self, capsys):
        assert run(["verify", "prop32"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == len(catalog_names())
        assert all(": PASS " in line for line in lines)
        assert lines[0] == "Z1: PASS n1=n2=n3=0"

    @pytest.mark.parametrize("suite", ["lemma34", "prop36-bridge", "euler", "snf"])
    def test_other_suites_pass(self, suite, capsys):
        assert run(["verify", suite]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines
        assert all(" PASS" in line for line in lines)

    def test_json_format_reports_all_pass(self, capsys):
        assert run(["verify", "snf", "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["suite"] == "snf"
        assert body["all_pass"] is True
        assert all(item["pass"] for item in body["results"])


class TestCatalogCommand:
    def test_lists_every_name(self, capsys):
        assert run(["catalog"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == len(catalog_names())
        assert lines[0] == "Z1 order=1 1"
        assert any(line.startswith("Q8 order=8 nonabelian") for line in lines)

    def test_json_shape(self, capsys):
        assert run(["catalog", "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        by_name = {entry["name"]: entry for entry in body}
        assert by_name["Z12"]["abelian_factors"] == [12]
        assert by_name["S3"]["abelian_factors"] is None


class TestExitCodes:
    def test_missing_file_is_malformed_input(self, tmp_path, capsys):
        assert run(["bound", str(tmp_path / "missing.json")]) == 1
        assert "input error" in capsys.readouterr().err

    def test_bad_json_is_malformed_input(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run(["bound", str(path)]) == 1
        assert "input error" in capsys.readouterr().err

    def test_unknown_space_tag_is_malformed_input(self, tmp_path, capsys):
        path = _write_json(tmp_path, "bad.json", {"blob": 3})
        assert run(["bound", str(path)]) == 1

    def test_no_arguments_is_usage_error(self, capsys):
        assert run([]) == 64
        assert "usage" in capsys.readouterr().err

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert run(["frobnicate"]) == 64

    def test_bad_flag_value_is_usage_error(self, tmp_path, capsys):
        path = _space_file(tmp_path, Sphere(2))
        assert run(["bound", path, "--format", "yaml"]) == 64

    def test_conflicting_sl_sources_is_usage_error(self, capsys):
        assert run(["sl", "--catalog", "Z6", "--table", "x"]) == 64

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0
        assert "bound" in capsys.readouterr().out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["sl", "--catalog", "D4"],
            ["verify", "euler"],
            ["verify", "snf", "--format", "json"],
            ["catalog", "--format", "json"],
        ],
    )
    def test_same_invocation_prints_same_bytes(self, argv, capsys):
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first

    def test_bound_report_stable_across_runs(self, tmp_path, capsys):
        path = _space_file(tmp_path, wedge(Sphere(2), Sphere(2), Sphere(3)))
        outputs = set()
        for _ in range(3):
            assert run(["bound", path, "--format", "json"]) == 0
            outputs.add(capsys.readouterr().out)
        assert len(outputs) == 1


SPACES_DIR = pathlib.Path(__file__).resolve().parent.parent / "spaces"


class TestShippedSpaceFiles:
    """The space files under spaces/ stay loadable and keep their meaning."""

    def test_wedge_example_file(self, capsys):
        assert run(["bound", str(SPACES_DIR / "s1_wedge_s2.json")]) == 0
        assert (
            capsys.readouterr().out.splitlines()[0]
            == "rule=Cor-free-2dim bound=2"
        )

    def test_every_shipped_file_parses(self):
        from polydepth.topology import space_from_json

        files = sorted(SPACES_DIR.glob("*.json"))
        assert len(files) >= 9
        for path in files:
            space_from_json(json.loads(path.read_text()))

    def test_cd_infinite_demo_exits_two(self, capsys):
        assert run(["bound", str(SPACES_DIR / "disc_cd_infinite.json")]) == 2
        assert capsys.readouterr().out.splitlines()[0] == "no bound applicable"
