"""End-to-end command-line behavior: reports, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from flatbands.cli import (
    EXIT_FLAT_BAND,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    format_unipoly,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, document):
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return str(path)


@pytest.fixture
def edgeless_path(tmp_path):
    return write_graph(tmp_path, "edgeless.json", {
        "dimension": 1,
        "orbits": [{"id": "a"}, {"id": "b"}],
    })


class TestFormatUnipoly:
    def test_rendering(self):
        assert format_unipoly(()) == "0"
        assert format_unipoly((0, 1)) == "lam"
        assert format_unipoly((2, 0, -3)) == "-3*lam^2 + 2"
        assert format_unipoly((-1, 1, 0, 1)) == "lam^3 + lam - 1"


class TestAnalyze:
    def test_lieb_json(self, capsys, lieb_json_path):
        code, out, _ = run_cli(capsys, "--json", "analyze", lieb_json_path)
        assert code == EXIT_FLAT_BAND
        report = json.loads(out)
        assert report["command"] == "analyze"
        assert report["exit_code"] == EXIT_FLAT_BAND
        assert report["floquet_matrix"] == [
            ["0", "1 + z1", "0"],
            ["z1^-1 + 1", "0", "z2^-1 + 1"],
            ["0", "1 + z2", "0"],
        ]
        section = report["flat_bands"]
        assert section["flat_band_found"] is True
        assert section["count_with_multiplicity"] == 1
        assert section["rational_roots"] == [
            {"energy": 0, "multiplicity": 1, "divisibility_verified": True}
        ]
        assert section["irreducible_factors"] == []

    def test_lieb_text(self, capsys, lieb_json_path):
        code, out, _ = run_cli(capsys, "analyze", lieb_json_path)
        assert code == EXIT_FLAT_BAND
        assert "flat band found: True" in out
        assert "dispersion:" in out
        assert "_" not in out.split("dispersion:")[0]  # keys are prettified

    def test_random_labels_remove_flat_band(self, capsys, lieb_json_path):
        code, out, _ = run_cli(
            capsys, "--json", "analyze", lieb_json_path, "--labels", "random"
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["flat_bands"]["flat_band_found"] is False
        assert report["labels_mode"] == "random"

    def test_given_requires_full_labels(self, capsys, tmp_path):
        path = write_graph(tmp_path, "partial.json", {
            "dimension": 1,
            "orbits": [{"id": "1", "potential": 0}, {"id": "2"}],
            "edges": [{"from": "1", "to": "2", "offset": [0]}],
        })
        code, _, err = run_cli(capsys, "analyze", path, "--labels", "given")
        assert code == EXIT_INPUT_ERROR
        assert "labels missing" in err

    def test_deterministic_output(self, capsys, lieb_json_path):
        args = ("--json", "analyze", lieb_json_path, "--labels", "random", "--seed", "3")
        first = run_cli(capsys, *args)
        second = run_cli(capsys, *args)
        assert first == second

    def test_seed_changes_random_labels(self, capsys, lieb_json_path):
        _, out_a, _ = run_cli(capsys, "--json", "analyze", lieb_json_path,
                              "--labels", "random", "--seed", "1")
        _, out_b, _ = run_cli(capsys, "--json", "analyze", lieb_json_path,
                              "--labels", "random", "--seed", "2")
        labels = lambda text: json.loads(text)["labeling"]
        assert labels(out_a) != labels(out_b)


class TestGeneric:
    def test_lieb(self, capsys, lieb_json_path):
        code, out, _ = run_cli(capsys, "--json", "generic", lieb_json_path)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["per_trial_flat_band_counts"] == [0] * 5
        assert report["consistent"] is True
        assert report["generic_flat_band"] is False

    def test_edgeless_graph_is_all_flat(self, capsys, edgeless_path):
        code, out, _ = run_cli(capsys, "--json", "generic", edgeless_path,
                               "--trials", "3")
        assert code == EXIT_FLAT_BAND
        report = json.loads(out)
        assert report["per_trial_flat_band_counts"] == [2, 2, 2]
        assert report["generic_flat_band"] is True


class TestPolytope:
    def test_lieb_faces(self, capsys, lieb_json_path):
        code, out, _ = run_cli(capsys, "--json", "polytope", lieb_json_path)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["vertical_segment"] is False
        assert len(report["faces"]) == 8
        assert [f["normal"] for f in report["faces"][:2]] == [[-1, -1, 0], [-1, 0, 0]]
        assert all(f["min_value"] == -1 for f in report["faces"])
        for face in report["faces"]:
            assert face["independence_witness"] in ("1", "2", "3")
        assert "facial_note" in report

    def test_segment_reports_ladder(self, capsys, edgeless_path):
        code, out, _ = run_cli(capsys, "--json", "polytope", edgeless_path)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["vertical_segment"] is True
        assert report["vertical_segment_is_full_ladder"] is True
        assert report["faces"] == []
        assert "vertical segment" in report["notice"]

    def test_high_dimension_notice(self, capsys, tmp_path):
        path = write_graph(tmp_path, "cubic.json", {
            "dimension": 3,
            "orbits": [{"id": "1"}, {"id": "2"}],
            "edges": [
                {"from": "1", "to": "2", "offset": [0, 0, 0]},
                {"from": "1", "to": "2", "offset": [1, 0, 0]},
            ],
        })
        code, out, _ = run_cli(capsys, "--json", "polytope", path)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["vertical_segment"] is False
        assert report["faces"] == []
        assert "dimension" in report["notice"]


class TestVerifyTheorem:
    def test_small_sweep(self, capsys):
        code, out, _ = run_cli(capsys, "--json", "verify-theorem",
                               "--count", "10", "--seed", "7")
        assert code == EXIT_OK
        report = json.loads(out)
        agreement = report["oracle_agreement"]
        assert agreement["both_flat_band"] + agreement["both_no_flat_band"] == 10
        assert agreement["disagreements"] == []
        assert agreement["inconsistent_trials"] == []
        assert report["vertical_segment_agreement"]["agreeing"] == 10
        assert report["vertical_segment_agreement"]["ladder_failures"] == []

    def test_rejects_bad_dims(self, capsys):
        code, _, err = run_cli(capsys, "verify-theorem", "--dims", "3")
        assert code == EXIT_INPUT_ERROR
        assert "dims" in err


class TestBands:
    def test_lieb_with_csv(self, capsys, lieb_json_path, tmp_path):
        out_csv = tmp_path / "bands.csv"
        code, out, _ = run_cli(capsys, "--json", "bands", lieb_json_path,
                               "--resolution", "4", "--out", str(out_csv))
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["grid_points"] == 16
        assert report["numeric_flat_bands"] == [2]
        assert float(report["band_flatness"][1]) < 1e-12
        check = report["exact_crosscheck"]
        assert len(check) == 1
        assert check[0]["energy"] == 0
        assert check[0]["matching_bands"] == [2]
        assert check[0]["present_at_every_grid_point"] is True
        assert check[0]["consistent"] is True
        lines = out_csv.read_text().strip().splitlines()
        assert lines[0] == "theta_1,theta_2,band_1,band_2,band_3"
        assert len(lines) == 17

    def test_resolution_must_be_sane(self, capsys, lieb_json_path):
        code, _, err = run_cli(capsys, "bands", lieb_json_path, "--resolution", "1")
        assert code == EXIT_INPUT_ERROR
        assert "resolution" in err


class TestErrorPaths:
    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "/no/such/file.json")
        assert code == EXIT_INPUT_ERROR
        assert "input error" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        code, _, err = run_cli(capsys, "analyze", str(path))
        assert code == EXIT_INPUT_ERROR
        assert "invalid JSON" in err

    def test_requires_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            main([])


def test_module_entry_point(lieb_json_path):
    proc = subprocess.run(
        [sys.executable, "-m", "flatbands", "--json", "analyze", lieb_json_path],
        capture_output=True, text=True,
    )
    assert proc.returncode == EXIT_FLAT_BAND
    assert json.loads(proc.stdout)["command"] == "analyze"
