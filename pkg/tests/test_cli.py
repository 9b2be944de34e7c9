"""Command-line contract: exit codes, JSON shapes, determinism."""

import json

import pytest

from nazeta.cli import EXIT_INPUT, EXIT_OK, main


@pytest.fixture
def elliptic_file(tmp_path):
    path = tmp_path / "elliptic.json"
    path.write_text(json.dumps({"genus": 1, "q": 2, "point_counts": [3]}))
    return str(path)


@pytest.fixture
def bad_curve_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps({"genus": 1, "q": 2, "numerator_coeffs": ["1", "1", "3"]})
    )
    return str(path)


class TestExitCodes:
    def test_curve_validate_ok(self, elliptic_file, tmp_path):
        out = tmp_path / "out.json"
        code = main(["curve-validate", "--curve", elliptic_file,
                     "--json-out", str(out)])
        assert code == EXIT_OK

    def test_curve_validate_symmetry_violation(self, bad_curve_file):
        assert main(["curve-validate", "--curve", bad_curve_file]) == EXIT_INPUT

    def test_missing_file(self):
        assert main(["pure", "--curve", "/nonexistent.json"]) == EXIT_INPUT

    def test_missing_required_flag(self, elliptic_file):
        assert main(["group", "--curve", elliptic_file]) == EXIT_INPUT

    def test_mass_ok(self, elliptic_file, tmp_path):
        out = tmp_path / "mass.json"
        code = main(["mass", "--curve", elliptic_file, "--r", "3",
                     "--json-out", str(out)])
        assert code == EXIT_OK
        assert json.loads(out.read_text())["agree"] is True


class TestPure:
    def test_scaled_numerator_and_verdict(self, elliptic_file, tmp_path):
        out = tmp_path / "pure.json"
        code = main(["pure", "--curve", elliptic_file, "--r", "2",
                     "--json-out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["numerator"] == ["3", "3", "12"]
        assert data["fe"] is True
        assert data["rh"]["verdict"] == "pass"

    def test_explicit_inputs(self, elliptic_file, tmp_path):
        out = tmp_path / "pure.json"
        code = main([
            "pure", "--curve", elliptic_file, "--r", "2",
            "--alphas", "3", "--beta0", "6", "--json-out", str(out),
        ])
        assert code == EXIT_OK
        assert json.loads(out.read_text())["numerator"] == ["3", "3", "12"]

    def test_alphas_without_beta_rejected(self, elliptic_file):
        code = main(["pure", "--curve", elliptic_file, "--r", "2",
                     "--alphas", "3"])
        assert code == EXIT_INPUT


class TestGroup:
    def test_json_shape(self, elliptic_file, tmp_path):
        out = tmp_path / "group.json"
        csv_out = tmp_path / "zeros.csv"
        code = main([
            "group", "--type", "A", "--rank", "1", "--p", "1",
            "--curve", elliptic_file, "--json-out", str(out),
            "--csv-out", str(csv_out),
        ])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["zeta"]["num"] == ["4", "1", "1"]
        assert data["c_p"] == "2"
        assert data["normalization"] == [[1, 2, 1]]
        assert data["fe"] is True
        assert data["zeros"]["verdict"] == "pass"

    def test_zero_csv_rows(self, elliptic_file, tmp_path):
        csv_out = tmp_path / "zeros.csv"
        main([
            "group", "--type", "A", "--rank", "1", "--p", "1",
            "--curve", elliptic_file, "--csv-out", str(csv_out),
            "--json-out", str(tmp_path / "g.json"),
        ])
        lines = csv_out.read_text().strip().splitlines()
        assert lines[0] == "re_s,im_s,modulus_u,deviation"
        assert len(lines) == 3
        for line in lines[1:]:
            re_s = float(line.split(",")[0])
            assert abs(re_s - (-1.0)) <= 1e-9

    def test_unsupported_type(self, elliptic_file):
        code = main(["group", "--type", "E", "--rank", "8", "--p", "1",
                     "--curve", elliptic_file])
        assert code == EXIT_INPUT


class TestOtherCommands:
    def test_mixed(self, tmp_path):
        out = tmp_path / "mixed.json"
        code = main(["mixed", "--q", "2", "--N", "3", "--json-out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["partial_identity_exact"] is True
        assert data["partial_rh"]["verdict"] == "fail"

    def test_residue_compare(self, elliptic_file, tmp_path):
        out = tmp_path / "rc.json"
        code = main([
            "residue-compare", "--type", "A", "--rank", "2", "--p", "1",
            "--curve", elliptic_file, "--json-out", str(out),
        ])
        assert code == EXIT_OK
        assert json.loads(out.read_text())["certificate"]["passed"] is True

    def test_uniformity_verified(self, elliptic_file, tmp_path):
        out = tmp_path / "uni.json"
        code = main(["uniformity", "--curve", elliptic_file, "--r", "2",
                     "--json-out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["status"] == "verified"
        assert data["match"] == {"a": "2", "b": "-2", "c": "3", "verified": True}

    def test_numfield(self, tmp_path):
        out = tmp_path / "nf.json"
        code = main(["numfield", "--r", "3", "--json-out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert "volumes" in data and "reduction_probe" in data


class TestConfigAndDeterminism:
    def test_config_file_supplies_flags(self, elliptic_file, tmp_path):
        cfg = tmp_path / "job.json"
        cfg.write_text(json.dumps({"curve": elliptic_file, "r": 2}))
        out = tmp_path / "out.json"
        code = main(["pure", "--config", str(cfg), "--json-out", str(out)])
        assert code == EXIT_OK

    def test_unknown_config_field_rejected(self, tmp_path):
        cfg = tmp_path / "job.json"
        cfg.write_text(json.dumps({"no-such-flag": 1}))
        assert main(["numfield", "--config", str(cfg)]) == EXIT_INPUT

    def test_byte_identical_reruns(self, elliptic_file, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        for out in (out1, out2):
            code = main(["pure", "--curve", elliptic_file, "--r", "2",
                         "--json-out", str(out)])
            assert code == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()

    def test_version_header_present(self, elliptic_file, tmp_path):
        out = tmp_path / "v.json"
        main(["mass", "--curve", elliptic_file, "--r", "1",
              "--json-out", str(out)])
        assert "version" in json.loads(out.read_text())


class TestZeroPlotData:
    def test_header_only_for_empty(self, tmp_path):
        from nazeta.cli import emit_zero_plot_data

        path = tmp_path / "empty.csv"
        emit_zero_plot_data([], str(path))
        assert path.read_text() == "re_s,im_s,modulus_u,deviation\n"

    def test_ordering(self, tmp_path):
        from nazeta.cli import emit_zero_plot_data

        path = tmp_path / "rows.csv"
        rows = [(1.0, 2.0, 0.5, 0.0), (0.5, -1.0, 0.5, 0.0), (0.2, 2.0, 0.5, 0.0)]
        emit_zero_plot_data(rows, str(path))
        lines = path.read_text().strip().splitlines()[1:]
        ims = [float(line.split(",")[1]) for line in lines]
        assert ims == sorted(ims)
