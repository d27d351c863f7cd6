import json

import pytest

from kummer_chern import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_table_n2(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "2")
    assert code == 0
    assert "c2 | 24" in out


def test_compute_table_includes_all_blocks(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "4", "--format", "table")
    assert code == 0
    assert "n=2" in out and "n=3" in out and "n=4" in out
    assert "c2^2 | 756" in out and "c4 | 108" in out
    assert "c2^3 | 30208" in out and "c2 c4 | 6784" in out and "c6 | 448" in out


def test_compute_json_and_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "3", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert records[-1] == {
        "n": 3,
        "dimension": 4,
        "surface": "p2",
        "chern_numbers": {"c2^2": "756", "c4": "108"},
    }
    assert cli.render_json(records) == out  # re-rendering is byte-identical


def test_compute_n1_is_the_point(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "1")
    assert code == 0
    assert "1 | 1" in out


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,partition_key,value"
    assert "2,c2,24" in lines
    assert "3,c2^2,756" in lines and "3,c4,108" in lines


def test_compute_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run(
        capsys, "compute", "--n-max", "2", "--format", "json", "--out", str(target)
    )
    assert code == 0 and out == ""
    records = json.loads(target.read_text())
    assert records[0]["chern_numbers"] == {"c2": "24"}


def test_compute_rejects_bad_n_max(capsys):
    code, _, err = run(capsys, "compute", "--n-max", "0")
    assert code == 2
    assert "n-max" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "2")
    assert code == 0
    assert "1 of 1 entries match" in out


def test_verify_n4(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "4")
    assert code == 0
    assert "6 of 6 entries match" in out


def test_verify_rejects_out_of_range(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "9")
    assert code == 2
    assert "verify covers" in err


def test_verify_detects_corruption(capsys, monkeypatch):
    import kummer_chern.cli as climod

    good = dict(climod.reference_for(2))
    good[(2,)] = 23

    def fake_reference(n):
        return good if n == 2 else climod.reference_for(n)

    monkeypatch.setattr(climod, "reference_for", fake_reference)
    code, out, _ = run(capsys, "verify", "--n-max", "2")
    assert code == 1
    assert "n=2 c2 expected=23 got=24" in out
    assert "0 of 1 entries match" in out


def test_hilbert_k1(capsys):
    code, out, _ = run(capsys, "hilbert", "--k", "1")
    assert code == 0
    assert "c1^2 | 9" in out and "c2 | 3" in out
    assert "fixed points: 3" in out
    assert "euler cross-check: ok" in out


def test_hilbert_k2_top_chern(capsys):
    code, out, _ = run(capsys, "hilbert", "--k", "2")
    assert code == 0
    assert "c4 | 9" in out
    assert "fixed points: 9" in out


def test_hilbert_k0(capsys):
    code, out, _ = run(capsys, "hilbert", "--k", "0")
    assert code == 0
    assert "1 | 1" in out


def test_hilbert_json(capsys):
    code, out, _ = run(capsys, "hilbert", "--k", "1", "--format", "json")
    assert code == 0
    record = json.loads(out)[0]
    assert record["fixed_points"] == 3
    assert record["chern_numbers"] == {"c1^2": "9", "c2": "3"}


def test_genus_todd(capsys):
    code, out, _ = run(capsys, "genus", "--name", "todd", "--n-max", "4")
    assert code == 0
    assert "2 | 2" in out and "3 | 3" in out and "4 | 4" in out


def test_genus_euler(capsys):
    code, out, _ = run(capsys, "genus", "--name", "euler", "--n-max", "4")
    assert code == 0
    assert "2 | 24" in out and "3 | 108" in out and "4 | 448" in out


def test_genus_point(capsys):
    code, out, _ = run(capsys, "genus", "--name", "euler", "--n-max", "1")
    assert code == 0
    assert "1 | 1" in out


def test_genus_unknown_preset_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["genus", "--name", "elliptic", "--n-max", "2"])
    assert exc.value.code == 2


def test_explicit_degenerate_weights_exit_3(capsys):
    code, _, err = run(capsys, "compute", "--n-max", "3", "--weights", "1,2")
    assert code == 3
    assert "genericity" in err


def test_explicit_good_weights_work(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "2", "--weights", "1,7")
    assert code == 0
    assert "c2 | 24" in out


def test_bad_weight_syntax_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "--n-max", "2", "--weights", "1;2"])
    assert exc.value.code == 2


def test_p1xp1_surface(capsys):
    code, out, _ = run(capsys, "compute", "--n-max", "2", "--surface", "p1xp1")
    assert code == 0
    assert "c2 | 24" in out


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_output_is_deterministic_across_runs(capsys):
    outputs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "compute", "--n-max", "3", "--format", "json")
        outputs.add(out)
    assert len(outputs) == 1
